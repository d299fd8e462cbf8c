#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecm/abelian.hpp"
#include "ecm/corpus.hpp"

namespace ecm {

/// One identity evaluated on one input: both sides, the residual and the
/// tolerance it was held to.
struct Check {
  std::string name;
  std::string anchor;  // the identity in words
  std::string inputs;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool skipped = false;  // preconditions or the term cap ruled it out
  std::string note;
};

struct VerifyOptions {
  std::string suite = "all";  // all | fourier | duality | signed
  /// Scales every pinned tolerance by tol / 1e-7, so the default keeps them.
  double tol = 1e-7;
  std::uint64_t max_terms = 100'000'000;
  std::uint64_t seed = 0;
  /// Graphs to check; empty means the built-in corpus.
  std::vector<corpus::Entry> graphs;
  /// Group orders for graph-dependent checks; empty means each check's defaults.
  std::vector<int> qs;
};

struct Report {
  std::vector<Check> checks;

  std::size_t evaluated() const;
  std::size_t skipped() const;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// One JSON object per line with fields name, anchor, inputs, lhs, rhs,
  /// residual, tolerance, pass, skipped (and note when set).
  std::string to_jsonl() const;
};

std::vector<std::string> suite_names();
/// Throws InvalidArgument for an unknown suite.
Report verify(const VerifyOptions& options);

}  // namespace ecm
