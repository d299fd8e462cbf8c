#pragma once

// Brute-force ground truth. Nothing here uses Fourier analysis or the model
// evaluators, so these values can be used to check them.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecm/abelian.hpp"
#include "ecm/graph.hpp"
#include "ecm/models.hpp"

namespace ecm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// T(G; x, y) with exact integer coefficients c[i][j] of x^i y^j.
class TuttePolynomial {
 public:
  TuttePolynomial() = default;
  explicit TuttePolynomial(std::vector<std::vector<BigInt>> coefficients);

  BigInt coefficient(int i, int j) const;
  int x_degree() const { return static_cast<int>(c_.size()) - 1; }
  int y_degree() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  Complex evaluate(Complex x, Complex y) const;
  /// e.g. "x^2 + x + y"; "0" for the zero polynomial.
  std::string to_string() const;

  bool operator==(const TuttePolynomial& other) const;

 private:
  std::vector<std::vector<BigInt>> c_;
};

/// Subset expansion sum_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}; 2^|E| terms.
TuttePolynomial tutte(const Multigraph& g, EvalLimits limits = {});

/// Number of nowhere-zero Q-flows, by enumerating (q-1)^|E| colourings.
std::uint64_t count_nowhere_zero_flows(const Multigraph& g, const Group& q, EvalLimits limits = {});

/// F(G; q) via (-1)^{|E|-r(E)} T(G; 0, 1-q) and via nowhere-zero Z_q-flow
/// enumeration. Throws Mismatch if the two disagree.
BigInt flow_polynomial(const Multigraph& g, int q, EvalLimits limits = {});
BigInt flow_polynomial(const Multigraph& g, const TuttePolynomial& t, int q);

/// P(G; q) via proper colouring enumeration and via q^{k(G)} (-1)^{r(E)} T(G; 1-q, 0).
BigInt chromatic(const Multigraph& g, int q, EvalLimits limits = {});
BigInt chromatic(const Multigraph& g, const TuttePolynomial& t, int q);
std::uint64_t count_proper_colourings(const Multigraph& g, int q, EvalLimits limits = {});

using Colouring = std::vector<int>;

/// ker(boundary) in ascending mixed-radix order, by scanning Q^E.
std::vector<Colouring> enumerate_flows(const Multigraph& g, const Group& q, EvalLimits limits = {});
/// im(coboundary) in ascending order, by scanning Q^V.
std::vector<Colouring> enumerate_tensions(const Multigraph& g, const Group& q, EvalLimits limits = {});

/// Coefficient j counts the members of S with exactly j zero coordinates, so
/// hwe(S; s) = sum_j c_j s^j.
std::vector<std::uint64_t> hwe_coefficients(const std::vector<Colouring>& s, std::size_t length);
Complex hwe(const std::vector<Colouring>& s, Complex weight);
Rational hwe(const std::vector<Colouring>& s, const Rational& weight);
/// sum_{y in S} prod_e h(y_e).
Complex cwe(const std::vector<Colouring>& s, std::span<const Complex> h);

/// Coefficient j counts vertex q-colourings with exactly j monochromatic edges
/// (loops are always monochromatic).
std::vector<std::uint64_t> monochrome_coefficients(const Multigraph& g, int q, EvalLimits limits = {});
Complex monochrome_polynomial(const Multigraph& g, int q, Complex t, EvalLimits limits = {});

/// (s-1)^{|E|-r(E)} T(G; s, (s-1+q)/(s-1)), the flow Hamming enumerator on
/// the hyperbola (x-1)(y-1) = q. Requires s != 1.
Rational hyperbola_value(const Multigraph& g, const TuttePolynomial& t, int q, const Rational& s);
Complex hyperbola_value(const Multigraph& g, const TuttePolynomial& t, int q, Complex s);

template <class T>
T evaluate_polynomial(const std::vector<std::uint64_t>& coefficients, const T& at) {
  T acc = T(0);
  for (std::size_t j = coefficients.size(); j-- > 0;) acc = acc * at + T(coefficients[j]);
  return acc;
}

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
double to_double(const Rational& v);

}  // namespace ecm
