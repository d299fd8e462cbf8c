#include "ecm/oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ecm/error.hpp"
#include "enumerate.hpp"

namespace ecm {

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t subset_rank(const Multigraph& g, std::uint64_t bits, std::vector<std::size_t>& parent) {
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = v;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t r = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!((bits >> e) & 1U)) continue;
    const std::size_t a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

bool is_flow(const Multigraph& g, const Group& q, std::span<const int> y, std::vector<int>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    scratch[g.head(e)] = q.add(scratch[g.head(e)], y[e]);
    scratch[g.tail(e)] = q.sub(scratch[g.tail(e)], y[e]);
  }
  return std::all_of(scratch.begin(), scratch.end(), [](int a) { return a == 0; });
}

Rational power(Rational base, unsigned exponent) {
  Rational r = 1;
  for (; exponent; exponent >>= 1, base *= base)
    if (exponent & 1U) r *= base;
  return r;
}

BigInt as_integer(const Rational& v, const char* what) {
  if (boost::multiprecision::denominator(v) != 1) throw Mismatch(std::string(what) + " is not an integer");
  return boost::multiprecision::numerator(v);
}

}  // namespace

TuttePolynomial::TuttePolynomial(std::vector<std::vector<BigInt>> coefficients) : c_(std::move(coefficients)) {
  while (!c_.empty()) {
    auto& row = c_.back();
    while (!row.empty() && row.back() == 0) row.pop_back();
    if (!row.empty()) break;
    c_.pop_back();
  }
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
}

BigInt TuttePolynomial::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return 0;
  const auto& row = c_[static_cast<std::size_t>(i)];
  return j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : BigInt(0);
}

int TuttePolynomial::y_degree() const {
  int d = -1;
  for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational TuttePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Rational inner = 0;
    for (std::size_t j = c_[i].size(); j-- > 0;) inner = inner * y + Rational(c_[i][j]);
    acc = acc * x + inner;
  }
  return acc;
}

Complex TuttePolynomial::evaluate(Complex x, Complex y) const {
  Complex acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    Complex inner = 0.0;
    for (std::size_t j = c_[i].size(); j-- > 0;) inner = inner * y + Complex(c_[i][j].convert_to<double>());
    acc = acc * x + inner;
  }
  return acc;
}

std::string TuttePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    for (std::size_t j = c_[i].size(); j-- > 0;) {
      BigInt c = c_[i][j];
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      if (c < 0) c = -c;
      const bool constant = i == 0 && j == 0;
      if (c != 1 || constant) os << c;
      if (i > 0) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return first ? "0" : os.str();
}

bool TuttePolynomial::operator==(const TuttePolynomial& o) const { return c_ == o.c_; }

TuttePolynomial tutte(const Multigraph& g, EvalLimits limits) {
  const std::size_t m = g.edge_count();
  detail::require_terms("Tutte subset expansion 2^|E|", detail::power_estimate(2, m), limits.max_terms);
  if (m >= 64) throw CapExceeded("Tutte subset expansion 2^|E|", detail::power_estimate(2, m), limits.max_terms);

  const std::size_t full_rank = rank(g);
  std::vector<std::vector<std::uint64_t>> counts(full_rank + 1, std::vector<std::uint64_t>(m + 1, 0));
  std::vector<std::size_t> parent(g.vertex_count());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    const std::size_t r = subset_rank(g, bits, parent);
    const auto size = static_cast<std::size_t>(__builtin_popcountll(bits));
    ++counts[full_rank - r][size - r];
  }

  // Expand (x-1)^i (y-1)^j.
  std::vector<std::vector<BigInt>> c(full_rank + 1, std::vector<BigInt>(m + 1, 0));
  for (std::size_t i = 0; i <= full_rank; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      if (counts[i][j] == 0) continue;
      for (std::size_t a = 0; a <= i; ++a)
        for (std::size_t b = 0; b <= j; ++b) {
          BigInt term = BigInt(counts[i][j]) * binomial(static_cast<int>(i), static_cast<int>(a)) *
                        binomial(static_cast<int>(j), static_cast<int>(b));
          if ((i - a + j - b) % 2) term = -term;
          c[a][b] += term;
        }
    }
  return TuttePolynomial(std::move(c));
}

std::uint64_t count_nowhere_zero_flows(const Multigraph& g, const Group& q, EvalLimits limits) {
  const int n = q.order();
  detail::require_terms("nowhere-zero flow scan (q-1)^|E|", detail::power_estimate(n - 1, g.edge_count()),
                        limits.max_terms);
  if (n == 1) return g.edge_count() == 0 ? 1 : 0;
  return detail::sum_configurations<std::uint64_t>(n - 1, g.edge_count(), [&](std::span<const int> d) {
    thread_local std::vector<int> y, scratch;
    y.assign(d.begin(), d.end());
    for (int& a : y) ++a;
    scratch.resize(g.vertex_count());
    return is_flow(g, q, y, scratch) ? std::uint64_t{1} : std::uint64_t{0};
  });
}

BigInt flow_polynomial(const Multigraph& g, const TuttePolynomial& t, int q) {
  const std::size_t nullity = g.edge_count() - rank(g);
  Rational v = t.evaluate(Rational(0), Rational(1 - q));
  if (nullity % 2) v = -v;
  return as_integer(v, "flow polynomial");
}

BigInt flow_polynomial(const Multigraph& g, int q, EvalLimits limits) {
  const BigInt via_tutte = flow_polynomial(g, tutte(g, limits), q);
  const BigInt via_flows = count_nowhere_zero_flows(g, Group::cyclic(q), limits);
  if (via_tutte != via_flows)
    throw Mismatch("flow polynomial: Tutte route " + to_string(via_tutte) + " != enumeration " + to_string(via_flows));
  return via_tutte;
}

std::uint64_t count_proper_colourings(const Multigraph& g, int q, EvalLimits limits) {
  detail::require_terms("proper colouring scan q^|V|", detail::power_estimate(q, g.vertex_count()), limits.max_terms);
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) return 0;
  return detail::sum_configurations<std::uint64_t>(q, g.vertex_count(), [&](std::span<const int> x) {
    for (const auto& e : g.edges())
      if (x[e.u] == x[e.v]) return std::uint64_t{0};
    return std::uint64_t{1};
  });
}

BigInt chromatic(const Multigraph& g, const TuttePolynomial& t, int q) {
  Rational v = t.evaluate(Rational(1 - q), Rational(0));
  if (rank(g) % 2) v = -v;
  BigInt scale = 1;
  for (std::size_t i = 0; i < components(g); ++i) scale *= q;
  return as_integer(v, "chromatic polynomial") * scale;
}

BigInt chromatic(const Multigraph& g, int q, EvalLimits limits) {
  const BigInt via_tutte = chromatic(g, tutte(g, limits), q);
  const BigInt via_scan = count_proper_colourings(g, q, limits);
  if (via_tutte != via_scan)
    throw Mismatch("chromatic polynomial: Tutte route " + to_string(via_tutte) + " != enumeration " +
                   to_string(via_scan));
  return via_tutte;
}

std::vector<Colouring> enumerate_flows(const Multigraph& g, const Group& q, EvalLimits limits) {
  detail::require_terms("flow scan q^|E|", detail::power_estimate(q.order(), g.edge_count()), limits.max_terms);
  std::vector<Colouring> out;
  std::vector<int> scratch(g.vertex_count());
  detail::for_each_configuration(q.order(), g.edge_count(), [&](std::span<const int> y) {
    if (is_flow(g, q, y, scratch)) out.emplace_back(y.begin(), y.end());
  });
  return out;
}

std::vector<Colouring> enumerate_tensions(const Multigraph& g, const Group& q, EvalLimits limits) {
  detail::require_terms("tension scan q^|V|", detail::power_estimate(q.order(), g.vertex_count()), limits.max_terms);
  std::set<Colouring> found;
  detail::for_each_configuration(q.order(), g.vertex_count(),
                                 [&](std::span<const int> x) { found.insert(coboundary(g, q, x)); });
  return {found.begin(), found.end()};
}

std::vector<std::uint64_t> hwe_coefficients(const std::vector<Colouring>& s, std::size_t length) {
  std::vector<std::uint64_t> c(length + 1, 0);
  for (const auto& y : s) {
    if (y.size() != length) throw InvalidArgument("hwe: vector length differs from the declared length");
    ++c[static_cast<std::size_t>(std::count(y.begin(), y.end(), 0))];
  }
  return c;
}

Complex hwe(const std::vector<Colouring>& s, Complex weight) {
  Complex acc = 0.0;
  for (const auto& y : s) acc += std::pow(weight, static_cast<int>(std::count(y.begin(), y.end(), 0)));
  return acc;
}

Rational hwe(const std::vector<Colouring>& s, const Rational& weight) {
  Rational acc = 0;
  for (const auto& y : s) acc += power(weight, static_cast<unsigned>(std::count(y.begin(), y.end(), 0)));
  return acc;
}

Complex cwe(const std::vector<Colouring>& s, std::span<const Complex> h) {
  Complex acc = 0.0;
  for (const auto& y : s) {
    Complex p = 1.0;
    for (int a : y) {
      if (a < 0 || static_cast<std::size_t>(a) >= h.size()) throw InvalidArgument("cwe: weight table too short");
      p *= h[static_cast<std::size_t>(a)];
    }
    acc += p;
  }
  return acc;
}

std::vector<std::uint64_t> monochrome_coefficients(const Multigraph& g, int q, EvalLimits limits) {
  detail::require_terms("monochrome scan q^|V|", detail::power_estimate(q, g.vertex_count()), limits.max_terms);
  std::vector<std::uint64_t> c(g.edge_count() + 1, 0);
  detail::for_each_configuration(q, g.vertex_count(), [&](std::span<const int> x) {
    std::size_t mono = 0;
    for (const auto& e : g.edges()) mono += x[e.u] == x[e.v];
    ++c[mono];
  });
  return c;
}

Complex monochrome_polynomial(const Multigraph& g, int q, Complex t, EvalLimits limits) {
  return evaluate_polynomial(monochrome_coefficients(g, q, limits), t);
}

Rational hyperbola_value(const Multigraph& g, const TuttePolynomial& t, int q, const Rational& s) {
  if (s == 1) throw InvalidArgument("hyperbola value needs s != 1");
  const auto nullity = static_cast<unsigned>(g.edge_count() - rank(g));
  return power(s - 1, nullity) * t.evaluate(s, (s - 1 + q) / (s - 1));
}

Complex hyperbola_value(const Multigraph& g, const TuttePolynomial& t, int q, Complex s) {
  if (std::abs(s - 1.0) < 1e-12) throw InvalidArgument("hyperbola value needs s != 1");
  const auto nullity = static_cast<int>(g.edge_count() - rank(g));
  return std::pow(s - 1.0, nullity) * t.evaluate(s, (s - 1.0 + static_cast<double>(q)) / (s - 1.0));
}

std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v) { return v.str(); }
double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace ecm
