#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace ecm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

enum class RingFlavor { cyclic, f4 };

/// A finite abelian group with a commutative ring structure and a generating
/// character. Elements are dense indices in [0, order()).
///
/// Cyclic flavor: a product Z_{n1} x ... x Z_{nr} with componentwise ring
/// operations; element indices are mixed-radix over the residues with the
/// first factor most significant, and chi(a) = prod exp(2 pi i a_j / n_j).
///
/// F4 flavor: the field {0, 1, w, w^2} (indices 0..3, addition is XOR on the
/// index bits, w^2 = w + 1), with chi(x) = (-1)^Tr(x), Tr(x) = x + x^2.
class Group {
 public:
  static Group cyclic(int n);
  static Group product(std::vector<int> factors);
  static Group f4();
  /// Accepts "q", "n1xn2x..." or "f4".
  static Group parse(std::string_view spec);

  int order() const noexcept { return q_; }
  RingFlavor flavor() const noexcept { return flavor_; }
  const std::vector<int>& factors() const noexcept { return factors_; }
  bool is_cyclic_group() const noexcept { return flavor_ == RingFlavor::cyclic && factors_.size() == 1; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add_[idx(a, neg_[b])]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }

  /// The generating character chi(a).
  Complex character(int a) const { return chi_[a]; }
  /// Entry (a, b) of the unitary Fourier matrix q^{-1/2} chi(ab).
  Complex fourier_entry(int a, int b) const { return fourier_[idx(a, b)]; }

  std::vector<int> residues(int a) const;
  int from_residues(std::span<const int> residues) const;
  std::string element_name(int a) const;
  /// Canonical spec string, accepted by parse().
  std::string spec() const;

  bool operator==(const Group& other) const { return flavor_ == other.flavor_ && factors_ == other.factors_; }

 private:
  Group(RingFlavor flavor, std::vector<int> factors);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * q_ + b; }

  RingFlavor flavor_;
  std::vector<int> factors_;
  int q_ = 1;
  std::vector<int> add_, mul_, neg_;
  std::vector<Complex> chi_, fourier_;
};

/// A dense complex-valued function on Q^d. The tuple (a_1, ..., a_d) lives at
/// index sum_i a_i q^{d-i}: the first coordinate is the most significant.
class QFunction {
 public:
  QFunction(Group group, int arity);
  QFunction(Group group, int arity, std::vector<Complex> values);

  template <class Fn>
  static QFunction tabulate(const Group& group, int arity, Fn&& fn) {
    QFunction f(group, arity);
    std::vector<int> tuple(static_cast<std::size_t>(arity));
    for (std::size_t i = 0; i < f.size(); ++i) {
      f.decode(i, tuple);
      f.values_[i] = Complex(fn(std::span<const int>(tuple)));
    }
    return f;
  }

  const Group& group() const noexcept { return group_; }
  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Complex>& values() const noexcept { return values_; }

  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }
  Complex operator()(std::span<const int> tuple) const { return values_[index(tuple)]; }
  Complex operator()(std::initializer_list<int> tuple) const {
    return (*this)(std::span<const int>(tuple.begin(), tuple.size()));
  }

  std::size_t index(std::span<const int> tuple) const;
  void decode(std::size_t index, std::span<int> tuple) const;

 private:
  Group group_;
  int arity_;
  std::vector<Complex> values_;
};

QFunction indicator(const Group& group, int arity, std::span<const std::vector<int>> members);
QFunction monochrome_indicator(const Group& group, int arity);
QFunction zero_sum_indicator(const Group& group, int arity);
/// 1_{{0}} on Q^d.
QFunction delta_zero(const Group& group, int arity);
QFunction constant(const Group& group, int arity, Complex value);

QFunction fourier(const QFunction& f);
/// F^{-1} = F^3 = N F.
QFunction inverse_fourier(const QFunction& f);
/// f^N(a) = f(-a), coordinatewise.
QFunction negate(const QFunction& f);
QFunction pointwise(const QFunction& f, const QFunction& g);
QFunction convolve(const QFunction& f, const QFunction& g);
/// f^U = U^{(x)d} f for a q x q matrix U.
QFunction transform_by(const QFunction& f, const ComplexMatrix& u);
QFunction scaled(const QFunction& f, Complex factor);

/// <f, g> = sum f(a) conj(g(a)).
Complex hermitian_inner(const QFunction& f, const QFunction& g);
/// (f, g) = sum f(a) g(a).
Complex bilinear_inner(const QFunction& f, const QFunction& g);
double max_abs_diff(const QFunction& f, const QFunction& g);
double max_abs(const QFunction& f);

/// C^perp = {a : a . c = 0 for all c in C} for C given by its indicator.
/// The scan costs q^d * |C| ring operations and is refused above max_terms.
QFunction orthogonal_submodule(const QFunction& c_indicator, std::uint64_t max_terms = 100'000'000);
/// True when the indicator's support is closed under addition and scalar
/// multiplication and contains 0.
bool is_submodule(const QFunction& c_indicator);

ComplexMatrix fourier_matrix(const Group& group);
/// Deterministic orthogonal matrix built from q seeded Householder reflections.
RealMatrix random_orthogonal(int q, std::uint64_t seed);

}  // namespace ecm
