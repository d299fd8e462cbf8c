#include "ecm/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>

#include "ecm/error.hpp"

namespace ecm {

namespace {

// Index bits for F4: bit 0 is the coefficient of 1, bit 1 the coefficient of w.
constexpr int kF4Mul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

std::size_t checked_power(int q, int d) {
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > (std::size_t{1} << 40) / static_cast<std::size_t>(q))
      throw InvalidArgument("function table q^d too large");
    n *= static_cast<std::size_t>(q);
  }
  return n;
}

void require_same_shape(const QFunction& f, const QFunction& g, const char* what) {
  if (!(f.group() == g.group()) || f.arity() != g.arity())
    throw InvalidArgument(std::string(what) + ": group or arity mismatch");
}

// Applies a q x q matrix along every axis of a q^d table.
std::vector<Complex> apply_along_axes(const std::vector<Complex>& in, int q, int arity,
                                      const ComplexMatrix& u) {
  std::vector<Complex> cur = in, next(in.size());
  std::size_t stride = 1;
  for (int axis = arity - 1; axis >= 0; --axis) {
    const std::size_t block = stride * static_cast<std::size_t>(q);
    for (std::size_t base = 0; base < cur.size(); base += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        for (int a = 0; a < q; ++a) {
          Complex acc = 0.0;
          for (int b = 0; b < q; ++b) acc += u(a, b) * cur[base + static_cast<std::size_t>(b) * stride + inner];
          next[base + static_cast<std::size_t>(a) * stride + inner] = acc;
        }
      }
    }
    std::swap(cur, next);
    stride = block;
  }
  return cur;
}

}  // namespace

Group::Group(RingFlavor flavor, std::vector<int> factors) : flavor_(flavor), factors_(std::move(factors)) {
  q_ = 1;
  for (int n : factors_) {
    if (n < 1) throw InvalidArgument("cyclic factor orders must be positive");
    q_ *= n;
    if (q_ > 4096) throw InvalidArgument("group order too large");
  }
  const auto qq = static_cast<std::size_t>(q_);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  chi_.resize(qq);
  fourier_.resize(qq * qq);

  if (flavor_ == RingFlavor::f4) {
    for (int a = 0; a < 4; ++a) {
      neg_[a] = a;
      for (int b = 0; b < 4; ++b) {
        add_[idx(a, b)] = a ^ b;
        mul_[idx(a, b)] = kF4Mul[a][b];
      }
      // Tr(x) = x + x^2 lands in {0, 1}.
      const int trace = a ^ kF4Mul[a][a];
      chi_[a] = trace == 0 ? 1.0 : -1.0;
    }
  } else {
    for (int a = 0; a < q_; ++a) {
      const auto ra = residues(a);
      std::vector<int> tmp(ra.size());
      double phase = 0.0;
      for (std::size_t j = 0; j < ra.size(); ++j) {
        tmp[j] = (factors_[j] - ra[j]) % factors_[j];
        phase += static_cast<double>(ra[j]) / factors_[j];
      }
      neg_[a] = from_residues(tmp);
      chi_[a] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
      for (int b = 0; b < q_; ++b) {
        const auto rb = residues(b);
        for (std::size_t j = 0; j < ra.size(); ++j) tmp[j] = (ra[j] + rb[j]) % factors_[j];
        add_[idx(a, b)] = from_residues(tmp);
        for (std::size_t j = 0; j < ra.size(); ++j) tmp[j] = (ra[j] * rb[j]) % factors_[j];
        mul_[idx(a, b)] = from_residues(tmp);
      }
    }
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(q_));
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) fourier_[idx(a, b)] = norm * chi_[mul_[idx(a, b)]];
}

Group Group::cyclic(int n) { return Group(RingFlavor::cyclic, {n}); }

Group Group::product(std::vector<int> factors) {
  if (factors.empty()) throw InvalidArgument("group needs at least one factor");
  return Group(RingFlavor::cyclic, std::move(factors));
}

Group Group::f4() { return Group(RingFlavor::f4, {2, 2}); }

Group Group::parse(std::string_view spec) {
  if (spec == "f4" || spec == "F4") return f4();
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto end = std::min(spec.find('x', pos), spec.size());
    int n = 0;
    const auto* first = spec.data() + pos;
    const auto* last = spec.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n < 1)
      throw InvalidArgument("bad group spec '" + std::string(spec) + "'");
    factors.push_back(n);
    pos = end + 1;
  }
  return product(std::move(factors));
}

std::vector<int> Group::residues(int a) const {
  std::vector<int> r(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    r[j] = a % factors_[j];
    a /= factors_[j];
  }
  return r;
}

int Group::from_residues(std::span<const int> residues) const {
  if (residues.size() != factors_.size()) throw InvalidArgument("residue count does not match group");
  int a = 0;
  for (std::size_t j = 0; j < residues.size(); ++j) {
    if (residues[j] < 0 || residues[j] >= factors_[j]) throw InvalidArgument("residue out of range");
    a = a * factors_[j] + residues[j];
  }
  return a;
}

std::string Group::element_name(int a) const {
  if (flavor_ == RingFlavor::f4) {
    static const char* names[] = {"0", "1", "w", "w2"};
    return names[a];
  }
  if (factors_.size() == 1) return std::to_string(a);
  std::string s = "(";
  const auto r = residues(a);
  for (std::size_t j = 0; j < r.size(); ++j) s += (j ? "," : "") + std::to_string(r[j]);
  return s + ")";
}

std::string Group::spec() const {
  if (flavor_ == RingFlavor::f4) return "f4";
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) s += (j ? "x" : "") + std::to_string(factors_[j]);
  return s;
}

QFunction::QFunction(Group group, int arity) : group_(std::move(group)), arity_(arity) {
  if (arity < 0) throw InvalidArgument("negative arity");
  values_.assign(checked_power(group_.order(), arity), Complex(0.0));
}

QFunction::QFunction(Group group, int arity, std::vector<Complex> values)
    : group_(std::move(group)), arity_(arity), values_(std::move(values)) {
  if (arity < 0) throw InvalidArgument("negative arity");
  if (values_.size() != checked_power(group_.order(), arity))
    throw InvalidArgument("QFunction needs exactly q^d values");
}

std::size_t QFunction::index(std::span<const int> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(arity_)) throw InvalidArgument("tuple length != arity");
  std::size_t i = 0;
  const int q = group_.order();
  for (int a : tuple) {
    if (a < 0 || a >= q) throw InvalidArgument("group element out of range");
    i = i * static_cast<std::size_t>(q) + static_cast<std::size_t>(a);
  }
  return i;
}

void QFunction::decode(std::size_t index, std::span<int> tuple) const {
  const auto q = static_cast<std::size_t>(group_.order());
  for (std::size_t j = tuple.size(); j-- > 0;) {
    tuple[j] = static_cast<int>(index % q);
    index /= q;
  }
}

QFunction indicator(const Group& group, int arity, std::span<const std::vector<int>> members) {
  QFunction f(group, arity);
  for (const auto& m : members) f[f.index(m)] = 1.0;
  return f;
}

QFunction monochrome_indicator(const Group& group, int arity) {
  return QFunction::tabulate(group, arity, [](std::span<const int> t) {
    return std::all_of(t.begin(), t.end(), [&](int a) { return a == t.front(); }) ? 1.0 : 0.0;
  });
}

QFunction zero_sum_indicator(const Group& group, int arity) {
  return QFunction::tabulate(group, arity, [&](std::span<const int> t) {
    int s = 0;
    for (int a : t) s = group.add(s, a);
    return s == 0 ? 1.0 : 0.0;
  });
}

QFunction delta_zero(const Group& group, int arity) {
  QFunction f(group, arity);
  f[0] = 1.0;
  return f;
}

QFunction constant(const Group& group, int arity, Complex value) {
  QFunction f(group, arity);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = value;
  return f;
}

QFunction fourier(const QFunction& f) { return transform_by(f, fourier_matrix(f.group())); }

QFunction inverse_fourier(const QFunction& f) { return negate(fourier(f)); }

QFunction negate(const QFunction& f) {
  const Group& g = f.group();
  std::vector<int> t(static_cast<std::size_t>(f.arity()));
  QFunction out(g, f.arity());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.decode(i, t);
    for (int& a : t) a = g.neg(a);
    out[out.index(t)] = f[i];
  }
  return out;
}

QFunction pointwise(const QFunction& f, const QFunction& g) {
  require_same_shape(f, g, "pointwise");
  QFunction out(f.group(), f.arity());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

QFunction convolve(const QFunction& f, const QFunction& g) {
  require_same_shape(f, g, "convolve");
  const Group& grp = f.group();
  const auto d = static_cast<std::size_t>(f.arity());
  std::vector<int> a(d), b(d), diff(d);
  QFunction out(grp, f.arity());
  for (std::size_t i = 0; i < f.size(); ++i) {
    f.decode(i, a);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] == Complex(0.0)) continue;
      g.decode(j, b);
      for (std::size_t k = 0; k < d; ++k) diff[k] = grp.sub(a[k], b[k]);
      acc += f(diff) * g[j];
    }
    out[i] = acc;
  }
  return out;
}

QFunction transform_by(const QFunction& f, const ComplexMatrix& u) {
  const int q = f.group().order();
  if (u.rows() != q || u.cols() != q) throw InvalidArgument("transform matrix must be q x q");
  return QFunction(f.group(), f.arity(), apply_along_axes(f.values(), q, f.arity(), u));
}

QFunction scaled(const QFunction& f, Complex factor) {
  QFunction out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= factor;
  return out;
}

Complex hermitian_inner(const QFunction& f, const QFunction& g) {
  require_same_shape(f, g, "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(g[i]);
  return acc;
}

Complex bilinear_inner(const QFunction& f, const QFunction& g) {
  require_same_shape(f, g, "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * g[i];
  return acc;
}

double max_abs_diff(const QFunction& f, const QFunction& g) {
  require_same_shape(f, g, "difference");
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

double max_abs(const QFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

QFunction orthogonal_submodule(const QFunction& c_indicator, std::uint64_t max_terms) {
  const Group& grp = c_indicator.group();
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < c_indicator.size(); ++i)
    if (c_indicator[i] != Complex(0.0)) members.push_back(i);
  const double work = static_cast<double>(c_indicator.size()) * static_cast<double>(members.size());
  if (work > static_cast<double>(max_terms)) throw CapExceeded("orthogonal submodule scan", work, max_terms);

  const auto d = static_cast<std::size_t>(c_indicator.arity());
  std::vector<int> a(d), c(d);
  QFunction out(grp, c_indicator.arity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.decode(i, a);
    bool orthogonal = true;
    for (std::size_t m : members) {
      c_indicator.decode(m, c);
      int dot = 0;
      for (std::size_t k = 0; k < d; ++k) dot = grp.add(dot, grp.mul(a[k], c[k]));
      if (dot != 0) {
        orthogonal = false;
        break;
      }
    }
    out[i] = orthogonal ? 1.0 : 0.0;
  }
  return out;
}

bool is_submodule(const QFunction& c_indicator) {
  const Group& grp = c_indicator.group();
  const auto d = static_cast<std::size_t>(c_indicator.arity());
  if (c_indicator[0] == Complex(0.0)) return false;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < c_indicator.size(); ++i)
    if (c_indicator[i] != Complex(0.0)) members.push_back(i);
  std::vector<int> a(d), b(d), s(d);
  for (std::size_t i : members) {
    c_indicator.decode(i, a);
    for (std::size_t j : members) {
      c_indicator.decode(j, b);
      for (std::size_t k = 0; k < d; ++k) s[k] = grp.add(a[k], b[k]);
      if (c_indicator(s) == Complex(0.0)) return false;
    }
    for (int r = 0; r < grp.order(); ++r) {
      for (std::size_t k = 0; k < d; ++k) s[k] = grp.mul(r, a[k]);
      if (c_indicator(s) == Complex(0.0)) return false;
    }
  }
  return true;
}

ComplexMatrix fourier_matrix(const Group& group) {
  const int q = group.order();
  ComplexMatrix m(q, q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) m(a, b) = group.fourier_entry(a, b);
  return m;
}

RealMatrix random_orthogonal(int q, std::uint64_t seed) {
  if (q < 1) throw InvalidArgument("random_orthogonal needs q >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix u = RealMatrix::Identity(q, q);
  for (int r = 0; r < q; ++r) {
    Eigen::VectorXd v(q);
    do {
      for (int i = 0; i < q; ++i) v(i) = normal(rng);
    } while (v.norm() < 1e-6);
    v.normalize();
    u = (RealMatrix::Identity(q, q) - 2.0 * v * v.transpose()) * u;
  }
  return u;
}

}  // namespace ecm
