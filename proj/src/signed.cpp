#include "ecm/signed.hpp"

#include <algorithm>
#include <numbers>

#include "ecm/error.hpp"
#include "enumerate.hpp"

namespace ecm {

namespace {

constexpr double kPi = std::numbers::pi;

Complex i_power(long long e) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((e % 4) + 4) % 4];
}

int mod(int a, int q) { return ((a % q) + q) % q; }

void require_rotation(const Multigraph& g, const char* what) {
  if (!g.has_rotation()) throw InvalidArgument(std::string(what) + ": graph has no rotation system");
}

void require_regular(const Multigraph& g, int k, const char* what) {
  if (!g.is_regular(static_cast<std::size_t>(k)))
    throw InvalidArgument(std::string(what) + ": graph must be " + std::to_string(k) + "-regular");
}

/// Edge indices at each vertex in rotation order.
std::vector<std::vector<std::size_t>> rotation_edges(const Multigraph& g) {
  std::vector<std::vector<std::size_t>> out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (auto h : g.half_edges_at(v)) out[v].push_back(h.edge);
  return out;
}

ModelValue uniform_edge_model(const Multigraph& g, ArityFamily family, EvalLimits limits) {
  const Group grp = family.group();
  return edge_partition(g, EdgeModel{std::move(family), constant(grp, 1, 1.0)}, limits);
}

ModelValue parity_pairing(const Multigraph& g, const QFunction& vertex, const QFunction& pair, EvalLimits limits) {
  ArityFamily family(vertex.group());
  family.set(vertex);
  return halfedge_inner(g, family, pair, limits);
}

}  // namespace

int sgn_injection(std::span<const int> images) {
  int s = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return 0;
      if (images[i] > images[j]) s = -s;
    }
  return s;
}

int sgn_injection(std::span<const int> images, const std::vector<int>& key) {
  int s = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return 0;
      if (key.at(static_cast<std::size_t>(images[i])) > key.at(static_cast<std::size_t>(images[j]))) s = -s;
    }
  return s;
}

int sgn_edge_colouring(const Multigraph& g, std::span<const int> y) {
  require_rotation(g, "edge colouring sign");
  if (y.size() != g.edge_count()) throw InvalidArgument("edge colouring sign: one colour per edge");
  int s = 1;
  std::vector<int> at;
  for (std::size_t v = 0; v < g.vertex_count() && s != 0; ++v) {
    at.clear();
    for (auto h : g.half_edges_at(v)) at.push_back(y[h.edge]);
    s *= sgn_injection(at);
  }
  return s;
}

ColourSet ColourSet::of(int q, std::vector<int> members) {
  if (q < 1) throw InvalidArgument("colour set: q must be positive");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidArgument("colour set: repeated colour");
  for (int c : members)
    if (c < 0 || c >= q) throw InvalidArgument("colour set: colour outside Z_q");
  return ColourSet{q, std::move(members), {}};
}

ColourSet ColourSet::from_halves(int q, std::vector<int> p) {
  std::vector<int> k = p;
  for (int a : p) k.push_back(mod(-a, q));
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  ColourSet out = of(q, p);
  for (int a : out.members) {
    const int neg = mod(-a, q);
    const bool self = neg == a;
    if (!self && out.contains(neg)) throw InvalidArgument("colour set: P meets -P outside the self-inverse elements");
  }
  out.halves = out.members;
  out.members = std::move(k);
  return out;
}

ColourSet ColourSet::whole(int k) {
  std::vector<int> p;
  for (int a = 0; a <= k / 2; ++a) p.push_back(a);
  return from_halves(k, p);
}

ColourSet ColourSet::centred(int q, int k) {
  std::vector<int> p;
  if (k % 2) p.push_back(0);
  for (int a = 1; a <= k / 2; ++a) p.push_back(a);
  ColourSet out = from_halves(q, p);
  if (out.size() != k) throw InvalidArgument("centred colour set: q too small for k distinct colours");
  return out;
}

ColourSet ColourSet::one_extra(int k) {
  const int q = k + 1;
  std::vector<int> p;
  if (k % 2) {
    for (int a = 0; a < q / 2; ++a) p.push_back(a);
  } else {
    for (int a = 1; a <= k / 2; ++a) p.push_back(a);
  }
  return from_halves(q, p);
}

bool ColourSet::closed_under_negation() const {
  return std::all_of(members.begin(), members.end(), [&](int c) { return contains(mod(-c, q)); });
}

bool ColourSet::contains(int c) const { return std::binary_search(members.begin(), members.end(), c); }

std::vector<int> colour_order_key(int q, ColourOrder order) {
  std::vector<int> key(static_cast<std::size_t>(q));
  for (int c = 0; c < q; ++c) key[static_cast<std::size_t>(c)] = (order == ColourOrder::symmetric && 2 * c > q) ? c - q : c;
  return key;
}

QFunction parity_function(const ColourSet& k_set, ColourOrder order) {
  const auto key = colour_order_key(k_set.q, order);
  return QFunction::tabulate(Group::cyclic(k_set.q), k_set.size(), [&](std::span<const int> b) {
    for (int c : b)
      if (!k_set.contains(c)) return 0.0;
    return static_cast<double>(sgn_injection(b, key));
  });
}

QFunction parity_function_union(int q, int k) {
  return QFunction::tabulate(Group::cyclic(q), k, [](std::span<const int> b) {
    return static_cast<double>(sgn_injection(b));
  });
}

Complex det_fourier_closed(int q) {
  if (q < 1) throw InvalidArgument("Fourier determinant: q must be positive");
  const long long e = static_cast<long long>(q - 1) * (3LL * q - 2) / 2;
  return i_power(e) * std::pow(static_cast<double>(q), q / 2.0);
}

Complex det_fourier_numeric(int q) {
  if (q < 1) throw InvalidArgument("Fourier determinant: q must be positive");
  ComplexMatrix m(q, q);
  for (int l = 0; l < q; ++l)
    for (int c = 0; c < q; ++c) m(l, c) = std::polar(1.0, 2.0 * kPi * ((l * c) % q) / q);
  return m.determinant();
}

Complex parity_fourier_closed(int k, int q, std::span<const int> b) {
  if (static_cast<int>(b.size()) != k) throw InvalidArgument("parity transform: tuple length must be k");
  for (int c : b)
    if (c < 0 || c >= q) throw InvalidArgument("parity transform: entries must be residues in [0, q)");
  Complex v = std::pow(static_cast<double>(q), -k / 2.0) * i_power(static_cast<long long>(k) * (k - 1) / 2);
  for (int l = 0; l < k; ++l)
    for (int m = l + 1; m < k; ++m) v *= 2.0 * std::sin(kPi * (b[m] - b[l]) / q);
  if (k % 2 == 0) {
    double cosines = 0.0;
    for (unsigned s = 0; s < (1U << k); ++s) {
      if (__builtin_popcount(s) != k / 2) continue;
      int diff = 0;
      for (int l = 0; l < k; ++l) diff += ((s >> l) & 1U) ? b[l] : -b[l];
      cosines += std::cos(kPi * diff / q);
    }
    v *= cosines;
  }
  return v;
}

Complex parity_fourier_kplus1(int k, std::span<const int> b) {
  const int q = k + 1;
  if (static_cast<int>(b.size()) != k) throw InvalidArgument("parity transform: tuple length must be k");
  for (int c : b)
    if (c < 0 || c >= q) throw InvalidArgument("parity transform: entries must be residues in [0, k]");
  const int s = sgn_injection(b);
  if (s == 0) return 0.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(q));
  if (k % 2) return scale * i_power(static_cast<long long>(k) * (k - 1) / 2) * static_cast<double>(s);
  int missing = 0;
  while (std::find(b.begin(), b.end(), missing) != b.end()) ++missing;
  const double flip = missing % 2 ? -1.0 : 1.0;
  return scale * i_power(static_cast<long long>(k) * (k + 1) / 2) * (flip * s);
}

ModelValue zero_sum_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order, EvalLimits limits) {
  require_rotation(g, "zero-sum parity pairing");
  require_regular(g, k_set.size(), "zero-sum parity pairing");
  return parity_pairing(g, parity_function(k_set, order), zero_sum_indicator(Group::cyclic(k_set.q), 2), limits);
}

ModelValue transformed_monochrome_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order,
                                             EvalLimits limits) {
  require_rotation(g, "monochrome parity pairing");
  require_regular(g, k_set.size(), "monochrome parity pairing");
  return parity_pairing(g, fourier(parity_function(k_set, order)), monochrome_indicator(Group::cyclic(k_set.q), 2),
                        limits);
}

ModelValue monochrome_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order, EvalLimits limits) {
  require_rotation(g, "monochrome parity pairing");
  require_regular(g, k_set.size(), "monochrome parity pairing");
  return parity_pairing(g, parity_function(k_set, order), monochrome_indicator(Group::cyclic(k_set.q), 2), limits);
}

FactorizationSum factorization_sign_sum(const Multigraph& g, const ColourSet& p_set, EvalLimits limits) {
  require_rotation(g, "factorization sign sum");
  if (p_set.halves.empty()) throw InvalidArgument("factorization sign sum: colour set needs its half set P");
  const int q = p_set.q;
  const int k = p_set.size();
  require_regular(g, k, "factorization sign sum");
  const auto& p = p_set.halves;
  const int radix = static_cast<int>(p.size());
  detail::require_terms("factorization scan |P|^|E|", detail::power_estimate(radix, g.edge_count()), limits.max_terms);

  const std::size_t m = g.edge_count();
  std::vector<int> need(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) need[i] = mod(-p[i], q) == p[i] ? 1 : 2;

  FactorizationSum out;
  std::vector<int> count;
  std::vector<std::size_t> partner(2 * m);
  std::vector<std::vector<std::size_t>> circuits;  // half-edge (2e + end) where each circuit edge is entered
  std::vector<int> head(m), y(m), at;
  std::vector<char> seen(m);

  detail::for_each_configuration(radix, m, [&](std::span<const int> pick) {
    for (std::size_t e = 0; e < m; ++e) y[e] = p[static_cast<std::size_t>(pick[e])];
    // Each class must meet every vertex the required number of times.
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      count.assign(p.size(), 0);
      for (auto h : g.half_edges_at(v)) ++count[static_cast<std::size_t>(pick[h.edge])];
      if (count != need) return;
    }
    // Pair the two same-coloured half-edges at each vertex of a 2-factor.
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto hs = g.half_edges_at(v);
      for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
          if (pick[hs[i].edge] == pick[hs[j].edge] && need[static_cast<std::size_t>(pick[hs[i].edge])] == 2) {
            const std::size_t a = 2 * hs[i].edge + static_cast<std::size_t>(hs[i].end);
            const std::size_t b = 2 * hs[j].edge + static_cast<std::size_t>(hs[j].end);
            partner[a] = b;
            partner[b] = a;
          }
    }
    circuits.clear();
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t e0 = 0; e0 < m; ++e0) {
      if (seen[e0] || need[static_cast<std::size_t>(pick[e0])] != 2) continue;
      std::vector<std::size_t> circuit;
      std::size_t h = 2 * e0;
      do {
        const std::size_t e = h / 2;
        seen[e] = 1;
        circuit.push_back(h);
        h = partner[h ^ 1U];
      } while (h != 2 * e0);
      if (circuit.size() % 2) return;  // odd circuit
      circuits.push_back(std::move(circuit));
    }

    for (std::size_t e = 0; e < m; ++e) head[e] = g.head_end(e);
    const std::uint64_t choices = std::uint64_t{1} << circuits.size();
    for (std::uint64_t dir = 0; dir < choices; ++dir) {
      for (std::size_t c = 0; c < circuits.size(); ++c) {
        const bool reversed = (dir >> c) & 1U;
        for (std::size_t h : circuits[c]) {
          // Entering at end h%2 and leaving at the other end, which is the head going forward.
          const int forward_head = 1 - static_cast<int>(h % 2);
          head[h / 2] = reversed ? 1 - forward_head : forward_head;
        }
      }
      int sign = 1;
      for (std::size_t v = 0; v < g.vertex_count() && sign != 0; ++v) {
        at.clear();
        for (auto hv : g.half_edges_at(v)) at.push_back(hv.end == head[hv.edge] ? y[hv.edge] : mod(-y[hv.edge], q));
        sign *= sgn_injection(at);
      }
      if (sign == 0) throw Error("factorization sign sum: oriented colours are not injective");
      out.signed_sum += sign;
      ++out.count;
    }
  });
  return out;
}

SignedCount proper_colouring_sign_sum(const Multigraph& g, int k, EvalLimits limits) {
  require_rotation(g, "proper colouring sign sum");
  detail::require_terms("proper edge colouring scan k^|E|", detail::power_estimate(k, g.edge_count()),
                        limits.max_terms);
  const auto at = rotation_edges(g);
  struct Acc {
    long long s = 0;
    std::uint64_t c = 0;
    Acc& operator+=(const Acc& o) {
      s += o.s;
      c += o.c;
      return *this;
    }
  };
  const Acc total = detail::sum_configurations<Acc>(k, g.edge_count(), [&](std::span<const int> y) {
    // Proper: colours around every vertex are pairwise distinct.
    for (const auto& es : at)
      for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
          if (y[es[i]] == y[es[j]]) return Acc{};
    return Acc{sgn_edge_colouring(g, y), 1};
  });
  return {total.s, total.c};
}

ModelValue sine_model(const Multigraph& g, int q, int k, EvalLimits limits) {
  require_rotation(g, "sine model");
  if (k % 2 == 0) throw InvalidArgument("sine model: k must be odd");
  if (q < k) throw InvalidArgument("sine model: q must be at least k");
  require_regular(g, k, "sine model");
  std::vector<double> two_sin(static_cast<std::size_t>(2 * q - 1));
  for (int d = -(q - 1); d <= q - 1; ++d) two_sin[static_cast<std::size_t>(d + q - 1)] = 2.0 * std::sin(kPi * d / q);
  auto family = ArityFamily::tabulate(Group::cyclic(q), std::vector<int>{k}, [&](std::span<const int> y) {
    double p = 1.0;
    for (int l = 0; l < k; ++l)
      for (int m = l + 1; m < k; ++m) p *= two_sin[static_cast<std::size_t>(y[m] - y[l] + q - 1)];
    return p;
  });
  ModelValue v = uniform_edge_model(g, std::move(family), limits);
  v.value *= std::pow(static_cast<double>(q), -static_cast<double>(g.edge_count()));
  return v;
}

long long signed_colouring_sum(const Multigraph& g, int q, EvalLimits limits) {
  require_rotation(g, "signed colouring sum");
  detail::require_terms("signed colouring scan q^|E|", detail::power_estimate(q, g.edge_count()), limits.max_terms);
  const auto at = rotation_edges(g);
  return detail::sum_configurations<long long>(q, g.edge_count(), [&](std::span<const int> y) {
    thread_local std::vector<int> colours;
    long long s = 1;
    for (const auto& es : at) {
      colours.clear();
      for (std::size_t e : es) colours.push_back(y[e]);
      s *= sgn_injection(colours);
      if (s == 0) break;
    }
    return s;
  });
}

ModelValue kplus1_sign_sum(const Multigraph& g, int k, EvalLimits limits) {
  require_regular(g, k, "k+1 sign sum");
  const long long raw = signed_colouring_sum(g, k + 1, limits);
  const double scale = std::pow(static_cast<double>(k + 1), -static_cast<double>(g.vertex_count()) / 2.0);
  return {Complex(static_cast<double>(raw) * scale, 0.0),
          static_cast<std::uint64_t>(detail::power_estimate(k + 1, g.edge_count()))};
}

ParityCount even_minus_odd_proper4(const Multigraph& g, EvalLimits limits) {
  require_rotation(g, "even/odd 4-colouring count");
  require_regular(g, 3, "even/odd 4-colouring count");
  detail::require_terms("edge 4-colouring scan 4^|E|", detail::power_estimate(4, g.edge_count()), limits.max_terms);
  const auto at = rotation_edges(g);
  ParityCount out;
  detail::for_each_configuration(4, g.edge_count(), [&](std::span<const int> y) {
    int against = 0;
    for (const auto& es : at) {
      const int a = y[es[0]], b = y[es[1]], c = y[es[2]];
      if (a == b || b == c || a == c) return;
      // Three distinct points of the 4-cycle follow the cyclic order iff b comes before c going round from a.
      if (mod(b - a, 4) > mod(c - a, 4)) ++against;
    }
    if (against % 2) ++out.odd;
    else ++out.even;
  });
  out.difference = static_cast<long long>(out.even) - static_cast<long long>(out.odd);
  return out;
}

int parity_transfer_sign(int k, long long edges, long long vertices) {
  if (k < 2) throw InvalidArgument("parity transfer sign: k must be at least 2");
  if (k % 2) return ((k - 1) / 2 * edges) % 2 ? -1 : 1;
  const long long gap = vertices - edges;
  if (gap % 2) throw InvalidArgument("parity transfer sign: |V| - |E| must be even for even k");
  const long long e = (k / 2) * edges + gap / 2;
  return ((e % 2) + 2) % 2 ? -1 : 1;
}

}  // namespace ecm
