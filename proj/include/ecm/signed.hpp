#pragma once

#include <cstdint>
#include <vector>

#include "ecm/abelian.hpp"
#include "ecm/graph.hpp"
#include "ecm/models.hpp"

namespace ecm {

/// (-1)^{#inversions} of l -> images[l] under the integer order, 0 if not injective.
int sgn_injection(std::span<const int> images);
/// The same with the codomain ordered by key(value).
int sgn_injection(std::span<const int> images, const std::vector<int>& key);

/// prod_v sgn of the colours at v in rotation order. Requires a rotation.
int sgn_edge_colouring(const Multigraph& g, std::span<const int> y);

/// How a colour set inherits its linear order from Z_q: residues 0 < ... < q-1,
/// or symmetric representatives -floor(q/2) < ... < 0 < ... (q/2 counts as positive).
enum class ColourOrder { residue, symmetric };

/// A set K of colours in Z_q, optionally generated as K = P u (-P).
struct ColourSet {
  int q = 0;
  std::vector<int> members;  // sorted residues
  std::vector<int> halves;   // P, empty when K was given directly

  static ColourSet of(int q, std::vector<int> members);
  /// K = P u (-P) with P n (-P) inside {0} (q odd) or {0, q/2} (q even).
  static ColourSet from_halves(int q, std::vector<int> p);
  /// Z_k itself, generated by P = {0, ..., floor(k/2)}.
  static ColourSet whole(int k);
  /// {0, +-1, ..., +-(k-1)/2} for odd k, {+-1, ..., +-k/2} for even k.
  static ColourSet centred(int q, int k);
  /// Z_{k+1} minus (k+1)/2 for odd k, minus 0 for even k.
  static ColourSet one_extra(int k);

  int size() const { return static_cast<int>(members.size()); }
  bool closed_under_negation() const;
  bool contains(int c) const;
};

/// Order key of every residue of Z_q.
std::vector<int> colour_order_key(int q, ColourOrder order);

/// 1_Even(K) - 1_Odd(K) on Z_q^k, k = |K|.
QFunction parity_function(const ColourSet& k_set, ColourOrder order);
/// 1_Even - 1_Odd on Z_q^k: every injective tuple signed under the residue order.
QFunction parity_function_union(int q, int k);

/// i^{(q-1)(3q-2)/2} q^{q/2}.
Complex det_fourier_closed(int q);
/// Numeric determinant of [exp(2 pi i l m / q)].
Complex det_fourier_numeric(int q);

/// Closed form of the transformed parity function of ColourSet::centred(q, k)
/// (symmetric order), b taken as residues in {0, ..., q-1}.
Complex parity_fourier_closed(int k, int q, std::span<const int> b);
/// Closed form of the transformed parity function of ColourSet::one_extra(k)
/// (residue order) on Z_{k+1}^k. For even k the sign carries (-1)^{missing colour}.
Complex parity_fourier_kplus1(int k, std::span<const int> b);

/// ((1_Even(K) - 1_Odd(K))^{(x)V}, 1_Zero-sum^{(x)E}) on a |K|-regular graph.
ModelValue zero_sum_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order,
                               EvalLimits limits = {});
/// The monochrome pairing of the transformed parity function (the other side
/// of the unitary transfer).
ModelValue transformed_monochrome_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order,
                                             EvalLimits limits = {});
/// ((1_Even(K) - 1_Odd(K))^{(x)V}, 1_Mono^{(x)E}).
ModelValue monochrome_parity_sum(const Multigraph& g, const ColourSet& k_set, ColourOrder order,
                                 EvalLimits limits = {});

struct FactorizationSum {
  long long signed_sum = 0;
  std::uint64_t count = 0;  // oriented ordered bipartite (near) 2-factorizations
};

/// Enumerates colourings y in P^E whose classes are 2-factors (a != -a) or
/// 1-factors (a = -a), drops those with an odd circuit, then sums the sign of
/// every circuit orientation. 1-factor edges keep the graph orientation.
FactorizationSum factorization_sign_sum(const Multigraph& g, const ColourSet& p_set, EvalLimits limits = {});

struct SignedCount {
  long long signed_sum = 0;
  std::uint64_t count = 0;  // proper edge k-colourings
};

/// Sum of sgn(y) over proper edge k-colourings y in {0..k-1}^E.
SignedCount proper_colouring_sign_sum(const Multigraph& g, int k, EvalLimits limits = {});

/// q^{-|E|} sum_y prod_v prod_{(v,e)<(v,f)} 2 sin(pi (y_f - y_e) / q), k odd.
ModelValue sine_model(const Multigraph& g, int q, int k, EvalLimits limits = {});

/// sum_{y in Z_q^E} sgn(y) with signs under the residue order.
long long signed_colouring_sum(const Multigraph& g, int q, EvalLimits limits = {});
/// (k+1)^{-|V|/2} sum_{y in Z_{k+1}^E} sgn(y).
ModelValue kplus1_sign_sum(const Multigraph& g, int k, EvalLimits limits = {});

struct ParityCount {
  long long difference = 0;  // #even - #odd
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
};

/// Proper edge 4-colourings of a cubic graph classified by the parity of the
/// number of vertices whose colours, read in rotation order, run against the
/// cyclic order (0 1 2 3).
ParityCount even_minus_odd_proper4(const Multigraph& g, EvalLimits limits = {});

/// (-1)^{((k-1)/2)|E|} for odd k; (-1)^{(k/2)|E| + (|V|-|E|)/2} for even k.
int parity_transfer_sign(int k, long long edges, long long vertices);

}  // namespace ecm
