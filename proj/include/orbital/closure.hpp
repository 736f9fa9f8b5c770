#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "orbital/coherent.hpp"
#include "orbital/iso_set.hpp"
#include "orbital/perm_group.hpp"

namespace orbital {

// Color-preserving elements of H with respect to Inv(G), i.e. G^(2) and H
// intersected. H must be enumerable under the element cap.
PermGroup bfc(const PermGroup& g, const PermGroup& h);

// Elements of H mapping classes of x onto classes of x_prime (matching psi
// when given).
IsoSet bfi(const CoherentConfiguration& x, const CoherentConfiguration& x_prime,
           const PermGroup& h, const std::optional<ColorBijection>& psi = std::nullopt);

// A conjugation witness: t^x = psi(t) for the aligned generator lists and
// omega^x = omega_prime; re-verified on construction.
struct EmbeddingWitness {
  Perm x;
  std::vector<Perm> source;
  std::vector<Perm> target;
  int omega;
  int omega_prime;

  EmbeddingWitness(Perm x, std::vector<Perm> source, std::vector<Perm> target, int omega,
                   int omega_prime);
};

// The unique permutation x with G^x <= H, t[i]^x = t_prime[i] and
// omega^x = omega_prime, or nullopt. G must be transitive and generated
// by t.
std::optional<Perm> imbed(const PermGroup& g, const std::vector<Perm>& t, const PermGroup& h,
                          const std::vector<Perm>& t_prime, int omega, int omega_prime);

// Unordered 2-element generating sets {a, b}, each returned with a < b, in
// lexicographic order. With first_only, stops at the first one. Throws
// NoGeneratingPairError when none exists.
std::vector<std::pair<Perm, Perm>> generating_pairs(const PermGroup& g, bool first_only);

struct TwoClosureResult {
  PermGroup closure;
  int step;  // 1..6, the branch that produced the closure
  // Steps 3-6 ran although the degree is in the range where the
  // classification gives no guarantee; the result may differ from the true
  // closure and callers should cross-check.
  bool below_classification_bound;
};

// The 2-closure of a 3/2-transitive group. Degrees up to small_threshold are
// delegated to the automorphism oracle; above it the classification-based
// steps run.
TwoClosureResult two_closure(const PermGroup& g, int small_threshold = 169);

// The k-closure of a 3/2-transitive, not 2-transitive group, obtained by
// filtering the 2-closure against the k-orbits of G.
PermGroup k_closure(const PermGroup& g, int k, std::uint64_t budget = tuple_budget(),
                    int small_threshold = 169);

// All isomorphisms between the schemes of two primitive 3/2-transitive
// groups (not only color-preserving ones).
IsoSet iso_schemes(const PermGroup& g, const PermGroup& g_prime, int small_threshold = 169);

// Iso(Inv(G), Inv(G'), psi) for 3/2-transitive groups; psi must be an
// algebraic isomorphism between the schemes.
IsoSet iso_colored(const PermGroup& g, const PermGroup& g_prime, const ColorBijection& psi,
                   int small_threshold = 169);

}  // namespace orbital
