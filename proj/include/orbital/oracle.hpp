#pragma once

#include <optional>

#include "orbital/coherent.hpp"
#include "orbital/iso_set.hpp"
#include "orbital/perm_group.hpp"

namespace orbital {

// Exact color-preserving automorphism group of a configuration, found by
// point-by-point backtracking with color-consistency pruning. Kept
// independent of the closure algorithms so it can serve as their verifier.
// Throws OverCapError when the degree exceeds the oracle cap.
PermGroup aut_oracle(const CoherentConfiguration& x);

// All isomorphisms from x onto x_prime; with psi given, only those realizing
// it. Same search, same independence, iso oracle cap.
IsoSet iso_oracle(const CoherentConfiguration& x, const CoherentConfiguration& x_prime,
                  const std::optional<ColorBijection>& psi = std::nullopt);

// Small generating set for the subgroup formed by a closed element list.
std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements);

}  // namespace orbital
