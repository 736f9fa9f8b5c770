#pragma once

// Internal Weisfeiler-Leman machinery shared by the coherent-configuration
// operations and the embedding search. Colorings are refined with canonical
// (label-invariant) ids: at every round the new color of a pair is its
// position in the sorted list of distinct refinement keys, so two inputs
// related by an isomorphism end up with matching ids round by round.

#include <cstdint>
#include <optional>
#include <vector>

#include "orbital/coherent.hpp"

namespace orbital::wl {

using Key = std::vector<std::int64_t>;

struct Side {
  int n = 0;
  int rank = 0;
  std::vector<int> color;  // n * n
};

// Sorted distinct keys of one refinement round with their pair counts.
// Two sides refine compatibly iff their signatures agree every round.
struct Signature {
  std::vector<Key> keys;
  std::vector<std::int64_t> counts;
  bool operator==(const Signature&) const = default;
};

struct Trace {
  Side stable;
  std::vector<Signature> rounds;  // round 0 is the initial signature
};

// Initial coloring from a relation list: pairs are keyed by the vector
// (diagonal?, in p_1?, in p_1*?, ..., in p_m?, in p_m*?).
struct Initial {
  Side side;
  Signature signature;
};
Initial initial_from_relations(int degree, const std::vector<BinaryRelation>& rels);

// Initial coloring from an existing configuration with individualized
// points: key (color_map[color], row flag, column flag). color_map lets the
// second side of a joint refinement align its colors with the first.
Initial initial_from_config(const CoherentConfiguration& x, const std::vector<int>& points,
                            const std::vector<int>& color_map);

// Refine to the stable coloring, recording per-round signatures.
Trace refine(Initial initial);

// Refine another side in lockstep with a recorded trace. Returns its stable
// coloring (ids aligned with the trace's) or nullopt as soon as a round
// signature differs.
std::optional<Side> replay(const Trace& trace, const Initial& other);

// Unique isomorphism candidate mapping alpha to alpha_prime between two
// id-aligned stable colorings; requires the rows of alpha and alpha_prime
// to be duplicate-free, verifies the full matrix.
std::optional<Perm> extract_iso(const Side& a, const Side& b, int alpha, int alpha_prime);

}  // namespace orbital::wl
