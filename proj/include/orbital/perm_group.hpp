#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "orbital/limits.hpp"
#include "orbital/perm.hpp"

namespace orbital {

// A permutation group given by a generating list. Orbits, the element list
// (when the order fits under a cap) and derived predicates are cached; all
// values are immutable after construction, so groups can be shared freely.
class PermGroup {
 public:
  // Generators must all have the given degree. Duplicates and identity
  // generators are dropped; an empty list yields the trivial group.
  PermGroup(int degree, std::vector<Perm> generators);

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup cyclic(const Perm& g);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  // Smallest G-invariant set containing alpha, sorted.
  std::vector<int> orbit(int alpha) const;

  // Orbits as a partition of {0..n-1}; classes sorted, ordered by minimum.
  const std::vector<std::vector<int>>& orbit_partition() const;

  // Schreier generators of the stabilizer of alpha (identity dropped,
  // duplicates removed). At most |orbit(alpha)| * |generators| entries.
  std::vector<Perm> stabilizer_generators(int alpha) const;

  PermGroup stabilizer(int alpha) const;

  // Complete, duplicate-free, lexicographically sorted element list if
  // |G| <= cap, otherwise nullopt. The full list is cached on success.
  std::optional<std::vector<Perm>> elements(std::uint64_t cap = element_cap()) const;

  std::optional<std::uint64_t> order(std::uint64_t cap = element_cap()) const;

  // Throws OverCapError if the group cannot be enumerated under the cap.
  bool contains(const Perm& g, std::uint64_t cap = element_cap()) const;
  bool same_elements(const PermGroup& other, std::uint64_t cap = element_cap()) const;
  bool is_subgroup_of(const PermGroup& other, std::uint64_t cap = element_cap()) const;

  bool is_transitive() const;

  // 1 + number of orbits of a point stabilizer on the remaining points
  // (= number of 2-orbits). Throws PreconditionError if intransitive.
  int rank() const;

  bool is_2transitive() const;

  // Transitive with all point-stabilizer orbits on the remaining points of
  // one common size > 1. The trivial group on one point does not qualify.
  bool is_three_halves_transitive() const;

  // No nontrivial block system. Throws PreconditionError if intransitive.
  // Degree 1 counts as primitive.
  bool is_primitive() const;

  // Nontrivial point stabilizer acting semiregularly outside its fixed
  // point. Throws PreconditionError if intransitive.
  bool is_frobenius() const;

  // The group x^-1 G x.
  PermGroup conjugated_by(const Perm& x) const;

 private:
  struct Cache;

  int degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace orbital
