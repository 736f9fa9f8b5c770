#pragma once

#include <cstdint>
#include <vector>

#include "orbital/perm.hpp"

namespace orbital {

// An explicit, deduplicated, sorted list of permutations (an isomorphism set
// or a coset of an automorphism group). When the answer is all of Sym(n) the
// set is carried symbolically instead of listing n! elements.
struct IsoSet {
  int degree = 0;
  bool symbolic_sym = false;
  std::vector<Perm> perms;

  static IsoSet symbolic(int n) {
    IsoSet s;
    s.degree = n;
    s.symbolic_sym = true;
    return s;
  }

  static IsoSet of(int n, std::vector<Perm> list);

  bool empty() const { return !symbolic_sym && perms.empty(); }
  bool contains(const Perm& p) const;
  std::uint64_t size() const;  // throws for symbolic sets
};

}  // namespace orbital
