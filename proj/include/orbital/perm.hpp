#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "orbital/errors.hpp"

namespace orbital {

// Multiset of cycle lengths (fixed points included), sorted ascending.
// Invariant under conjugation.
using CycleType = std::vector<int>;

// A permutation of {0..n-1}, stored as an image table.
class Perm {
 public:
  // Identity on n points.
  explicit Perm(int degree);

  // From an image table; throws PreconditionError unless it is a bijection.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // Composition acts left to right: (a * b)[p] == b[a[p]], so that
  // p^(ab) = (p^a)^b.
  Perm operator*(const Perm& other) const;
  Perm inverse() const;

  // x^-1 * (*this) * x.
  Perm conjugated_by(const Perm& x) const;

  // Nontrivial cycles, each rotated to start at its minimum, sorted by
  // first point.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;
  int num_fixed_points() const;

  bool operator==(const Perm& other) const = default;
  auto operator<=>(const Perm& other) const = default;

  std::size_t hash() const;

  // "(0 1 2)(3 4)" for nontrivial permutations, "()" for the identity.
  std::string to_cycle_string() const;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

CycleType cycle_type(const Perm& g);

}  // namespace orbital
