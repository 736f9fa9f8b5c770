#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbital/iso_set.hpp"
#include "orbital/limits.hpp"
#include "orbital/perm.hpp"
#include "orbital/perm_group.hpp"

namespace orbital {

// A set of ordered pairs on {0..n-1}, kept sorted and duplicate-free.
struct BinaryRelation {
  int degree = 0;
  std::vector<std::pair<int, int>> pairs;

  BinaryRelation() = default;
  BinaryRelation(int degree, std::vector<std::pair<int, int>> pairs);

  static BinaryRelation diagonal(int degree);
  static BinaryRelation graph_of(const Perm& g);  // {(a, a^g)}
  BinaryRelation transpose() const;
};

// A bijection between the color sets of two configurations of equal rank.
class ColorBijection {
 public:
  explicit ColorBijection(std::vector<int> map);
  static ColorBijection identity(int rank);

  int rank() const { return static_cast<int>(map_.size()); }
  int operator()(int color) const { return map_[color]; }
  const std::vector<int>& map() const { return map_; }
  ColorBijection inverse() const;
  bool is_identity() const;

  bool operator==(const ColorBijection&) const = default;

 private:
  std::vector<int> map_;
};

struct CoherenceViolation {
  enum class Axiom { C1, C2, C3 };
  Axiom axiom;
  int r = -1, s = -1, t = -1;
  std::pair<int, int> pair_a{-1, -1};
  std::pair<int, int> pair_b{-1, -1};
  std::string description() const;
};

// An n x n color matrix with class metadata. Color ids are canonical:
// diagonal classes first, then ordered by (class size, smallest member
// pair). Instances are immutable and cheap to copy.
class CoherentConfiguration {
 public:
  // Accepts any well-formed matrix (colors need not satisfy C1-C3; verify()
  // reports). Ids are compacted and canonically renumbered.
  static CoherentConfiguration from_matrix(int degree, std::vector<int> colors);

  int degree() const;
  int rank() const;
  int color(int a, int b) const;
  const std::vector<int>& matrix() const;

  bool color_is_diagonal(int c) const;
  const std::vector<int>& diagonal_colors() const;
  std::int64_t class_size(int c) const;
  std::pair<int, int> class_representative(int c) const;

  // Image of color c under transposition; -1 when the transpose of the
  // class is not a single class (C2 violated).
  int pairing(int c) const;

  // Fibers (point sets of the diagonal classes), ordered by diagonal color.
  const std::vector<std::vector<int>>& fibers() const;
  int fiber_of(int point) const;

  BinaryRelation relation(int c) const;
  std::vector<BinaryRelation> relations() const;

  // nullopt iff C1-C3 hold; cached.
  const std::optional<CoherenceViolation>& verify() const;
  bool is_coherent() const { return !verify().has_value(); }

  // Intersection numbers c_{rs}^t of a coherent configuration, computed
  // lazily from one representative pair per class. Throws
  // IncoherentInputError when the configuration is not coherent.
  const std::map<std::array<int, 3>, std::int64_t>& intersection_numbers() const;
  std::int64_t intersection_number(int r, int s, int t) const;

  std::vector<int> regular_points() const;
  bool is_semiregular() const;
  bool is_complete() const;
  bool is_homogeneous() const;
  bool is_three_halves_homogeneous() const;

  bool operator==(const CoherentConfiguration& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  explicit CoherentConfiguration(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
};

// The scheme Inv(G): classes are the 2-orbits of G.
CoherentConfiguration scheme_of_group(const PermGroup& g);

// G-orbits on k-tuples; class_id is indexed by the base-n encoding of the
// tuple (first coordinate most significant) and each class is labelled by
// its lexicographically minimal tuple.
struct TuplePartition {
  int degree = 0;
  int k = 0;
  std::vector<int> class_id;
  std::vector<std::vector<int>> representatives;
};
TuplePartition k_orbits(const PermGroup& g, int k, std::uint64_t budget = tuple_budget());

// The smallest coherent configuration whose class unions contain every
// relation of the input.
CoherentConfiguration wl_closure(const std::vector<BinaryRelation>& input);

// The smallest coherent configuration refining x with each listed point a
// singleton fiber.
CoherentConfiguration point_extension(const CoherentConfiguration& x,
                                      const std::vector<int>& points);

// WL-closures of two relation lists together with the algebraic isomorphism
// extending p[i] -> p_prime[psi[i]], when it exists.
struct JointClosure {
  CoherentConfiguration x;
  CoherentConfiguration x_prime;
  ColorBijection phi;
};
std::optional<JointClosure> joint_wl_closure(const std::vector<BinaryRelation>& p,
                                             const std::vector<BinaryRelation>& p_prime,
                                             const std::vector<int>& psi);
std::optional<ColorBijection> algebraic_isomorphism(const std::vector<BinaryRelation>& p,
                                                    const std::vector<BinaryRelation>& p_prime,
                                                    const std::vector<int>& psi);

// Checks phi against the full intersection tensors of two coherent
// configurations (plus class sizes, diagonal status and pairing).
bool is_algebraic_isomorphism(const CoherentConfiguration& x, const CoherentConfiguration& x_prime,
                              const ColorBijection& phi);

// The unique isomorphism candidate mapping the regular point alpha to
// alpha_prime, verified classwise; nullopt when propagation or verification
// fails. Throws PreconditionError unless both points are regular.
std::optional<Perm> iso_from_regular_point(const CoherentConfiguration& x,
                                           const CoherentConfiguration& x_prime,
                                           const ColorBijection& phi, int alpha, int alpha_prime);

// All isomorphisms realizing the algebraic isomorphism psi, found through a
// base of size <= b_max whose point extension is 1-regular.
IsoSet list_isomorphisms_bounded_base(const CoherentConfiguration& x,
                                      const CoherentConfiguration& x_prime,
                                      const ColorBijection& psi, int b_max);

}  // namespace orbital
