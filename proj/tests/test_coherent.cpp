#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "orbital/coherent.hpp"
#include "orbital/errors.hpp"
#include "orbital/gf.hpp"
#include "orbital/oracle.hpp"
#include "orbital/zoo.hpp"

using namespace orbital;

namespace {

Perm cycle(int n, std::vector<std::vector<int>> cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(std::move(img));
}

PermGroup d5() { return PermGroup(5, {cycle(5, {{0, 1, 2, 3, 4}}), cycle(5, {{1, 4}, {2, 3}})}); }

BinaryRelation c5_edges() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back((i + 1) % 5, i);
  }
  return BinaryRelation(5, std::move(pairs));
}

CoherentConfiguration pentagon() { return wl_closure({c5_edges()}); }

// Intersection numbers recounted pair by pair, independent of the
// representative-based computation in the library.
std::map<std::array<int, 3>, std::int64_t> brute_tensor(const CoherentConfiguration& x) {
  const int n = x.degree();
  std::map<std::array<int, 3>, std::int64_t> result;
  for (int r = 0; r < x.rank(); ++r)
    for (int s = 0; s < x.rank(); ++s)
      for (int t = 0; t < x.rank(); ++t) {
        std::int64_t common = -1;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            if (x.color(a, b) != t) continue;
            std::int64_t count = 0;
            for (int g = 0; g < n; ++g)
              if (x.color(a, g) == r && x.color(g, b) == s) ++count;
            if (common < 0) common = count;
            REQUIRE(common == count);
          }
        if (common > 0) result[{r, s, t}] = common;
      }
  return result;
}

}  // namespace

TEST_CASE("scheme of 2-transitive groups has rank 2") {
  for (int n : {2, 3, 4, 5}) {
    auto x = scheme_of_group(PermGroup::symmetric(n));
    CHECK(x.rank() == 2);
    CHECK(x.is_coherent());
    CHECK(x.is_three_halves_homogeneous());
  }
}

TEST_CASE("scheme of D5 is the pentagon scheme") {
  auto x = scheme_of_group(d5());
  CHECK(x.rank() == 3);
  CHECK(x.class_size(1) == 10);
  CHECK(x.class_size(2) == 10);
  CHECK(x.is_coherent());
  CHECK(x == pentagon());
}

TEST_CASE("scheme of a regular group is semiregular of rank n") {
  auto z4 = PermGroup(4, {cycle(4, {{0, 1, 2, 3}})});
  auto x = scheme_of_group(z4);
  CHECK(x.rank() == 4);
  CHECK(x.is_semiregular());
  // classes are the difference classes {(a, a+i mod 4)}
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(x.color(a, b) == x.color(0, (b - a + 4) % 4));
}

TEST_CASE("k_orbits") {
  auto z3 = PermGroup(3, {cycle(3, {{0, 1, 2}})});
  CHECK(k_orbits(z3, 1).representatives.size() == 1);

  CHECK(k_orbits(d5(), 2).representatives.size() == 3);

  // Sym(3) on triples: patterns aaa, aab, aba, baa, abc
  CHECK(k_orbits(PermGroup::symmetric(3), 3).representatives.size() == 5);

  CHECK_THROWS_AS(k_orbits(z3, 30, 1000), OverBudgetError);
}

TEST_CASE("k_orbits classes are genuinely invariant") {
  auto part = k_orbits(d5(), 2);
  auto elems = *d5().elements();
  for (const Perm& g : elems)
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        CHECK(part.class_id[a * 5 + b] == part.class_id[g[a] * 5 + g[b]]);
}

TEST_CASE("verify accepts group schemes and the AS0(9) scheme") {
  CHECK(scheme_of_group(d5()).is_coherent());
  auto x9 = scheme_of_group(as0(3, 2));
  CHECK(x9.rank() == 3);
  CHECK(x9.is_coherent());
  CHECK(x9.is_three_halves_homogeneous());
}

TEST_CASE("verify rejects an edge coloring without the diagonal split") {
  // colors: C5 edges vs everything else (diagonal merged with non-edges)
  std::vector<int> m(25, 0);
  for (auto [a, b] : c5_edges().pairs) m[a * 5 + b] = 1;
  auto x = CoherentConfiguration::from_matrix(5, std::move(m));
  auto violation = x.verify();
  REQUIRE(violation.has_value());
  CHECK(violation->axiom == CoherenceViolation::Axiom::C1);
}

TEST_CASE("verify reports C3 violations") {
  // path P4 edge coloring with diagonal: fails C3 (degrees differ)
  std::vector<int> m(16, 0);
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = 2;
  auto edge = [&](int a, int b) { m[a * 4 + b] = m[b * 4 + a] = 1; };
  edge(0, 1);
  edge(1, 2);
  edge(2, 3);
  auto x = CoherentConfiguration::from_matrix(4, std::move(m));
  auto violation = x.verify();
  REQUIRE(violation.has_value());
  CHECK(violation->axiom == CoherenceViolation::Axiom::C3);
}

TEST_CASE("intersection numbers against brute counting") {
  auto pent = pentagon();
  CHECK(pent.intersection_numbers() == brute_tensor(pent));
  // adjacent pentagon vertices share no common neighbor
  int edge = pent.color(0, 1);
  CHECK(pent.intersection_number(edge, edge, edge) == 0);

  // diagonal color acts as identity: c_{0,s}^t = [s == t]
  for (int s = 0; s < pent.rank(); ++s)
    for (int t = 0; t < pent.rank(); ++t)
      CHECK(pent.intersection_number(0, s, t) == (s == t ? 1 : 0));

  // trivial scheme on 4 points: off-diagonal class has c_{ss}^s = 2
  auto triv = scheme_of_group(PermGroup::symmetric(4));
  CHECK(triv.intersection_number(1, 1, 1) == 2);
  CHECK(triv.intersection_numbers() == brute_tensor(triv));

  auto x9 = scheme_of_group(as0(3, 2));
  CHECK(x9.intersection_numbers() == brute_tensor(x9));
}

TEST_CASE("wl closure of C5 edges is the pentagon scheme") {
  auto x = pentagon();
  CHECK(x.rank() == 3);
  CHECK(x.is_coherent());
  CHECK(x == scheme_of_group(d5()));
}

TEST_CASE("wl closure of the diagonal is the trivial scheme") {
  auto x = wl_closure({BinaryRelation::diagonal(6)});
  CHECK(x.rank() == 2);
  CHECK(x == scheme_of_group(PermGroup::symmetric(6)));
}

TEST_CASE("wl closure of a regular group's generator graph is semiregular") {
  Perm g = cycle(5, {{0, 1, 2, 3, 4}});
  auto x = wl_closure({BinaryRelation::graph_of(g)});
  CHECK(x.rank() == 5);
  CHECK(x.is_semiregular());
}

TEST_CASE("wl closure is idempotent on coherent configurations") {
  for (auto x : {pentagon(), scheme_of_group(as0(3, 2)),
                 scheme_of_group(PermGroup(4, {cycle(4, {{0, 1, 2, 3}})}))}) {
    CHECK(wl_closure(x.relations()) == x);
  }
}

TEST_CASE("wl closure rank never drops when relations are added") {
  auto base = wl_closure({c5_edges()});
  auto finer = wl_closure({c5_edges(), BinaryRelation(5, {{0, 1}})});
  CHECK(finer.rank() >= base.rank());
  // and every input relation is a union of classes
  auto is_union_of_classes = [](const CoherentConfiguration& x, const BinaryRelation& rel) {
    std::vector<char> in_rel(x.rank(), 0), out_rel(x.rank(), 0);
    std::vector<char> member(static_cast<std::size_t>(x.degree()) * x.degree(), 0);
    for (auto [a, b] : rel.pairs) member[a * x.degree() + b] = 1;
    for (int a = 0; a < x.degree(); ++a)
      for (int b = 0; b < x.degree(); ++b)
        (member[a * x.degree() + b] ? in_rel : out_rel)[x.color(a, b)] = 1;
    for (int c = 0; c < x.rank(); ++c)
      if (in_rel[c] && out_rel[c]) return false;
    return true;
  };
  CHECK(is_union_of_classes(finer, c5_edges()));
  CHECK(is_union_of_classes(base, c5_edges()));
}

TEST_CASE("point extension of the trivial scheme splits off the point") {
  auto triv = scheme_of_group(PermGroup::symmetric(4));
  auto ext = point_extension(triv, {0});
  CHECK(ext.rank() == 5);
  REQUIRE(ext.fibers().size() == 2);
  CHECK(ext.fibers()[0] == std::vector<int>{0});
  CHECK(ext.fibers()[1] == std::vector<int>{1, 2, 3});
  CHECK(ext.is_coherent());
}

TEST_CASE("point extension of the complete configuration is itself") {
  std::vector<int> m(9);
  std::iota(m.begin(), m.end(), 0);
  auto complete = CoherentConfiguration::from_matrix(3, std::move(m));
  CHECK(complete.is_complete());
  CHECK(point_extension(complete, {1}) == complete);
}

TEST_CASE("pentagon extended at two adjacent points becomes complete") {
  auto ext = point_extension(pentagon(), {0, 1});
  CHECK(ext.is_complete());
}

TEST_CASE("point extension refines the original") {
  auto pent = pentagon();
  auto ext = point_extension(pent, {0});
  // every class of the extension lies inside one class of the original
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int dd = 0; dd < 5; ++dd)
          if (ext.color(a, b) == ext.color(c, dd)) CHECK(pent.color(a, b) == pent.color(c, dd));
  CHECK(ext.fiber_of(0) == 0);
  CHECK(ext.fibers()[0] == std::vector<int>{0});
}

TEST_CASE("regular points") {
  auto z4 = scheme_of_group(PermGroup(4, {cycle(4, {{0, 1, 2, 3}})}));
  CHECK(z4.is_semiregular());
  CHECK(pentagon().regular_points().empty());
  std::vector<int> m(9);
  std::iota(m.begin(), m.end(), 0);
  CHECK(CoherentConfiguration::from_matrix(3, std::move(m)).is_complete());
}

TEST_CASE("three-halves homogeneity") {
  CHECK(pentagon().is_three_halves_homogeneous());
  CHECK(scheme_of_group(PermGroup::symmetric(5)).is_three_halves_homogeneous());
  // intransitive group: not homogeneous
  auto x = scheme_of_group(PermGroup(4, {cycle(4, {{0, 1}})}));
  CHECK_FALSE(x.is_homogeneous());
  CHECK_FALSE(x.is_three_halves_homogeneous());
}

TEST_CASE("algebraic isomorphism between relabeled pentagons") {
  Perm relabel = cycle(5, {{0, 3}, {1, 4, 2}});
  std::vector<std::pair<int, int>> mapped;
  for (auto [a, b] : c5_edges().pairs) mapped.emplace_back(relabel[a], relabel[b]);
  BinaryRelation edges2(5, std::move(mapped));

  auto joint = joint_wl_closure({c5_edges()}, {edges2}, {0});
  REQUIRE(joint.has_value());
  CHECK(joint->x.rank() == 3);
  CHECK(joint->x_prime.rank() == 3);
  CHECK(is_algebraic_isomorphism(joint->x, joint->x_prime, joint->phi));

  // full tensor equality, recounted directly
  auto t1 = brute_tensor(joint->x);
  for (const auto& [key, value] : t1) {
    CHECK(joint->x_prime.intersection_number(joint->phi(key[0]), joint->phi(key[1]),
                                             joint->phi(key[2])) == value);
  }
}

TEST_CASE("no algebraic isomorphism from C5 to the path P5") {
  std::vector<std::pair<int, int>> path;
  for (int i = 0; i + 1 < 5; ++i) {
    path.emplace_back(i, i + 1);
    path.emplace_back(i + 1, i);
  }
  CHECK_FALSE(algebraic_isomorphism({c5_edges()}, {BinaryRelation(5, path)}, {0}).has_value());
}

TEST_CASE("algebraic isomorphism of a list with itself is the identity") {
  auto phi = algebraic_isomorphism({c5_edges()}, {c5_edges()}, {0});
  REQUIRE(phi.has_value());
  CHECK(phi->is_identity());
}

TEST_CASE("iso from regular point on the scheme of Z4") {
  auto z4 = scheme_of_group(PermGroup(4, {cycle(4, {{0, 1, 2, 3}})}));
  auto id = ColorBijection::identity(z4.rank());
  auto f0 = iso_from_regular_point(z4, z4, id, 0, 0);
  REQUIRE(f0.has_value());
  CHECK(f0->is_identity());

  auto f1 = iso_from_regular_point(z4, z4, id, 0, 1);
  REQUIRE(f1.has_value());
  CHECK(f1->images() == std::vector<int>{1, 2, 3, 0});  // x -> x + 1
}

TEST_CASE("no isomorphism between the schemes of Z4 and Z2 x Z2") {
  auto z4 = scheme_of_group(PermGroup(4, {cycle(4, {{0, 1, 2, 3}})}));
  auto v4 = scheme_of_group(PermGroup(4, {cycle(4, {{0, 1}, {2, 3}}), cycle(4, {{0, 2}, {1, 3}})}));
  CHECK(z4.rank() == 4);
  CHECK(v4.rank() == 4);
  // try every color bijection fixing the diagonal; propagation or
  // verification must fail for each
  std::vector<int> offdiag{1, 2, 3};
  std::sort(offdiag.begin(), offdiag.end());
  bool any = false;
  do {
    std::vector<int> map{0, offdiag[0], offdiag[1], offdiag[2]};
    ColorBijection phi{std::move(map)};
    if (iso_from_regular_point(z4, v4, phi, 0, 0)) any = true;
  } while (std::next_permutation(offdiag.begin(), offdiag.end()));
  CHECK_FALSE(any);
}

TEST_CASE("iso_from_regular_point rejects non-regular points") {
  auto pent = pentagon();
  CHECK_THROWS_AS(iso_from_regular_point(pent, pent, ColorBijection::identity(3), 0, 0),
                  PreconditionError);
}

TEST_CASE("list_isomorphisms_bounded_base: automorphisms of an imprimitive Frobenius scheme") {
  auto frob = affine_group(3, 2, {{{2, 0}, {0, 2}}});  // (Z3 x Z3) x| <-I>
  auto x = scheme_of_group(frob);
  auto autos = list_isomorphisms_bounded_base(x, x, ColorBijection::identity(x.rank()), 2);
  CHECK(autos.size() == 18);
  // matches the independent backtracking oracle
  auto oracle = iso_oracle(x, x, ColorBijection::identity(x.rank()));
  CHECK(autos.perms == oracle.perms);
  // and the group itself is inside
  for (const Perm& g : frob.generators()) CHECK(autos.contains(g));
}

TEST_CASE("list_isomorphisms_bounded_base: pentagon automorphisms") {
  auto pent = pentagon();
  auto autos = list_isomorphisms_bounded_base(pent, pent, ColorBijection::identity(3), 2);
  CHECK(autos.size() == 10);
  // brute force over Sym(5)
  std::vector<Perm> brute;
  const auto sym5 = *PermGroup::symmetric(5).elements();
  for (const Perm& g : sym5) {
    bool ok = true;
    for (int a = 0; a < 5 && ok; ++a)
      for (int b = 0; b < 5; ++b)
        if (pent.color(g[a], g[b]) != pent.color(a, b)) {
          ok = false;
          break;
        }
    if (ok) brute.push_back(g);
  }
  CHECK(autos.perms == brute);
}

TEST_CASE("list_isomorphisms_bounded_base rejects a non-algebraic psi") {
  auto pent = pentagon();
  // swapping the diagonal with an off-diagonal class cannot be algebraic
  CHECK_THROWS_AS(
      list_isomorphisms_bounded_base(pent, pent, ColorBijection({1, 0, 2}), 2),
      PreconditionError);
}

TEST_CASE("schemes are invariant under their group (Galois, easy half)") {
  for (auto g : {d5(), as0(3, 2), agammal1(2, 3)}) {
    auto x = scheme_of_group(g);
    auto elems = *g.elements();
    for (const Perm& e : elems)
      for (int a = 0; a < g.degree(); ++a)
        for (int b = 0; b < g.degree(); ++b) CHECK(x.color(e[a], e[b]) == x.color(a, b));
  }
}
