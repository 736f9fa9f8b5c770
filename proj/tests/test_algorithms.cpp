#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "orbital/closure.hpp"
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

PermGroup z4() { return PermGroup(4, {cycle(4, {{0, 1, 2, 3}})}); }

PermGroup v4() {
  return PermGroup(4, {cycle(4, {{0, 1}, {2, 3}}), cycle(4, {{0, 2}, {1, 3}})});
}

PermGroup frob9() { return affine_group(3, 2, {{{2, 0}, {0, 2}}}); }

// V x| <theta^2> on F_9: order 36, uniprimitive
PermGroup cyc36() {
  FiniteField f(3, 2);
  return affine_group(3, 2, {multiplication_matrix(f, f.mul(f.theta(), f.theta()))});
}

// V x| <theta^2, frobenius> on F_9: order 72, uniprimitive
PermGroup cyc72() {
  FiniteField f(3, 2);
  return affine_group(
      3, 2, {multiplication_matrix(f, f.mul(f.theta(), f.theta())), frobenius_matrix(f)});
}

// deterministic pseudo-random permutation
Perm random_perm(int n, std::uint64_t& state) {
  auto next = [&state] {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(img[i], img[next() % (i + 1)]);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("bfc recovers the color-preserving subgroup") {
  // only the powers of the 4-cycle preserve the difference classes
  auto k = bfc(z4(), PermGroup::symmetric(4));
  CHECK(*k.order() == 4);
  CHECK(k.same_elements(z4()));

  auto kd5 = bfc(d5(), PermGroup::symmetric(5));
  CHECK(*kd5.order() == 10);
  CHECK(kd5.same_elements(d5()));

  auto self = bfc(frob9(), frob9());
  CHECK(self.same_elements(frob9()));
}

TEST_CASE("bfi on the pentagon scheme") {
  auto pent = scheme_of_group(d5());
  auto all = bfi(pent, pent, PermGroup::symmetric(5));
  CHECK(all.size() == 20);  // N_{S5}(D5) = AGL(1,5)

  auto only_id = bfi(pent, pent, PermGroup::trivial(5));
  CHECK(only_id.size() == 1);
  CHECK(only_id.perms[0].is_identity());

  auto none = bfi(pent, scheme_of_group(PermGroup::symmetric(5)), PermGroup::symmetric(5));
  CHECK(none.empty());
}

TEST_CASE("imbed recovers a conjugator") {
  // T generates D5 inside AGL(1,5); z = x -> 4x + 2 lies in AGL(1,5)
  Perm t1 = cycle(5, {{0, 1, 2, 3, 4}});
  Perm t2 = cycle(5, {{1, 4}, {2, 3}});
  PermGroup g = d5();
  PermGroup h = agl1(FiniteField(5, 1));
  Perm z(std::vector<int>{2, 1, 0, 4, 3});  // (0 2)(3 4)
  CHECK(h.contains(z));

  auto x = imbed(g, {t1, t2}, h, {t1.conjugated_by(z), t2.conjugated_by(z)}, 0, z[0]);
  REQUIRE(x.has_value());
  CHECK(*x == z);

  // mismatched cycle types: no conjugation can exist
  auto none = imbed(g, {t1, t2}, h, {t1.conjugated_by(z), t1.conjugated_by(z)}, 0, z[0]);
  CHECK_FALSE(none.has_value());

  // identity data returns the identity
  auto id = imbed(g, {t1, t2}, d5(), {t1, t2}, 0, 0);
  REQUIRE(id.has_value());
  CHECK(id->is_identity());
}

TEST_CASE("imbed validates its promises") {
  Perm t1 = cycle(5, {{0, 1, 2, 3, 4}});
  Perm t2 = cycle(5, {{1, 4}, {2, 3}});
  // T does not generate Sym(5)
  CHECK_THROWS_AS(imbed(PermGroup::symmetric(5), {t1, t2}, PermGroup::symmetric(5), {t1, t2}, 0, 0),
                  PreconditionError);
  // intransitive G
  PermGroup it(5, {cycle(5, {{1, 4}, {2, 3}})});
  CHECK_THROWS_AS(imbed(it, {cycle(5, {{1, 4}, {2, 3}})}, PermGroup::symmetric(5),
                        {cycle(5, {{1, 4}, {2, 3}})}, 0, 0),
                  PreconditionError);
}

TEST_CASE("generating pairs") {
  CHECK(generating_pairs(d5(), false).size() == 30);
  CHECK(generating_pairs(v4(), false).size() == 3);
  CHECK(generating_pairs(z4(), false).size() == 5);
  CHECK(generating_pairs(d5(), true).size() == 1);
  auto first = generating_pairs(d5(), true).front();
  // the first pair really generates
  CHECK(PermGroup(5, {first.first, first.second}).same_elements(d5()));
  // no generating pair in Z2 x Z2 x Z2 (needs 3 generators)
  PermGroup z2cubed(8, {cycle(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}),
                        cycle(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}),
                        cycle(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})});
  CHECK(*z2cubed.order() == 8);
  CHECK_THROWS_AS(generating_pairs(z2cubed, false), NoGeneratingPairError);
}

TEST_CASE("two_closure rejects non-promise inputs") {
  CHECK_THROWS_AS(two_closure(z4()), PreconditionError);               // regular
  CHECK_THROWS_AS(two_closure(PermGroup(5, {cycle(5, {{0, 1}})})), PreconditionError);
}

TEST_CASE("two_closure of a 2-transitive group is symmetric (step 2)") {
  auto result = two_closure(agl1(FiniteField(2, 3)), 0);
  CHECK(result.step == 2);
  CHECK(result.closure.same_elements(PermGroup::symmetric(8)));
}

TEST_CASE("two_closure fixes the imprimitive Frobenius group (step 6)") {
  auto result = two_closure(frob9(), 0);
  CHECK(result.step == 6);
  CHECK(result.closure.same_elements(frob9()));
  // oracle agrees at n = 9
  CHECK(aut_oracle(scheme_of_group(frob9())).same_elements(frob9()));
}

TEST_CASE("two_closure of AS0(9) via the Passman branch") {
  auto g = as0(3, 2);
  auto result = two_closure(g, 0);
  CHECK(result.step == 4);
  auto oracle = aut_oracle(scheme_of_group(g));
  CHECK(*result.closure.order() == 72);
  CHECK(result.closure.same_elements(oracle));
}

TEST_CASE("two_closure grows the order-36 cyclotomic group to order 72 (step 4)") {
  auto g = cyc36();
  auto result = two_closure(g, 0);
  CHECK(*result.closure.order() == 72);
  auto oracle = aut_oracle(scheme_of_group(g));
  CHECK(result.closure.same_elements(oracle));
  // G is contained in its closure
  for (const Perm& gen : g.generators()) CHECK(result.closure.contains(gen));
  // the order-72 semilinear group has the same scheme and is already closed
  auto closed = two_closure(cyc72(), 0);
  CHECK(closed.closure.same_elements(cyc72()));
  CHECK(scheme_of_group(cyc72()) == scheme_of_group(g));
}

TEST_CASE("two_closure of D5 through the semilinear branch (step 5)") {
  auto result = two_closure(d5(), 0);
  CHECK(result.step == 5);
  CHECK(result.closure.same_elements(d5()));
  // and through the oracle branch at the default threshold
  auto via_oracle = two_closure(d5());
  CHECK(via_oracle.step == 1);
  CHECK(via_oracle.closure.same_elements(d5()));
}

TEST_CASE("two_closure is idempotent and preserves 2-orbits") {
  for (auto g : {d5(), frob9(), cyc36(), as0(3, 2)}) {
    auto once = two_closure(g, 0);
    auto twice = two_closure(once.closure, 0);
    CHECK(twice.closure.same_elements(once.closure));
    // same 2-orbits
    CHECK(scheme_of_group(once.closure) == scheme_of_group(g));
    // G <= closure
    for (const Perm& gen : g.generators()) CHECK(once.closure.contains(gen));
  }
}

TEST_CASE("k_closure basics") {
  auto k3 = k_closure(d5(), 3);
  CHECK(k3.same_elements(d5()));

  for (auto g : {d5(), frob9(), cyc36()}) {
    auto k2 = k_closure(g, 2);
    CHECK(k2.same_elements(two_closure(g, 169).closure));
  }

  CHECK_THROWS_AS(k_closure(agl1(FiniteField(5, 1)), 3), PreconditionError);
}

TEST_CASE("k_closure of AS0(9) at k = 3 matches a direct filter") {
  auto g = as0(3, 2);
  auto k3 = k_closure(g, 3);
  // independent filter: enumerate the 2-closure, test every triple
  auto closure2 = two_closure(g, 169).closure;
  auto part = k_orbits(g, 3);
  const auto closure2_elems = *closure2.elements();
  std::vector<Perm> expect;
  for (const Perm& h : closure2_elems) {
    bool ok = true;
    for (int a = 0; a < 9 && ok; ++a)
      for (int b = 0; b < 9 && ok; ++b)
        for (int c = 0; c < 9; ++c) {
          int code = (a * 9 + b) * 9 + c;
          int img = (h[a] * 9 + h[b]) * 9 + h[c];
          if (part.class_id[code] != part.class_id[img]) {
            ok = false;
            break;
          }
        }
    if (ok) expect.push_back(h);
  }
  CHECK(*k3.elements() == expect);
  // chain: G <= G^(3) <= G^(2)
  for (const Perm& gen : g.generators()) CHECK(k3.contains(gen));
  const auto k3_elems = *k3.elements();
  for (const Perm& e : k3_elems) CHECK(closure2.contains(e));
}

TEST_CASE("closure chain G <= G^(4) <= G^(3) <= G^(2)") {
  for (auto g : {d5(), frob9()}) {
    const int n = g.degree();
    std::uint64_t budget = 1;
    for (int i = 0; i < 4; ++i) budget *= n;
    auto k2 = *two_closure(g, 169).closure.elements();
    auto k3 = *k_closure(g, 3, budget).elements();
    auto k4 = *k_closure(g, 4, budget).elements();
    CHECK(std::includes(k2.begin(), k2.end(), k3.begin(), k3.end()));
    CHECK(std::includes(k3.begin(), k3.end(), k4.begin(), k4.end()));
    for (const Perm& gen : g.generators())
      CHECK(std::binary_search(k4.begin(), k4.end(), gen));
  }
}

TEST_CASE("closure is monotone on nested groups") {
  // H <= G forces H^(2) <= G^(2)
  std::vector<std::pair<PermGroup, PermGroup>> nested;
  nested.emplace_back(d5(), agl1(FiniteField(5, 1)));
  nested.emplace_back(frob9(), cyc36());
  nested.emplace_back(cyc36(), cyc72());
  for (const auto& [h, g] : nested) {
    REQUIRE(h.is_subgroup_of(g));
    auto ch = two_closure(h, 0).closure;
    auto cg = two_closure(g, 0).closure;
    CHECK(ch.is_subgroup_of(cg));
  }
}

TEST_CASE("iso_schemes on D5 equals brute force over Sym(5)") {
  auto s = iso_schemes(d5(), d5(), 0);
  CHECK(s.size() == 20);
  auto pent = scheme_of_group(d5());
  auto brute = bfi(pent, pent, PermGroup::symmetric(5));
  CHECK(s.perms == brute.perms);
  // oracle branch agrees
  auto s_oracle = iso_schemes(d5(), d5(), 21);
  CHECK(s_oracle.perms == brute.perms);
}

TEST_CASE("iso_schemes between a group and its conjugate") {
  std::uint64_t seed = 12345;
  for (int trial = 0; trial < 3; ++trial) {
    Perm z = random_perm(5, seed);
    auto conj = d5().conjugated_by(z);
    auto s = iso_schemes(d5(), conj, 0);
    CHECK(s.size() == 20);
    CHECK(s.contains(z));
    // coset law: x0^-1 x lies in Iso(Inv(D5^z), Inv(D5^z))
    auto self_isos = bfi(scheme_of_group(conj), scheme_of_group(conj), PermGroup::symmetric(5));
    for (const Perm& x : s.perms) CHECK(self_isos.contains(s.perms.front().inverse() * x));
  }
}

TEST_CASE("iso_schemes of rank-2 schemes is symbolic") {
  auto s = iso_schemes(agl1(FiniteField(5, 1)), PermGroup::symmetric(5), 0);
  CHECK(s.symbolic_sym);
  CHECK(s.contains(cycle(5, {{0, 3}})));
}

TEST_CASE("iso_schemes: different schemes give the empty set") {
  // D5 and AGL(1,5): ranks 3 vs 2
  auto s = iso_schemes(d5(), agl1(FiniteField(5, 1)), 0);
  CHECK(s.empty());
}

TEST_CASE("iso_colored on the imprimitive Frobenius group") {
  auto g = frob9();
  auto s = iso_colored(g, g, ColorBijection::identity(scheme_of_group(g).rank()), 0);
  CHECK(s.size() == 18);
  for (const Perm& gen : g.generators()) CHECK(s.contains(gen));
}

TEST_CASE("iso_colored between D5 and a conjugate, psi induced by z") {
  std::uint64_t seed = 99;
  Perm z = random_perm(5, seed);
  auto conj = d5().conjugated_by(z);
  auto x = scheme_of_group(d5());
  auto xz = scheme_of_group(conj);
  // color map induced by z
  std::vector<int> map(x.rank(), -1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) map[x.color(a, b)] = xz.color(z[a], z[b]);
  auto s = iso_colored(d5(), conj, ColorBijection(map), 0);
  CHECK(s.size() == 10);  // a coset of Aut = D5
  CHECK(s.contains(z));
  for (const Perm& f : s.perms) {
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) CHECK(xz.color(f[a], f[b]) == map[x.color(a, b)]);
  }
}

TEST_CASE("iso_colored with the pentagon/pentagram swap") {
  auto x = scheme_of_group(d5());
  // swap the two off-diagonal classes; x -> 2x realizes it
  auto s = iso_colored(d5(), d5(), ColorBijection({0, 2, 1}), 0);
  CHECK(s.size() == 10);
  Perm doubling(std::vector<int>{0, 2, 4, 1, 3});
  CHECK(s.contains(doubling));
  CHECK_FALSE(s.contains(Perm(5)));  // the identity preserves colors, so it is not here
}

TEST_CASE("iso_colored rejects a non-algebraic psi") {
  CHECK_THROWS_AS(iso_colored(d5(), d5(), ColorBijection({1, 0, 2}), 0), PreconditionError);
}

TEST_CASE("iso_colored result size is 0 or the closure order") {
  for (auto g : {d5(), frob9(), cyc36()}) {
    auto x = scheme_of_group(g);
    auto s = iso_colored(g, g, ColorBijection::identity(x.rank()), 0);
    auto closure = two_closure(g, 0).closure;
    CHECK(s.size() == *closure.order());
  }
}

TEST_CASE("aut_oracle small examples") {
  CHECK(*aut_oracle(scheme_of_group(d5())).order() == 10);
  CHECK(*aut_oracle(scheme_of_group(PermGroup::symmetric(4))).order() == 24);
  auto x = scheme_of_group(frob9());
  std::uint64_t seed = 7;
  Perm z = random_perm(9, seed);
  // relabel the scheme by z
  std::vector<int> m(81);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) m[z[a] * 9 + z[b]] = x.color(a, b);
  auto xz = CoherentConfiguration::from_matrix(9, std::move(m));
  auto isos = iso_oracle(x, xz);
  CHECK_FALSE(isos.empty());
  CHECK(isos.contains(z));
  CHECK_THROWS_AS(iso_oracle(scheme_of_group(as0(5, 2)), scheme_of_group(as0(5, 2))),
                  OverCapError);
}

TEST_CASE("embedding witness validates itself") {
  Perm t1 = cycle(5, {{0, 1, 2, 3, 4}});
  Perm t2 = cycle(5, {{1, 4}, {2, 3}});
  Perm z(std::vector<int>{2, 1, 0, 4, 3});
  EmbeddingWitness w(z, {t1, t2}, {t1.conjugated_by(z), t2.conjugated_by(z)}, 0, z[0]);
  CHECK(w.x == z);
  CHECK_THROWS_AS(EmbeddingWitness(z, {t1}, {t2}, 0, z[0]), PreconditionError);
}
