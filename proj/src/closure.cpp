#include "orbital/closure.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "orbital/errors.hpp"
#include "orbital/oracle.hpp"
#include "orbital/zoo.hpp"
#include "wl_engine.hpp"

namespace orbital {

namespace {

std::optional<std::pair<int, int>> prime_power(int n) {
  if (n < 2) return std::nullopt;
  int p = n;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) {
      p = f;
      break;
    }
  int d = 0;
  int m = n;
  while (m % p == 0) {
    m /= p;
    ++d;
  }
  if (m != 1) return std::nullopt;
  return std::pair(p, d);
}

std::string diagnose_promise(const PermGroup& g) {
  if (!g.is_transitive()) return "group is not transitive";
  if (g.degree() == 1) return "degree-1 group is not 3/2-transitive";
  PermGroup stab = g.stabilizer(0);
  const auto& orbits = stab.orbit_partition();
  std::size_t common = 0;
  for (const auto& orb : orbits) {
    if (orb.front() == 0) continue;
    if (common == 0) common = orb.size();
    if (orb.size() != common)
      return "point stabilizer orbits have different sizes (" + std::to_string(common) + " vs " +
             std::to_string(orb.size()) + ")";
  }
  if (common < 2) return "group is regular: point stabilizer orbits are singletons";
  return "group is 3/2-transitive";
}

// Cycle types of a fixed word list in an ordered pair; invariant under
// simultaneous conjugation, so mismatching candidates can be discarded
// without losing witnesses.
std::vector<CycleType> pair_fingerprint(const Perm& a, const Perm& b) {
  const Perm ab = a * b;
  const Perm bi = b.inverse();
  std::vector<CycleType> fp;
  fp.reserve(12);
  fp.push_back(a.cycle_type());
  fp.push_back(b.cycle_type());
  fp.push_back(ab.cycle_type());
  fp.push_back((a * bi).cycle_type());
  fp.push_back((a * ab).cycle_type());
  fp.push_back((ab * b).cycle_type());
  fp.push_back((ab * ab).cycle_type());
  fp.push_back((a.inverse() * bi * ab).cycle_type());
  fp.push_back((a * a * ab).cycle_type());
  fp.push_back((ab * a * b * b).cycle_type());
  fp.push_back((ab * ab * a).cycle_type());
  fp.push_back((ab * bi * a).cycle_type());
  return fp;
}

// |<a, b>| when it does not exceed limit.
std::optional<std::uint64_t> closure_order_capped(const Perm& a, const Perm& b,
                                                  std::uint64_t limit) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  Perm id(a.degree());
  seen.insert(id);
  queue.push_back(id);
  const Perm* gens[2] = {&a, &b};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Perm* g : gens) {
      Perm next = queue[head] * *g;
      if (seen.insert(next).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(next));
      }
    }
  return seen.size();
}

// The source side of IMBED: the WL closure of the generator graphs is
// computed once and replayed against every candidate target tuple.
struct ImbedEngine {
  int n;
  int omega;
  std::vector<Perm> t;
  wl::Trace trace;
  int omega_diag;

  ImbedEngine(int degree, std::vector<Perm> t_, int omega_)
      : n(degree), omega(omega_), t(std::move(t_)) {
    std::vector<BinaryRelation> rels;
    rels.reserve(t.size());
    for (const Perm& g : t) rels.push_back(BinaryRelation::graph_of(g));
    trace = wl::refine(wl::initial_from_relations(n, rels));
    omega_diag = trace.stable.color[static_cast<std::size_t>(omega) * n + omega];
  }

  std::optional<wl::Side> replay_target(const std::vector<Perm>& t_prime) const {
    std::vector<BinaryRelation> rels;
    rels.reserve(t_prime.size());
    for (const Perm& g : t_prime) rels.push_back(BinaryRelation::graph_of(g));
    return wl::replay(trace, wl::initial_from_relations(n, rels));
  }

  bool verify(const Perm& x, const std::vector<Perm>& t_prime) const {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].conjugated_by(x) != t_prime[i]) return false;
    return true;
  }

  // All witnesses across omega_prime for one target tuple.
  std::vector<Perm> witnesses(const std::vector<Perm>& t_prime) const {
    std::vector<Perm> result;
    auto side2 = replay_target(t_prime);
    if (!side2) return result;
    for (int op = 0; op < n; ++op) {
      if (side2->color[static_cast<std::size_t>(op) * n + op] != omega_diag) continue;
      if (auto x = wl::extract_iso(trace.stable, *side2, omega, op))
        if (verify(*x, t_prime)) result.push_back(std::move(*x));
    }
    return result;
  }

  std::optional<Perm> witness_at(const std::vector<Perm>& t_prime, int omega_prime) const {
    auto side2 = replay_target(t_prime);
    if (!side2) return std::nullopt;
    if (side2->color[static_cast<std::size_t>(omega_prime) * n + omega_prime] != omega_diag)
      return std::nullopt;
    auto x = wl::extract_iso(trace.stable, *side2, omega, omega_prime);
    if (x && !verify(*x, t_prime)) return std::nullopt;
    return x;
  }
};

// Conjugation orbit of an element under a generator list, as indices into
// the sorted element list.
void mark_conjugacy_orbit(const std::vector<Perm>& elems, const std::vector<Perm>& gens,
                          int start, std::vector<bool>& visited) {
  std::vector<int> queue{start};
  visited[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Perm& g : gens) {
      Perm img = elems[queue[head]].conjugated_by(g);
      auto it = std::lower_bound(elems.begin(), elems.end(), img);
      assert(it != elems.end() && *it == img);
      int idx = static_cast<int>(it - elems.begin());
      if (!visited[idx]) {
        visited[idx] = true;
        queue.push_back(idx);
      }
    }
}

// Witnesses x with t^x in H aligned and omega^x found, for a fixed source
// pair. In trimmed mode target pairs are scanned up to H-conjugacy, which
// keeps at least one witness from every right coset xH; the two_closure
// steps only need the witnesses up to that equivalence because
// BFC(G^(xh); H)^((xh)^-1) = BFC(G^x; H)^(x^-1) for h in H.
std::vector<Perm> search_witnesses(const ImbedEngine& eng, const PermGroup& g, const PermGroup& h,
                                   bool trim, bool first_only) {
  auto g_order = g.order();
  auto h_order = h.order();
  if (!g_order || !h_order)
    throw OverCapError("witness search: group exceeds the element cap");
  if (*h_order % *g_order != 0) return {};
  auto helems_opt = h.elements();
  const std::vector<Perm>& helems = *helems_opt;

  const Perm& t1 = eng.t[0];
  const Perm& t2 = eng.t[1];
  const CycleType type1 = t1.cycle_type();
  const CycleType type2 = t2.cycle_type();
  const auto fp = pair_fingerprint(t1, t2);

  std::vector<int> cand1, cand2;
  for (int i = 0; i < static_cast<int>(helems.size()); ++i) {
    CycleType ct = helems[i].cycle_type();
    if (ct == type1) cand1.push_back(i);
    if (ct == type2) cand2.push_back(i);
  }
  if (cand1.empty() || cand2.empty()) return {};

  std::vector<Perm> result;
  auto try_pair = [&](const Perm& c1, const Perm& c2) {
    if (pair_fingerprint(c1, c2) != fp) return false;
    if (closure_order_capped(c1, c2, *g_order) != g_order) return false;
    auto ws = eng.witnesses({c1, c2});
    result.insert(result.end(), ws.begin(), ws.end());
    return !ws.empty();
  };

  if (!trim) {
    for (int i1 : cand1)
      for (int i2 : cand2) {
        if (try_pair(helems[i1], helems[i2]) && first_only) return result;
      }
    return result;
  }

  std::vector<bool> visited1(helems.size(), false);
  for (int i1 : cand1) {
    if (visited1[i1]) continue;
    mark_conjugacy_orbit(helems, h.generators(), i1, visited1);
    const Perm& rep1 = helems[i1];

    std::vector<Perm> centralizer;
    for (const Perm& e : helems)
      if (e * rep1 == rep1 * e) centralizer.push_back(e);
    std::vector<Perm> cgens = reduce_generators(eng.n, centralizer);

    std::vector<bool> visited2(helems.size(), false);
    for (int i2 : cand2) {
      if (visited2[i2]) continue;
      mark_conjugacy_orbit(helems, cgens, i2, visited2);
      if (try_pair(rep1, helems[i2]) && first_only) return result;
    }
  }
  return result;
}

// Does x map every class of scheme onto some class of target (respecting
// psi when given)?
bool maps_classes(const CoherentConfiguration& x, const CoherentConfiguration& xp, const Perm& f,
                  const ColorBijection* psi) {
  const int n = x.degree();
  if (psi == nullptr) {
    std::vector<int> fwd(x.rank(), -1), bwd(xp.rank(), -1);
    if (x.rank() != xp.rank()) return false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int c = x.color(a, b);
        int cp = xp.color(f[a], f[b]);
        if (fwd[c] == -1 && bwd[cp] == -1) {
          fwd[c] = cp;
          bwd[cp] = c;
        } else if (fwd[c] != cp) {
          return false;
        }
      }
    return true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (xp.color(f[a], f[b]) != (*psi)(x.color(a, b))) return false;
  return true;
}

}  // namespace

PermGroup bfc(const PermGroup& g, const PermGroup& h) {
  if (g.degree() != h.degree()) throw DegreeMismatchError("bfc: degrees differ");
  auto helems = h.elements();
  if (!helems) throw OverCapError("bfc: H exceeds the element cap");
  const CoherentConfiguration scheme = scheme_of_group(g);
  const auto& m = scheme.matrix();
  const int n = g.degree();
  std::vector<Perm> kept;
  for (const Perm& e : *helems) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      const int ea = e[a];
      for (int b = 0; b < n; ++b)
        if (m[static_cast<std::size_t>(ea) * n + e[b]] != m[static_cast<std::size_t>(a) * n + b]) {
          ok = false;
          break;
        }
    }
    if (ok) kept.push_back(e);
  }
  return PermGroup(n, reduce_generators(n, kept));
}

IsoSet bfi(const CoherentConfiguration& x, const CoherentConfiguration& x_prime,
           const PermGroup& h, const std::optional<ColorBijection>& psi) {
  if (x.degree() != h.degree() || x_prime.degree() != h.degree())
    throw DegreeMismatchError("bfi: degrees differ");
  auto helems = h.elements();
  if (!helems) throw OverCapError("bfi: H exceeds the element cap");
  std::vector<Perm> kept;
  for (const Perm& e : *helems)
    if (maps_classes(x, x_prime, e, psi ? &*psi : nullptr)) kept.push_back(e);
  return IsoSet::of(x.degree(), std::move(kept));
}

EmbeddingWitness::EmbeddingWitness(Perm x_, std::vector<Perm> source_, std::vector<Perm> target_,
                                   int omega_, int omega_prime_)
    : x(std::move(x_)),
      source(std::move(source_)),
      target(std::move(target_)),
      omega(omega_),
      omega_prime(omega_prime_) {
  if (source.size() != target.size())
    throw PreconditionError("witness: generator lists differ in length");
  for (std::size_t i = 0; i < source.size(); ++i)
    if (source[i].conjugated_by(x) != target[i])
      throw PreconditionError("witness does not conjugate the generator lists");
  if (x[omega] != omega_prime) throw PreconditionError("witness does not map omega as stated");
}

std::optional<Perm> imbed(const PermGroup& g, const std::vector<Perm>& t, const PermGroup& h,
                          const std::vector<Perm>& t_prime, int omega, int omega_prime) {
  const int n = g.degree();
  if (h.degree() != n) throw DegreeMismatchError("imbed: degrees differ");
  if (t.size() != t_prime.size() || t.empty())
    throw PreconditionError("imbed: generator lists must be nonempty and aligned");
  if (omega < 0 || omega >= n || omega_prime < 0 || omega_prime >= n)
    throw PreconditionError("imbed: point out of range");
  if (!g.is_transitive()) throw PreconditionError("imbed: G must be transitive");
  if (!PermGroup(n, t).same_elements(g))
    throw PreconditionError("imbed: T does not generate G");
  for (const Perm& tp : t_prime)
    if (!h.contains(tp)) throw PreconditionError("imbed: T' is not contained in H");

  ImbedEngine eng(n, t, omega);
  return eng.witness_at(t_prime, omega_prime);
}

std::vector<std::pair<Perm, Perm>> generating_pairs(const PermGroup& g, bool first_only) {
  auto elems = g.elements();
  if (!elems) throw OverCapError("generating_pairs: group exceeds the element cap");
  const std::uint64_t order = elems->size();
  std::vector<std::pair<Perm, Perm>> result;
  for (std::size_t i = 0; i < elems->size(); ++i)
    for (std::size_t j = i + 1; j < elems->size(); ++j) {
      auto size = closure_order_capped((*elems)[i], (*elems)[j], order);
      if (size == order) {
        result.emplace_back((*elems)[i], (*elems)[j]);
        if (first_only) return result;
      }
    }
  if (result.empty()) throw NoGeneratingPairError("group has no 2-element generating set");
  return result;
}

TwoClosureResult two_closure(const PermGroup& g, int small_threshold) {
  if (!g.is_three_halves_transitive())
    throw PreconditionError("two_closure: " + diagnose_promise(g));
  const int n = g.degree();

  // The 2-transitive answer is Sym(n) at every degree, so take that exit
  // first; the oracle would otherwise enumerate all of Sym(n) on a rank-2
  // scheme.
  if (g.is_2transitive()) return {PermGroup::symmetric(n), 2, false};

  if (n <= small_threshold) {
    PermGroup k = aut_oracle(scheme_of_group(g));
    return {std::move(k), 1, false};
  }

  const bool primitive = g.is_primitive();
  const bool flagged = primitive && n <= 169;

  if (primitive) {
    if (auto pp = prime_power(n)) {
      auto [p, d] = *pp;
      std::optional<std::pair<Perm, Perm>> pair;
      try {
        pair = generating_pairs(g, true).front();
      } catch (const NoGeneratingPairError&) {
        // outside the guarantee of the classification; fall through
      }
      if (pair) {
        ImbedEngine eng(n, {pair->first, pair->second}, 0);

        if (p % 2 == 1 && d % 2 == 0) {
          PermGroup h = as0(p, d);
          auto ws = search_witnesses(eng, g, h, /*trim=*/true, /*first_only=*/true);
          if (!ws.empty()) {
            const Perm& x = ws.front();
            PermGroup k = bfc(g.conjugated_by(x), h);
            return {k.conjugated_by(x.inverse()), 4, flagged};
          }
        }

        PermGroup h = agammal1(p, d);
        auto ws = search_witnesses(eng, g, h, /*trim=*/true, /*first_only=*/false);
        if (!ws.empty()) {
          std::size_t best = 0;
          std::uint64_t best_order = 0;
          std::vector<PermGroup> ks;
          ks.reserve(ws.size());
          for (std::size_t i = 0; i < ws.size(); ++i) {
            ks.push_back(bfc(g.conjugated_by(ws[i]), h));
            std::uint64_t o = *ks.back().order();
            if (o > best_order) {
              best_order = o;
              best = i;
            }
          }
#ifndef NDEBUG
          for (std::size_t i = 0; i < ws.size(); ++i)
            if (*ks[i].order() == best_order)
              assert(ks[i].conjugated_by(ws[i].inverse())
                         .same_elements(ks[best].conjugated_by(ws[best].inverse())));
#endif
          return {ks[best].conjugated_by(ws[best].inverse()), 5, flagged};
        }
      }
    }
  }
  return {g, 6, flagged};
}

PermGroup k_closure(const PermGroup& g, int k, std::uint64_t budget, int small_threshold) {
  if (k < 2) throw PreconditionError("k_closure: k must be >= 2");
  if (!g.is_three_halves_transitive())
    throw PreconditionError("k_closure: " + diagnose_promise(g));
  if (g.is_2transitive())
    throw PreconditionError("k_closure: 2-transitive groups are excluded");
  const int n = g.degree();

  TwoClosureResult two = two_closure(g, small_threshold);
  auto elems = two.closure.elements();
  if (!elems) throw OverCapError("k_closure: 2-closure exceeds the element cap");
  std::vector<Perm> current = *elems;

  // h in G^(2) already preserves all 1- and 2-orbits, and a tuple with
  // repeated entries is preserved whenever the injective tuple of its
  // distinct entries is, so only injective j-tuples need checking.
  std::vector<int> tuple(k), image(k);
  for (int j = 3; j <= k; ++j) {
    TuplePartition part = k_orbits(g, j, budget);
    std::uint64_t total = part.class_id.size();
    std::vector<std::uint64_t> injective;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t rest = code;
      bool distinct = true;
      for (int i = j - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int a = 0; a < j && distinct; ++a)
        for (int b = a + 1; b < j; ++b)
          if (tuple[a] == tuple[b]) {
            distinct = false;
            break;
          }
      if (distinct) injective.push_back(code);
    }
    std::vector<Perm> kept;
    for (const Perm& h : current) {
      bool ok = true;
      for (std::uint64_t code : injective) {
        std::uint64_t rest = code;
        for (int i = j - 1; i >= 0; --i) {
          tuple[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        std::uint64_t img = 0;
        for (int i = 0; i < j; ++i) img = img * n + static_cast<std::uint64_t>(h[tuple[i]]);
        if (part.class_id[img] != part.class_id[code]) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(h);
    }
    current = std::move(kept);
  }
  return PermGroup(n, reduce_generators(n, current));
}

IsoSet iso_schemes(const PermGroup& g, const PermGroup& g_prime, int small_threshold) {
  const int n = g.degree();
  if (g_prime.degree() != n) throw DegreeMismatchError("iso_schemes: degrees differ");
  if (!g.is_three_halves_transitive())
    throw PreconditionError("iso_schemes: first group: " + diagnose_promise(g));
  if (!g_prime.is_three_halves_transitive())
    throw PreconditionError("iso_schemes: second group: " + diagnose_promise(g_prime));
  if (!g.is_primitive() || !g_prime.is_primitive())
    throw PreconditionError("iso_schemes: both groups must be primitive");

  CoherentConfiguration x = scheme_of_group(g);
  CoherentConfiguration x_prime = scheme_of_group(g_prime);

  // Rank-2 schemes first: every permutation is an isomorphism, and this
  // keeps the oracle branch away from enumerating Sym(n).
  const bool sym1 = g.is_2transitive();
  const bool sym2 = g_prime.is_2transitive();
  if (sym1 && sym2) return IsoSet::symbolic(n);
  if (sym1 != sym2) return IsoSet::of(n, {});

  if (n <= small_threshold) return iso_oracle(x, x_prime);

  TwoClosureResult c = two_closure(g, small_threshold);
  TwoClosureResult c_prime = two_closure(g_prime, small_threshold);
  auto order1 = c.closure.order();
  auto order2 = c_prime.closure.order();
  if (!order1 || !order2) throw OverCapError("iso_schemes: closure exceeds the element cap");
  if (*order1 != *order2) return IsoSet::of(n, {});

  auto pair = generating_pairs(c.closure, true).front();
  ImbedEngine eng(n, {pair.first, pair.second}, 0);
  auto ws = search_witnesses(eng, c.closure, c_prime.closure, /*trim=*/false,
                             /*first_only=*/false);
  std::vector<Perm> kept;
  for (Perm& w : ws)
    if (maps_classes(x, x_prime, w, nullptr)) kept.push_back(std::move(w));
  return IsoSet::of(n, std::move(kept));
}

IsoSet iso_colored(const PermGroup& g, const PermGroup& g_prime, const ColorBijection& psi,
                   int small_threshold) {
  const int n = g.degree();
  if (g_prime.degree() != n) throw DegreeMismatchError("iso_colored: degrees differ");
  if (!g.is_three_halves_transitive())
    throw PreconditionError("iso_colored: first group: " + diagnose_promise(g));
  if (!g_prime.is_three_halves_transitive())
    throw PreconditionError("iso_colored: second group: " + diagnose_promise(g_prime));

  CoherentConfiguration x = scheme_of_group(g);
  CoherentConfiguration x_prime = scheme_of_group(g_prime);
  if (psi.rank() != x.rank() || x.rank() != x_prime.rank())
    throw PreconditionError("iso_colored: psi rank mismatch");
  if (!is_algebraic_isomorphism(x, x_prime, psi))
    throw PreconditionError("iso_colored: psi rejected, not an algebraic isomorphism");

  if (!g.is_primitive()) return list_isomorphisms_bounded_base(x, x_prime, psi, 2);

  IsoSet all = iso_schemes(g, g_prime, small_threshold);
  if (all.symbolic_sym) return all;
  std::vector<Perm> kept;
  for (const Perm& f : all.perms)
    if (maps_classes(x, x_prime, f, &psi)) kept.push_back(f);
  return IsoSet::of(n, std::move(kept));
}

}  // namespace orbital
