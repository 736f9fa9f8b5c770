#include "orbital/oracle.hpp"

#include <algorithm>
#include <unordered_set>

#include "orbital/errors.hpp"

namespace orbital {

namespace {

struct IsoSearch {
  const CoherentConfiguration& x;
  const CoherentConfiguration& xp;
  int n;
  std::vector<int> fwd, bwd;  // partial color bijection
  std::vector<int> f;
  std::vector<bool> used;
  std::vector<Perm> out;

  IsoSearch(const CoherentConfiguration& x_, const CoherentConfiguration& xp_)
      : x(x_), xp(xp_), n(x_.degree()) {
    fwd.assign(x.rank(), -1);
    bwd.assign(x.rank(), -1);
    f.assign(n, -1);
    used.assign(n, false);
  }

  bool map_color(int c, int cp, std::vector<int>& trail) {
    if (fwd[c] == cp) return true;
    if (fwd[c] != -1 || bwd[cp] != -1) return false;
    fwd[c] = cp;
    bwd[cp] = c;
    trail.push_back(c);
    return true;
  }

  void recurse(int k) {
    if (k == n) {
      out.emplace_back(f);
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      std::vector<int> trail;
      bool ok = map_color(x.color(k, k), xp.color(b, b), trail);
      for (int j = 0; j < k && ok; ++j) {
        ok = map_color(x.color(k, j), xp.color(b, f[j]), trail) &&
             map_color(x.color(j, k), xp.color(f[j], b), trail);
      }
      if (ok) {
        f[k] = b;
        used[b] = true;
        recurse(k + 1);
        used[b] = false;
        f[k] = -1;
      }
      for (int c : trail) {
        bwd[fwd[c]] = -1;
        fwd[c] = -1;
      }
    }
  }

  std::vector<Perm> run(const std::optional<ColorBijection>& psi) {
    if (xp.degree() != n || xp.rank() != x.rank()) return {};
    if (psi) {
      if (psi->rank() != x.rank()) throw PreconditionError("psi rank mismatch");
      for (int c = 0; c < x.rank(); ++c) {
        fwd[c] = (*psi)(c);
        bwd[(*psi)(c)] = c;
      }
    }
    recurse(0);
    return std::move(out);
  }
};

}  // namespace

PermGroup aut_oracle(const CoherentConfiguration& x) {
  if (x.degree() > aut_oracle_cap())
    throw OverCapError("automorphism oracle: degree exceeds ORBITAL_AUT_ORACLE_CAP");
  IsoSearch search(x, x);
  auto elements = search.run(ColorBijection::identity(x.rank()));
  return PermGroup(x.degree(), reduce_generators(x.degree(), elements));
}

IsoSet iso_oracle(const CoherentConfiguration& x, const CoherentConfiguration& x_prime,
                  const std::optional<ColorBijection>& psi) {
  if (x.degree() > iso_oracle_cap() || x_prime.degree() > iso_oracle_cap())
    throw OverCapError("isomorphism oracle: degree exceeds ORBITAL_ISO_ORACLE_CAP");
  if (x.degree() != x_prime.degree()) return IsoSet::of(x.degree(), {});
  IsoSearch search(x, x_prime);
  return IsoSet::of(x.degree(), search.run(psi));
}

std::vector<Perm> reduce_generators(int degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> closure;
  closure.insert(Perm(degree));
  for (const Perm& e : elements) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    // rebuild the closure with the enlarged generating set
    closure.clear();
    std::vector<Perm> queue{Perm(degree)};
    closure.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const Perm& g : gens) {
        Perm next = queue[head] * g;
        if (closure.insert(next).second) queue.push_back(std::move(next));
      }
  }
  return gens;
}

}  // namespace orbital
