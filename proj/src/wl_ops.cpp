#include <algorithm>
#include <cassert>

#include "orbital/coherent.hpp"
#include "orbital/errors.hpp"
#include "wl_engine.hpp"

namespace orbital {

namespace {

// Engine id -> public id of the configuration built from a stable side.
std::vector<int> engine_to_public(const wl::Side& side, const CoherentConfiguration& x) {
  std::vector<int> map(side.rank, -1);
  for (std::size_t i = 0; i < side.color.size(); ++i) map[side.color[i]] = x.matrix()[i];
  return map;
}

bool row_is_duplicate_free(const wl::Side& side, int p) {
  std::vector<char> seen(side.rank, 0);
  for (int q = 0; q < side.n; ++q) {
    int c = side.color[static_cast<std::size_t>(p) * side.n + q];
    if (seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

int first_regular_point(const wl::Side& side) {
  for (int p = 0; p < side.n; ++p)
    if (row_is_duplicate_free(side, p)) return p;
  return -1;
}

}  // namespace

CoherentConfiguration wl_closure(const std::vector<BinaryRelation>& input) {
  if (input.empty()) throw PreconditionError("wl_closure needs at least one relation");
  const int n = input[0].degree;
  wl::Trace trace = wl::refine(wl::initial_from_relations(n, input));
  return CoherentConfiguration::from_matrix(n, std::move(trace.stable.color));
}

CoherentConfiguration point_extension(const CoherentConfiguration& x,
                                      const std::vector<int>& points) {
  std::vector<int> identity(x.rank());
  for (int i = 0; i < x.rank(); ++i) identity[i] = i;
  wl::Trace trace = wl::refine(wl::initial_from_config(x, points, identity));
  return CoherentConfiguration::from_matrix(x.degree(), std::move(trace.stable.color));
}

std::optional<JointClosure> joint_wl_closure(const std::vector<BinaryRelation>& p,
                                             const std::vector<BinaryRelation>& p_prime,
                                             const std::vector<int>& psi) {
  if (p.size() != p_prime.size())
    throw PreconditionError("relation lists must have equal length");
  if (psi.size() != p.size()) throw PreconditionError("psi size mismatch");
  {
    std::vector<bool> seen(p.size(), false);
    for (int v : psi) {
      if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
        throw PreconditionError("psi is not a bijection");
      seen[v] = true;
    }
  }
  if (p.empty()) throw PreconditionError("joint closure needs at least one relation");
  const int n = p[0].degree;
  if (p_prime[0].degree != n) throw DegreeMismatchError("relation degrees differ");

  std::vector<BinaryRelation> aligned(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) aligned[i] = p_prime[psi[i]];

  wl::Trace trace = wl::refine(wl::initial_from_relations(n, p));
  auto side2 = wl::replay(trace, wl::initial_from_relations(n, aligned));
  if (!side2) return std::nullopt;

  auto x = CoherentConfiguration::from_matrix(n, trace.stable.color);
  auto x_prime = CoherentConfiguration::from_matrix(n, side2->color);
  auto map1 = engine_to_public(trace.stable, x);
  auto map2 = engine_to_public(*side2, x_prime);
  std::vector<int> phi_map(x.rank());
  for (int e = 0; e < trace.stable.rank; ++e) phi_map[map1[e]] = map2[e];
  ColorBijection phi(std::move(phi_map));
  if (!is_algebraic_isomorphism(x, x_prime, phi)) return std::nullopt;
  return JointClosure{std::move(x), std::move(x_prime), std::move(phi)};
}

std::optional<ColorBijection> algebraic_isomorphism(const std::vector<BinaryRelation>& p,
                                                    const std::vector<BinaryRelation>& p_prime,
                                                    const std::vector<int>& psi) {
  auto joint = joint_wl_closure(p, p_prime, psi);
  if (!joint) return std::nullopt;
  return std::move(joint->phi);
}

IsoSet list_isomorphisms_bounded_base(const CoherentConfiguration& x,
                                      const CoherentConfiguration& x_prime,
                                      const ColorBijection& psi, int b_max) {
  const int n = x.degree();
  if (x_prime.degree() != n) throw DegreeMismatchError("configuration degrees differ");
  if (!x.is_coherent())
    throw IncoherentInputError("first configuration: " + x.verify()->description());
  if (!x_prime.is_coherent())
    throw IncoherentInputError("second configuration: " + x_prime.verify()->description());
  if (!is_algebraic_isomorphism(x, x_prime, psi))
    throw PreconditionError("psi is not an algebraic isomorphism");

  std::vector<int> identity(x.rank());
  for (int i = 0; i < x.rank(); ++i) identity[i] = i;

  // Scan bases in lexicographic order, smallest size first, until one has a
  // 1-regular extension.
  std::optional<wl::Trace> trace;
  std::vector<int> base;
  int alpha = -1;
  for (int b = 0; b <= b_max && !trace; ++b) {
    std::vector<int> combo(b);
    for (int i = 0; i < b; ++i) combo[i] = i;
    for (;;) {
      if (b > n) break;
      wl::Trace t = wl::refine(wl::initial_from_config(x, combo, identity));
      int reg = first_regular_point(t.stable);
      if (reg >= 0) {
        trace = std::move(t);
        base = combo;
        alpha = reg;
        break;
      }
      if (b == 0) break;
      // next combination
      int i = b - 1;
      while (i >= 0 && combo[i] == n - b + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < b; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  if (!trace)
    throw BaseNotFoundError("no base of size <= " + std::to_string(b_max) +
                            " has a 1-regular extension");

  const ColorBijection psi_inverse = psi.inverse();
  const std::vector<int>& inv_map = psi_inverse.map();
  const int b = static_cast<int>(base.size());
  std::vector<Perm> found;

  // All ordered images of the base, i.e. n^b tuples without repeats.
  std::vector<int> image(b, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < b; ++i) total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    bool repeats = false;
    for (int i = b - 1; i >= 0; --i) {
      image[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    for (int i = 0; i < b && !repeats; ++i)
      for (int j = i + 1; j < b; ++j)
        if (image[i] == image[j]) {
          repeats = true;
          break;
        }
    if (repeats) continue;

    auto side2 = wl::replay(*trace, wl::initial_from_config(x_prime, image, inv_map));
    if (!side2) continue;
    for (int alpha_prime = 0; alpha_prime < n; ++alpha_prime)
      if (auto f = wl::extract_iso(trace->stable, *side2, alpha, alpha_prime))
        found.push_back(std::move(*f));
  }
  return IsoSet::of(n, std::move(found));
}

}  // namespace orbital
