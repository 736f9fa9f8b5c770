#include "orbital/perm_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "orbital/errors.hpp"

namespace orbital {

std::uint64_t element_cap() {
  static const std::uint64_t value = []() -> std::uint64_t {
    if (const char* s = std::getenv("ORBITAL_ELEMENT_CAP")) return std::strtoull(s, nullptr, 10);
    return 10'000'000;
  }();
  return value;
}

int aut_oracle_cap() {
  static const int value = [] {
    if (const char* s = std::getenv("ORBITAL_AUT_ORACLE_CAP")) return std::atoi(s);
    return 30;
  }();
  return value;
}

int iso_oracle_cap() {
  static const int value = [] {
    if (const char* s = std::getenv("ORBITAL_ISO_ORACLE_CAP")) return std::atoi(s);
    return 21;
  }();
  return value;
}

std::uint64_t tuple_budget() {
  static const std::uint64_t value = []() -> std::uint64_t {
    if (const char* s = std::getenv("ORBITAL_TUPLE_BUDGET")) return std::strtoull(s, nullptr, 10);
    return 2'000'000;
  }();
  return value;
}

struct PermGroup::Cache {
  std::mutex mu;
  std::optional<std::vector<std::vector<int>>> orbits;
  std::optional<std::vector<Perm>> elements;  // set once enumeration succeeds
  std::uint64_t largest_failed_cap = 0;       // enumeration exceeded this cap
};

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree < 1) throw PreconditionError("group degree must be >= 1");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DegreeMismatchError("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(g);
  }
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    std::vector<int> t(degree);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (degree >= 3) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
    gens.emplace_back(std::move(c));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::cyclic(const Perm& g) { return PermGroup(g.degree(), {g}); }

std::vector<int> PermGroup::orbit(int alpha) const {
  if (alpha < 0 || alpha >= degree_) throw PreconditionError("orbit point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<int> result{alpha};
  seen[alpha] = true;
  for (std::size_t head = 0; head < result.size(); ++head) {
    int p = result[head];
    for (const Perm& g : generators_) {
      int q = g[p];
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

const std::vector<std::vector<int>>& PermGroup::orbit_partition() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->orbits) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(degree_, false);
    for (int p = 0; p < degree_; ++p) {
      if (seen[p]) continue;
      std::vector<int> orb{p};
      seen[p] = true;
      for (std::size_t head = 0; head < orb.size(); ++head)
        for (const Perm& g : generators_) {
          int q = g[orb[head]];
          if (!seen[q]) {
            seen[q] = true;
            orb.push_back(q);
          }
        }
      std::sort(orb.begin(), orb.end());
      orbits.push_back(std::move(orb));
    }
    cache_->orbits = std::move(orbits);
  }
  return *cache_->orbits;
}

std::vector<Perm> PermGroup::stabilizer_generators(int alpha) const {
  if (alpha < 0 || alpha >= degree_) throw PreconditionError("stabilizer point out of range");
  // Orbit of alpha with a transversal: rep[p] maps alpha to p.
  std::vector<std::unique_ptr<Perm>> rep(degree_);
  rep[alpha] = std::make_unique<Perm>(degree_);
  std::vector<int> queue{alpha};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int p = queue[head];
    for (const Perm& g : generators_) {
      int q = g[p];
      if (!rep[q]) {
        rep[q] = std::make_unique<Perm>(*rep[p] * g);
        queue.push_back(q);
      }
    }
  }
  // Schreier generators rep[p] * g * rep[p^g]^-1.
  std::vector<Perm> result;
  for (int p : queue)
    for (const Perm& g : generators_) {
      Perm s = *rep[p] * g * rep[g[p]]->inverse();
      if (!s.is_identity()) result.push_back(std::move(s));
    }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

PermGroup PermGroup::stabilizer(int alpha) const {
  return PermGroup(degree_, stabilizer_generators(alpha));
}

std::optional<std::vector<Perm>> PermGroup::elements(std::uint64_t cap) const {
  if (cap < 1) throw PreconditionError("element cap must be >= 1");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->elements) {
      if (cache_->elements->size() <= cap) return *cache_->elements;
      return std::nullopt;
    }
    if (cap <= cache_->largest_failed_cap) return std::nullopt;
  }
  // Breadth-first closure under right multiplication by generators.
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id(degree_);
  seen.insert(id);
  queue.push_back(id);
  bool over = false;
  while (!queue.empty()) {
    Perm p = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : generators_) {
      Perm q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > cap) {
          over = true;
          break;
        }
        queue.push_back(std::move(q));
      }
    }
    if (over) break;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (over) {
    cache_->largest_failed_cap = std::max(cache_->largest_failed_cap, cap);
    return std::nullopt;
  }
  if (!cache_->elements) {
    std::vector<Perm> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    cache_->elements = std::move(sorted);
  }
  return *cache_->elements;
}

std::optional<std::uint64_t> PermGroup::order(std::uint64_t cap) const {
  auto elems = elements(cap);
  if (!elems) return std::nullopt;
  return elems->size();
}

bool PermGroup::contains(const Perm& g, std::uint64_t cap) const {
  if (g.degree() != degree_) return false;
  auto elems = elements(cap);
  if (!elems) throw OverCapError("membership test: group exceeds the element cap");
  return std::binary_search(elems->begin(), elems->end(), g);
}

bool PermGroup::same_elements(const PermGroup& other, std::uint64_t cap) const {
  if (degree_ != other.degree_) return false;
  auto a = elements(cap);
  auto b = other.elements(cap);
  if (!a || !b) throw OverCapError("element comparison: group exceeds the element cap");
  return *a == *b;
}

bool PermGroup::is_subgroup_of(const PermGroup& other, std::uint64_t cap) const {
  if (degree_ != other.degree_) return false;
  for (const Perm& g : generators_)
    if (!other.contains(g, cap)) return false;
  return true;
}

bool PermGroup::is_transitive() const { return orbit_partition().size() == 1; }

int PermGroup::rank() const {
  if (!is_transitive()) throw PreconditionError("rank requires a transitive group");
  PermGroup stab = stabilizer(0);
  return static_cast<int>(stab.orbit_partition().size());
}

bool PermGroup::is_2transitive() const { return is_transitive() && rank() == 2; }

bool PermGroup::is_three_halves_transitive() const {
  if (degree_ == 1) return false;
  if (!is_transitive()) return false;
  PermGroup stab = stabilizer(0);
  const auto& orbits = stab.orbit_partition();
  std::size_t common = 0;
  for (const auto& orb : orbits) {
    if (orb.front() == 0) continue;  // the fixed point itself
    if (common == 0) common = orb.size();
    if (orb.size() != common) return false;
  }
  return common >= 2;
}

bool PermGroup::is_primitive() const {
  if (!is_transitive()) throw PreconditionError("primitivity requires a transitive group");
  if (degree_ <= 2) return true;
  // Grow the minimal block containing {0, beta} for each beta; primitive iff
  // every such block is the whole point set.
  for (int beta = 1; beta < degree_; ++beta) {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> queue{{0, beta}};
    parent[find(beta)] = find(0);
    int classes = degree_ - 1;
    for (std::size_t head = 0; head < queue.size() && classes > 1; ++head) {
      auto [a, b] = queue[head];
      for (const Perm& g : generators_) {
        int ra = find(g[a]), rb = find(g[b]);
        if (ra != rb) {
          parent[ra] = rb;
          --classes;
          queue.emplace_back(g[a], g[b]);
        }
      }
    }
    if (classes > 1) return false;
  }
  return true;
}

bool PermGroup::is_frobenius() const {
  if (!is_transitive()) throw PreconditionError("frobenius test requires a transitive group");
  PermGroup stab = stabilizer(0);
  if (stab.generators().empty()) return false;  // regular group
  auto elems = stab.elements();
  if (!elems) throw OverCapError("frobenius test: point stabilizer exceeds the element cap");
  for (const Perm& g : *elems) {
    if (g.is_identity()) continue;
    if (g.num_fixed_points() > 1) return false;
  }
  return true;
}

PermGroup PermGroup::conjugated_by(const Perm& x) const {
  std::vector<Perm> gens;
  gens.reserve(generators_.size());
  for (const Perm& g : generators_) gens.push_back(g.conjugated_by(x));
  return PermGroup(degree_, std::move(gens));
}

}  // namespace orbital
