#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "orbital/errors.hpp"
#include "wl_engine.hpp"

namespace orbital::wl {

namespace {

std::uint64_t hash_key(const Key& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : key) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

struct KeyTable {
  std::vector<Key> keys;
  std::vector<std::int64_t> counts;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;

  int intern(Key&& key) {
    auto& bucket = buckets[hash_key(key)];
    for (int idx : bucket)
      if (keys[idx] == key) {
        ++counts[idx];
        return idx;
      }
    int idx = static_cast<int>(keys.size());
    bucket.push_back(idx);
    keys.push_back(std::move(key));
    counts.push_back(1);
    return idx;
  }
};

// Sorted distinct keys -> canonical ids; relabels assignments in place.
Signature canonicalize(KeyTable& table, std::vector<int>& assignment) {
  const int distinct = static_cast<int>(table.keys.size());
  std::vector<int> order(distinct);
  for (int i = 0; i < distinct; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return table.keys[a] < table.keys[b]; });
  std::vector<int> position(distinct);
  for (int pos = 0; pos < distinct; ++pos) position[order[pos]] = pos;

  Signature sig;
  sig.keys.reserve(distinct);
  sig.counts.resize(distinct);
  for (int pos = 0; pos < distinct; ++pos) {
    sig.keys.push_back(table.keys[order[pos]]);
    sig.counts[pos] = table.counts[order[pos]];
  }
  for (int& a : assignment) a = position[a];
  return sig;
}

// One refinement round: key of (a,b) is [current color, RLE-sorted multiset
// of c(a,g) * rank + c(g,b) over g].
Signature round_keys(const Side& side, std::vector<int>& assignment) {
  const int n = side.n;
  const std::int64_t r = side.rank;
  KeyTable table;
  assignment.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::int64_t> path(n);
  Key key;
  for (int a = 0; a < n; ++a) {
    const int* row_a = side.color.data() + static_cast<std::size_t>(a) * n;
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g)
        path[g] = static_cast<std::int64_t>(row_a[g]) * r + side.color[static_cast<std::size_t>(g) * n + b];
      std::sort(path.begin(), path.end());
      key.clear();
      key.push_back(row_a[b]);
      for (int g = 0; g < n;) {
        int h = g;
        while (h < n && path[h] == path[g]) ++h;
        key.push_back(path[g]);
        key.push_back(h - g);
        g = h;
      }
      assignment[static_cast<std::size_t>(a) * n + b] = table.intern(std::move(key));
      key = Key();
    }
  }
  return canonicalize(table, assignment);
}

}  // namespace

Initial initial_from_relations(int degree, const std::vector<BinaryRelation>& rels) {
  for (const auto& rel : rels)
    if (rel.degree != degree) throw DegreeMismatchError("relation degree mismatch");
  const int n = degree;
  const int m = static_cast<int>(rels.size());
  // Membership bitmaps, one per relation.
  std::vector<std::vector<char>> member(m, std::vector<char>(static_cast<std::size_t>(n) * n, 0));
  for (int i = 0; i < m; ++i)
    for (auto [a, b] : rels[i].pairs) member[i][static_cast<std::size_t>(a) * n + b] = 1;

  KeyTable table;
  std::vector<int> assignment(static_cast<std::size_t>(n) * n);
  const int words = (2 * m + 1 + 63) / 64;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Key key(words, 0);
      auto set_bit = [&](int bit) { key[bit / 64] |= std::int64_t{1} << (bit % 64); };
      if (a == b) set_bit(0);
      for (int i = 0; i < m; ++i) {
        if (member[i][static_cast<std::size_t>(a) * n + b]) set_bit(1 + 2 * i);
        if (member[i][static_cast<std::size_t>(b) * n + a]) set_bit(2 + 2 * i);
      }
      assignment[static_cast<std::size_t>(a) * n + b] = table.intern(std::move(key));
    }
  Initial init;
  init.signature = canonicalize(table, assignment);
  init.side.n = n;
  init.side.rank = static_cast<int>(init.signature.keys.size());
  init.side.color = std::move(assignment);
  return init;
}

Initial initial_from_config(const CoherentConfiguration& x, const std::vector<int>& points,
                            const std::vector<int>& color_map) {
  const int n = x.degree();
  for (int p : points)
    if (p < 0 || p >= n) throw PreconditionError("extension point out of range");
  std::vector<std::int64_t> point_tag(n, 0);
  for (std::size_t i = 0; i < points.size(); ++i) point_tag[points[i]] = static_cast<int>(i) + 1;

  KeyTable table;
  std::vector<int> assignment(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Key key{color_map[x.color(a, b)], point_tag[a], point_tag[b]};
      assignment[static_cast<std::size_t>(a) * n + b] = table.intern(std::move(key));
    }
  Initial init;
  init.signature = canonicalize(table, assignment);
  init.side.n = n;
  init.side.rank = static_cast<int>(init.signature.keys.size());
  init.side.color = std::move(assignment);
  return init;
}

Trace refine(Initial initial) {
  Trace trace;
  trace.rounds.push_back(std::move(initial.signature));
  Side side = std::move(initial.side);
  for (;;) {
    std::vector<int> assignment;
    Signature sig = round_keys(side, assignment);
    int new_rank = static_cast<int>(sig.keys.size());
    trace.rounds.push_back(std::move(sig));
    side.color = std::move(assignment);
    bool stable = new_rank == side.rank;
    side.rank = new_rank;
    if (stable) break;
  }
  trace.stable = std::move(side);
  return trace;
}

std::optional<Side> replay(const Trace& trace, const Initial& other) {
  if (other.signature != trace.rounds[0]) return std::nullopt;
  Side side = other.side;
  for (std::size_t round = 1; round < trace.rounds.size(); ++round) {
    std::vector<int> assignment;
    Signature sig = round_keys(side, assignment);
    if (sig != trace.rounds[round]) return std::nullopt;
    side.color = std::move(assignment);
    side.rank = static_cast<int>(sig.keys.size());
  }
  return side;
}

std::optional<Perm> extract_iso(const Side& a, const Side& b, int alpha, int alpha_prime) {
  const int n = a.n;
  if (b.n != n || a.rank != b.rank) return std::nullopt;
  if (a.color[static_cast<std::size_t>(alpha) * n + alpha] !=
      b.color[static_cast<std::size_t>(alpha_prime) * n + alpha_prime])
    return std::nullopt;
  // Where each color sits in alpha_prime's row, if unique.
  std::vector<int> where(b.rank, -1);
  for (int q = 0; q < n; ++q) {
    int c = b.color[static_cast<std::size_t>(alpha_prime) * n + q];
    where[c] = where[c] == -1 ? q : -2;
  }
  std::vector<int> f(n);
  std::vector<bool> used(n, false);
  for (int p = 0; p < n; ++p) {
    int c = a.color[static_cast<std::size_t>(alpha) * n + p];
    int q = where[c];
    if (q < 0 || used[q]) return std::nullopt;
    f[p] = q;
    used[q] = true;
  }
  for (int p = 0; p < n; ++p) {
    const int* row_a = a.color.data() + static_cast<std::size_t>(p) * n;
    const int* row_b = b.color.data() + static_cast<std::size_t>(f[p]) * n;
    for (int q = 0; q < n; ++q)
      if (row_a[q] != row_b[f[q]]) return std::nullopt;
  }
  return Perm(std::move(f));
}

}  // namespace orbital::wl
