#include "orbital/coherent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "orbital/errors.hpp"

namespace orbital {

BinaryRelation::BinaryRelation(int degree_, std::vector<std::pair<int, int>> pairs_)
    : degree(degree_), pairs(std::move(pairs_)) {
  for (auto [a, b] : pairs)
    if (a < 0 || a >= degree || b < 0 || b >= degree)
      throw PreconditionError("relation pair out of range");
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

BinaryRelation BinaryRelation::diagonal(int degree) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(degree);
  for (int i = 0; i < degree; ++i) pairs.emplace_back(i, i);
  return BinaryRelation(degree, std::move(pairs));
}

BinaryRelation BinaryRelation::graph_of(const Perm& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.degree());
  for (int i = 0; i < g.degree(); ++i) pairs.emplace_back(i, g[i]);
  return BinaryRelation(g.degree(), std::move(pairs));
}

BinaryRelation BinaryRelation::transpose() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(pairs.size());
  for (auto [a, b] : pairs) flipped.emplace_back(b, a);
  return BinaryRelation(degree, std::move(flipped));
}

ColorBijection::ColorBijection(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= rank() || seen[v])
      throw PreconditionError("color map is not a bijection");
    seen[v] = true;
  }
}

ColorBijection ColorBijection::identity(int rank) {
  std::vector<int> map(rank);
  for (int i = 0; i < rank; ++i) map[i] = i;
  return ColorBijection(std::move(map));
}

ColorBijection ColorBijection::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < rank(); ++i) inv[map_[i]] = i;
  return ColorBijection(std::move(inv));
}

bool ColorBijection::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (map_[i] != i) return false;
  return true;
}

std::string CoherenceViolation::description() const {
  std::ostringstream out;
  switch (axiom) {
    case Axiom::C1:
      out << "C1 violated: color " << t << " mixes diagonal pair (" << pair_a.first << ","
          << pair_a.second << ") with off-diagonal pair (" << pair_b.first << "," << pair_b.second
          << ")";
      break;
    case Axiom::C2:
      out << "C2 violated: transposes of color " << t << " pairs (" << pair_a.first << ","
          << pair_a.second << ") and (" << pair_b.first << "," << pair_b.second
          << ") have different colors";
      break;
    case Axiom::C3:
      out << "C3 violated: c_{" << r << "," << s << "}^" << t << " differs between pairs ("
          << pair_a.first << "," << pair_a.second << ") and (" << pair_b.first << ","
          << pair_b.second << ")";
      break;
  }
  return out.str();
}

struct CoherentConfiguration::Data {
  int n = 0;
  int rank = 0;
  std::vector<int> matrix;
  std::vector<bool> diag_flag;           // class contains only diagonal pairs
  std::vector<std::int64_t> class_size;
  std::vector<std::pair<int, int>> min_pair;
  std::vector<int> pairing;              // -1 when not a class
  std::vector<int> diagonal_colors;
  std::vector<std::vector<int>> fibers;  // by diagonal color order
  std::vector<int> fiber_of_point;

  mutable std::mutex mu;
  mutable bool verified = false;
  mutable std::optional<CoherenceViolation> violation;
  mutable bool tensor_built = false;
  mutable std::map<std::array<int, 3>, std::int64_t> tensor;
};

CoherentConfiguration CoherentConfiguration::from_matrix(int degree, std::vector<int> colors) {
  if (degree < 1) throw PreconditionError("configuration degree must be >= 1");
  if (static_cast<int>(colors.size()) != degree * degree)
    throw PreconditionError("color matrix size mismatch");
  int max_id = -1;
  for (int c : colors) {
    if (c < 0) throw PreconditionError("negative color id");
    max_id = std::max(max_id, c);
  }
  // Compact ids.
  std::vector<int> remap(max_id + 1, -1);
  int used = 0;
  for (int c : colors)
    if (remap[c] < 0) remap[c] = used++;
  for (int& c : colors) c = remap[c];

  // Class metadata on compacted ids.
  std::vector<std::int64_t> size(used, 0);
  std::vector<char> has_diag(used, 0), has_off(used, 0);
  std::vector<std::pair<int, int>> min_pair(used, {degree, degree});
  for (int a = 0; a < degree; ++a)
    for (int b = 0; b < degree; ++b) {
      int c = colors[a * degree + b];
      ++size[c];
      (a == b ? has_diag : has_off)[c] = 1;
      min_pair[c] = std::min(min_pair[c], std::pair(a, b));
    }

  // Canonical order: purely diagonal classes first, then by size, then by
  // smallest member pair.
  std::vector<int> order(used);
  for (int i = 0; i < used; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    bool da = has_diag[a] && !has_off[a], db = has_diag[b] && !has_off[b];
    if (da != db) return da;
    if (size[a] != size[b]) return size[a] < size[b];
    return min_pair[a] < min_pair[b];
  });
  std::vector<int> final_id(used);
  for (int pos = 0; pos < used; ++pos) final_id[order[pos]] = pos;

  auto data = std::make_shared<Data>();
  data->n = degree;
  data->rank = used;
  data->matrix.resize(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) data->matrix[i] = final_id[colors[i]];

  data->diag_flag.resize(used);
  data->class_size.resize(used);
  data->min_pair.resize(used);
  for (int i = 0; i < used; ++i) {
    data->diag_flag[final_id[i]] = has_diag[i] && !has_off[i];
    data->class_size[final_id[i]] = size[i];
    data->min_pair[final_id[i]] = min_pair[i];
  }

  // Pairing: color of the transposed class when constant, -1 otherwise.
  data->pairing.assign(used, -2);
  for (int a = 0; a < degree; ++a)
    for (int b = 0; b < degree; ++b) {
      int c = data->matrix[a * degree + b];
      int ct = data->matrix[b * degree + a];
      if (data->pairing[c] == -2)
        data->pairing[c] = ct;
      else if (data->pairing[c] != ct)
        data->pairing[c] = -1;
    }

  for (int c = 0; c < used; ++c)
    if (data->diag_flag[c]) data->diagonal_colors.push_back(c);
  data->fiber_of_point.assign(degree, -1);
  data->fibers.resize(data->diagonal_colors.size());
  for (int p = 0; p < degree; ++p) {
    int c = data->matrix[p * degree + p];
    auto it = std::find(data->diagonal_colors.begin(), data->diagonal_colors.end(), c);
    if (it != data->diagonal_colors.end()) {
      int idx = static_cast<int>(it - data->diagonal_colors.begin());
      data->fiber_of_point[p] = idx;
      data->fibers[idx].push_back(p);
    }
  }
  return CoherentConfiguration(std::move(data));
}

int CoherentConfiguration::degree() const { return data_->n; }
int CoherentConfiguration::rank() const { return data_->rank; }
int CoherentConfiguration::color(int a, int b) const { return data_->matrix[a * data_->n + b]; }
const std::vector<int>& CoherentConfiguration::matrix() const { return data_->matrix; }
bool CoherentConfiguration::color_is_diagonal(int c) const { return data_->diag_flag[c]; }
const std::vector<int>& CoherentConfiguration::diagonal_colors() const {
  return data_->diagonal_colors;
}
std::int64_t CoherentConfiguration::class_size(int c) const { return data_->class_size[c]; }
std::pair<int, int> CoherentConfiguration::class_representative(int c) const {
  return data_->min_pair[c];
}
int CoherentConfiguration::pairing(int c) const { return data_->pairing[c]; }
const std::vector<std::vector<int>>& CoherentConfiguration::fibers() const {
  return data_->fibers;
}
int CoherentConfiguration::fiber_of(int point) const { return data_->fiber_of_point[point]; }

BinaryRelation CoherentConfiguration::relation(int c) const {
  std::vector<std::pair<int, int>> pairs;
  const int n = data_->n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (data_->matrix[a * n + b] == c) pairs.emplace_back(a, b);
  return BinaryRelation(n, std::move(pairs));
}

std::vector<BinaryRelation> CoherentConfiguration::relations() const {
  std::vector<std::vector<std::pair<int, int>>> buckets(data_->rank);
  const int n = data_->n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) buckets[data_->matrix[a * n + b]].emplace_back(a, b);
  std::vector<BinaryRelation> result;
  result.reserve(buckets.size());
  for (auto& pairs : buckets) result.emplace_back(n, std::move(pairs));
  return result;
}

const std::optional<CoherenceViolation>& CoherentConfiguration::verify() const {
  const Data& d = *data_;
  std::lock_guard<std::mutex> lock(d.mu);
  if (d.verified) return d.violation;
  const int n = d.n;

  auto fail = [&](CoherenceViolation v) -> const std::optional<CoherenceViolation>& {
    d.violation = std::move(v);
    d.verified = true;
    return d.violation;
  };

  // C1: no class mixes diagonal and off-diagonal pairs.
  for (int c = 0; c < d.rank; ++c) {
    if (d.diag_flag[c]) continue;
    // find a diagonal pair in an off-diagonal class
    std::pair<int, int> diag_pair{-1, -1}, off_pair{-1, -1};
    for (int p = 0; p < n && diag_pair.first < 0; ++p)
      if (d.matrix[p * n + p] == c) diag_pair = {p, p};
    if (diag_pair.first < 0) continue;
    for (int a = 0; a < n && off_pair.first < 0; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && d.matrix[a * n + b] == c) {
          off_pair = {a, b};
          break;
        }
    CoherenceViolation v;
    v.axiom = CoherenceViolation::Axiom::C1;
    v.t = c;
    v.pair_a = diag_pair;
    v.pair_b = off_pair;
    return fail(std::move(v));
  }

  // C2: the transpose of each class is a class.
  for (int c = 0; c < d.rank; ++c)
    if (d.pairing[c] < 0) {
      std::pair<int, int> first{-1, -1}, second{-1, -1};
      int seen_color = -1;
      for (int a = 0; a < n && second.first < 0; ++a)
        for (int b = 0; b < n; ++b) {
          if (d.matrix[a * n + b] != c) continue;
          int t = d.matrix[b * n + a];
          if (first.first < 0) {
            first = {a, b};
            seen_color = t;
          } else if (t != seen_color) {
            second = {a, b};
            break;
          }
        }
      CoherenceViolation v;
      v.axiom = CoherenceViolation::Axiom::C2;
      v.t = c;
      v.pair_a = first;
      v.pair_b = second;
      return fail(std::move(v));
    }

  // C3: path color counts constant on every class. For each class compare
  // every pair's counts against those of the class representative.
  std::vector<std::vector<std::int64_t>> ref_counts(d.rank);
  std::vector<std::pair<int, int>> ref_pair(d.rank, {-1, -1});
  std::vector<std::int64_t> counts(static_cast<std::size_t>(d.rank) * d.rank);
  std::vector<std::int64_t> rep(static_cast<std::size_t>(d.rank) * d.rank);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int t = d.matrix[a * n + b];
      std::fill(counts.begin(), counts.end(), 0);
      for (int g = 0; g < n; ++g)
        ++counts[d.matrix[a * n + g] * d.rank + d.matrix[g * n + b]];
      if (ref_pair[t].first < 0) {
        ref_pair[t] = {a, b};
        ref_counts[t] = counts;
        continue;
      }
      if (counts != ref_counts[t]) {
        CoherenceViolation v;
        v.axiom = CoherenceViolation::Axiom::C3;
        v.t = t;
        v.pair_a = ref_pair[t];
        v.pair_b = {a, b};
        for (int rr = 0; rr < d.rank && v.r < 0; ++rr)
          for (int ss = 0; ss < d.rank; ++ss)
            if (counts[rr * d.rank + ss] != ref_counts[t][rr * d.rank + ss]) {
              v.r = rr;
              v.s = ss;
              break;
            }
        return fail(std::move(v));
      }
    }

  d.violation = std::nullopt;
  d.verified = true;
  return d.violation;
}

const std::map<std::array<int, 3>, std::int64_t>& CoherentConfiguration::intersection_numbers()
    const {
  if (!is_coherent())
    throw IncoherentInputError("intersection numbers require a coherent configuration: " +
                               verify()->description());
  const Data& d = *data_;
  std::lock_guard<std::mutex> lock(d.mu);
  if (!d.tensor_built) {
    const int n = d.n;
    for (int t = 0; t < d.rank; ++t) {
      auto [a, b] = d.min_pair[t];
      std::map<std::pair<int, int>, std::int64_t> counts;
      for (int g = 0; g < n; ++g)
        ++counts[{d.matrix[a * n + g], d.matrix[g * n + b]}];
      for (auto& [rs, cnt] : counts) d.tensor[{rs.first, rs.second, t}] = cnt;
    }
    d.tensor_built = true;
  }
  return d.tensor;
}

std::int64_t CoherentConfiguration::intersection_number(int r, int s, int t) const {
  const auto& tensor = intersection_numbers();
  auto it = tensor.find({r, s, t});
  return it == tensor.end() ? 0 : it->second;
}

std::vector<int> CoherentConfiguration::regular_points() const {
  if (!is_coherent())
    throw IncoherentInputError("regular points require a coherent configuration: " +
                               verify()->description());
  const int n = data_->n;
  std::vector<int> result;
  std::vector<char> seen(data_->rank);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    bool regular = true;
    for (int b = 0; b < n && regular; ++b) {
      int c = data_->matrix[a * n + b];
      if (seen[c]) regular = false;
      seen[c] = 1;
    }
    if (regular) result.push_back(a);
  }
  return result;
}

bool CoherentConfiguration::is_semiregular() const {
  return static_cast<int>(regular_points().size()) == data_->n;
}

bool CoherentConfiguration::is_complete() const {
  return data_->rank == data_->n * data_->n;
}

bool CoherentConfiguration::is_homogeneous() const {
  return data_->diagonal_colors.size() == 1 &&
         static_cast<int>(data_->fibers[0].size()) == data_->n;
}

bool CoherentConfiguration::is_three_halves_homogeneous() const {
  if (!is_coherent())
    throw IncoherentInputError("3/2-homogeneity requires a coherent configuration: " +
                               verify()->description());
  if (!is_homogeneous()) return false;
  std::int64_t common = -1;
  for (int c = 0; c < data_->rank; ++c) {
    if (data_->diag_flag[c]) continue;
    if (common < 0) common = data_->class_size[c];
    if (data_->class_size[c] != common) return false;
  }
  return true;
}

bool CoherentConfiguration::operator==(const CoherentConfiguration& other) const {
  return data_->n == other.data_->n && data_->matrix == other.data_->matrix;
}

CoherentConfiguration scheme_of_group(const PermGroup& g) {
  const int n = g.degree();
  std::vector<int> colors(static_cast<std::size_t>(n) * n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> queue;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (colors[a * n + b] >= 0) continue;
      int id = next++;
      colors[a * n + b] = id;
      queue.assign(1, {a, b});
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [x, y] = queue[head];
        for (const Perm& gen : g.generators()) {
          int xg = gen[x], yg = gen[y];
          if (colors[xg * n + yg] < 0) {
            colors[xg * n + yg] = id;
            queue.emplace_back(xg, yg);
          }
        }
      }
    }
  return CoherentConfiguration::from_matrix(n, std::move(colors));
}

TuplePartition k_orbits(const PermGroup& g, int k, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const int n = g.degree();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > budget) throw OverBudgetError("tuple space exceeds the budget");
  }

  TuplePartition part;
  part.degree = n;
  part.k = k;
  part.class_id.assign(total, -1);

  std::vector<int> tuple(k), image(k);
  auto decode = [&](std::uint64_t code, std::vector<int>& out) {
    for (int i = k - 1; i >= 0; --i) {
      out[i] = static_cast<int>(code % n);
      code /= n;
    }
  };
  auto encode = [&](const std::vector<int>& t) {
    std::uint64_t code = 0;
    for (int v : t) code = code * n + static_cast<std::uint64_t>(v);
    return code;
  };

  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (part.class_id[start] >= 0) continue;
    int id = static_cast<int>(part.representatives.size());
    decode(start, tuple);
    part.representatives.push_back(tuple);
    part.class_id[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      decode(queue[head], tuple);
      for (const Perm& gen : g.generators()) {
        for (int i = 0; i < k; ++i) image[i] = gen[tuple[i]];
        std::uint64_t code = encode(image);
        if (part.class_id[code] < 0) {
          part.class_id[code] = id;
          queue.push_back(code);
        }
      }
    }
  }
  return part;
}

bool is_algebraic_isomorphism(const CoherentConfiguration& x,
                              const CoherentConfiguration& x_prime, const ColorBijection& phi) {
  const auto& t1 = x.intersection_numbers();
  const auto& t2 = x_prime.intersection_numbers();
  if (x.degree() != x_prime.degree() || x.rank() != x_prime.rank() ||
      phi.rank() != x.rank())
    return false;
  for (int c = 0; c < x.rank(); ++c) {
    int c2 = phi(c);
    if (x.class_size(c) != x_prime.class_size(c2)) return false;
    if (x.color_is_diagonal(c) != x_prime.color_is_diagonal(c2)) return false;
    if (phi(x.pairing(c)) != x_prime.pairing(c2)) return false;
  }
  if (t1.size() != t2.size()) return false;
  for (const auto& [key, value] : t1) {
    auto it = t2.find({phi(key[0]), phi(key[1]), phi(key[2])});
    if (it == t2.end() || it->second != value) return false;
  }
  return true;
}

std::optional<Perm> iso_from_regular_point(const CoherentConfiguration& x,
                                           const CoherentConfiguration& x_prime,
                                           const ColorBijection& phi, int alpha,
                                           int alpha_prime) {
  const int n = x.degree();
  if (x_prime.degree() != n) throw DegreeMismatchError("configuration degrees differ");
  if (x.rank() != x_prime.rank() || phi.rank() != x.rank())
    throw PreconditionError("color map rank mismatch");
  auto row_regular = [n](const CoherentConfiguration& c, int p) {
    std::vector<char> seen(c.rank(), 0);
    for (int b = 0; b < n; ++b) {
      int col = c.color(p, b);
      if (seen[col]) return false;
      seen[col] = 1;
    }
    return true;
  };
  if (!row_regular(x, alpha)) throw PreconditionError("alpha is not a regular point");
  if (!row_regular(x_prime, alpha_prime))
    throw PreconditionError("alpha_prime is not a regular point");
  if (phi(x.color(alpha, alpha)) != x_prime.color(alpha_prime, alpha_prime))
    return std::nullopt;  // fiber condition

  // alpha_prime is regular, so each color occurs at most once in its row.
  std::vector<int> where(x.rank(), -1);
  for (int b = 0; b < n; ++b) where[x_prime.color(alpha_prime, b)] = b;

  std::vector<int> f(n);
  std::vector<bool> used(n, false);
  for (int b = 0; b < n; ++b) {
    int target = where[phi(x.color(alpha, b))];
    if (target < 0 || used[target]) return std::nullopt;
    f[b] = target;
    used[target] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi(x.color(a, b)) != x_prime.color(f[a], f[b])) return std::nullopt;
  return Perm(std::move(f));
}

}  // namespace orbital
