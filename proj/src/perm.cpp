#include "orbital/perm.hpp"

#include <algorithm>
#include <sstream>

namespace orbital {

Perm::Perm(int degree) : images_(degree) {
  for (int i = 0; i < degree; ++i) images_[i] = i;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw PreconditionError("image table is not a bijection of 0..n-1");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree())
    throw DegreeMismatchError("composing permutations of different degree");
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[i] = other.images_[images_[i]];
  Perm p(0);
  p.images_ = std::move(result);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> result(images_.size());
  for (int i = 0; i < degree(); ++i) result[images_[i]] = i;
  Perm p(0);
  p.images_ = std::move(result);
  return p;
}

Perm Perm::conjugated_by(const Perm& x) const { return x.inverse() * *this * x; }

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      cycle.push_back(j);
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    result.push_back(std::move(cycle));
  }
  return result;
}

CycleType Perm::cycle_type() const {
  CycleType lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    int j = i;
    do {
      ++len;
      seen[j] = true;
      j = images_[j];
    } while (j != i);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Perm::num_fixed_points() const {
  int count = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) ++count;
  return count;
}

std::size_t Perm::hash() const {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

CycleType cycle_type(const Perm& g) { return g.cycle_type(); }

}  // namespace orbital
