#include "orbital/iso_set.hpp"

#include <algorithm>

#include "orbital/errors.hpp"

namespace orbital {

IsoSet IsoSet::of(int n, std::vector<Perm> list) {
  IsoSet s;
  s.degree = n;
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  s.perms = std::move(list);
  return s;
}

bool IsoSet::contains(const Perm& p) const {
  if (symbolic_sym) return p.degree() == degree;
  return std::binary_search(perms.begin(), perms.end(), p);
}

std::uint64_t IsoSet::size() const {
  if (symbolic_sym) throw PreconditionError("size of a symbolic Sym(n) set");
  return perms.size();
}

}  // namespace orbital
