#include "orbital/gf.hpp"

#include <algorithm>

namespace orbital {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; static_cast<long long>(f) * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace {

// Dense coefficient vectors over F_p, constant term first, no trailing zeros
// enforced by callers where it matters.

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p * p) % p;
  }
  a.resize(dm);
  for (int& c : a) c %= p;
  return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& m, int p) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), m, p);
}

// Remainder of a by the monic divisor m.
bool poly_divides(const std::vector<int>& m, std::vector<int> a, int p) {
  auto r = poly_mod(std::move(a), m, p);
  return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

std::vector<int> monic_from_index(long long idx, int deg, int p) {
  std::vector<int> poly(deg + 1, 0);
  poly[deg] = 1;
  for (int i = 0; i < deg; ++i) {
    poly[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return poly;
}

bool is_irreducible(const std::vector<int>& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg == 1) return true;
  for (int dd = 1; 2 * dd <= deg; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx)
      if (poly_divides(monic_from_index(idx, dd, p), m, p)) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int d) : p_(p), d_(d) {
  if (!is_prime(p)) throw NotPrimeError("field characteristic must be prime");
  if (d < 1) throw BadParametersError("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > 1'000'000) throw BadParametersError("field too large");
  }
  q_ = static_cast<int>(q);

  long long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long long idx = 0; idx < count; ++idx) {
    auto m = monic_from_index(idx, d, p);
    if (is_irreducible(m, p)) {
      modulus_ = std::move(m);
      break;
    }
  }

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  auto coeffs_of = [&](int a) {
    std::vector<int> c(d_);
    for (int i = 0; i < d_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto index_of = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = d_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return v;
  };
  for (int a = 0; a < q_; ++a) {
    auto ca = coeffs_of(a);
    {
      std::vector<int> cn(d_);
      for (int i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_[a] = index_of(cn);
    }
    for (int b = 0; b < q_; ++b) {
      auto cb = coeffs_of(b);
      std::vector<int> cs(d_);
      for (int i = 0; i < d_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[a * q_ + b] = index_of(cs);
      mul_[a * q_ + b] = index_of(poly_mulmod(ca, cb, modulus_, p_));
    }
  }

  theta_ = 0;
  for (int a = 1; a < q_; ++a)
    if (multiplicative_order(a) == q_ - 1) {
      theta_ = a;
      break;
    }
}

int FiniteField::inv(int a) const {
  if (a == 0) throw PreconditionError("inverse of zero field element");
  return pow(a, q_ - 2);
}

int FiniteField::pow(int a, long long e) const {
  long long m = q_ - 1;
  if (a != 0) {
    e %= m;
    if (e < 0) e += m;
  }
  int result = 1;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

int FiniteField::multiplicative_order(int a) const {
  if (a == 0) throw PreconditionError("multiplicative order of zero");
  int ord = 1;
  int x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<int> FiniteField::coeffs(int a) const {
  std::vector<int> c(d_);
  for (int i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int FiniteField::from_coeffs(const std::vector<int>& c) const {
  int v = 0;
  for (int i = d_ - 1; i >= 0; --i) {
    int ci = i < static_cast<int>(c.size()) ? c[i] % p_ : 0;
    if (ci < 0) ci += p_;
    v = v * p_ + ci;
  }
  return v;
}

}  // namespace orbital
