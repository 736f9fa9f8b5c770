#pragma once

#include <vector>

#include "orbital/errors.hpp"

namespace orbital {

bool is_prime(int n);

// The finite field F_{p^d}. Elements are indexed 0..q-1 by reading their
// coefficient vectors (c_0 the constant term) as base-p integers, so 0 and 1
// are the additive and multiplicative identities. The modulus is the
// lexicographically smallest irreducible monic of degree d over F_p and the
// primitive element is the smallest-index element of multiplicative order
// q - 1; both choices are deterministic.
class FiniteField {
 public:
  FiniteField(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  int size() const { return q_; }

  // Monic modulus, coefficients c_0..c_d with c_d = 1.
  const std::vector<int>& modulus() const { return modulus_; }
  int theta() const { return theta_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a) const { return pow(a, p_); }
  int multiplicative_order(int a) const;

  std::vector<int> coeffs(int a) const;
  int from_coeffs(const std::vector<int>& c) const;

 private:
  int p_, d_, q_;
  std::vector<int> modulus_;
  int theta_;
  std::vector<int> add_, mul_, neg_;
};

}  // namespace orbital
