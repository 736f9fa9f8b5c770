#include "orbital/zoo.hpp"

#include <algorithm>

namespace orbital {

namespace {

Perm field_translation(const FiniteField& f, int b) {
  std::vector<int> img(f.size());
  for (int x = 0; x < f.size(); ++x) img[x] = f.add(x, b);
  return Perm(std::move(img));
}

Perm field_scaling(const FiniteField& f, int a) {
  std::vector<int> img(f.size());
  for (int x = 0; x < f.size(); ++x) img[x] = f.mul(a, x);
  return Perm(std::move(img));
}

Perm field_frobenius(const FiniteField& f) {
  std::vector<int> img(f.size());
  for (int x = 0; x < f.size(); ++x) img[x] = f.frobenius(x);
  return Perm(std::move(img));
}

}  // namespace

PermGroup agl1(const FiniteField& field) {
  std::vector<Perm> gens{field_translation(field, 1), field_scaling(field, field.theta())};
  return PermGroup(field.size(), std::move(gens));
}

PermGroup agammal1(int p, int d) {
  FiniteField field(p, d);
  std::vector<Perm> gens{field_translation(field, 1), field_scaling(field, field.theta()),
                         field_frobenius(field)};
  return PermGroup(field.size(), std::move(gens));
}

PermGroup as0(int p, int d) {
  if (!is_prime(p)) throw NotPrimeError("AS0 characteristic must be prime");
  if (p == 2 || d % 2 != 0) throw BadParametersError("AS0 requires p odd and d even");
  FiniteField f(p, d / 2);
  const int q = f.size();
  const int n = q * q;
  auto index = [&](int u, int v) { return u + q * v; };
  auto make = [&](auto&& map) {
    std::vector<int> img(n);
    for (int v = 0; v < q; ++v)
      for (int u = 0; u < q; ++u) {
        auto [nu, nv] = map(u, v);
        img[index(u, v)] = index(nu, nv);
      }
    return Perm(std::move(img));
  };
  int theta = f.theta();
  int theta_inv = f.inv(theta);
  std::vector<Perm> gens{
      make([&](int u, int v) { return std::pair(f.add(u, 1), v); }),
      make([&](int u, int v) { return std::pair(f.mul(theta, u), f.mul(theta_inv, v)); }),
      make([&](int u, int v) { return std::pair(f.neg(u), v); }),
      make([&](int u, int v) { return std::pair(v, u); }),
  };
  return PermGroup(n, std::move(gens));
}

bool matrix_is_invertible(const Matrix& m, int p) {
  Matrix a = m;
  int dim = static_cast<int>(a.size());
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int row = col; row < dim; ++row)
      if (a[row][col] % p != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[col], a[pivot]);
    for (int row = col + 1; row < dim; ++row) {
      // eliminate a[row][col]
      while (a[row][col] % p != 0)
        for (int k = col; k < dim; ++k) a[row][k] = (a[row][k] + a[col][k]) % p;
    }
  }
  return true;
}

PermGroup affine_group(int p, int dim, const std::vector<Matrix>& generators) {
  if (!is_prime(p)) throw NotPrimeError("affine group characteristic must be prime");
  if (dim < 1) throw BadParametersError("affine group dimension must be >= 1");
  long long n_ll = 1;
  for (int i = 0; i < dim; ++i) {
    n_ll *= p;
    if (n_ll > 1'000'000) throw BadParametersError("vector space too large");
  }
  const int n = static_cast<int>(n_ll);
  auto coeffs = [&](int v) {
    std::vector<int> c(dim);
    for (int i = 0; i < dim; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = dim - 1; i >= 0; --i) v = v * p + c[i];
    return v;
  };

  std::vector<Perm> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      auto c = coeffs(v);
      c[i] = (c[i] + 1) % p;
      img[v] = index(c);
    }
    gens.emplace_back(std::move(img));
  }
  for (const Matrix& m : generators) {
    if (static_cast<int>(m.size()) != dim) throw BadParametersError("matrix dimension mismatch");
    Matrix reduced(dim, std::vector<int>(dim));
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(m[i].size()) != dim)
        throw BadParametersError("matrix dimension mismatch");
      for (int j = 0; j < dim; ++j) reduced[i][j] = ((m[i][j] % p) + p) % p;
    }
    if (!matrix_is_invertible(reduced, p))
      throw SingularMatrixError("affine group generator matrix is singular");
    std::vector<int> img(n);
    for (int v = 0; v < n; ++v) {
      auto c = coeffs(v);
      std::vector<int> out(dim, 0);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) out[i] = (out[i] + reduced[i][j] * c[j]) % p;
      img[v] = index(out);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

Matrix multiplication_matrix(const FiniteField& field, int a) {
  int d = field.d();
  Matrix m(d, std::vector<int>(d));
  for (int j = 0; j < d; ++j) {
    int basis = 1;
    for (int i = 0; i < j; ++i) basis *= field.p();  // element x^j has index p^j
    auto col = field.coeffs(field.mul(a, basis));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

Matrix frobenius_matrix(const FiniteField& field) {
  int d = field.d();
  Matrix m(d, std::vector<int>(d));
  for (int j = 0; j < d; ++j) {
    int basis = 1;
    for (int i = 0; i < j; ++i) basis *= field.p();
    auto col = field.coeffs(field.frobenius(basis));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

}  // namespace orbital
