#pragma once

#include <vector>

#include "orbital/gf.hpp"
#include "orbital/perm_group.hpp"

namespace orbital {

// Square matrix over F_p, row major.
using Matrix = std::vector<std::vector<int>>;

// Constructors for the affine groups the closure algorithms need. All of
// them act on field / vector-space elements indexed by reading coefficient
// vectors as base-p integers, so the same group built twice is elementwise
// identical.

// AGL(1,q): all maps x -> a x + b with a != 0. Order q(q-1), 2-transitive.
PermGroup agl1(const FiniteField& field);

// AGammaL(1,p^d) = <translations, x -> theta x, x -> x^p>. Order p^d (p^d - 1) d.
PermGroup agammal1(int p, int d);

// The Passman group AS0(p^d) = V x| S0(p^{d/2}) acting on V = F_{p^{d/2}}^2,
// where S0 is generated by diag(theta, theta^-1), diag(-1, 1) and the swap.
// Order p^d * 4 (p^{d/2} - 1). Requires p odd and d even.
PermGroup as0(int p, int d);

// V x| <matrix generators> on |V| = p^dim points: translations by the unit
// vectors together with the given invertible linear maps.
PermGroup affine_group(int p, int dim, const std::vector<Matrix>& generators);

// Matrix of x -> a x on the field viewed as F_p^d.
Matrix multiplication_matrix(const FiniteField& field, int a);

// Matrix of the Frobenius x -> x^p.
Matrix frobenius_matrix(const FiniteField& field);

bool matrix_is_invertible(const Matrix& m, int p);

}  // namespace orbital
