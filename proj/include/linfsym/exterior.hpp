#pragma once

#include <span>
#include <vector>

#include "linfsym/forms.hpp"

namespace linfsym {

/// a ^ b.  Throws std::invalid_argument on a dimension mismatch.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// de Rham differential.
DifferentialForm ext_deriv(const DifferentialForm& a);

/// d of a function, as a 1-form.
DifferentialForm ext_deriv(const Polynomial& f);

/// Interior product with a vector field (graded derivation of degree -1).
DifferentialForm contract_vector(const MultiVectorField& x, const DifferentialForm& a);

/// Interior product with a bivector.  On decomposables
/// iota_{X^Y} = iota_Y iota_X, i.e. iota_{X^Y} alpha = alpha(X, Y).
DifferentialForm contract_bivector(const MultiVectorField& pi, const DifferentialForm& a);

/// Interior product with a k-vector; iota_{X1^...^Xk} = iota_Xk ... iota_X1.
DifferentialForm contract(const MultiVectorField& x, const DifferentialForm& a);

/// The vector field sum_i components[i] d/dv_{i+1}.
MultiVectorField vector_field(std::span<const Polynomial> components);

/// Finds the vector field X with iota_X eta = theta, where eta has constant
/// coefficients.  Throws std::domain_error if no (unique) solution exists.
MultiVectorField solve_interior(const DifferentialForm& eta, const DifferentialForm& theta);

/// df_1 ^ ... ^ df_k, the constant 1 for an empty list.
DifferentialForm wedge_differentials(std::span<const Polynomial> functions, int nvars);

}  // namespace linfsym
