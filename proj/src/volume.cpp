#include "linfsym/volume.hpp"

#include <stdexcept>

namespace linfsym {

VolumeSpace::VolumeSpace(int dim) : m_(dim), mu_(dim, dim) {
  if (dim < 3 || dim > kMaxVars) throw std::invalid_argument("volume spaces need 3 <= m <= " + std::to_string(kMaxVars));
  mu_.add_term(Blade::top(dim), Polynomial(dim, Rational(1)));
}

MultiVectorField exact_divfree_vf(const VolumeSpace& v, const DifferentialForm& alpha) {
  if (alpha.degree() != v.dim() - 2 && !alpha.is_zero())
    throw std::invalid_argument("potential must be an (m-2)-form");
  if (alpha.nvars() != v.dim()) throw std::invalid_argument("dimension mismatch");
  return solve_interior(v.mu(), -ext_deriv(alpha));
}

DifferentialForm rogers_l(const VolumeSpace& v, std::span<const DifferentialForm> alphas) {
  const int k = static_cast<int>(alphas.size());
  if (k < 2 || k > v.dim()) throw std::invalid_argument("rogers_l arity must lie in 2..m");
  DifferentialForm acc = v.mu();
  for (const auto& alpha : alphas) acc = contract_vector(exact_divfree_vf(v, alpha), acc);
  // -(-1)^{k(k+1)/2}
  const bool negative = ((k * (k + 1) / 2) & 1) == 0;
  return negative ? -acc : acc;
}

BracketFamily volume_family(const VolumeSpace& v) {
  auto unary = [](const DifferentialForm& a) { return ext_deriv(a); };
  auto higher = [v](std::span<const DifferentialForm> forms) { return rogers_l(v, forms); };
  return BracketFamily("volume", v.dim(), v.dim() - 2, 1, -(v.dim() - 2), v.dim(), true, unary, higher);
}

}  // namespace linfsym
