#pragma once

#include <string>
#include <vector>

#include "linfsym/symplectic.hpp"

namespace linfsym {

/// One entry pi^{ij} d_i ^ d_j of a bivector, 1-based with i < j, the
/// coefficient written in the form grammar.
struct BivectorEntry {
  int i = 0;
  int j = 0;
  std::string coefficient;
};

/// R^m with a polynomial Poisson bivector.  {f, g} = iota_pi(df ^ dg).
class PoissonSpace {
 public:
  PoissonSpace(std::string name, MultiVectorField pi);

  /// pi = sum_i d_{2i-1}^d_{2i} on R^{2n}.
  static PoissonSpace standard_symplectic(int half_dim);
  /// The linear structure on sl(2,R)^*:
  /// pi = v1 d2^d3 + v2 d3^d1 - v3 d1^d2.
  static PoissonSpace sl2star();
  static PoissonSpace zero(int dim);
  /// Custom bivector; throws std::invalid_argument on bad indices or
  /// coefficients that do not parse as functions.
  static PoissonSpace from_entries(int dim, const std::vector<BivectorEntry>& entries);
  /// "sl2star", "zero:<m>" or "symplectic:<n>".
  static PoissonSpace preset(const std::string& name);

  const std::string& name() const { return name_; }
  int dim() const { return pi_.nvars(); }
  const MultiVectorField& pi() const { return pi_; }

 private:
  std::string name_;
  MultiVectorField pi_;
};

Polynomial poisson_bracket_pi(const PoissonSpace& p, const Polynomial& f, const Polynomial& g);
DifferentialForm koszul_delta_pi(const PoissonSpace& p, const DifferentialForm& a);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}.
Polynomial jacobi_residual(const PoissonSpace& p, const Polynomial& f, const Polynomial& g, const Polynomial& h);
/// Jacobi on every triple of coordinate functions.
bool satisfies_jacobi_on_coordinates(const PoissonSpace& p);

/// f d{g,h} - {g,h} df + cyclic.
DifferentialForm obstruction(const PoissonSpace& p, const Polynomial& f, const Polynomial& g, const Polynomial& h);

/// 2 delta(f dg^dh + cyclic) - d(f{g,h} + cyclic) + 3 obstruction(f,g,h).
/// Every term is linear in pi, so flipping the contraction convention
/// cannot change the sign in front of the obstruction.
DifferentialForm obstruction_identity_residual(const PoissonSpace& p, const Polynomial& f, const Polynomial& g,
                                               const Polynomial& h);

/// [alpha, beta] = 1/2 (delta alpha . d delta beta - delta beta . d delta alpha).
DifferentialForm omega1_bracket(const PoissonSpace& p, const DifferentialForm& alpha, const DifferentialForm& beta);

/// ([alpha,[beta,gamma]] + cyclic) - 1/2 obstruction(delta alpha, delta beta, delta gamma).
DifferentialForm jacobiator_residual(const PoissonSpace& p, const DifferentialForm& alpha,
                                     const DifferentialForm& beta, const DifferentialForm& gamma);

/// A 2-form W with obstruction(f,g,h) = -delta W on a symplectic space:
/// W = 2/3 (f dg^dh + cyclic) + 1/3 (f{g,h} + cyclic) omega.
DifferentialForm symplectic_obstruction_witness(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g,
                                                const Polynomial& h);

/// obstruction(f,g,h) + delta(witness) on the standard symplectic space.
DifferentialForm symplectic_witness_residual(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g,
                                             const Polynomial& h);

}  // namespace linfsym
