#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linfsym/exterior.hpp"

namespace linfsym {

/// R^{2n} with omega = sum_i dx_{2i-1}^dx_{2i} and the inverse bivector
/// pi = sum_i d_{2i-1}^d_{2i}.  Signs are fixed so that Lambda(omega) = n,
/// {v1, v2} = 1 and delta(f dg) = {f, g}; see CONVENTIONS.md.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int half_dim);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const DifferentialForm& omega() const { return omega_; }
  const MultiVectorField& pi() const { return pi_; }

 private:
  int n_;
  DifferentialForm omega_;
  MultiVectorField pi_;
};

// The sl(2) triple and the Koszul differential.
DifferentialForm lefschetz_L(const SymplecticSpace& s, const DifferentialForm& a);
DifferentialForm lefschetz_Lambda(const SymplecticSpace& s, const DifferentialForm& a);
/// (n - deg a) a.
DifferentialForm degree_H(const SymplecticSpace& s, const DifferentialForm& a);
/// Lambda d - d Lambda.
DifferentialForm koszul_delta(const SymplecticSpace& s, const DifferentialForm& a);
/// iota_pi d - d iota_pi for an arbitrary bivector.
DifferentialForm koszul_delta(const MultiVectorField& pi, const DifferentialForm& a);

/// X_f with iota_{X_f} omega = -df.
MultiVectorField hamiltonian_vf(const SymplecticSpace& s, const Polynomial& f);
/// {f, g} = Lambda(df ^ dg).
Polynomial poisson_bracket(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g);
/// omega(X, Y) = iota_Y iota_X omega.
Polynomial evaluate_omega(const SymplecticSpace& s, const MultiVectorField& x, const MultiVectorField& y);

struct RelationFailure {
  DifferentialForm input;
  DifferentialForm residual;
};

struct OperatorReport {
  std::string relation;
  int trials = 0;
  std::vector<RelationFailure> failures;

  bool verified() const { return failures.empty(); }
};

/// Checks every commutation relation of the Lefschetz/Koszul operator
/// algebra, plus delta^2 = 0, delta d = -d delta and [delta d, H|L|Lambda] = 0,
/// on `trials` random forms of each degree 0..2n.
std::vector<OperatorReport> verify_operator_relations(const SymplecticSpace& s, int trials, int max_degree,
                                                      std::uint64_t seed, double density = 0.5);

}  // namespace linfsym
