#include "linfsym/poisson.hpp"

#include <stdexcept>

#include "linfsym/parse.hpp"

namespace linfsym {

PoissonSpace::PoissonSpace(std::string name, MultiVectorField pi) : name_(std::move(name)), pi_(std::move(pi)) {
  if (!pi_.is_zero() && pi_.degree() != 2) throw std::invalid_argument("Poisson structure must be a bivector");
}

PoissonSpace PoissonSpace::standard_symplectic(int half_dim) {
  SymplecticSpace s(half_dim);
  return PoissonSpace("symplectic:" + std::to_string(half_dim), s.pi());
}

PoissonSpace PoissonSpace::sl2star() {
  constexpr int m = 3;
  auto coord = [](int i) { return Polynomial::variable(m, i); };
  MultiVectorField pi(m, 2);
  pi.add_term(Blade::single(1).with(2), coord(0));   // x d_y^d_z
  pi.add_term(Blade::single(0).with(2), -coord(1));  // y d_z^d_x
  pi.add_term(Blade::single(0).with(1), -coord(2));  // -z d_x^d_y
  return PoissonSpace("sl2star", pi);
}

PoissonSpace PoissonSpace::zero(int dim) { return PoissonSpace("zero:" + std::to_string(dim), MultiVectorField(dim, 2)); }

PoissonSpace PoissonSpace::from_entries(int dim, const std::vector<BivectorEntry>& entries) {
  MultiVectorField pi(dim, 2);
  for (const auto& e : entries) {
    if (e.i < 1 || e.j > dim || e.i >= e.j) throw std::invalid_argument("bivector entries need 1 <= i < j <= m");
    pi.add_term(Blade::single(e.i - 1).with(e.j - 1), parse_polynomial(e.coefficient, dim));
  }
  return PoissonSpace("custom", pi);
}

PoissonSpace PoissonSpace::preset(const std::string& name) {
  if (name == "sl2star") return sl2star();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string kind = name.substr(0, colon);
    int value = 0;
    try {
      value = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad preset parameter in '" + name + "'");
    }
    if (kind == "zero") return zero(value);
    if (kind == "symplectic") return standard_symplectic(value);
  }
  throw std::invalid_argument("unknown Poisson preset '" + name + "'");
}

Polynomial poisson_bracket_pi(const PoissonSpace& p, const Polynomial& f, const Polynomial& g) {
  return contract_bivector(p.pi(), wedge(ext_deriv(f), ext_deriv(g))).as_scalar();
}

DifferentialForm koszul_delta_pi(const PoissonSpace& p, const DifferentialForm& a) { return koszul_delta(p.pi(), a); }

Polynomial jacobi_residual(const PoissonSpace& p, const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  auto br = [&p](const Polynomial& a, const Polynomial& b) { return poisson_bracket_pi(p, a, b); };
  return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g));
}

bool satisfies_jacobi_on_coordinates(const PoissonSpace& p) {
  const int m = p.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (!jacobi_residual(p, Polynomial::variable(m, i), Polynomial::variable(m, j), Polynomial::variable(m, k))
                 .is_zero())
          return false;
  return true;
}

DifferentialForm obstruction(const PoissonSpace& p, const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  auto term = [&p](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    Polynomial bc = poisson_bracket_pi(p, b, c);
    return a * ext_deriv(bc) - bc * ext_deriv(a);
  };
  return term(f, g, h) + term(g, h, f) + term(h, f, g);
}

DifferentialForm obstruction_identity_residual(const PoissonSpace& p, const Polynomial& f, const Polynomial& g,
                                               const Polynomial& h) {
  const int m = p.dim();
  auto wedge_term = [](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return a * wedge(ext_deriv(b), ext_deriv(c));
  };
  DifferentialForm cyclic_2form(m, 2);
  cyclic_2form += wedge_term(f, g, h);
  cyclic_2form += wedge_term(g, h, f);
  cyclic_2form += wedge_term(h, f, g);
  Polynomial cyclic_fn = f * poisson_bracket_pi(p, g, h) + g * poisson_bracket_pi(p, h, f) + h * poisson_bracket_pi(p, f, g);
  DifferentialForm lhs = koszul_delta_pi(p, cyclic_2form) * Rational(2) - ext_deriv(cyclic_fn);
  return lhs + obstruction(p, f, g, h) * Rational(3);
}

DifferentialForm omega1_bracket(const PoissonSpace& p, const DifferentialForm& alpha, const DifferentialForm& beta) {
  const Polynomial f = koszul_delta_pi(p, alpha).as_scalar();
  const Polynomial g = koszul_delta_pi(p, beta).as_scalar();
  return (f * ext_deriv(g) - g * ext_deriv(f)) * Rational(1, 2);
}

DifferentialForm jacobiator_residual(const PoissonSpace& p, const DifferentialForm& alpha,
                                     const DifferentialForm& beta, const DifferentialForm& gamma) {
  auto br = [&p](const DifferentialForm& a, const DifferentialForm& b) { return omega1_bracket(p, a, b); };
  DifferentialForm jacobiator = br(alpha, br(beta, gamma)) + br(beta, br(gamma, alpha)) + br(gamma, br(alpha, beta));
  const Polynomial f = koszul_delta_pi(p, alpha).as_scalar();
  const Polynomial g = koszul_delta_pi(p, beta).as_scalar();
  const Polynomial h = koszul_delta_pi(p, gamma).as_scalar();
  return jacobiator - obstruction(p, f, g, h) * Rational(1, 2);
}

DifferentialForm symplectic_obstruction_witness(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g,
                                                const Polynomial& h) {
  auto wedge_term = [](const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return a * wedge(ext_deriv(b), ext_deriv(c));
  };
  DifferentialForm cyclic_2form(s.dim(), 2);
  cyclic_2form += wedge_term(f, g, h);
  cyclic_2form += wedge_term(g, h, f);
  cyclic_2form += wedge_term(h, f, g);
  Polynomial cyclic_fn =
      f * poisson_bracket(s, g, h) + g * poisson_bracket(s, h, f) + h * poisson_bracket(s, f, g);
  return cyclic_2form * Rational(2, 3) + (cyclic_fn * s.omega()) * Rational(1, 3);
}

DifferentialForm symplectic_witness_residual(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g,
                                             const Polynomial& h) {
  const PoissonSpace p = PoissonSpace::standard_symplectic(s.n());
  return obstruction(p, f, g, h) + koszul_delta(s, symplectic_obstruction_witness(s, f, g, h));
}

}  // namespace linfsym
