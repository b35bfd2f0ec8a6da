#include "linfsym/symplectic.hpp"

#include <functional>
#include <stdexcept>

#include "linfsym/random.hpp"

namespace linfsym {

SymplecticSpace::SymplecticSpace(int half_dim)
    : n_(half_dim), omega_(2 * half_dim, 2), pi_(2 * half_dim, 2) {
  if (half_dim < 1 || 2 * half_dim > kMaxVars) throw std::invalid_argument("unsupported half-dimension");
  const Polynomial one(dim(), Rational(1));
  for (int i = 0; i < n_; ++i) {
    Blade pair = Blade::single(2 * i).with(2 * i + 1);
    omega_.add_term(pair, one);
    pi_.add_term(pair, one);
  }
}

DifferentialForm lefschetz_L(const SymplecticSpace& s, const DifferentialForm& a) { return wedge(s.omega(), a); }

DifferentialForm lefschetz_Lambda(const SymplecticSpace& s, const DifferentialForm& a) {
  return contract_bivector(s.pi(), a);
}

DifferentialForm degree_H(const SymplecticSpace& s, const DifferentialForm& a) {
  return a * Rational(s.n() - a.degree());
}

DifferentialForm koszul_delta(const MultiVectorField& pi, const DifferentialForm& a) {
  DifferentialForm out = contract_bivector(pi, ext_deriv(a));
  if (a.degree() >= 2) out -= ext_deriv(contract_bivector(pi, a));
  return out;
}

DifferentialForm koszul_delta(const SymplecticSpace& s, const DifferentialForm& a) { return koszul_delta(s.pi(), a); }

MultiVectorField hamiltonian_vf(const SymplecticSpace& s, const Polynomial& f) {
  return solve_interior(s.omega(), -ext_deriv(f));
}

Polynomial poisson_bracket(const SymplecticSpace& s, const Polynomial& f, const Polynomial& g) {
  DifferentialForm dfdg = wedge(ext_deriv(f), ext_deriv(g));
  return lefschetz_Lambda(s, dfdg).as_scalar();
}

Polynomial evaluate_omega(const SymplecticSpace& s, const MultiVectorField& x, const MultiVectorField& y) {
  return contract_vector(y, contract_vector(x, s.omega())).as_scalar();
}

namespace {

using Op = std::function<DifferentialForm(const DifferentialForm&)>;

struct Relation {
  std::string name;
  // Residual of the relation applied to a form; zero iff it holds there.
  std::function<DifferentialForm(const DifferentialForm&)> residual;
};

Op commutator(Op a, Op b) {
  return [a, b](const DifferentialForm& x) { return a(b(x)) - b(a(x)); };
}

}  // namespace

std::vector<OperatorReport> verify_operator_relations(const SymplecticSpace& s, int trials, int max_degree,
                                                      std::uint64_t seed, double density) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  Op L = [&s](const DifferentialForm& a) { return lefschetz_L(s, a); };
  Op Lambda = [&s](const DifferentialForm& a) { return lefschetz_Lambda(s, a); };
  Op H = [&s](const DifferentialForm& a) { return degree_H(s, a); };
  Op d = [](const DifferentialForm& a) { return ext_deriv(a); };
  Op delta = [&s](const DifferentialForm& a) { return koszul_delta(s, a); };
  Op delta_d = [=](const DifferentialForm& a) { return delta(d(a)); };
  auto is = [](Op lhs, Op rhs) {
    return [lhs, rhs](const DifferentialForm& a) { return lhs(a) - rhs(a); };
  };
  auto vanishes = [](Op lhs) { return lhs; };
  auto scaled = [](Op op, int c) { return [op, c](const DifferentialForm& a) { return op(a) * Rational(c); }; };

  const std::vector<Relation> relations = {
      {"[Lambda,L]=H", is(commutator(Lambda, L), H)},
      {"[H,Lambda]=2Lambda", is(commutator(H, Lambda), scaled(Lambda, 2))},
      {"[H,L]=-2L", is(commutator(H, L), scaled(L, -2))},
      {"[L,d]=0", vanishes(commutator(L, d))},
      {"[Lambda,d]=delta", is(commutator(Lambda, d), delta)},
      {"[H,d]=-d", is(commutator(H, d), scaled(d, -1))},
      {"[Lambda,delta]=0", vanishes(commutator(Lambda, delta))},
      {"[L,delta]=d", is(commutator(L, delta), d)},
      {"[H,delta]=delta", is(commutator(H, delta), delta)},
      {"delta^2=0", vanishes([=](const DifferentialForm& a) { return delta(delta(a)); })},
      {"delta d+d delta=0",
       vanishes([=](const DifferentialForm& a) { return delta(d(a)) + d(delta(a)); })},
      {"[delta d,H]=0", vanishes(commutator(delta_d, H))},
      {"[delta d,L]=0", vanishes(commutator(delta_d, L))},
      {"[delta d,Lambda]=0", vanishes(commutator(delta_d, Lambda))},
  };

  std::vector<OperatorReport> reports;
  for (const auto& rel : relations) {
    OperatorReport report{rel.name, 0, {}};
    for (int degree = 0; degree <= s.dim(); ++degree) {
      const std::string label = rel.name + "/deg" + std::to_string(degree);
      for (int t = 0; t < trials; ++t) {
        FormSampler sampler(derive_seed(seed, label, static_cast<std::uint64_t>(t)), max_degree, density);
        DifferentialForm a = sampler.form(s.dim(), degree);
        DifferentialForm r = rel.residual(a);
        ++report.trials;
        if (!r.is_zero()) report.failures.push_back({a, r});
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace linfsym
