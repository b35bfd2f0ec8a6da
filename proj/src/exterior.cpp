#include "linfsym/exterior.hpp"

#include <stdexcept>

namespace linfsym {

namespace {

void require_same_space(int a, int b) {
  if (a != b) throw std::invalid_argument("operands live on spaces of different dimension");
}

}  // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_space(a.nvars(), b.nvars());
  const int degree = a.degree() + b.degree();
  DifferentialForm out(a.nvars(), degree);
  if (degree > a.nvars()) return out;
  for (const auto& [ba, pa] : a.terms()) {
    for (const auto& [bb, pb] : b.terms()) {
      int sign = wedge_sign(ba, bb);
      if (sign == 0) continue;
      Polynomial c = pa * pb;
      if (sign < 0) c = -c;
      out.add_term(Blade::from_mask(ba.mask() | bb.mask()), c);
    }
  }
  return out;
}

DifferentialForm ext_deriv(const DifferentialForm& a) {
  const int m = a.nvars();
  DifferentialForm out(m, a.degree() + 1);
  if (a.degree() + 1 > m) return out;
  for (const auto& [b, p] : a.terms()) {
    for (int i = 0; i < m; ++i) {
      if (b.contains(i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      if (b.count_below(i) & 1) dp = -dp;
      out.add_term(b.with(i), dp);
    }
  }
  return out;
}

DifferentialForm ext_deriv(const Polynomial& f) { return ext_deriv(DifferentialForm::scalar(f)); }

DifferentialForm contract_vector(const MultiVectorField& x, const DifferentialForm& a) {
  if (x.degree() != 1 && !x.is_zero()) throw std::invalid_argument("contract_vector expects a vector field");
  require_same_space(x.nvars(), a.nvars());
  DifferentialForm out(a.nvars(), a.degree() == 0 ? 0 : a.degree() - 1);
  if (a.degree() == 0) return out;
  for (const auto& [bx, px] : x.terms()) {
    const int c = bx.highest();
    for (const auto& [b, p] : a.terms()) {
      if (!b.contains(c)) continue;
      Polynomial coeff = px * p;
      if (b.count_below(c) & 1) coeff = -coeff;
      out.add_term(b.without(c), coeff);
    }
  }
  return out;
}

DifferentialForm contract(const MultiVectorField& x, const DifferentialForm& a) {
  require_same_space(x.nvars(), a.nvars());
  const int k = x.degree();
  DifferentialForm out(a.nvars(), a.degree() >= k ? a.degree() - k : 0);
  if (a.degree() < k) return out;
  for (const auto& [bx, px] : x.terms()) {
    for (const auto& [b, p] : a.terms()) {
      if ((b.mask() & bx.mask()) != bx.mask()) continue;
      // Remove the indices of bx in increasing order, innermost first.
      Blade rest = b;
      int sign = 1;
      for (int c : bx.indices()) {
        if (rest.count_below(c) & 1) sign = -sign;
        rest = rest.without(c);
      }
      Polynomial coeff = px * p;
      if (sign < 0) coeff = -coeff;
      out.add_term(rest, coeff);
    }
  }
  return out;
}

DifferentialForm contract_bivector(const MultiVectorField& pi, const DifferentialForm& a) {
  if (pi.degree() != 2 && !pi.is_zero()) throw std::invalid_argument("contract_bivector expects a bivector");
  if (pi.is_zero()) {
    require_same_space(pi.nvars(), a.nvars());
    return DifferentialForm(a.nvars(), a.degree() >= 2 ? a.degree() - 2 : 0);
  }
  return contract(pi, a);
}

MultiVectorField vector_field(std::span<const Polynomial> components) {
  const int m = static_cast<int>(components.size());
  MultiVectorField out(m, 1);
  for (int i = 0; i < m; ++i) out.add_term(Blade::single(i), components[static_cast<std::size_t>(i)]);
  return out;
}

MultiVectorField solve_interior(const DifferentialForm& eta, const DifferentialForm& theta) {
  require_same_space(eta.nvars(), theta.nvars());
  const int m = eta.nvars();
  if (eta.degree() == 0) throw std::domain_error("cannot contract a vector field into a function");
  for (const auto& [b, p] : eta.terms())
    if (!p.is_constant()) throw std::domain_error("solve_interior needs constant coefficients");
  if (!theta.is_zero() && theta.degree() != eta.degree() - 1)
    throw std::invalid_argument("right-hand side has the wrong degree");

  // Rows: blades of degree k-1; columns: iota_{d_a} eta.
  const auto rows = blades_of_degree(m, eta.degree() - 1);
  std::vector<std::vector<Rational>> matrix(rows.size(), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int a = 0; a < m; ++a) {
    MultiVectorField unit = MultiVectorField::basis(m, Blade::single(a));
    DifferentialForm column = contract_vector(unit, eta);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial c = column.coefficient(rows[r]);
      matrix[r][static_cast<std::size_t>(a)] = c.constant_term();
    }
  }
  std::vector<Polynomial> rhs;
  rhs.reserve(rows.size());
  for (Blade b : rows) rhs.push_back(theta.coefficient(b));

  std::vector<int> pivot_row(static_cast<std::size_t>(m), -1);
  std::size_t next = 0;
  for (int col = 0; col < m; ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && matrix[piv][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) throw std::domain_error("degenerate form: interior equation not uniquely solvable");
    std::swap(matrix[piv], matrix[next]);
    std::swap(rhs[piv], rhs[next]);
    const Rational inv = 1 / matrix[next][static_cast<std::size_t>(col)];
    for (auto& v : matrix[next]) v *= inv;
    rhs[next] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      const Rational factor = matrix[r][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = 0; c < m; ++c)
        matrix[r][static_cast<std::size_t>(c)] -= factor * matrix[next][static_cast<std::size_t>(c)];
      rhs[r] -= rhs[next] * factor;
    }
    pivot_row[static_cast<std::size_t>(col)] = static_cast<int>(next);
    ++next;
  }
  for (std::size_t r = next; r < rows.size(); ++r)
    if (!rhs[r].is_zero()) throw std::domain_error("interior equation is inconsistent");

  std::vector<Polynomial> components;
  components.reserve(static_cast<std::size_t>(m));
  for (int col = 0; col < m; ++col) components.push_back(rhs[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(col)])]);
  return vector_field(components);
}

DifferentialForm wedge_differentials(std::span<const Polynomial> functions, int nvars) {
  DifferentialForm acc = DifferentialForm::scalar(Polynomial(nvars, Rational(1)));
  for (const auto& f : functions) {
    acc = wedge(acc, ext_deriv(f));
  }
  return acc;
}

}  // namespace linfsym
