#include "linfsym/linfty.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace linfsym {

// ---------------------------------------------------------------------------
// Coefficients

Rational coeff_a_extended(int k, int j) {
  if (k < 2 || j < 0 || j > k - 1) throw std::domain_error("a_k^j needs k >= 2 and 0 <= j <= k-1");
  return factorial(static_cast<unsigned>(k - j - 1)) /
         (factorial(static_cast<unsigned>(k - 1)) * factorial(static_cast<unsigned>(j)));
}

Rational coeff_a(int k, int j) {
  if (k < 2 || j < 0 || 2 * j > k - 1) throw std::domain_error("a_k^j needs k >= 2, j >= 0, 2j <= k-1");
  return coeff_a_extended(k, j);
}

Rational CoefficientTable::operator()(int k, int j) const {
  auto it = overrides_.find({k, j});
  return it != overrides_.end() ? it->second : coeff_a_extended(k, j);
}

CoefficientTable CoefficientTable::with(int k, int j, Rational value) const {
  CoefficientTable out = *this;
  out.overrides_[{k, j}] = std::move(value);
  return out;
}

RecursionReport verify_coefficient_recursions(int k_max) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  RecursionReport report;
  auto check = [&report](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  };
  const auto a = coeff_a_extended;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 0; 2 * j <= k - 1; ++j) {
      const std::string at = " at k=" + std::to_string(k) + ", j=" + std::to_string(j);
      check((k + 1) * a(k, j) == k * a(k + 1, j) + k * (j + 1) * (j + 1) * a(k + 1, j + 1),
            "(k+1)a_k^j = k a_{k+1}^j + k(j+1)^2 a_{k+1}^{j+1}" + at);
      check(a(k, j) == k * (j + 1) * a(k + 1, j + 1), "a_k^j = k(j+1) a_{k+1}^{j+1}" + at);
      check(a(k + 1, j) == Rational(k - j) / k * a(k, j), "a_{k+1}^j = (k-j)/k a_k^j" + at);
      if (j >= 1) check(a(k, j) == a(k, j - 1) / (j * (k - j)), "a_k^j = a_k^{j-1} / (j(k-j))" + at);
    }
  }
  // Rebuild the table from a_2^0 = 1 using only the inductive formulas.
  std::map<std::pair<int, int>, Rational> built{{{2, 0}, Rational(1)}};
  for (int k = 2; k < k_max; ++k) {
    for (int j = 0; 2 * j <= k - 1; ++j) built[{k + 1, j}] = Rational(k - j) / k * built.at({k, j});
    for (int j = 1; 2 * j <= k; ++j)
      if (!built.contains({k + 1, j})) built[{k + 1, j}] = built.at({k + 1, j - 1}) / (j * (k + 1 - j));
  }
  for (const auto& [kj, value] : built) {
    check(value == coeff_a(kj.first, kj.second),
          "inductive value differs from closed formula at k=" + std::to_string(kj.first) +
              ", j=" + std::to_string(kj.second));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Brackets

DifferentialForm alt_m(int nvars, std::span<const Polynomial> functions) {
  const int k = static_cast<int>(functions.size());
  if (k < 1) throw std::invalid_argument("alt_m needs at least one function");
  for (const auto& f : functions)
    if (f.nvars() != nvars) throw std::invalid_argument("dimension mismatch");
  if (k == 1) return DifferentialForm::scalar(functions[0]);

  std::vector<DifferentialForm> dfs;
  dfs.reserve(functions.size());
  for (const auto& f : functions) dfs.push_back(ext_deriv(f));
  // prefix[i] = df_0^..^df_{i-1}, suffix[i] = df_i^..^df_{k-1}
  const DifferentialForm one = DifferentialForm::scalar(Polynomial(nvars, Rational(1)));
  std::vector<DifferentialForm> prefix(static_cast<std::size_t>(k + 1), one);
  std::vector<DifferentialForm> suffix(static_cast<std::size_t>(k + 1), one);
  for (int i = 0; i < k; ++i)
    prefix[static_cast<std::size_t>(i + 1)] = wedge(prefix[static_cast<std::size_t>(i)], dfs[static_cast<std::size_t>(i)]);
  for (int i = k - 1; i >= 0; --i)
    suffix[static_cast<std::size_t>(i)] = wedge(dfs[static_cast<std::size_t>(i)], suffix[static_cast<std::size_t>(i + 1)]);

  DifferentialForm out(nvars, k - 1);
  for (int i = 0; i < k; ++i) {
    DifferentialForm term = functions[static_cast<std::size_t>(i)] *
                            wedge(prefix[static_cast<std::size_t>(i)], suffix[static_cast<std::size_t>(i + 1)]);
    if (i & 1) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out * Rational(1, k);
}

DifferentialForm alt_m(const SymplecticSpace& s, std::span<const Polynomial> functions) {
  return alt_m(s.dim(), functions);
}

DifferentialForm tilde_l(const SymplecticSpace& s, std::span<const Polynomial> functions,
                         const CoefficientTable& table) {
  const int k = static_cast<int>(functions.size());
  if (k < 2) throw std::invalid_argument("tilde_l needs at least two functions");
  const DifferentialForm alt = alt_m(s, functions);
  DifferentialForm out(s.dim(), k - 1);
  if (alt.is_zero()) return out;
  DifferentialForm lowered = alt;  // Lambda^j alt
  for (int j = 0; 2 * j <= k - 1; ++j) {
    if (j > 0) lowered = lefschetz_Lambda(s, lowered);
    if (lowered.is_zero()) break;
    DifferentialForm raised = lowered;
    for (int r = 0; r < j; ++r) raised = lefschetz_L(s, raised);
    out += raised * table(k, j);
  }
  return (k & 1) ? -out : out;
}

GradedElement symplectic_element(const DifferentialForm& form) { return {form, 1 - form.degree()}; }

BracketFamily symplectic_family(const SymplecticSpace& s, const CoefficientTable& table) {
  auto unary = [s](const DifferentialForm& a) { return koszul_delta(s, a); };
  auto higher = [s, table](std::span<const DifferentialForm> forms) {
    std::vector<Polynomial> values;
    values.reserve(forms.size());
    for (const auto& a : forms) values.push_back(koszul_delta(s, a).as_scalar());
    return tilde_l(s, values, table);
  };
  return BracketFamily("symplectic", s.dim(), 1, -1, -(s.dim() - 1), s.dim() + 1, true, unary, higher);
}

GradedElement l_bracket(const SymplecticSpace& s, std::span<const GradedElement> args,
                        const CoefficientTable& table) {
  return symplectic_family(s, table).apply(args);
}

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg operator and residuals

DifferentialForm ce_partial(const FunctionBracket& bracket, const FormValuedMap& phi,
                            std::span<const Polynomial> args) {
  const std::size_t count = args.size();
  if (count < 2) throw std::invalid_argument("ce_partial needs at least two arguments");
  std::optional<DifferentialForm> sum;
  std::vector<Polynomial> inputs;
  inputs.reserve(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      inputs.clear();
      inputs.push_back(bracket(args[i], args[j]));
      for (std::size_t r = 0; r < count; ++r)
        if (r != i && r != j) inputs.push_back(args[r]);
      DifferentialForm term = phi(inputs);
      // 1-based exponent i+j has the same parity as the 0-based one.
      if ((i + j) & 1) term = -term;
      if (!sum) {
        sum = std::move(term);
      } else {
        *sum += term;
      }
    }
  }
  return *sum;
}

namespace {

FunctionBracket poisson_of(const SymplecticSpace& s) {
  return [s](const Polynomial& f, const Polynomial& g) { return poisson_bracket(s, f, g); };
}

void require_arity(std::span<const Polynomial> functions, int expected) {
  if (static_cast<int>(functions.size()) != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " functions");
}

}  // namespace

DifferentialForm verify_chain_identity(const SymplecticSpace& s, int k, std::span<const Polynomial> functions,
                                       const CoefficientTable& table) {
  if (k < 2) throw std::invalid_argument("chain identity needs k >= 2");
  require_arity(functions, k + 1);
  FormValuedMap lk = [&](std::span<const Polynomial> fs) { return tilde_l(s, fs, table); };
  DifferentialForm lhs = ce_partial(poisson_of(s), lk, functions);
  DifferentialForm rhs = koszul_delta(s, tilde_l(s, functions, table));
  return lhs - rhs;
}

DifferentialForm verify_alt_defect(const SymplecticSpace& s, int k, std::span<const Polynomial> functions) {
  if (k < 1) throw std::invalid_argument("alt defect needs k >= 1");
  require_arity(functions, k + 1);
  FormValuedMap alt = [&](std::span<const Polynomial> fs) { return alt_m(s, fs); };
  DifferentialForm lhs = ce_partial(poisson_of(s), alt, functions);
  DifferentialForm next = alt_m(s, functions);
  DifferentialForm rhs = -koszul_delta(s, next) + ext_deriv(lefschetz_Lambda(s, next)) * Rational(1, k);
  return lhs - rhs;
}

Polynomial verify_strict_morphism(const SymplecticSpace& s, const DifferentialForm& alpha,
                                  const DifferentialForm& beta) {
  const GradedElement args[] = {symplectic_element(alpha), symplectic_element(beta)};
  GradedElement bracket = l_bracket(s, args);
  Polynomial lhs = koszul_delta(s, bracket.form).as_scalar();
  Polynomial rhs = poisson_bracket(s, koszul_delta(s, alpha).as_scalar(), koszul_delta(s, beta).as_scalar());
  return lhs - rhs;
}

DifferentialForm verify_quotient_bracket_congruence(const SymplecticSpace& s, const DifferentialForm& alpha,
                                                    const DifferentialForm& beta) {
  const Polynomial f = koszul_delta(s, alpha).as_scalar();
  const Polynomial g = koszul_delta(s, beta).as_scalar();
  const GradedElement args[] = {symplectic_element(alpha), symplectic_element(beta)};
  DifferentialForm representative = f * ext_deriv(g);
  DifferentialForm witness = (f * g * Rational(1, 2)) * s.omega();
  return representative - l_bracket(s, args).form + koszul_delta(s, witness);
}

// ---------------------------------------------------------------------------
// Generic identity evaluation

std::vector<std::vector<int>> unshuffles(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("unshuffle block sizes must be non-negative");
  const int n = i + j;
  std::vector<std::vector<int>> out;
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  std::fill(chosen.begin(), chosen.begin() + i, true);
  // Enumerate i-subsets in lexicographic order of their sorted elements.
  do {
    std::vector<int> sigma;
    sigma.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
      if (chosen[static_cast<std::size_t>(p)]) sigma.push_back(p);
    for (int p = 0; p < n; ++p)
      if (!chosen[static_cast<std::size_t>(p)]) sigma.push_back(p);
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

int permutation_sign(std::span<const int> sigma) {
  int inversions = 0;
  for (std::size_t p = 0; p < sigma.size(); ++p)
    for (std::size_t q = p + 1; q < sigma.size(); ++q)
      if (sigma[p] > sigma[q]) ++inversions;
  return (inversions & 1) ? -1 : 1;
}

int koszul_sign(std::span<const int> sigma, std::span<const int> degrees) {
  if (sigma.size() != degrees.size()) throw std::invalid_argument("permutation and degree lists differ in length");
  int sign = 1;
  for (std::size_t p = 0; p < sigma.size(); ++p)
    for (std::size_t q = p + 1; q < sigma.size(); ++q)
      if (sigma[p] > sigma[q] && (degrees[static_cast<std::size_t>(sigma[p])] & 1) &&
          (degrees[static_cast<std::size_t>(sigma[q])] & 1))
        sign = -sign;
  return sign;
}

BracketFamily::BracketFamily(std::string name, int nvars, int base_form_degree, int orientation, int min_ldegree,
                             int max_arity, bool grounded, Unary unary, Higher higher)
    : name_(std::move(name)),
      nvars_(nvars),
      base_form_degree_(base_form_degree),
      orientation_(orientation),
      min_ldegree_(min_ldegree),
      max_arity_(max_arity),
      grounded_(grounded),
      unary_(std::move(unary)),
      higher_(std::move(higher)) {
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
}

GradedElement BracketFamily::element(const DifferentialForm& form) const {
  if (form.nvars() != nvars_) throw std::invalid_argument("element lives on a different space");
  return {form, ldegree_of_form(form.degree())};
}

GradedElement BracketFamily::zero(int ldegree) const {
  return {DifferentialForm(nvars_, std::max(0, form_degree_of(ldegree))), ldegree};
}

GradedElement BracketFamily::apply(std::span<const GradedElement> args) const {
  const int k = static_cast<int>(args.size());
  if (k < 1) throw std::invalid_argument("bracket needs at least one argument");
  int total = 0;
  for (const auto& x : args) total += x.ldegree;
  const int out_degree = total + 2 - k;
  if (!in_range(out_degree)) return zero(out_degree);
  for (const auto& x : args)
    if (!in_range(x.ldegree)) return zero(out_degree);

  DifferentialForm result(nvars_, 0);
  if (k == 1) {
    result = unary_(args[0].form);
  } else {
    if (k > max_arity_) return zero(out_degree);
    if (grounded_ && std::any_of(args.begin(), args.end(), [](const GradedElement& x) { return x.ldegree != 0; }))
      return zero(out_degree);
    std::vector<DifferentialForm> forms;
    forms.reserve(args.size());
    for (const auto& x : args) forms.push_back(x.form);
    result = higher_(forms);
  }
  if (!result.is_zero() && result.degree() != form_degree_of(out_degree))
    throw std::logic_error(name_ + " bracket l_" + std::to_string(k) + " returned a form of degree " +
                           std::to_string(result.degree()) + ", expected " +
                           std::to_string(form_degree_of(out_degree)));
  if (result.is_zero()) return zero(out_degree);
  return {std::move(result), out_degree};
}

GradedElement verify_linfty_identity(const BracketFamily& family, std::span<const GradedElement> args) {
  const int n = static_cast<int>(args.size());
  if (n < 1) throw std::invalid_argument("identity needs at least one argument");
  std::vector<int> degrees;
  degrees.reserve(args.size());
  int total = 0;
  for (const auto& x : args) {
    degrees.push_back(x.ldegree);
    total += x.ldegree;
  }
  GradedElement residual = family.zero(total + 3 - n);

  std::vector<GradedElement> inner_args;
  std::vector<GradedElement> outer_args;
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    const int prefactor = ((i * (j + 1)) & 1) ? -1 : 1;
    for (const auto& sigma : unshuffles(i, n - i)) {
      if (family.grounded()) {
        auto degree_at = [&](int p) { return degrees[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])]; };
        int inner_total = 0;
        bool inner_ground = true;
        for (int p = 0; p < i; ++p) {
          inner_total += degree_at(p);
          inner_ground = inner_ground && degree_at(p) == 0;
        }
        if (i >= 2 && !inner_ground) continue;
        if (j >= 2) {
          if (inner_total + 2 - i != 0) continue;
          bool outer_ground = true;
          for (int p = i; p < n; ++p) outer_ground = outer_ground && degree_at(p) == 0;
          if (!outer_ground) continue;
        }
      }
      inner_args.clear();
      for (int p = 0; p < i; ++p) inner_args.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])]);
      GradedElement inner = family.apply(inner_args);
      if (inner.form.is_zero()) continue;
      outer_args.clear();
      outer_args.push_back(std::move(inner));
      for (int p = i; p < n; ++p) outer_args.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(p)])]);
      GradedElement outer = family.apply(outer_args);
      if (outer.form.is_zero()) continue;
      if (outer.ldegree != residual.ldegree)
        throw std::logic_error("degree bookkeeping violation in family " + family.name());
      const int sign = prefactor * permutation_sign(sigma) * koszul_sign(sigma, degrees);
      if (sign > 0) {
        residual.form += outer.form;
      } else {
        residual.form -= outer.form;
      }
    }
  }
  return residual;
}

}  // namespace linfsym
