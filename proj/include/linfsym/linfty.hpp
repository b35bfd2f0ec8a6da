#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linfsym/symplectic.hpp"

namespace linfsym {

/// An element of a graded L-infinity space: a differential form together
/// with its degree in the L-grading (which depends on the family).
struct GradedElement {
  DifferentialForm form;
  int ldegree = 0;
};

// ---------------------------------------------------------------------------
// Coefficients of the symplectic ansatz
// ---------------------------------------------------------------------------

/// a_k^j = (k-j-1)! / ((k-1)! j!), for k >= 2, j >= 0, 2j <= k-1.  Throws
/// std::domain_error outside that range.
Rational coeff_a(int k, int j);

/// The same closed formula on the wider range 0 <= j <= k-1 that the
/// recursions refer to.
Rational coeff_a_extended(int k, int j);

/// The coefficient table used by tilde_l.  Defaults to the closed formula;
/// single entries can be overridden to build mutants.
class CoefficientTable {
 public:
  CoefficientTable() = default;

  Rational operator()(int k, int j) const;
  CoefficientTable with(int k, int j, Rational value) const;

 private:
  std::map<std::pair<int, int>, Rational> overrides_;
};

struct RecursionReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool verified() const { return failures.empty(); }
};

/// Both coefficient recursions and both inductive formulas, for every
/// 2 <= k <= k_max and 2j <= k-1.
RecursionReport verify_coefficient_recursions(int k_max);

// ---------------------------------------------------------------------------
// The brackets
// ---------------------------------------------------------------------------

/// Alt(m_k)(f_1..f_k) = (1/k) sum_i (-1)^{i+1} f_i df_1^..^(df_i omitted)^..^df_k.
DifferentialForm alt_m(int nvars, std::span<const Polynomial> functions);
DifferentialForm alt_m(const SymplecticSpace& s, std::span<const Polynomial> functions);

/// (-1)^k (sum_j a_k^j L^j Lambda^j) Alt(m_k), as operator composition.
DifferentialForm tilde_l(const SymplecticSpace& s, std::span<const Polynomial> functions,
                         const CoefficientTable& table = {});

/// l_1 = delta and l_k(x_1..x_k) = tilde_l_k(delta x_1, .., delta x_k) on the
/// truncated complex L_{-i} = Omega^{i+1}, i = 0..2n-1.  l_1 of a 1-form
/// leaves the complex and is zero; higher brackets vanish unless every
/// argument is a 1-form.
GradedElement l_bracket(const SymplecticSpace& s, std::span<const GradedElement> args,
                        const CoefficientTable& table = {});

/// Wraps a symplectic 1-form (or k-form) as an element of its L-degree.
GradedElement symplectic_element(const DifferentialForm& form);

// ---------------------------------------------------------------------------
// Chevalley-Eilenberg operator and identity residuals
// ---------------------------------------------------------------------------

using FunctionBracket = std::function<Polynomial(const Polynomial&, const Polynomial&)>;
using FormValuedMap = std::function<DifferentialForm(std::span<const Polynomial>)>;

/// (d_B phi)(x_1..x_{p+1}) = sum_{i<j} (-1)^{i+j} phi(B(x_i, x_j), x_1..^i..^j..x_{p+1}).
DifferentialForm ce_partial(const FunctionBracket& bracket, const FormValuedMap& phi,
                            std::span<const Polynomial> args);

/// d_{Poisson} tilde_l_k - delta tilde_l_{k+1} on k+1 functions.
DifferentialForm verify_chain_identity(const SymplecticSpace& s, int k, std::span<const Polynomial> functions,
                                       const CoefficientTable& table = {});

/// d_{Poisson} Alt(m_k) - (-delta + (1/k) d Lambda) Alt(m_{k+1}) on k+1 functions.
DifferentialForm verify_alt_defect(const SymplecticSpace& s, int k, std::span<const Polynomial> functions);

/// delta(l_2(alpha, beta)) - {delta alpha, delta beta}.
Polynomial verify_strict_morphism(const SymplecticSpace& s, const DifferentialForm& alpha,
                                  const DifferentialForm& beta);

/// (delta alpha . d delta beta - l_2(alpha, beta)) + delta(1/2 delta alpha delta beta omega).
/// Zero certifies that l_2 represents the quotient bracket modulo delta Omega^2.
DifferentialForm verify_quotient_bracket_congruence(const SymplecticSpace& s, const DifferentialForm& alpha,
                                                    const DifferentialForm& beta);

// ---------------------------------------------------------------------------
// Generic L-infinity identity evaluation
// ---------------------------------------------------------------------------

/// Permutations of {0..i+j-1} increasing on the first i and on the last j
/// positions; entry p is the original index placed at position p.
std::vector<std::vector<int>> unshuffles(int i, int j);

/// Sign of the permutation itself.
int permutation_sign(std::span<const int> sigma);

/// Koszul sign of `sigma` acting on elements of the given degrees: -1 for
/// every inverted pair of two odd elements.
int koszul_sign(std::span<const int> sigma, std::span<const int> degrees);

/// An arity-indexed family of graded multilinear brackets on forms.
///
/// The L-grading is an affine map of the form degree,
///   ldegree = orientation * (form degree - base_form_degree),
/// with the space spanning ldegrees min_ldegree..0.
class BracketFamily {
 public:
  using Unary = std::function<DifferentialForm(const DifferentialForm&)>;
  using Higher = std::function<DifferentialForm(std::span<const DifferentialForm>)>;

  BracketFamily(std::string name, int nvars, int base_form_degree, int orientation, int min_ldegree,
                int max_arity, bool grounded, Unary unary, Higher higher);

  const std::string& name() const { return name_; }
  int nvars() const { return nvars_; }
  int max_arity() const { return max_arity_; }
  bool grounded() const { return grounded_; }
  int min_ldegree() const { return min_ldegree_; }

  int ldegree_of_form(int form_degree) const { return orientation_ * (form_degree - base_form_degree_); }
  int form_degree_of(int ldegree) const { return base_form_degree_ + orientation_ * ldegree; }
  bool in_range(int ldegree) const { return ldegree >= min_ldegree_ && ldegree <= 0; }

  GradedElement element(const DifferentialForm& form) const;
  GradedElement zero(int ldegree) const;

  /// l_k on k = args.size() arguments.  Throws std::logic_error when a
  /// bracket returns a form of the wrong degree.
  GradedElement apply(std::span<const GradedElement> args) const;

 private:
  std::string name_;
  int nvars_;
  int base_form_degree_;
  int orientation_;
  int min_ldegree_;
  int max_arity_;
  bool grounded_;
  Unary unary_;
  Higher higher_;
};

/// The family l_1 = delta, l_k = tilde_l_k . delta^{x k} on R^{2n}.
BracketFamily symplectic_family(const SymplecticSpace& s, const CoefficientTable& table = {});

/// sum_{i+j=n+1} (-1)^{i(j+1)} sum_{sigma in ush(i,n-i)} sgn(sigma) eps(sigma; x)
///   l_j(l_i(x_sigma(1..i)), x_sigma(i+1..n)),
/// which vanishes for an L-infinity algebra.  Grounded families skip terms
/// that must vanish by degree before evaluating them.
GradedElement verify_linfty_identity(const BracketFamily& family, std::span<const GradedElement> args);

}  // namespace linfsym
