#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linfsym/rational.hpp"

namespace linfsym {

/// Largest number of coordinates supported by the packed monomial encoding.
inline constexpr int kMaxVars = 8;

/// Exponent vector packed one byte per coordinate, v1 in the most
/// significant byte, so integer order on the packed key is lex order on
/// exponent vectors.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int index, int power = 1);  // index is 0-based

  int exponent(int index) const { return static_cast<int>((key_ >> shift(index)) & 0xffu); }
  int total_degree() const;
  std::uint64_t key() const { return key_; }

  /// Product; throws std::overflow_error when an exponent exceeds 255.
  Monomial operator*(Monomial other) const;
  /// Divides by the coordinate; requires exponent(index) > 0.
  Monomial lowered(int index) const { return Monomial(key_ - (std::uint64_t{1} << shift(index))); }

  friend bool operator==(Monomial, Monomial) = default;
  friend auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

 private:
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  static constexpr int shift(int index) { return 8 * (kMaxVars - 1 - index); }
  std::uint64_t key_ = 0;
};

/// Graded-lex comparison: higher total degree first, then lex.
bool grlex_greater(Monomial a, Monomial b);

/// Exact multivariate polynomial over the rationals in coordinates
/// v1..vm.  Terms are kept sorted by monomial with no zero coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(int nvars = 0);
  Polynomial(int nvars, const Rational& constant);
  static Polynomial variable(int nvars, int index);  // index is 0-based
  static Polynomial monomial(int nvars, Monomial m, const Rational& c);
  /// Builds from unsorted, possibly repeated terms.
  static Polynomial from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;

  Polynomial derivative(int index) const;  // index is 0-based

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;
  Polynomial& add_scaled(const Polynomial& other, int sign);

  int nvars_;
  std::vector<Term> terms_;
};

/// Canonical text of a monomial, e.g. "v1^2 v3"; empty for the unit.
std::string render_monomial(Monomial m, int nvars);

}  // namespace linfsym
