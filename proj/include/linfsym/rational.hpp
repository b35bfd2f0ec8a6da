#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

namespace linfsym {

/// Exact rational number, always in lowest terms with a positive
/// denominator.  Values whose numerator and denominator fit in 63 bits are
/// stored inline; anything larger moves to an immutable GMP value, so
/// arithmetic never rounds and never overflows.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<std::int64_t>(value) != std::numeric_limits<std::int64_t>::min()) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
      *this = Rational(mpq_class(mpz_class(static_cast<long>(value))));
    } else {
      if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(kMax)) {
        num_ = static_cast<std::int64_t>(value);
        return;
      }
      *this = Rational(mpq_class(mpz_class(static_cast<unsigned long>(value))));
    }
  }

  /// num/den reduced; throws std::domain_error for a zero denominator.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z) : Rational(mpq_class(z)) {}

  mpq_class to_mpq() const;
  /// True when stored inline (numerator and denominator fit in 63 bits).
  bool is_small() const { return !big_; }
  int sign() const;
  bool is_integer() const;

  Rational& operator+=(const Rational& other) { return *this = *this + other; }
  Rational& operator-=(const Rational& other) { return *this = *this - other; }
  Rational& operator*=(const Rational& other) { return *this = *this * other; }
  Rational& operator/=(const Rational& other) { return *this = *this / other; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
  friend std::string to_string(const Rational& q);

 private:
  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set only when the value does not fit inline
};

/// Parses "p/q" or an integer.  Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

}  // namespace linfsym
