#include "linfsym/rational.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace linfsym {

namespace {

using u128 = unsigned __int128;

u128 gcd_wide(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 magnitude(__int128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  u128 mag = magnitude(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool fits_small(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (fits_small(c.get_num()) && fits_small(c.get_den())) {
    num_ = c.get_num().get_si();
    den_ = c.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_wide(magnitude(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Rational out;
  if (magnitude(num) <= static_cast<u128>(kMax) && static_cast<u128>(den) <= static_cast<u128>(kMax)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return !big_ ? den_ == 1 : big_->get_den() == 1; }

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
        Rational out;
        out.num_ = s;
        return out;
      }
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t n;
      if (!__builtin_mul_overflow(a.num_, b.num_, &n) && n != std::numeric_limits<std::int64_t>::min()) {
        Rational out;
        out.num_ = n;
        return out;
      }
    }
    // Cross-cancel first so the products are already reduced.
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) && !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d) &&
        n != std::numeric_limits<std::int64_t>::min()) {
      Rational out;
      out.num_ = n;
      out.den_ = d;
      return out;
    }
    return Rational::from_wide(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                               static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
  }
  return Rational(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (!b.big_) {
    Rational inverse;
    inverse.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inverse.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inverse;
  }
  return Rational(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::string to_string(const Rational& q) {
  if (q.big_) return q.big_->get_str();
  if (q.den_ == 1) return std::to_string(q.num_);
  return std::to_string(q.num_) + "/" + std::to_string(q.den_);
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && (!digits(den) || den.front() == '-' || den.front() == '+')))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class zn(n, 10);
  mpz_class zd = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (zd == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(zn, zd));
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace linfsym
