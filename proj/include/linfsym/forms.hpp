#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "linfsym/blade.hpp"
#include "linfsym/polynomial.hpp"

namespace linfsym {

/// Homogeneous sum of (polynomial x basis blade) terms on R^m.  The same
/// storage serves differential forms and multivector fields; the tag keeps
/// the two from being mixed up.
///
/// Zero-coefficient terms are never stored.  Adding a sum of another degree
/// is an error unless one side is zero (zero belongs to every degree).
template <class Tag>
class BladeSum {
 public:
  using Terms = std::map<Blade, Polynomial>;

  BladeSum(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported dimension");
    if (degree < 0) throw std::invalid_argument("negative degree");
  }

  static BladeSum basis(int nvars, Blade b, const Polynomial& coeff) {
    BladeSum out(nvars, b.degree());
    out.add_term(b, coeff);
    return out;
  }
  static BladeSum basis(int nvars, Blade b) { return basis(nvars, b, Polynomial(nvars, Rational(1))); }
  static BladeSum scalar(const Polynomial& f) { return basis(f.nvars(), Blade{}, f); }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  Polynomial coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Polynomial(nvars_) : it->second;
  }

  /// The degree-0 coefficient; throws unless degree is 0.
  Polynomial as_scalar() const {
    if (degree_ != 0) throw std::invalid_argument("not a degree-0 element");
    return coefficient(Blade{});
  }

  void add_term(Blade b, const Polynomial& coeff) {
    if (b.degree() != degree_) throw std::invalid_argument("degree-inconsistent term");
    if (b.highest() >= nvars_) throw std::out_of_range("basis index beyond dimension");
    if (coeff.nvars() != nvars_) throw std::invalid_argument("dimension mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BladeSum& operator+=(const BladeSum& other) { return accumulate(other, false); }
  BladeSum& operator-=(const BladeSum& other) { return accumulate(other, true); }

  BladeSum& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [b, p] : terms_) p *= c;
    }
    return *this;
  }

  BladeSum& operator*=(const Polynomial& f) {
    if (f.nvars() != nvars_) throw std::invalid_argument("dimension mismatch");
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * f;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  BladeSum operator-() const {
    BladeSum out = *this;
    for (auto& [b, p] : out.terms_) p = -p;
    return out;
  }

  friend BladeSum operator+(BladeSum a, const BladeSum& b) { return a += b; }
  friend BladeSum operator-(BladeSum a, const BladeSum& b) { return a -= b; }
  friend BladeSum operator*(BladeSum a, const Rational& c) { return a *= c; }
  friend BladeSum operator*(const Rational& c, BladeSum a) { return a *= c; }
  friend BladeSum operator*(const Polynomial& f, BladeSum a) { return a *= f; }

  /// Equal as elements; zero sums compare equal regardless of degree.
  friend bool operator==(const BladeSum& a, const BladeSum& b) {
    if (a.nvars_ != b.nvars_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  BladeSum& accumulate(const BladeSum& other, bool negate) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("dimension mismatch");
    if (other.is_zero()) return *this;
    if (is_zero()) {
      degree_ = other.degree_;
    } else if (other.degree_ != degree_) {
      throw std::invalid_argument("degree-inhomogeneous sum");
    }
    for (const auto& [b, p] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(b, nvars_);
      if (negate) {
        it->second -= p;
      } else {
        it->second += p;
      }
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  int nvars_;
  int degree_;
  Terms terms_;
};

struct FormTag {};
struct MultiVectorTag {};

/// Element of Omega^k(R^m) with polynomial coefficients.
using DifferentialForm = BladeSum<FormTag>;
/// Polynomial k-vector field on R^m.
using MultiVectorField = BladeSum<MultiVectorTag>;

}  // namespace linfsym
