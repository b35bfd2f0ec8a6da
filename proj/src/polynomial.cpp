#include "linfsym/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace linfsym {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

void check_index(int index) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("coordinate index out of range");
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many coordinates for packed monomial");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::overflow_error("monomial exponent out of range");
    key |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
  }
  return Monomial(key);
}

Monomial Monomial::variable(int index, int power) {
  check_index(index);
  if (power < 0 || power > 255) throw std::overflow_error("monomial exponent out of range");
  return Monomial(static_cast<std::uint64_t>(power) << shift(index));
}

int Monomial::total_degree() const {
  int total = 0;
  for (int i = 0; i < kMaxVars; ++i) total += exponent(i);
  return total;
}

Monomial Monomial::operator*(Monomial other) const {
  if (((key_ | other.key_) & kHighBits) != 0) {
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i) + other.exponent(i) > 255) throw std::overflow_error("monomial exponent overflow");
  }
  return Monomial(key_ + other.key_);
}

bool grlex_greater(Monomial a, Monomial b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of coordinates");
}

Polynomial::Polynomial(int nvars, const Rational& constant) : Polynomial(nvars) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("coordinate index out of range");
  return monomial(nvars, Monomial::variable(index), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Monomial{});
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().first == Monomial{}) return terms_.front().second;
  return Rational(0);
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 0 || index >= nvars_) throw std::out_of_range("coordinate index out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(index);
    if (e == 0) continue;
    // Lowering the same exponent on every surviving term keeps them sorted.
    out.terms_.emplace_back(m.lowered(index), c * e);
  }
  return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("polynomials over different coordinate spaces");
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, int sign) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_scaled(other, 1); }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return add_scaled(other, -1); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the sort order.
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const auto& [sm, sc] = single.terms_.front();
    Polynomial out(a.nvars_);
    out.terms_.reserve(other.terms_.size());
    for (const auto& [m, c] : other.terms_) out.terms_.emplace_back(m * sm, c * sc);
    return out;
  }
  // Exponents add, so a mixed-radix index (v1 most significant) is additive
  // over the factors and increasing in lex order.  Accumulate densely when
  // the box of possible product monomials is small.
  const int m = a.nvars_;
  std::vector<int> radix(static_cast<std::size_t>(m), 1);
  for (int i = 0; i < m; ++i) {
    int ea = 0, eb = 0;
    for (const auto& t : a.terms_) ea = std::max(ea, t.first.exponent(i));
    for (const auto& t : b.terms_) eb = std::max(eb, t.first.exponent(i));
    radix[static_cast<std::size_t>(i)] = ea + eb + 1;
  }
  std::size_t box = 1;
  for (int r : radix) box *= static_cast<std::size_t>(r);
  const std::size_t pairs = a.terms_.size() * b.terms_.size();
  if (box <= 4 * pairs + 64) {
    std::vector<std::size_t> stride(static_cast<std::size_t>(m), 1);
    for (int i = m - 2; i >= 0; --i)
      stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * static_cast<std::size_t>(radix[static_cast<std::size_t>(i + 1)]);
    auto index_of = [&](Monomial mono) {
      std::size_t idx = 0;
      for (int i = 0; i < m; ++i) idx += static_cast<std::size_t>(mono.exponent(i)) * stride[static_cast<std::size_t>(i)];
      return idx;
    };
    std::vector<std::size_t> ia, ib;
    ia.reserve(a.terms_.size());
    ib.reserve(b.terms_.size());
    for (const auto& t : a.terms_) ia.push_back(index_of(t.first));
    for (const auto& t : b.terms_) ib.push_back(index_of(t.first));
    std::vector<Rational> acc(box);
    std::vector<Monomial> mono(box);
    std::vector<char> seen(box, 0);
    for (std::size_t p = 0; p < a.terms_.size(); ++p) {
      for (std::size_t q = 0; q < b.terms_.size(); ++q) {
        const std::size_t idx = ia[p] + ib[q];
        if (!seen[idx]) {
          seen[idx] = 1;
          mono[idx] = a.terms_[p].first * b.terms_[q].first;
          acc[idx] = a.terms_[p].second * b.terms_[q].second;
        } else {
          acc[idx] += a.terms_[p].second * b.terms_[q].second;
        }
      }
    }
    Polynomial out(m);
    for (std::size_t idx = 0; idx < box; ++idx)
      if (seen[idx] && acc[idx] != 0) out.terms_.emplace_back(mono[idx], std::move(acc[idx]));
    return out;
  }
  std::vector<Polynomial::Term> products;
  products.reserve(pairs);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  return Polynomial::from_terms(a.nvars_, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string render_monomial(Monomial m, int nvars) {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'v' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace linfsym
