#include "linfsym/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <tuple>
#include <vector>

namespace linfsym {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  DifferentialForm parse() {
    std::optional<DifferentialForm> result;
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_space();
      std::size_t start = pos_;
      auto [blade, coeff] = parse_term();
      if (negative) coeff = -coeff;
      if (!result) {
        result.emplace(nvars_, blade.degree());
      } else if (result->degree() != blade.degree()) {
        throw ParseError("mixed degrees in sum", start);
      }
      result->add_term(blade, coeff);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
      negative = peek() == '-';
      ++pos_;
    }
    return *result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  std::string_view digits() {
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return text_.substr(start, pos_ - start);
  }

  int coordinate(std::size_t where) {
    std::string_view d = digits();
    if (d.size() > 3) throw ParseError("unknown coordinate", where);
    int k = std::stoi(std::string(d));
    if (k < 1 || k > nvars_) throw ParseError("unknown coordinate index " + std::to_string(k), where);
    return k - 1;
  }

  std::pair<Blade, Polynomial> parse_term() {
    skip_space();
    bool any = false;
    Rational coeff(1);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num(digits());
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t where = pos_;
        std::string den(digits());
        if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
          throw ParseError("zero denominator", where);
        num += "/" + den;
      }
      coeff = parse_rational(num);
      any = true;
    }
    Monomial mono;
    while (true) {
      skip_space();
      if (at_end() || peek() != 'v') break;
      std::size_t where = pos_;
      ++pos_;
      int index = coordinate(where);
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t at = pos_;
        std::string_view e = digits();
        if (e.size() > 3 || std::stoi(std::string(e)) > 255) throw ParseError("exponent too large", at);
        power = std::stoi(std::string(e));
      }
      mono = mono * Monomial::variable(index, power);
      any = true;
    }
    Blade blade;
    int sign = 1;
    skip_space();
    if (starts_with("dx")) {
      while (true) {
        std::size_t where = pos_;
        pos_ += 2;
        int index = coordinate(where);
        Blade single = Blade::single(index);
        int s = wedge_sign(blade, single);
        sign *= s;
        blade = blade.with(index);
        any = true;
        skip_space();
        if (at_end() || peek() != '^') break;
        ++pos_;
        skip_space();
        if (!starts_with("dx")) throw ParseError("expected basis one-form after '^'", pos_);
      }
    }
    if (!any) throw ParseError("expected a term", pos_);
    Polynomial c = Polynomial::monomial(nvars_, mono, sign == 0 ? Rational(0) : Rational(coeff * sign));
    return {blade, c};
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

template <class Sum>
std::string render_sum(const Sum& a, const char* stem) {
  if (a.is_zero()) return "0";
  std::vector<Blade> blades;
  for (const auto& [b, p] : a.terms()) blades.push_back(b);
  std::sort(blades.begin(), blades.end(), lex_less);
  std::string out;
  for (Blade b : blades) {
    auto terms = a.terms().at(b).terms();
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
    for (const auto& [m, c] : terms) {
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      std::vector<std::string> parts;
      Rational mag = abs(c);
      std::string mono = render_monomial(m, a.nvars());
      std::string basis = render_blade(b, stem);
      if (mag != 1 || (mono.empty() && basis.empty())) parts.push_back(to_string(mag));
      if (!mono.empty()) parts.push_back(mono);
      if (!basis.empty()) parts.push_back(basis);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ' ';
        out += parts[i];
      }
    }
  }
  return out;
}

}  // namespace

DifferentialForm parse_form(std::string_view text, int nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported dimension");
  return Parser(text, nvars).parse();
}

Polynomial parse_polynomial(std::string_view text, int nvars) {
  DifferentialForm f = parse_form(text, nvars);
  if (!f.is_zero() && f.degree() != 0) throw ParseError("expected a function, got a form of degree " + std::to_string(f.degree()), 0);
  return f.is_zero() ? Polynomial(nvars) : f.as_scalar();
}

std::string render_form(const DifferentialForm& a) { return render_sum(a, "dx"); }
std::string render_polynomial(const Polynomial& p) { return render_form(DifferentialForm::scalar(p)); }
std::string render_multivector(const MultiVectorField& x) { return render_sum(x, "d"); }

}  // namespace linfsym
