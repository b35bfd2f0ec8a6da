#pragma once
// Slow reference implementations used only as test oracles.  Forms are kept
// as lists of (index list, coefficient) and sorted by bubble sort, so they
// share no code with the bitmask kernel.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "linfsym/forms.hpp"
#include "linfsym/polynomial.hpp"

namespace oracle {

using linfsym::Blade;
using linfsym::DifferentialForm;
using linfsym::MultiVectorField;
using linfsym::Polynomial;
using linfsym::Rational;

struct Form {
  int nvars = 0;
  int degree = 0;
  std::map<std::vector<int>, Polynomial> terms;  // sorted 0-based indices

  // Adds coeff * dx_{idx[0]} ^ ... with idx in any order.
  void add(std::vector<int> idx, Polynomial coeff) {
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
        if (idx[b] > idx[b + 1]) {
          std::swap(idx[b], idx[b + 1]);
          sign = -sign;
        }
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return;
    if (sign < 0) coeff = -coeff;
    auto [it, fresh] = terms.try_emplace(idx, nvars);
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
};

inline Form from(const DifferentialForm& a) {
  Form f{a.nvars(), a.degree(), {}};
  for (const auto& [b, p] : a.terms()) f.add(b.indices(), p);
  return f;
}

inline DifferentialForm to(const Form& f) {
  if (f.terms.empty()) return DifferentialForm(f.nvars, 0);
  DifferentialForm out(f.nvars, f.degree);
  for (const auto& [idx, p] : f.terms) out.add_term(Blade::from_indices(idx), p);
  return out;
}

inline Form wedge(const Form& a, const Form& b) {
  Form out{a.nvars, a.degree + b.degree, {}};
  for (const auto& [i, p] : a.terms)
    for (const auto& [j, q] : b.terms) {
      std::vector<int> idx = i;
      idx.insert(idx.end(), j.begin(), j.end());
      out.add(idx, p * q);
    }
  return out;
}

inline Form d(const Form& a) {
  Form out{a.nvars, a.degree + 1, {}};
  for (const auto& [idx, p] : a.terms)
    for (int i = 0; i < a.nvars; ++i) {
      std::vector<int> full{i};
      full.insert(full.end(), idx.begin(), idx.end());
      out.add(full, p.derivative(i));
    }
  return out;
}

// iota_X, X = sum comps[i] d/dv_{i+1}: alpha(X, ...) in the first slot.
inline Form contract(const std::vector<Polynomial>& comps, const Form& a) {
  Form out{a.nvars, a.degree - 1, {}};
  for (const auto& [idx, p] : a.terms)
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      std::vector<int> rest = idx;
      rest.erase(rest.begin() + static_cast<long>(pos));
      Polynomial c = comps[idx[pos]] * p;
      out.add(rest, pos % 2 == 0 ? c : -c);
    }
  return out;
}

inline std::vector<Polynomial> coordinate_vf(int nvars, int index, Polynomial coeff) {
  std::vector<Polynomial> comps(nvars, Polynomial(nvars));
  comps[index] = std::move(coeff);
  return comps;
}

inline Form scalar(int nvars, Polynomial f) {
  Form out{nvars, 0, {}};
  out.add({}, std::move(f));
  return out;
}

// Standard symplectic structure, written out by hand.
inline Form omega(int n) {
  Form w{2 * n, 2, {}};
  for (int i = 0; i < n; ++i) w.add({2 * i, 2 * i + 1}, Polynomial(2 * n, 1));
  return w;
}

// Lambda(alpha) = sum_i iota_{d_{2i}} iota_{d_{2i-1}} alpha, i.e. alpha(d_{2i-1}, d_{2i}, ...).
inline Form Lambda(int n, const Form& a) {
  Form out{a.nvars, a.degree - 2, {}};
  for (int i = 0; i < n; ++i) {
    Form inner = contract(coordinate_vf(2 * n, 2 * i, Polynomial(2 * n, 1)), a);
    Form both = contract(coordinate_vf(2 * n, 2 * i + 1, Polynomial(2 * n, 1)), inner);
    for (const auto& [idx, p] : both.terms) out.add(idx, p);
  }
  return out;
}

inline Form L(int n, const Form& a) { return wedge(omega(n), a); }

inline Form scaled(Form a, const Rational& c) {
  Form out{a.nvars, a.degree, {}};
  for (auto& [idx, p] : a.terms) out.add(idx, p * c);
  return out;
}

inline Form sum(const Form& a, const Form& b) {
  Form out = a;
  for (const auto& [idx, p] : b.terms) out.add(idx, p);
  return out;
}

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// (1/k!) sum over all of S_k of sgn(s) f_s(1) df_s(2) ^ ... ^ df_s(k).
inline Form alt_bruteforce(const std::vector<Polynomial>& fs) {
  const int k = static_cast<int>(fs.size());
  const int m = fs[0].nvars();
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  Form total{m, k - 1, {}};
  Rational count = 0;
  do {
    Form term = scalar(m, fs[p[0]]);
    for (int i = 1; i < k; ++i) term = wedge(term, d(scalar(m, fs[p[i]])));
    total = sum(total, scaled(term, perm_sign(p)));
    count += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return scaled(total, Rational(1) / count);
}

}  // namespace oracle
