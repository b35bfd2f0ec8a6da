#include "linfsym/random.hpp"

#include <stdexcept>
#include <vector>

#include "linfsym/blade.hpp"

namespace linfsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void monomials_up_to(int nvars, int max_degree, int var, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  int used = 0;
  for (int i = 0; i < var; ++i) used += exps[static_cast<std::size_t>(i)];
  for (int e = 0; used + e <= max_degree; ++e) {
    exps[static_cast<std::size_t>(var)] = e;
    monomials_up_to(nvars, max_degree, var + 1, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

FormSampler::FormSampler(std::uint64_t seed, int max_degree, double density, int coeff_bound)
    : rng_(seed), max_degree_(max_degree), density_(density), coeff_bound_(coeff_bound) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be non-negative");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
}

Polynomial FormSampler::polynomial(int nvars) {
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  std::vector<Monomial> monomials;
  monomials_up_to(nvars, max_degree_, 0, exps, monomials);
  std::bernoulli_distribution keep(density_);
  std::uniform_int_distribution<int> coeff(1, coeff_bound_);
  std::bernoulli_distribution negative(0.5);
  std::vector<Polynomial::Term> terms;
  for (Monomial m : monomials) {
    if (!keep(rng_)) continue;
    int c = coeff(rng_);
    terms.emplace_back(m, Rational(negative(rng_) ? -c : c));
  }
  if (terms.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    terms.emplace_back(monomials[pick(rng_)], Rational(coeff(rng_)));
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

DifferentialForm FormSampler::form(int nvars, int degree) {
  DifferentialForm out(nvars, degree);
  for (Blade b : blades_of_degree(nvars, degree)) out.add_term(b, polynomial(nvars));
  return out;
}

}  // namespace linfsym
