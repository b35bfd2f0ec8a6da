#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "linfsym/forms.hpp"

namespace linfsym {

/// Stable per-trial seed from a campaign seed, a check label and a trial
/// index.  Independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

/// Seeded generator of random polynomials and forms.  Each monomial of total
/// degree <= max_degree is kept with probability `density` and given a
/// nonzero integer coefficient in [-coeff_bound, coeff_bound].  A sample is
/// never the zero polynomial.
class FormSampler {
 public:
  FormSampler(std::uint64_t seed, int max_degree, double density = 0.5, int coeff_bound = 9);

  Polynomial polynomial(int nvars);
  DifferentialForm form(int nvars, int degree);

 private:
  std::mt19937_64 rng_;
  int max_degree_;
  double density_;
  int coeff_bound_;
};

}  // namespace linfsym
