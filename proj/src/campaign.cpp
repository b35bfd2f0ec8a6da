#include "linfsym/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "linfsym/parse.hpp"
#include "linfsym/poisson.hpp"
#include "linfsym/random.hpp"
#include "linfsym/volume.hpp"

namespace linfsym {

namespace {

constexpr std::size_t kMaxCounterexamples = 3;

const std::vector<std::string> kSuites{"operators",    "chain",   "kevin",        "linfty-symplectic",
                                       "linfty-volume", "poisson", "coefficients", "all"};

std::string space_tag(int m) { return "R" + std::to_string(m); }

std::vector<std::string> rendered(std::span<const Polynomial> fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(render_polynomial(f));
  return out;
}

std::vector<std::string> rendered(std::span<const DifferentialForm> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(render_form(x));
  return out;
}

std::vector<std::string> rendered(std::span<const GradedElement> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(render_form(x.form));
  return out;
}

void record(CheckResult& r, std::optional<Counterexample> failure) {
  ++r.trials;
  if (!failure) return;
  ++r.failures;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(*failure));
}

template <class Inputs>
std::optional<Counterexample> unless_zero(const DifferentialForm& residual, const Inputs& inputs) {
  if (residual.is_zero()) return std::nullopt;
  return Counterexample{rendered(std::span(inputs)), render_form(residual)};
}

template <class Inputs>
std::optional<Counterexample> unless_zero(const Polynomial& residual, const Inputs& inputs) {
  if (residual.is_zero()) return std::nullopt;
  return Counterexample{rendered(std::span(inputs)), render_polynomial(residual)};
}

class Runner {
 public:
  explicit Runner(const CampaignConfig& c) : c_(c) {}

  using Trial = std::function<std::optional<Counterexample>(FormSampler&, std::mt19937_64&)>;

  // `trials` seeded trials of one check.  The second generator only picks
  // shapes (degrees), so the form stream does not depend on it.
  void check(const std::string& suite, const std::string& name, int trials, const Trial& body) {
    CheckResult r{suite, name};
    for (int i = 0; i < trials; ++i) {
      const std::uint64_t s = derive_seed(c_.seed, name, static_cast<std::uint64_t>(i));
      FormSampler sampler(s, c_.degree, c_.density);
      std::mt19937_64 shape(s ^ 0x9e3779b97f4a7c15ULL);
      record(r, body(sampler, shape));
    }
    checks.push_back(std::move(r));
  }

  void fixed(const std::string& suite, const std::string& name, std::optional<Counterexample> failure,
             std::string note = {}) {
    CheckResult r{suite, name};
    record(r, std::move(failure));
    r.note = std::move(note);
    checks.push_back(std::move(r));
  }

  const CampaignConfig& config() const { return c_; }
  std::vector<CheckResult> checks;

 private:
  const CampaignConfig& c_;
};

CoefficientTable table_for(const CampaignConfig& c) {
  if (!c.perturb) return {};
  const auto [k, j] = *c.perturb;
  return CoefficientTable{}.with(k, j, coeff_a(k, j) + Rational(1));
}

std::vector<Polynomial> functions(FormSampler& fs, int count, int m) {
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(fs.polynomial(m));
  return out;
}

// ---------------------------------------------------------------------------

void suite_operators(Runner& run) {
  const auto& c = run.config();
  for (int n : c.half_dims) {
    SymplecticSpace s(n);
    const std::string prefix = "operators/" + space_tag(2 * n) + "/";
    auto reports = verify_operator_relations(s, c.trials, c.degree, derive_seed(c.seed, prefix, 0), c.density);
    for (auto& rep : reports) {
      CheckResult r{"operators", prefix + rep.relation};
      r.trials = rep.trials;
      r.failures = static_cast<int>(rep.failures.size());
      for (const auto& f : rep.failures) {
        if (r.counterexamples.size() >= kMaxCounterexamples) break;
        r.counterexamples.push_back({{render_form(f.input)}, render_form(f.residual)});
      }
      run.checks.push_back(std::move(r));
    }
  }
}

void suite_kevin(Runner& run) {
  const auto& c = run.config();
  for (int n : c.half_dims) {
    SymplecticSpace s(n);
    for (int k = 1; k <= 5; ++k) {
      run.check("kevin", "alt-defect/" + space_tag(2 * n) + "/k=" + std::to_string(k), c.trials,
                [&](FormSampler& fs, std::mt19937_64&) {
                  auto f = functions(fs, k + 1, s.dim());
                  return unless_zero(verify_alt_defect(s, k, f), f);
                });
    }
  }
}

void suite_chain(Runner& run) {
  const auto& c = run.config();
  const CoefficientTable used = table_for(c);
  for (int n : c.half_dims) {
    SymplecticSpace s(n);
    const std::string tag = space_tag(2 * n);
    for (int k = 2; k <= 2 * n; ++k) {
      run.check("chain", "chain/" + tag + "/k=" + std::to_string(k), c.trials,
                [&](FormSampler& fs, std::mt19937_64&) {
                  auto f = functions(fs, k + 1, s.dim());
                  return unless_zero(verify_chain_identity(s, k, f, used), f);
                });
    }
    // Each single perturbed coefficient must break some chain identity.
    CheckResult mutants{"chain", "chain-mutants/" + tag};
    for (int k = 2; k <= 2 * n + 1; ++k) {
      for (int j = 0; 2 * j <= k - 1; ++j) {
        const CoefficientTable table = CoefficientTable{}.with(k, j, coeff_a(k, j) + Rational(1));
        bool detected = false;
        for (int i = 0; i < c.trials && !detected; ++i) {
          FormSampler fs(derive_seed(c.seed, mutants.name, static_cast<std::uint64_t>(100 * k + j) * 1000 + i),
                         c.degree, c.density);
          for (int kk : {k - 1, k}) {
            if (kk < 2 || kk > 2 * n) continue;
            auto f = functions(fs, kk + 1, s.dim());
            if (!verify_chain_identity(s, kk, f, table).is_zero()) detected = true;
          }
        }
        const std::string label = "a_" + std::to_string(k) + "^" + std::to_string(j) + " + 1";
        record(mutants, detected ? std::nullopt
                                 : std::optional<Counterexample>(Counterexample{{label}, "undetected"}));
      }
    }
    run.checks.push_back(std::move(mutants));
  }
}

void suite_linfty_symplectic(Runner& run) {
  const auto& c = run.config();
  const CoefficientTable used = table_for(c);
  for (int n : c.half_dims) {
    SymplecticSpace s(n);
    const int m = s.dim();
    const std::string tag = space_tag(m);
    const BracketFamily fam = symplectic_family(s, used);
    for (int arity = 1; arity <= c.arity_max; ++arity) {
      run.check("linfty-symplectic", "linfty-symplectic/" + tag + "/n=" + std::to_string(arity), c.trials,
                [&](FormSampler& fs, std::mt19937_64&) {
                  std::vector<GradedElement> xs;
                  for (int i = 0; i < arity; ++i) xs.push_back(fam.element(fs.form(m, 1)));
                  return unless_zero(verify_linfty_identity(fam, xs).form, xs);
                });
      run.check("linfty-symplectic", "linfty-symplectic-mixed/" + tag + "/n=" + std::to_string(arity), c.trials,
                [&](FormSampler& fs, std::mt19937_64& shape) {
                  std::vector<GradedElement> xs;
                  for (int i = 0; i < arity; ++i) xs.push_back(fam.element(fs.form(m, 1 + int(shape() % m))));
                  return unless_zero(verify_linfty_identity(fam, xs).form, xs);
                });
    }
    const int top = m + 2;
    run.check("linfty-symplectic", "vanishing/" + tag + "/k=" + std::to_string(top), c.trials,
              [&](FormSampler& fs, std::mt19937_64&) {
                std::vector<DifferentialForm> xs;
                std::vector<Polynomial> deltas;
                for (int i = 0; i < top; ++i) {
                  xs.push_back(fs.form(m, 1));
                  deltas.push_back(koszul_delta(s, xs.back()).as_scalar());
                }
                return unless_zero(tilde_l(s, deltas, used), xs);
              });
    run.check("linfty-symplectic", "strict-morphism/" + tag, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      std::vector<DifferentialForm> xs{fs.form(m, 1), fs.form(m, 1)};
      return unless_zero(verify_strict_morphism(s, xs[0], xs[1]), xs);
    });
    run.check("linfty-symplectic", "quotient-congruence/" + tag, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      std::vector<DifferentialForm> xs{fs.form(m, 1), fs.form(m, 1)};
      return unless_zero(verify_quotient_bracket_congruence(s, xs[0], xs[1]), xs);
    });
  }
}

void suite_linfty_volume(Runner& run) {
  const auto& c = run.config();
  for (int m : c.volume_dims) {
    VolumeSpace v(m);
    const std::string tag = space_tag(m);
    const BracketFamily fam = volume_family(v);
    run.check("linfty-volume", "divfree-defining/" + tag, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      std::vector<DifferentialForm> xs{fs.form(m, m - 2)};
      return unless_zero(contract_vector(exact_divfree_vf(v, xs[0]), v.mu()) + ext_deriv(xs[0]), xs);
    });
    for (int arity = 1; arity <= c.volume_arity_max; ++arity) {
      run.check("linfty-volume", "linfty-volume/" + tag + "/n=" + std::to_string(arity), c.trials,
                [&](FormSampler& fs, std::mt19937_64&) {
                  std::vector<GradedElement> xs;
                  for (int i = 0; i < arity; ++i) xs.push_back(fam.element(fs.form(m, m - 2)));
                  return unless_zero(verify_linfty_identity(fam, xs).form, xs);
                });
      run.check("linfty-volume", "linfty-volume-mixed/" + tag + "/n=" + std::to_string(arity), c.trials,
                [&](FormSampler& fs, std::mt19937_64& shape) {
                  std::vector<GradedElement> xs;
                  for (int i = 0; i < arity; ++i) xs.push_back(fam.element(fs.form(m, int(shape() % (m - 1)))));
                  return unless_zero(verify_linfty_identity(fam, xs).form, xs);
                });
    }
    for (int k = 2; k <= std::min(m, c.volume_arity_max); ++k) {
      run.check("linfty-volume", "exact-vanishing/" + tag + "/k=" + std::to_string(k), c.trials,
                [&](FormSampler& fs, std::mt19937_64&) {
                  std::vector<DifferentialForm> xs{ext_deriv(fs.form(m, m - 3))};
                  for (int i = 1; i < k; ++i) xs.push_back(fs.form(m, m - 2));
                  return unless_zero(rogers_l(v, xs), xs);
                });
    }
  }
}

void suite_poisson(Runner& run) {
  const auto& c = run.config();
  std::vector<PoissonSpace> presets{PoissonSpace::sl2star(), PoissonSpace::zero(3)};
  for (int n : c.half_dims) presets.push_back(PoissonSpace::standard_symplectic(n));

  for (const auto& p : presets) {
    const int m = p.dim();
    const std::string at = "/" + p.name();
    run.check("poisson", "delta-squared" + at, c.trials * (m + 1), [&, k = 0](FormSampler& fs, std::mt19937_64&) mutable {
      std::vector<DifferentialForm> xs{fs.form(m, k++ % (m + 1))};
      return unless_zero(koszul_delta_pi(p, koszul_delta_pi(p, xs[0])), xs);
    });
    run.fixed("poisson", "jacobi-coordinates" + at,
              satisfies_jacobi_on_coordinates(p)
                  ? std::nullopt
                  : std::optional<Counterexample>(Counterexample{{p.name()}, "coordinate Jacobi failure"}));
    run.check("poisson", "jacobi" + at, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      auto f = functions(fs, 3, m);
      return unless_zero(jacobi_residual(p, f[0], f[1], f[2]), f);
    });
    run.check("poisson", "obstruction-identity" + at, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      auto f = functions(fs, 3, m);
      return unless_zero(obstruction_identity_residual(p, f[0], f[1], f[2]), f);
    });
    run.check("poisson", "jacobiator" + at, c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      std::vector<DifferentialForm> xs{fs.form(m, 1), fs.form(m, 1), fs.form(m, 1)};
      return unless_zero(jacobiator_residual(p, xs[0], xs[1], xs[2]), xs);
    });
  }

  {
    // i_pi(dx^dy^dz) against v1 dx1 + v2 dx2 - v3 dx3.
    const PoissonSpace sl = PoissonSpace::sl2star();
    const DifferentialForm top = parse_form("dx1^dx2^dx3", 3);
    const DifferentialForm radial = parse_form("v1 dx1 + v2 dx2 - v3 dx3", 3);
    const DifferentialForm image = contract_bivector(sl.pi(), top);
    const Polynomial scale = image.coefficient(Blade::single(0)).derivative(0);
    std::optional<Counterexample> failure;
    std::string note;
    if (!scale.is_constant() || scale.is_zero() || !(image - radial * scale.constant_term()).is_zero()) {
      failure = Counterexample{{"dx1^dx2^dx3"}, render_form(image)};
    } else {
      note = "factor=" + to_string(scale.constant_term());
    }
    run.fixed("poisson", "sl2star-contraction", std::move(failure), note);
  }

  for (int n : c.half_dims) {
    SymplecticSpace s(n);
    run.check("poisson", "symplectic-witness/" + space_tag(2 * n), c.trials, [&](FormSampler& fs, std::mt19937_64&) {
      auto f = functions(fs, 3, s.dim());
      return unless_zero(symplectic_witness_residual(s, f[0], f[1], f[2]), f);
    });
  }
}

void suite_coefficients(Runner& run) {
  const auto& c = run.config();
  const RecursionReport rep = verify_coefficient_recursions(c.k_max);
  CheckResult r{"coefficients", "coefficients/recursions"};
  r.trials = rep.checks;
  r.failures = static_cast<int>(rep.failures.size());
  for (const auto& f : rep.failures) {
    if (r.counterexamples.size() >= kMaxCounterexamples) break;
    r.counterexamples.push_back({{}, f});
  }
  run.checks.push_back(std::move(r));

  // Values displayed in the worked brackets l~_3, l~_4, l~_5.
  const struct { int k, j; Rational value; } shown[] = {
      {2, 0, Rational(1)}, {3, 1, Rational(1, 2)}, {4, 1, Rational(1, 3)}, {5, 1, Rational(1, 4)}, {5, 2, Rational(1, 24)}};
  CheckResult v{"coefficients", "coefficients/displayed-values"};
  for (const auto& e : shown) {
    const Rational got = coeff_a(e.k, e.j);
    record(v, got == e.value ? std::nullopt
                             : std::optional<Counterexample>(Counterexample{
                                   {"a_" + std::to_string(e.k) + "^" + std::to_string(e.j)}, to_string(got)}));
  }
  run.checks.push_back(std::move(v));
}

}  // namespace

std::vector<std::string> suite_names() { return kSuites; }

void CampaignConfig::validate() const {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (!(density > 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
  if (arity_max < 1 || volume_arity_max < 1) throw std::invalid_argument("arity bounds must be >= 1");
  if (k_max < 2) throw std::invalid_argument("k-max must be >= 2");
  if (perturb && (perturb->first < 2 || perturb->second < 0 || 2 * perturb->second > perturb->first - 1))
    throw std::invalid_argument("perturbed coefficient needs k >= 2 and 0 <= 2j <= k-1");
  if (half_dims.empty() && (suite == "operators" || suite == "chain" || suite == "kevin" || suite == "linfty-symplectic"))
    throw std::invalid_argument("no half-dimension given");
  for (int n : half_dims)
    if (n < 1 || 2 * n > 8) throw std::invalid_argument("half-dimension must be in 1..4");
  for (int m : volume_dims)
    if (m < 3 || m > 8) throw std::invalid_argument("volume dimension must be in 3..8");
}

int CampaignReport::total_failures() const {
  int total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

const CheckResult* CampaignReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  Runner run(config);
  const bool all = config.suite == "all";
  if (all || config.suite == "coefficients") suite_coefficients(run);
  if (all || config.suite == "operators") suite_operators(run);
  if (all || config.suite == "kevin") suite_kevin(run);
  if (all || config.suite == "chain") suite_chain(run);
  if (all || config.suite == "linfty-symplectic") suite_linfty_symplectic(run);
  if (all || config.suite == "linfty-volume") suite_linfty_volume(run);
  if (all || config.suite == "poisson") suite_poisson(run);
  CampaignReport report{config, std::move(run.checks)};
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string CampaignReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["tool"] = kToolVersion;
  j["config"] = {{"suite", config.suite},
                 {"half_dims", config.half_dims},
                 {"volume_dims", config.volume_dims},
                 {"degree", config.degree},
                 {"density", config.density},
                 {"trials", config.trials},
                 {"seed", config.seed},
                 {"arity_max", config.arity_max},
                 {"volume_arity_max", config.volume_arity_max},
                 {"k_max", config.k_max}};
  if (config.perturb) j["config"]["perturb"] = {config.perturb->first, config.perturb->second};
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e{{"suite", c.suite}, {"name", c.name}, {"trials", c.trials}, {"failures", c.failures}};
    if (!c.note.empty()) e["note"] = c.note;
    ordered_json ces = ordered_json::array();
    for (const auto& ce : c.counterexamples) ces.push_back({{"inputs", ce.inputs}, {"residual", ce.residual}});
    e["counterexamples"] = std::move(ces);
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["total_failures"] = total_failures();
  j["passed"] = passed();
  if (config.timing) j["duration_seconds"] = seconds;
  return j.dump(2) + "\n";
}

std::string CampaignReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed() ? "ok   " : "FAIL ") << c.name << "  " << (c.trials - c.failures) << "/" << c.trials;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
    for (const auto& ce : c.counterexamples) {
      out << "     inputs:";
      for (const auto& in : ce.inputs) out << " [" << in << "]";
      out << "\n     residual: " << ce.residual << "\n";
    }
  }
  out << checks.size() << " checks, " << total_failures() << " failures";
  if (config.timing) out << ", " << seconds << " s";
  out << "\n";
  return out.str();
}

}  // namespace linfsym
