// linfsym: verification campaigns, operator evaluation and brackets.
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linfsym/campaign.hpp"
#include "linfsym/parse.hpp"
#include "linfsym/poisson.hpp"
#include "linfsym/volume.hpp"

using namespace linfsym;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest coordinate index mentioned in the expressions (v7, dx7).
int infer_dim(const std::vector<std::string>& exprs) {
  static const std::regex coord("(?:v|dx)([0-9]+)");
  int m = 1;
  for (const auto& e : exprs)
    for (auto it = std::sregex_iterator(e.begin(), e.end(), coord); it != std::sregex_iterator(); ++it)
      m = std::max(m, std::stoi((*it)[1].str()));
  return m;
}

struct SpaceOptions {
  std::optional<int> symplectic;
  std::optional<int> dim;
  std::optional<int> volume;
  std::optional<std::string> poisson;

  int chosen() const {
    return int(symplectic.has_value()) + int(dim.has_value()) + int(volume.has_value()) + int(poisson.has_value());
  }
};

DifferentialForm apply_op(const std::string& op, const DifferentialForm& a, const std::optional<SymplecticSpace>& s,
                          const std::optional<PoissonSpace>& p) {
  if (op == "d") return ext_deriv(a);
  if (op == "delta") {
    if (s) return koszul_delta(*s, a);
    if (p) return koszul_delta_pi(*p, a);
    throw UsageError("delta needs --symplectic or --poisson");
  }
  if (!s) throw UsageError(op + " needs --symplectic");
  if (op == "L") return lefschetz_L(*s, a);
  if (op == "Lambda") return lefschetz_Lambda(*s, a);
  if (op == "H") return degree_H(*s, a);
  throw UsageError("unknown operator '" + op + "'");
}

int cmd_eval(const SpaceOptions& sp, const std::vector<std::string>& ops, const std::string& expr) {
  if (sp.chosen() > 1) throw UsageError("give at most one of --symplectic, --dim, --volume, --poisson");
  std::optional<SymplecticSpace> s;
  std::optional<PoissonSpace> p;
  int m = 0;
  if (sp.symplectic) {
    s.emplace(*sp.symplectic);
    m = s->dim();
  } else if (sp.poisson) {
    p.emplace(PoissonSpace::preset(*sp.poisson));
    m = p->dim();
  } else if (sp.volume) {
    m = VolumeSpace(*sp.volume).dim();
  } else if (sp.dim) {
    m = *sp.dim;
  } else {
    m = infer_dim({expr});
  }
  if (m < 1 || m > 8) throw UsageError("dimension must be in 1..8");
  DifferentialForm a = parse_form(expr, m);
  for (const auto& op : ops) a = apply_op(op, a, s, p);
  std::cout << render_form(a) << "\n";
  return 0;
}

int cmd_bracket(const std::string& family, const SpaceOptions& sp, std::optional<int> arity,
                const std::vector<std::string>& exprs) {
  if (exprs.empty()) throw UsageError("no arguments given");
  if (arity && *arity != static_cast<int>(exprs.size()))
    throw UsageError("--arity " + std::to_string(*arity) + " but " + std::to_string(exprs.size()) + " forms given");
  if (sp.poisson) throw UsageError("bracket does not take --poisson");

  std::optional<BracketFamily> fam;
  std::optional<SymplecticSpace> s;
  std::optional<VolumeSpace> v;
  if (family == "symplectic") {
    if (sp.volume) throw UsageError("--volume does not apply to the symplectic family");
    int n = 0;
    if (sp.symplectic) n = *sp.symplectic;
    else if (sp.dim) {
      if (*sp.dim % 2 != 0) throw UsageError("symplectic dimension must be even");
      n = *sp.dim / 2;
    } else {
      n = (infer_dim(exprs) + 1) / 2;
    }
    s.emplace(n);
    fam.emplace(symplectic_family(*s));
  } else {
    if (sp.symplectic) throw UsageError("--symplectic does not apply to the volume family");
    int m = sp.volume ? *sp.volume : sp.dim ? *sp.dim : std::max(3, infer_dim(exprs));
    v.emplace(m);
    fam.emplace(volume_family(*v));
  }

  std::vector<GradedElement> args;
  for (const auto& e : exprs) {
    DifferentialForm a = parse_form(e, fam->nvars());
    const int ld = fam->ldegree_of_form(a.degree());
    if (!fam->in_range(ld))
      throw UsageError("'" + e + "' has form degree " + std::to_string(a.degree()) + ", outside the " + family +
                       " complex");
    args.push_back({a, ld});
  }
  std::cout << render_form(fam->apply(args).form) << "\n";
  return 0;
}

int cmd_verify(const CampaignConfig& config, const std::string& format, const std::string& out_path) {
  const CampaignReport report = run_campaign(config);
  const std::string text = format == "json" ? report.to_json() : report.to_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exterior calculus and L-infinity bracket verifier"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CampaignConfig config;
  std::string format = "text";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "run a seeded verification campaign");
  verify->add_option("--suite", config.suite, "suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--half-dim", config.half_dims, "symplectic half-dimensions, e.g. 1,2")->delimiter(',');
  verify->add_option("--volume-dim", config.volume_dims, "volume-form dimensions, e.g. 3,4")->delimiter(',');
  verify->add_option("--degree", config.degree, "max polynomial degree");
  verify->add_option("--density", config.density, "monomial density in (0,1]");
  verify->add_option("--trials", config.trials, "random trials per check");
  verify->add_option("--seed", config.seed, "campaign seed");
  verify->add_option("--arity-max", config.arity_max, "largest n for symplectic L-infinity identities");
  verify->add_option("--volume-arity-max", config.volume_arity_max, "largest n for volume L-infinity identities");
  verify->add_option("--k-max", config.k_max, "largest k for coefficient recursions");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_flag("--timing", config.timing, "include wall-clock time (makes reports non-reproducible)");
  std::vector<int> perturb;
  verify->add_option("--perturb", perturb, "k,j: break a_k^j on purpose (failure demo)")->delimiter(',')->expected(2);

  SpaceOptions space;
  std::vector<std::string> ops;
  std::string expr;
  auto* eval = app.add_subcommand("eval", "apply operators to a form, left to right");
  eval->add_option("--symplectic", space.symplectic, "standard symplectic R^{2n}");
  eval->add_option("--dim", space.dim, "plain R^m");
  eval->add_option("--volume", space.volume, "R^m with its volume form");
  eval->add_option("--poisson", space.poisson, "sl2star | zero:<m> | symplectic:<n>");
  eval->add_option("--apply", ops, "d, delta, L, Lambda or H; repeatable")
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"d", "delta", "L", "Lambda", "H"}));
  eval->add_option("expr", expr, "form, e.g. \"v1 dx2 - 1/2 dx1^dx3\"")->required();

  std::string family = "symplectic";
  std::optional<int> arity;
  std::vector<std::string> forms;
  auto* bracket = app.add_subcommand("bracket", "evaluate l_k on the given forms");
  bracket->add_option("--family", family, "symplectic or volume")->check(CLI::IsMember({"symplectic", "volume"}));
  bracket->add_option("--symplectic", space.symplectic, "half-dimension n");
  bracket->add_option("--dim", space.dim, "dimension m");
  bracket->add_option("--volume", space.volume, "dimension m of the volume family");
  bracket->add_option("--arity", arity, "expected number of forms");
  bracket->add_option("forms", forms, "arguments")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!perturb.empty()) config.perturb = std::pair{perturb[0], perturb[1]};
    if (*verify) return cmd_verify(config, format, out_path);
    if (*eval) return cmd_eval(space, ops, expr);
    return cmd_bracket(family, space, arity, forms);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::logic_error& e) {  // bad presets, dimensions, degrees
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
