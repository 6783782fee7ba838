// Command-line surface: generators, verifiers and reports with JSON output
// on stdout and a short human summary on stderr. Exit codes: 0 success,
// 1 refuted relation or mismatched plumbing, 2 usage or input error.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pmcg/json_io.hpp"

using namespace pmcg;

namespace {

constexpr int kOk = 0, kRefuted = 1, kUsage = 2;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Relation make_family(const std::string& family, const std::vector<long long>& params) {
  if (family == "lantern") {
    if (!params.empty()) throw std::invalid_argument("lantern takes no parameters");
    return lantern();
  }
  if (family == "daisy") {
    if (params.size() != 1) throw std::invalid_argument("daisy takes one parameter p");
    return daisy(int(params[0]));
  }
  if (family == "wfam") {
    if (params.size() != 3) throw std::invalid_argument("wfam takes p q r");
    return w_family(int(params[0]), int(params[1]), int(params[2]));
  }
  if (family == "nfam") {
    if (params.size() != 3) throw std::invalid_argument("nfam takes p q r");
    return n_family(int(params[0]), int(params[1]), int(params[2]));
  }
  if (family == "linear") {
    if (params.size() != 2) throw std::invalid_argument("linear takes p q");
    return linear_family(params[0], params[1]);
  }
  throw std::invalid_argument("unknown family: " + family);
}

PlumbingGraph graph_for(const std::string& family, const std::vector<long long>& params) {
  if (family == "lantern") return linear_chain(2, 1);
  if (family == "daisy") return linear_chain(params.at(0), 1);
  if (family == "wfam")
    return gamma_w(int(params.at(0)), int(params.at(1)), int(params.at(2)));
  if (family == "nfam")
    return delta_n(int(params.at(0)), int(params.at(1)), int(params.at(2)));
  if (family == "linear") return linear_chain(params.at(0), params.at(1));
  throw std::invalid_argument("unknown family: " + family);
}

int cmd_generate(const std::string& family, const std::vector<long long>& params) {
  Relation rel = make_family(family, params);
  Json j = relation_to_json(rel);
  j["properties"] = properties_to_json(properties_check(rel));
  if (family == "linear") j["cf"] = cf_to_json(cf_expand(params.at(0), params.at(1)));
  emit(j);
  if (rel.certificate != CertStatus::verified) {
    std::cerr << family << ": relation refuted (this indicates a bug)\n";
    return kRefuted;
  }
  std::cerr << family << ": verified relation on " << rel.surface.holes
            << " holes (lhs " << rel.lhs.twist_count() << " twists, rhs "
            << rel.rhs.twist_count() << ")\n";
  return kOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kUsage;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  Relation rel;
  try {
    rel = relation_from_json(Json::parse(ss.str()));
  } catch (const std::exception& e) {
    std::cerr << "malformed relation file: " << e.what() << "\n";
    return kUsage;
  }
  rel.certificate = CertStatus::unverified;
  rel.diagnostic.reset();
  rel = verify_relation(std::move(rel));
  Json j;
  j["certificate"] = relation_to_json(rel)["certificate"];
  emit(j);
  if (rel.certificate == CertStatus::verified) {
    std::cerr << "verified\n";
    return kOk;
  }
  std::cerr << "refuted";
  if (rel.diagnostic)
    std::cerr << " (first differing generator " << rel.diagnostic->first_differing_generator
              << ", homology screen "
              << (rel.diagnostic->homology_screen_passed ? "passed" : "failed") << ")";
  std::cerr << "\n";
  return kRefuted;
}

int cmd_cf(long long p, long long q) {
  CFExpansion e = cf_expand(p, q);
  Json j = cf_to_json(e);
  if (q > 1) j["theta_chain"] = theta_to_json(theta_chain(p, q));
  emit(j);
  std::cerr << "cf(" << p << "," << q << "): " << e.coefficients.size()
            << " coefficients\n";
  return kOk;
}

int cmd_blowdown_report(const std::string& family, const std::vector<long long>& params,
                        std::optional<long long> chi, std::optional<long long> sigma) {
  Relation rel = make_family(family, params);
  PlumbingGraph g = graph_for(family, params);
  MatchReport match = matches_plumbing(rel.lhs, g);
  Json j;
  j["family"] = family;
  j["params"] = params;
  j["graph"] = graph_to_json(g);
  j["lhs_twists"] = rel.lhs.twist_count();
  j["rhs_twists"] = rel.rhs.twist_count();
  j["length_difference"] = rel.lhs.twist_count() - rel.rhs.twist_count();
  j["vertex_count"] = g.vertex_count();
  j["matches_plumbing"] = match_to_json(match);
  j["rhs_homology"] = fibration_homology_to_json(fibration_homology(rel.rhs));
  if (chi && sigma) {
    auto [chi2, sigma2] = blowdown_invariants(*chi, *sigma, g);
    j["blowdown"]["chi"] = chi2;
    j["blowdown"]["sigma"] = sigma2;
    j["blowdown"]["homeo_type"] = homeo_to_json(homeo_type(chi2, sigma2));
  }
  emit(j);
  if (match.verdict == MatchVerdict::mismatch) {
    std::cerr << "plumbing mismatch\n";
    return kRefuted;
  }
  std::cerr << family << ": " << (match.verdict == MatchVerdict::exact_basis
                                      ? "exact basis match"
                                      : "invariants match")
            << ", |V| = " << g.vertex_count() << "\n";
  return kOk;
}

int cmd_rho(int g, int max_genus) {
  if (g < 2 || g > max_genus) {
    std::cerr << "g must lie in [2.." << max_genus << "]\n";
    return kUsage;
  }
  Section4Report rep = section4_report(g);
  emit(section4_to_json(rep));
  std::cerr << "rho(" << g << "): |rho| = " << rep.len_rho << ", type ("
            << rep.type_after.b2plus << "," << rep.type_after.b2minus << "), "
            << (rep.rho_checks.all_required_passed() ? "all required checks passed"
                                                     : "A REQUIRED CHECK FAILED")
            << "\n";
  return rep.rho_checks.all_required_passed() ? kOk : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar mapping class group twist relations and rational blowdowns"};
  app.require_subcommand(0, 1);

  bool ledger = false;
  app.add_flag("--convention-ledger", ledger,
               "print the pinned routing/composition conventions and exit");

  auto* gen = app.add_subcommand("generate", "construct and certify a relation family");
  std::string gen_family;
  std::vector<long long> gen_params;
  gen->add_option("family", gen_family, "lantern|daisy|wfam|nfam|linear")->required();
  gen->add_option("params", gen_params, "family parameters");

  auto* ver = app.add_subcommand("verify", "re-run the oracle on a relation JSON file");
  std::string ver_path;
  ver->add_option("file", ver_path, "relation JSON file")->required();

  auto* cf = app.add_subcommand("cf", "continued-fraction data of p^2/(pq-1)");
  long long cf_p = 0, cf_q = 0;
  cf->add_option("p", cf_p)->required();
  cf->add_option("q", cf_q)->required();

  auto* bd = app.add_subcommand("blowdown-report",
                                "plumbing graph, kernel-lattice match and invariants");
  std::string bd_family;
  std::vector<long long> bd_params;
  long long bd_chi = 0, bd_sigma = 0;
  bool has_chi = false, has_sigma = false;
  bd->add_option("family", bd_family, "lantern|daisy|wfam|nfam|linear")->required();
  bd->add_option("params", bd_params, "family parameters");
  auto* chi_opt = bd->add_option("--chi", bd_chi, "Euler characteristic of the ambient fibration");
  auto* sigma_opt = bd->add_option("--sigma", bd_sigma, "signature of the ambient fibration");

  auto* rho = app.add_subcommand("rho", "closed-example word constructions and checks");
  int rho_g = 0, rho_max = 4;
  rho->add_option("g", rho_g, "fiber genus")->required();
  rho->add_option("--max-genus", rho_max, "upper bound for g (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (ledger) {
      std::cout << convention_ledger();
      return kOk;
    }
    if (gen->parsed()) return cmd_generate(gen_family, gen_params);
    if (ver->parsed()) return cmd_verify(ver_path);
    if (cf->parsed()) return cmd_cf(cf_p, cf_q);
    if (bd->parsed()) {
      has_chi = chi_opt->count() > 0;
      has_sigma = sigma_opt->count() > 0;
      return cmd_blowdown_report(
          bd_family, bd_params,
          has_chi ? std::optional<long long>(bd_chi) : std::nullopt,
          has_sigma ? std::optional<long long>(bd_sigma) : std::nullopt);
    }
    if (rho->parsed()) return cmd_rho(rho_g, rho_max);
    std::cerr << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRefuted;
  }
}
