#include "tacnode/cli.hpp"

#include <CLI11.hpp>
#include <bit>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "tacnode/errors.hpp"
#include "tacnode/json_io.hpp"

namespace tacnode::cli {

Counts parse_counts(const std::string& text) {
  Counts c;
  if (text.empty() || text == "-") return c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ContractViolation("expected j:count in '" + item + "'");
    int j = 0, n = 0;
    try {
      std::size_t used = 0;
      j = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      n = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ContractViolation("malformed count entry '" + item + "'");
    }
    if (j < 2 || n < 0) throw ContractViolation("count entries need j >= 2 and count >= 0");
    if (c.size() < static_cast<std::size_t>(j - 1)) c.resize(static_cast<std::size_t>(j - 1), 0);
    c[static_cast<std::size_t>(j - 2)] += n;
  }
  return c;
}

long ulp_distance(double a, double b) {
  if (a == b) return 0;
  if (std::isnan(a) || std::isnan(b) || std::signbit(a) != std::signbit(b)) return std::numeric_limits<long>::max();
  const auto ia = std::bit_cast<std::int64_t>(a);
  const auto ib = std::bit_cast<std::int64_t>(b);
  return static_cast<long>(ia > ib ? ia - ib : ib - ia);
}

namespace {

struct Globals {
  std::uint64_t seed = SolverConfig{}.rng_seed;
  double tol = kDefaultClusterTol;
  bool json = false;
  std::string out_file;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json certificate(const std::string& command, const Globals& g, json inputs, json outputs, json residuals) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"tool_version", kToolVersion},
          {"timestamp", utc_timestamp()},
          {"seed", g.seed},
          {"tol", g.tol},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"residuals", std::move(residuals)}};
}

// Prints the certificate when --json, writes it when --out. Returns true when text output is wanted.
bool emit(const json& cert, const Globals& g, std::ostream& out) {
  if (!g.out_file.empty()) {
    std::ofstream f(g.out_file);
    if (!f) throw ContractViolation("cannot write " + g.out_file);
    f << cert.dump(2) << '\n';
  }
  if (g.json) {
    out << cert.dump(2) << '\n';
    return false;
  }
  return true;
}

AdmissibleTuple tuple_from_args(int m, const std::string& plus, const std::string& minus) {
  AdmissibleTuple t(parse_counts(plus), parse_counts(minus));
  if (m != 0 && t.m() != m)
    throw ContractViolation("--m " + std::to_string(m) + " disagrees with the tuple's m = " + std::to_string(t.m()));
  return t;
}

Profile profile_from_args(int m, const std::string& text) {
  Profile p{parse_counts(text)};
  if (total_count(p.d) == 0) throw ContractViolation("profile is empty");
  if (m != 0 && p.m() != m)
    throw ContractViolation("profile has sum (j-1) d_j = " + std::to_string(p.m() - 1) + ", expected m - 1 = " +
                            std::to_string(m - 1));
  return p;
}

SolverConfig solver_config(const Globals& g, int restarts, int iterations) {
  SolverConfig c;
  c.rng_seed = g.seed;
  if (restarts > 0) c.restart_count = restarts;
  if (iterations > 0) c.max_iterations = iterations;
  return c;
}

std::vector<int> structural_zeros(const MonicPoly& nu) {
  std::vector<int> z;
  double scale = 0.0;
  for (int i = 0; i + 1 < nu.degree(); ++i) scale = std::max(scale, std::abs(nu.coeff(i)));
  for (int i = 0; i + 1 < nu.degree(); ++i)
    if (std::abs(nu.coeff(i)) < kZeroBelow * scale) z.push_back(i);
  return z;
}

// ---- splits

json splits_outputs(const Profile& p) {
  const auto splits = enumerate_splits(p);
  json list = json::array();
  for (const auto& s : splits) list.push_back(s);
  return {{"k", splits.size()}, {"splits", list}, {"empty_flag", splits.empty()}};
}

int cmd_splits(const Globals& g, int m, const std::string& profile_text, std::ostream& out) {
  const Profile p = profile_from_args(m, profile_text);
  const json outputs = splits_outputs(p);
  const json cert = certificate("splits", g, {{"profile", p}}, outputs, json::object());
  if (emit(cert, g, out)) {
    out << "profile " << p.to_string() << " (m = " << p.m() << ")\n";
    out << "k = " << outputs["k"].get<int>() << '\n';
    for (const auto& s : enumerate_splits(p)) out << "  " << s.to_string() << '\n';
    if (outputs["empty_flag"].get<bool>()) out << "warning: no admissible split\n";
  }
  return kOk;
}

// ---- factorize

json factorize_outputs(const AdmissibleTuple& t) {
  const PermutationTriple triple = factorize(t);
  return {{"triple", triple},
          {"canonical", canonical_form(triple)},
          {"ramification", ramification_check(triple)},
          {"violations", triple_violations(triple, t)}};
}

int cmd_factorize(const Globals& g, int m, const std::string& plus, const std::string& minus, std::ostream& out) {
  const AdmissibleTuple t = tuple_from_args(m, plus, minus);
  const json outputs = factorize_outputs(t);
  const json cert = certificate("factorize", g, {{"tuple", t}}, outputs, json::object());
  if (emit(cert, g, out)) {
    const PermutationTriple tr = triple_from_json(outputs["triple"]);
    const PermutationTriple cf = triple_from_json(outputs["canonical"]);
    out << t.to_string() << '\n';
    out << "tau+  = " << tr.tau_plus.to_cycle_string() << '\n';
    out << "tau-  = " << tr.tau_minus.to_cycle_string() << '\n';
    out << "sigma = " << tr.sigma.to_cycle_string() << '\n';
    out << "canonical: tau+ = " << cf.tau_plus.to_cycle_string() << ", tau- = " << cf.tau_minus.to_cycle_string()
        << ", sigma = " << cf.sigma.to_cycle_string() << '\n';
    out << "ramification = " << outputs["ramification"].get<int>() << " (2m-2 = " << 2 * t.m() - 2 << ")\n";
  }
  return kOk;
}

// ---- solve

json solve_outputs(const AdmissibleTuple& t, const ShabatSolution& sol) {
  const VerifyReport rep = verify(sol, t);
  json mono = json::object();
  try {
    const PermutationTriple lifted = monodromy_of(sol);
    const bool match = canonical_form(lifted) == canonical_form(factorize(t));
    mono = {{"triple", lifted}, {"canonical", canonical_form(lifted)}, {"matches_factorize", match}};
  } catch (const PathLiftingFailure& e) {
    mono = {{"error", e.what()}};
  }
  return {{"solution", sol},
          {"nu_text", format_poly(sol.nu, 17)},
          {"structural_zeros", structural_zeros(sol.nu)},
          {"verified", rep.ok},
          {"issues", rep.issues},
          {"notes", rep.notes},
          {"monodromy", mono},
          {"zeta_convention", "rotation with lexicographically least coefficient arguments in [0, 2pi)"}};
}

int cmd_solve(const Globals& g, int m, const std::string& plus, const std::string& minus, bool cheb, int restarts,
              int iterations, std::ostream& out) {
  AdmissibleTuple t = cheb ? balanced_nodal_tuple(m) : tuple_from_args(m, plus, minus);
  const SolverConfig cfg = solver_config(g, restarts, iterations);
  const ShabatSolution sol = cheb ? chebyshev_oracle(m) : solve(t, cfg);
  const json outputs = solve_outputs(t, sol);
  const json inputs = {{"tuple", t},
                       {"chebyshev_oracle", cheb},
                       {"config",
                        {{"max_iterations", cfg.max_iterations},
                         {"newton_tolerance", cfg.newton_tolerance},
                         {"restart_count", cfg.restart_count},
                         {"rng_seed", cfg.rng_seed}}}};
  const json cert = certificate("solve", g, inputs, outputs, {{"coefficient", sol.residual}});
  if (emit(cert, g, out)) {
    out << t.to_string() << (cheb ? "  [chebyshev oracle]" : "") << '\n';
    out << "nu(z) = " << format_poly(sol.nu, 10) << '\n';
    out << "residual = " << std::setprecision(3) << sol.residual << ", verified = " << (outputs["verified"].get<bool>() ? "yes" : "no") << '\n';
    for (int i = 0; i + 1 < sol.nu.degree(); ++i)
      out << "  c_" << i << " = " << format_complex(sol.nu.coeff(i), 17) << '\n';
    if (outputs["monodromy"].contains("matches_factorize"))
      out << "monodromy matches factorize: " << (outputs["monodromy"]["matches_factorize"].get<bool>() ? "yes" : "no") << '\n';
  }
  return outputs["verified"].get<bool>() ? kOk : kNumerical;
}

// ---- classify

std::vector<cplx> parse_complex_list(const std::string& text) {
  std::vector<cplx> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // "re" or "re:im"
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) v.emplace_back(std::stod(item), 0.0);
      else v.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw ContractViolation("malformed number '" + item + "'");
    }
  }
  return v;
}

json classify_outputs(const VersalPoint& p, double tol) {
  const SingularityProfile prof = classify(p, tol);
  json clusters = json::array();
  for (const auto& c : cluster_roots(discriminant(p), tol)) clusters.push_back(c);
  return {{"profile", prof}, {"discriminant", discriminant(p)}, {"clusters", clusters}};
}

int cmd_classify(const Globals& g, const std::string& point_file, int m, const std::string& alpha,
                 const std::string& beta, std::ostream& out) {
  VersalPoint p;
  if (!point_file.empty()) {
    std::ifstream f(point_file);
    if (!f) throw ContractViolation("cannot read " + point_file);
    p = json::parse(f).get<VersalPoint>();
  } else {
    p = VersalPoint::origin(m);
    if (!alpha.empty()) p.alpha = parse_complex_list(alpha);
    if (!beta.empty()) p.beta = parse_complex_list(beta);
    p.validate();
  }
  const json outputs = classify_outputs(p, g.tol);
  const json cert = certificate("classify", g, {{"point", p}}, outputs, json::object());
  if (emit(cert, g, out)) {
    out << "Delta(z) = " << format_poly(discriminant(p), 10) << '\n';
    out << "singularities: " << outputs["profile"].get<SingularityProfile>().to_string() << '\n';
  }
  return kOk;
}

// ---- locus

json locus_outputs(const Profile& p, const std::vector<std::pair<AdmissibleTuple, ShabatSolution>>& sols,
                   json& residuals) {
  json branches = json::array();
  residuals = json::object();
  for (const auto& [split, sol] : sols) {
    branches.push_back({{"split", split}, {"solution", sol}, {"branch", branch_for(split, sol)}});
    residuals[split.to_string()] = sol.residual;
  }
  return {{"k", sols.size()}, {"branches", branches}, {"report", multiplicities(p, sols)}};
}

int cmd_locus(const Globals& g, int m, const std::string& profile_text, int restarts, int iterations,
              std::ostream& out) {
  const Profile p = profile_from_args(m, profile_text);
  const SolverConfig cfg = solver_config(g, restarts, iterations);
  std::vector<std::pair<AdmissibleTuple, ShabatSolution>> sols;
  for (const auto& split : enumerate_splits(p)) sols.emplace_back(split, solve(split, cfg));
  json residuals;
  const json outputs = locus_outputs(p, sols, residuals);
  const json cert = certificate("locus", g, {{"profile", p}}, outputs, residuals);
  if (emit(cert, g, out)) {
    const MultiplicityReport r = multiplicities(p, sols);
    out << "profile " << p.to_string() << " (m = " << p.m() << "), k = " << r.k << '\n';
    for (std::size_t i = 0; i < sols.size(); ++i) {
      out << "branch " << i + 1 << ": " << sols[i].first.to_string() << ", m_C = " << r.m_C_per_branch[i] << '\n';
      std::istringstream lines(branch_for(sols[i].first, sols[i].second).to_string());
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
    out << "m_C total = " << r.m_C_total << ", m_g = " << r.m_g << ", expected m*k = " << r.expected_total
        << (r.matches_expectation ? " (observed = expected)" : " (observed != expected)") << '\n';
  }
  return kOk;
}

// ---- k3

// "k:count,..." with k >= 1 meaning A_k.
std::map<int, int> parse_ak_counts(const std::string& text) {
  std::map<int, int> a;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ContractViolation("expected k:count in '" + item + "'");
    try {
      a[std::stoi(item.substr(0, colon))] += std::stoi(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw ContractViolation("malformed A_k entry '" + item + "'");
    }
  }
  return a;
}

int cmd_k3(const Globals& g, int p, int n, int p_to, int n_to, int max_k, bool sub, bool csv,
           const std::string& regularity_text, std::ostream& out) {
  const int p_last = std::max(p, p_to);
  const int n_last = std::max(n, n_to);
  const bool table = p_last != p || n_last != n;
  json rows = json::array();
  for (int pp = p; pp <= p_last; ++pp)
    for (int nn = n; nn <= n_last; ++nn) {
      const k3::K3Budget b = k3::budget(pp, nn);
      json row = b;
      if (!table) {
        json profs = json::array();
        for (const auto& prof : k3::enumerate_profiles(pp, nn, max_k, sub))
          profs.push_back({{"d", json(prof)["d"]}, {"delta", k3::delta(b, prof)}});
        row["profiles"] = profs;
        row["profile_count"] = profs.size();
      }
      if (!regularity_text.empty()) {
        row["regularity"] = k3::regularity(pp, nn, parse_ak_counts(regularity_text));
      }
      rows.push_back(row);
    }
  const json cert = certificate("k3", g, {{"p", p}, {"n", n}, {"p_to", p_last}, {"n_to", n_last}, {"max_k", max_k}, {"subprofiles", sub}},
                                {{"rows", rows}}, json::object());
  if (!emit(cert, g, out)) return kOk;
  if (csv) {
    out << "p,n,l,epsilon,dim_nH,budget,exceptional";
    if (!regularity_text.empty()) out << ",deg_T1,threshold,regular";
    out << '\n';
    for (const auto& r : rows) {
      out << r["p"] << ',' << r["n"] << ',' << r["l"] << ',' << r["epsilon"] << ',' << r["dim_nH"] << ','
          << r["budget"] << ',' << (r["exceptional"].get<bool>() ? 1 : 0);
      if (r.contains("regularity")) {
        const auto& reg = r["regularity"];
        out << ',' << reg["deg_T1"] << ',' << reg["threshold"]["num"] << '/' << reg["threshold"]["den"] << ','
            << (reg["passes"].get<bool>() ? 1 : 0);
      }
      out << '\n';
    }
    return kOk;
  }
  for (const auto& r : rows) {
    out << "p = " << r["p"] << ", n = " << r["n"] << " (l = " << r["l"] << ", epsilon = " << r["epsilon"]
        << "): dim|nH| = " << r["dim_nH"] << ", budget = " << r["budget"]
        << (r["exceptional"].get<bool>() ? " [exceptional]" : "") << '\n';
    if (r.contains("profiles")) {
      out << "  " << r["profile_count"] << " profiles\n";
      for (const auto& prof : r["profiles"]) {
        out << "    " << prof.get<Profile>().to_string() << "  delta = " << prof["delta"] << '\n';
      }
    }
    if (r.contains("regularity")) {
      const auto& reg = r["regularity"];
      out << "  deg T1 = " << reg["deg_T1"] << " vs threshold " << reg["threshold"]["num"] << '/'
          << reg["threshold"]["den"] << ": " << (reg["passes"].get<bool>() ? "regular" : "not certified") << '\n';
    }
  }
  return kOk;
}

// ---- verify

bool residual_matches(double stored, double recomputed, std::ostream& out, const std::string& label) {
  const long d = ulp_distance(stored, recomputed);
  out << label << ": stored " << std::setprecision(17) << stored << ", recomputed " << recomputed << " (" << d
      << " ulp)\n";
  return d <= 2;
}

int cmd_verify(const Globals& g, const std::string& file, std::ostream& out) {
  std::ifstream f(file);
  if (!f) throw ContractViolation("cannot read " + file);
  const json cert = json::parse(f);
  if (cert.value("schema_version", 0) != kSchemaVersion) throw ContractViolation("unsupported schema_version");
  const std::string command = cert.at("command").get<std::string>();
  const json& in = cert.at("inputs");
  const json& stored = cert.at("outputs");
  bool ok = true;

  if (command == "splits") {
    ok = splits_outputs(in.at("profile").get<Profile>())["splits"] == stored.at("splits");
  } else if (command == "factorize") {
    const AdmissibleTuple t = tuple_from_json(in.at("tuple"));
    const PermutationTriple tr = triple_from_json(stored.at("triple"));
    ok = triple_violations(tr, t).empty() && canonical_form(tr) == canonical_form(factorize(t));
  } else if (command == "solve") {
    const AdmissibleTuple t = tuple_from_json(in.at("tuple"));
    const ShabatSolution sol = solution_from_json(stored.at("solution"));
    ok = residual_matches(cert.at("residuals").at("coefficient").get<double>(), solution_residual(sol), out, "coefficient residual");
    const VerifyReport rep = verify(sol, t);
    for (const auto& issue : rep.issues) out << "issue: " << issue << '\n';
    for (const auto& note : rep.notes) out << "note: " << note << '\n';
    ok = ok && rep.ok;
  } else if (command == "classify") {
    const VersalPoint p = in.at("point").get<VersalPoint>();
    ok = classify(p, cert.value("tol", kDefaultClusterTol)) == stored.at("profile").get<SingularityProfile>();
  } else if (command == "locus") {
    const Profile p = in.at("profile").get<Profile>();
    std::vector<std::pair<AdmissibleTuple, ShabatSolution>> sols;
    for (const auto& b : stored.at("branches")) {
      AdmissibleTuple t = tuple_from_json(b.at("split"));
      ShabatSolution s = solution_from_json(b.at("solution"));
      ok = residual_matches(cert.at("residuals").at(t.to_string()).get<double>(), solution_residual(s), out,
                            t.to_string()) && ok;
      ok = verify(s, t).ok && ok;
      sols.emplace_back(std::move(t), std::move(s));
    }
    const json report = multiplicities(p, sols);
    ok = ok && report == stored.at("report");
  } else if (command == "k3") {
    for (const auto& row : stored.at("rows")) {
      const json again = k3::budget(row.at("p").get<int>(), row.at("n").get<int>());
      for (const auto& [key, val] : again.items()) ok = ok && row.at(key) == val;
    }
  } else {
    throw ContractViolation("unknown certificate command '" + command + "'");
  }
  (void)g;
  out << "certificate " << file << " (" << command << "): " << (ok ? "reproduced" : "MISMATCH") << '\n';
  return ok ? kOk : kNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tacnode deformations: permutation triples, Shabat polynomials, locus multiplicities, K3 budgets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed for the Newton restarts");
  app.add_option("--tol", g.tol, "Relative root-clustering tolerance");
  app.add_flag("--json", g.json, "Print the JSON certificate instead of text");
  app.add_option("--out", g.out_file, "Also write the JSON certificate to FILE");

  int m = 0, restarts = 0, iterations = 0;
  std::string profile, plus, minus, point_file, alpha, beta, cert_file, regularity;
  bool cheb = false, sub = false, csv = false;
  int p = 0, n = 1, p_to = 0, n_to = 0, max_k = 0;

  auto* splits = app.add_subcommand("splits", "Admissible splits of a profile");
  splits->add_option("--m", m, "Tacnode order");
  splits->add_option("--profile", profile, "Profile j:count,... (d_j singularities A_{j-1})")->required();

  auto* fact = app.add_subcommand("factorize", "Permutation triple for an admissible tuple");
  fact->add_option("--m", m, "Tacnode order");
  fact->add_option("--plus", plus, "d+ as j:count,...");
  fact->add_option("--minus", minus, "d- as j:count,...");

  auto* solve_cmd = app.add_subcommand("solve", "Solve for nu with prescribed nu+1 / nu-1 root multiplicities");
  solve_cmd->add_option("--m", m, "Tacnode order");
  solve_cmd->add_option("--plus", plus, "d+ (roots of nu+1) as j:count,...");
  solve_cmd->add_option("--minus", minus, "d- (roots of nu-1) as j:count,...");
  solve_cmd->add_flag("--cheb", cheb, "Use the closed-form Chebyshev solution for the balanced nodal split");
  solve_cmd->add_option("--restarts", restarts, "Maximum number of Newton starts");
  solve_cmd->add_option("--max-iter", iterations, "Newton iterations per start");

  auto* classify_cmd = app.add_subcommand("classify", "A_k singularities of a versal point");
  classify_cmd->add_option("--point", point_file, "VersalPoint JSON file");
  classify_cmd->add_option("--m", m, "Tacnode order");
  classify_cmd->add_option("--alpha", alpha, "alpha_0..alpha_{m-2}, comma separated (re or re:im)");
  classify_cmd->add_option("--beta", beta, "beta_0..beta_{m-1}, comma separated (re or re:im)");

  auto* locus = app.add_subcommand("locus", "Branches of the deformation locus and their multiplicities");
  locus->add_option("--m", m, "Tacnode order");
  locus->add_option("--profile", profile, "Profile j:count,...")->required();
  locus->add_option("--restarts", restarts, "Maximum number of Newton starts");
  locus->add_option("--max-iter", iterations, "Newton iterations per start");

  auto* k3_cmd = app.add_subcommand("k3", "Singularity budgets on K3 surfaces");
  k3_cmd->add_option("--p", p, "Genus p >= 3")->required();
  k3_cmd->add_option("--n", n, "Multiple n >= 1");
  k3_cmd->add_option("--p-to", p_to, "Tabulate p up to this value");
  k3_cmd->add_option("--n-to", n_to, "Tabulate n up to this value");
  k3_cmd->add_option("--max-k", max_k, "Largest index k of d_k in profiles (default: unbounded)");
  k3_cmd->add_flag("--sub", sub, "Include sub-profiles (independent smoothing)");
  k3_cmd->add_flag("--csv", csv, "CSV table output");
  k3_cmd->add_option("--regularity", regularity, "A_k counts as k:count,... for the regularity test");

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a JSON certificate");
  verify_cmd->add_option("certificate", cert_file, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*splits) return cmd_splits(g, m, profile, out);
    if (*fact) return cmd_factorize(g, m, plus, minus, out);
    if (*solve_cmd) return cmd_solve(g, m, plus, minus, cheb, restarts, iterations, out);
    if (*classify_cmd) return cmd_classify(g, point_file, m, alpha, beta, out);
    if (*locus) return cmd_locus(g, m, profile, restarts, iterations, out);
    if (*k3_cmd) return cmd_k3(g, p, n, p_to, n_to, max_k, sub, csv, regularity, out);
    if (*verify_cmd) return cmd_verify(g, cert_file, out);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const Ambiguity& e) {
    err << "ambiguous: " << e.what() << '\n';
    return kAmbiguous;
  }
  return kBadInput;
}

}  // namespace tacnode::cli
