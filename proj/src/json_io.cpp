#include "tacnode/json_io.hpp"

#include "tacnode/errors.hpp"

namespace tacnode {

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ContractViolation("complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

json complex_array(const std::vector<cplx>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(complex_json(z));
  return a;
}

std::vector<cplx> complex_vector(const json& j) {
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

json counts_json(const Counts& c) {
  json o = json::object();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) o[std::to_string(i + 2)] = c[i];
  return o;
}

Counts counts_from_json(const json& j) {
  Counts c;
  for (const auto& [key, val] : j.items()) {
    const int idx = std::stoi(key);
    if (idx < 2) throw ContractViolation("count index must be >= 2");
    if (c.size() < static_cast<std::size_t>(idx - 1)) c.resize(static_cast<std::size_t>(idx - 1), 0);
    c[static_cast<std::size_t>(idx - 2)] = val.get<int>();
  }
  return c;
}

json roots_json(const std::vector<RootMultiplicity>& r) {
  json a = json::array();
  for (const auto& x : r) a.push_back({{"location", complex_json(x.location)}, {"multiplicity", x.multiplicity}});
  return a;
}

std::vector<RootMultiplicity> roots_from_json(const json& j) {
  std::vector<RootMultiplicity> r;
  for (const auto& e : j) r.push_back({complex_from_json(e.at("location")), e.at("multiplicity").get<int>()});
  return r;
}

}  // namespace

void to_json(json& j, const AdmissibleTuple& t) {
  j = {{"m", t.m()}, {"d_plus", counts_json(t.d_plus())}, {"d_minus", counts_json(t.d_minus())}};
}

AdmissibleTuple tuple_from_json(const json& j) {
  AdmissibleTuple t(counts_from_json(j.at("d_plus")), counts_from_json(j.at("d_minus")));
  if (j.contains("m") && j.at("m").get<int>() != t.m()) throw ContractViolation("stored m differs from derived m");
  return t;
}

void to_json(json& j, const Profile& p) { j = {{"m", p.m()}, {"d", counts_json(p.d)}}; }
void from_json(const json& j, Profile& p) { p.d = counts_from_json(j.at("d")); }

void to_json(json& j, const Permutation& p) { j = p.image(); }

void to_json(json& j, const PermutationTriple& t) {
  j = {{"m", t.m()}, {"tau_plus", t.tau_plus}, {"tau_minus", t.tau_minus}, {"sigma", t.sigma}};
}

PermutationTriple triple_from_json(const json& j) {
  return {Permutation(j.at("tau_plus").get<std::vector<int>>()), Permutation(j.at("tau_minus").get<std::vector<int>>()),
          Permutation(j.at("sigma").get<std::vector<int>>())};
}

void to_json(json& j, const MonicPoly& p) { j = {{"degree", p.degree()}, {"coeffs", complex_array(p.coeffs())}}; }

MonicPoly poly_from_json(const json& j) {
  MonicPoly p(complex_vector(j.at("coeffs")));
  if (j.contains("degree") && j.at("degree").get<int>() != p.degree()) throw ContractViolation("degree mismatch");
  return p;
}

void to_json(json& j, const VersalPoint& p) {
  j = {{"m", p.m}, {"alpha", complex_array(p.alpha)}, {"beta", complex_array(p.beta)}};
}

void from_json(const json& j, VersalPoint& p) {
  p.m = j.at("m").get<int>();
  p.alpha = complex_vector(j.at("alpha"));
  p.beta = complex_vector(j.at("beta"));
  p.validate();
}

void to_json(json& j, const SingularityProfile& p) {
  j = json::object();
  for (const auto& [k, c] : p.counts) j["A" + std::to_string(k)] = c;
}

void from_json(const json& j, SingularityProfile& p) {
  p.counts.clear();
  for (const auto& [key, val] : j.items()) {
    if (key.size() < 2 || key[0] != 'A') throw ContractViolation("profile keys look like A<k>");
    p.counts[std::stoi(key.substr(1))] = val.get<int>();
  }
}

void to_json(json& j, const RootCluster& c) {
  j = {{"location", complex_json(c.location)}, {"multiplicity", c.multiplicity}, {"residual", c.residual}};
}

void to_json(json& j, const ShabatSolution& s) {
  j = {{"nu", s.nu},
       {"roots_plus", roots_json(s.roots_plus)},
       {"roots_minus", roots_json(s.roots_minus)},
       {"residual", s.residual},
       {"seed", s.seed},
       {"attempts", s.attempts}};
}

ShabatSolution solution_from_json(const json& j) {
  ShabatSolution s;
  s.nu = poly_from_json(j.at("nu"));
  s.roots_plus = roots_from_json(j.at("roots_plus"));
  s.roots_minus = roots_from_json(j.at("roots_minus"));
  s.residual = j.at("residual").get<double>();
  s.seed = j.value("seed", std::uint64_t{0});
  s.attempts = j.value("attempts", 0);
  return s;
}

void to_json(json& j, const BranchParam& b) {
  json terms = json::array();
  for (const auto& t : b.terms)
    terms.push_back({{"target", t.name()},
                     {"exponent", t.exponent},
                     {"reduced_exponent", t.exponent / b.reduction},
                     {"coefficient", complex_json(t.coefficient)},
                     {"ambiguous", t.ambiguous}});
  j = {{"m", b.m}, {"split", b.split}, {"reduction", b.reduction}, {"terms", terms}};
}

void to_json(json& j, const MultiplicityReport& r) {
  j = {{"k", r.k},
       {"m_C_per_branch", r.m_C_per_branch},
       {"m_C_total", r.m_C_total},
       {"m_g", r.m_g},
       {"expected_m_C_total", r.expected_total},
       {"matches_expectation", r.matches_expectation}};
}

namespace k3 {

void to_json(json& j, const K3Budget& b) {
  j = {{"p", b.p},           {"n", b.n},           {"l", b.l},
       {"epsilon", b.epsilon}, {"dim_nH", b.dim_nH}, {"budget", b.budget},
       {"exceptional", b.exceptional}};
}

void to_json(json& j, const RegularityCheck& r) {
  json a = json::object();
  for (const auto& [k, c] : r.a) a["A" + std::to_string(k)] = c;
  j = {{"a", a},
       {"deg_T1", r.deg_T1},
       {"threshold", {{"num", r.threshold.num}, {"den", r.threshold.den}}},
       {"passes", r.passes},
       {"keilen", {{"lhs", r.keilen_lhs}, {"rhs", r.keilen_rhs}, {"passes", r.keilen_passes}}}};
}

}  // namespace k3
}  // namespace tacnode
