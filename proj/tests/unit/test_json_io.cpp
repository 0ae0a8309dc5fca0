#include <doctest.h>

#include "tacnode/errors.hpp"
#include "tacnode/json_io.hpp"

using namespace tacnode;

TEST_CASE("complex numbers round-trip bit-exactly") {
  const cplx z(0.1 + 0.2, -1.0 / 3.0);
  const json j = json::parse(complex_json(z).dump());
  CHECK(complex_from_json(j) == z);
  CHECK(complex_from_json(json(2.5)) == cplx(2.5));
  CHECK_THROWS_AS(complex_from_json(json::array({1.0})), ContractViolation);
}

TEST_CASE("tuples round-trip") {
  const AdmissibleTuple t({1, 1}, {0, 0, 1});
  const json j = t;
  CHECK(j.at("m") == 7);
  CHECK(tuple_from_json(json::parse(j.dump())) == t);
  json bad = j;
  bad["m"] = 6;
  CHECK_THROWS_AS(tuple_from_json(bad), ContractViolation);
}

TEST_CASE("profiles and singularity profiles round-trip") {
  const Profile p{{2, 0, 1}};
  CHECK(json(p).get<Profile>() == p);
  const SingularityProfile s{{{1, 2}, {4, 1}}};
  const json js = s;
  CHECK(js.at("A4") == 1);
  CHECK(js.get<SingularityProfile>() == s);
}

TEST_CASE("triples round-trip") {
  const PermutationTriple t = factorize(AdmissibleTuple({0, 1}, {0, 1}));
  CHECK(triple_from_json(json::parse(json(t).dump())) == t);
}

TEST_CASE("versal points round-trip and validate") {
  VersalPoint p = VersalPoint::origin(3);
  p.alpha[1] = cplx(0.3, -0.7);
  p.beta[0] = 0.25;
  const VersalPoint q = json::parse(json(p).dump()).get<VersalPoint>();
  CHECK(q.m == 3);
  CHECK(q.alpha == p.alpha);
  CHECK(q.beta == p.beta);
  json bad = p;
  bad["beta"] = json::array({json::array({0.0, 0.0})});
  CHECK_THROWS_AS(bad.get<VersalPoint>(), ContractViolation);
}

TEST_CASE("solutions round-trip bit-exactly") {
  const ShabatSolution s = solve(AdmissibleTuple({1, 1}, {1}));
  const ShabatSolution r = solution_from_json(json::parse(json(s).dump()));
  CHECK(r.nu.coeffs() == s.nu.coeffs());
  CHECK(r.residual == s.residual);
  CHECK(r.seed == s.seed);
  REQUIRE(r.roots_plus.size() == s.roots_plus.size());
  for (std::size_t i = 0; i < s.roots_plus.size(); ++i) {
    CHECK(r.roots_plus[i].location == s.roots_plus[i].location);
    CHECK(r.roots_plus[i].multiplicity == s.roots_plus[i].multiplicity);
  }
  CHECK(solution_residual(r) == solution_residual(s));
}
