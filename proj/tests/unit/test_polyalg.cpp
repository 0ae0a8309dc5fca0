#include <doctest.h>

#include <random>

#include "tacnode/errors.hpp"
#include "tacnode/polyalg.hpp"
#include "tacnode/shabat.hpp"

using namespace tacnode;

namespace {

std::map<int, int> multiplicity_histogram(const std::vector<RootCluster>& cs) {
  std::map<int, int> h;
  for (const auto& c : cs) ++h[c.multiplicity];
  return h;
}

VersalPoint random_point(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  VersalPoint p = VersalPoint::origin(m);
  for (auto& a : p.alpha) a = {n(rng), n(rng)};
  for (auto& b : p.beta) b = {n(rng), n(rng)};
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Coeffs a{1.0, 1.0}, b{-1.0, 1.0};
  const Coeffs ab = poly::multiply(a, b);
  REQUIRE(ab.size() == 3);
  CHECK(ab[0] == cplx(-1.0));
  CHECK(ab[1] == cplx(0.0));
  CHECK(ab[2] == cplx(1.0));
  CHECK(poly::evaluate(ab, 3.0) == cplx(8.0));
  CHECK(poly::derivative(ab) == Coeffs{0.0, 2.0});
  const Coeffs t = poly::taylor_at(ab, 2.0);  // (2 + w)^2 - 1
  CHECK(t == Coeffs{3.0, 4.0, 1.0});
  CHECK(poly::power_of_linear(1.0, 3) == Coeffs{-1.0, 3.0, -3.0, 1.0});
}

TEST_CASE("monic polynomial helpers") {
  const MonicPoly p({1.0, 0.0, 2.0});  // z^3 + 2 z^2 + 1
  CHECK(p.degree() == 3);
  CHECK(p(1.0) == cplx(4.0));
  CHECK(p.shifted(-1.0).coeff(0) == cplx(0.0));
  const cplx zeta = std::polar(1.0, 2.0 * M_PI / 3.0);
  const MonicPoly r = p.rotated(zeta);
  for (cplx z : {cplx(0.3, 0.1), cplx(-1.2, 0.7)}) CHECK(std::abs(r(z) - p(zeta * z) / std::pow(zeta, 3)) < 1e-13);
  CHECK_THROWS_AS(MonicPoly::from_full({1.0, 2.0}), ContractViolation);
}

TEST_CASE("discriminant of the tacnode is z^4") {
  const MonicPoly d = discriminant(VersalPoint::origin(2));
  CHECK(d.degree() == 4);
  for (const auto& c : d.coeffs()) CHECK(c == cplx(0.0));
}

TEST_CASE("discriminant on the special locus") {
  for (int m = 2; m <= 7; ++m) {
    VersalPoint p = VersalPoint::origin(m);
    const cplx a0(0.7, -0.2);
    p.alpha[0] = a0;
    p.beta[0] = a0 * a0 / 4.0;
    // z^m (z^m + 2 alpha_0)
    const MonicPoly d = discriminant(p);
    for (int i = 0; i < 2 * m; ++i) {
      const cplx want = i == m ? 2.0 * a0 : cplx(0.0);
      CHECK(std::abs(d.coeff(i) - want) < 1e-15);
    }
  }
}

TEST_CASE("discriminant on H_p factors as (nu - 2 sqrt b0)(nu + 2 sqrt b0)") {
  std::mt19937_64 rng(3);
  for (int m = 2; m <= 7; ++m) {
    VersalPoint p = random_point(m, rng);
    for (int i = 1; i < m; ++i) p.beta[static_cast<std::size_t>(i)] = 0.0;
    const cplx s = std::sqrt(p.beta[0]);
    const Coeffs nu = p.nu().full();
    const Coeffs want = poly::multiply(MonicPoly(p.nu()).shifted(-2.0 * s).full(), MonicPoly(p.nu()).shifted(2.0 * s).full());
    const MonicPoly d = discriminant(p);
    for (int i = 0; i < 2 * m; ++i) CHECK(std::abs(d.coeff(i) - want[static_cast<std::size_t>(i)]) < 1e-12);
  }
}

TEST_CASE("discriminant has no z^{2m-1} term and round-trips") {
  std::mt19937_64 rng(5);
  for (int m = 2; m <= 8; ++m)
    for (int rep = 0; rep < 20; ++rep) {
      const VersalPoint p = random_point(m, rng);
      const MonicPoly d = discriminant(p);
      CHECK(d.degree() == 2 * m);
      CHECK(d.coeff(2 * m - 1) == cplx(0.0));
      const VersalPoint q = invert_discriminant(d);
      double scale = 0.0, err = 0.0;
      for (std::size_t i = 0; i < p.alpha.size(); ++i) {
        scale = std::max(scale, std::abs(p.alpha[i]));
        err = std::max(err, std::abs(p.alpha[i] - q.alpha[i]));
      }
      for (std::size_t i = 0; i < p.beta.size(); ++i) {
        scale = std::max(scale, std::abs(p.beta[i]));
        err = std::max(err, std::abs(p.beta[i] - q.beta[i]));
      }
      CHECK(err <= 1e-10 * scale);
    }
}

TEST_CASE("inverting z^4 and z^m (z^m + 4 sqrt b0)") {
  const VersalPoint o = invert_discriminant(MonicPoly::monomial(4));
  CHECK(o.m == 2);
  CHECK(o.alpha == std::vector<cplx>{0.0});
  CHECK(o.beta == std::vector<cplx>{0.0, 0.0});
  for (int m = 2; m <= 6; ++m) {
    const double b0 = 0.09;
    MonicPoly d = MonicPoly::monomial(2 * m);
    d.coeffs()[static_cast<std::size_t>(m)] = 4.0 * std::sqrt(b0);
    const VersalPoint p = invert_discriminant(d);
    CHECK(std::abs(p.alpha[0] - 2.0 * std::sqrt(b0)) < 1e-14);
    CHECK(std::abs(p.alpha[0] * p.alpha[0] - 4.0 * p.beta[0]) < 1e-14);
    for (int i = 1; i < m - 1; ++i) CHECK(std::abs(p.alpha[static_cast<std::size_t>(i)]) < 1e-14);
  }
}

TEST_CASE("inversion rejects a z^{2m-1} term and odd degree") {
  CHECK_THROWS_AS(invert_discriminant(MonicPoly({0.0, 0.0, 0.0, 1.0})), ContractViolation);
  CHECK_THROWS_AS(invert_discriminant(MonicPoly({1.0, 0.0, 0.0})), ContractViolation);
}

TEST_CASE("cluster_roots examples") {
  const auto z4 = cluster_roots(MonicPoly::monomial(4));
  REQUIRE(z4.size() == 1);
  CHECK(z4[0].multiplicity == 4);
  CHECK(std::abs(z4[0].location) < 1e-12);

  const std::vector<cplx> roots{1.0, -2.0};
  const std::vector<int> mult{2, 1};
  const auto cs = cluster_roots(MonicPoly::from_roots(roots, mult));
  REQUIRE(cs.size() == 2);
  for (const auto& c : cs) {
    if (c.multiplicity == 2) CHECK(std::abs(c.location - 1.0) < 1e-10);
    else CHECK(std::abs(c.location + 2.0) < 1e-10);
  }
  CHECK(multiplicity_histogram(cs) == std::map<int, int>{{1, 1}, {2, 1}});
}

TEST_CASE("cluster_roots recovers constructed multiplicities") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<cplx> roots;
    std::vector<int> mult;
    std::map<int, int> want;
    for (int k = 0; k < 3; ++k) {
      roots.emplace_back(u(rng), u(rng));
      mult.push_back(1 + static_cast<int>(rng() % 3));
      ++want[mult.back()];
    }
    CHECK(multiplicity_histogram(cluster_roots(MonicPoly::from_roots(roots, mult))) == want);
  }
}

TEST_CASE("the solved m = 5 cusp point has two triple roots and four simple ones") {
  const ShabatSolution s = solve(AdmissibleTuple({0, 1}, {0, 1}));
  VersalPoint p = VersalPoint::origin(5);
  for (int i = 0; i <= 3; ++i) p.alpha[static_cast<std::size_t>(i)] = s.nu.coeff(i);
  p.beta[0] = 0.25;
  const MonicPoly d = discriminant(p);
  CHECK(multiplicity_histogram(cluster_roots(d, kDefaultClusterTol, product_noise(p.nu().full(), p.nu().full()))) ==
        std::map<int, int>{{1, 4}, {3, 2}});
  CHECK(classify(p) == SingularityProfile{{{2, 2}}});
}

TEST_CASE("classify examples") {
  for (int m = 2; m <= 7; ++m) {
    VersalPoint p = VersalPoint::origin(m);
    p.alpha[0] = 0.5;
    p.beta[0] = 0.0625;
    CHECK(classify(p) == SingularityProfile{{{m - 1, 1}}});
  }
  // Delta = z^4 - 1 has four simple roots
  VersalPoint q = VersalPoint::origin(2);
  q.beta[0] = 0.25;
  CHECK(classify(q).counts.empty());

  std::mt19937_64 rng(23);
  for (int m = 2; m <= 7; ++m) CHECK(classify(random_point(m, rng)).counts.empty());
}

TEST_CASE("classify refuses the degenerate H_p point") {
  VersalPoint p = VersalPoint::origin(3);
  p.alpha[0] = 0.3;
  CHECK_THROWS_AS(classify(p), Degenerate);
}

TEST_CASE("singularity profile helpers") {
  const SingularityProfile p{{{1, 2}, {3, 1}}};
  CHECK(p.total_tjurina() == 5);
}
