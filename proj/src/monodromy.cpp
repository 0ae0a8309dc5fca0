#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "tacnode/errors.hpp"
#include "tacnode/shabat.hpp"

namespace tacnode {
namespace {

using Loop = std::function<cplx(double)>;

// Base point -i. The circles around -1 and +1 pass through it and keep distance
// 2 - sqrt(2) from the other branch value; so does the circle of radius 2 about i.
const cplx kBase(0.0, -1.0);

Loop circle(cplx centre, double sign) {
  const double radius = std::abs(kBase - centre);
  const double start = std::arg(kBase - centre);
  return [=](double t) { return centre + std::polar(radius, start + sign * 2.0 * std::numbers::pi * t); };
}

cplx newton_on_fibre(const MonicPoly& nu, const Coeffs& dnu, cplx z, cplx w, int& iterations) {
  for (iterations = 0; iterations < 8; ++iterations) {
    const cplx f = nu(z) - w;
    const cplx d = poly::evaluate(dnu, z);
    if (d == cplx(0.0)) return {NAN, NAN};
    const cplx step = f / d;
    z -= step;
    if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) return z;
  }
  return {NAN, NAN};
}

cplx lift(const MonicPoly& nu, const Coeffs& dnu, const Loop& loop, cplx z) {
  double t = 0.0;
  double h = 1.0 / 256;
  int steps = 0;
  while (t < 1.0) {
    if (++steps > 200000) throw PathLiftingFailure("path lifting exceeded its step budget");
    const double t_next = std::min(1.0, t + h);
    const cplx w0 = loop(t);
    const cplx w1 = loop(t_next);
    const cplx pred = z + (w1 - w0) / poly::evaluate(dnu, z);
    int its = 0;
    const cplx corr = newton_on_fibre(nu, dnu, pred, w1, its);
    const bool good = std::isfinite(corr.real()) && its <= 4 &&
                      std::abs(corr - pred) <= 0.05 * std::abs(pred - z) + 1e-9 * (1.0 + std::abs(z));
    if (!good) {
      h *= 0.5;
      if (h < 1e-9) throw PathLiftingFailure("path lifting lost track of a fibre point");
      continue;
    }
    z = corr;
    t = t_next;
    if (its <= 2) h = std::min(h * 1.5, 1.0 / 64);
  }
  return z;
}

Permutation lift_permutation(const MonicPoly& nu, const Coeffs& dnu, const std::vector<cplx>& fibre, const Loop& loop) {
  const int m = static_cast<int>(fibre.size());
  double sep = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) sep = std::min(sep, std::abs(fibre[static_cast<std::size_t>(i)] - fibre[static_cast<std::size_t>(j)]));

  std::vector<int> image(static_cast<std::size_t>(m));
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (int k = 0; k < m; ++k) {
    const cplx end = lift(nu, dnu, loop, fibre[static_cast<std::size_t>(k)]);
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (int j = 0; j < m; ++j) {
      const double d = std::abs(end - fibre[static_cast<std::size_t>(j)]);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    if (best < 0 || dist > 1e-3 * sep || hit[static_cast<std::size_t>(best)])
      throw PathLiftingFailure("lifted endpoint does not match a distinct fibre point");
    hit[static_cast<std::size_t>(best)] = true;
    image[static_cast<std::size_t>(k)] = best + 1;
  }
  return Permutation(std::move(image));
}

}  // namespace

PermutationTriple monodromy_of(const ShabatSolution& solution) {
  const MonicPoly& nu = solution.nu;
  const int m = nu.degree();
  if (m < 2) throw ContractViolation("monodromy needs degree >= 2");
  const Coeffs dnu = poly::derivative(nu.full());

  std::vector<cplx> fibre = polynomial_roots(nu.shifted(-kBase));
  std::sort(fibre.begin(), fibre.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  // Lifting a then b gives pi_b o pi_a. The counter-clockwise loop about both branch
  // values is (loop about +1) then (loop about -1), so the loop about infinity,
  // its reverse, has monodromy (tau+ tau-)^{-1}.
  PermutationTriple t;
  t.tau_plus = lift_permutation(nu, dnu, fibre, circle(cplx(-1.0), 1.0));
  t.tau_minus = lift_permutation(nu, dnu, fibre, circle(cplx(1.0), 1.0));
  t.sigma = lift_permutation(nu, dnu, fibre, circle(cplx(0.0, 1.0), -1.0));
  if (!(t.sigma * t.tau_plus * t.tau_minus).is_identity())
    throw PathLiftingFailure("lifted permutations violate sigma tau+ tau- = 1");
  return t;
}

}  // namespace tacnode
