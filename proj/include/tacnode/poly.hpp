#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace tacnode {

using cplx = std::complex<double>;

// Dense coefficient vector, ascending powers, leading coefficient included.
using Coeffs = std::vector<cplx>;

namespace poly {

Coeffs multiply(std::span<const cplx> a, std::span<const cplx> b);
Coeffs add(std::span<const cplx> a, std::span<const cplx> b);
Coeffs subtract(std::span<const cplx> a, std::span<const cplx> b);
Coeffs scaled(std::span<const cplx> a, cplx s);
cplx evaluate(std::span<const cplx> a, cplx z);
Coeffs derivative(std::span<const cplx> a);
// (z - r)^k
Coeffs power_of_linear(cplx r, int k);

// Coefficients t_i of p(z0 + w) = sum t_i w^i, i.e. p^{(i)}(z0) / i!.
Coeffs taylor_at(std::span<const cplx> a, cplx z0);
// S_i = sum_j |a_j| binom(j, i) |z0|^{j-i}: magnitude scale of t_i, for rounding-aware tests.
std::vector<double> taylor_magnitudes(std::span<const cplx> a, cplx z0);

double max_abs(std::span<const cplx> a);

}  // namespace poly

// Monic polynomial z^n + c_{n-1} z^{n-1} + ... + c_0; only the c_i are stored.
class MonicPoly {
 public:
  MonicPoly() = default;
  explicit MonicPoly(std::vector<cplx> lower_coeffs) : c_(std::move(lower_coeffs)) {}
  // Leading coefficient of `full` must be 1 (within 1e-12); it is dropped.
  static MonicPoly from_full(const Coeffs& full);
  static MonicPoly from_roots(std::span<const cplx> roots, std::span<const int> multiplicities);
  static MonicPoly monomial(int degree) { return MonicPoly(std::vector<cplx>(static_cast<std::size_t>(degree))); }

  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<cplx>& coeffs() const { return c_; }
  std::vector<cplx>& coeffs() { return c_; }
  cplx coeff(int i) const { return i == degree() ? cplx(1.0) : c_[static_cast<std::size_t>(i)]; }

  Coeffs full() const;
  cplx operator()(cplx z) const;

  // p(z) + s as a monic polynomial (s shifts the constant term).
  MonicPoly shifted(cplx s) const;
  // z -> zeta z, divided by zeta^n so the result stays monic.
  MonicPoly rotated(cplx zeta) const;

 private:
  std::vector<cplx> c_;
};

// "z^4 - 2*z + 1"; complex coefficients print as (a+bi). `digits` significant digits.
std::string format_poly(const MonicPoly& p, int digits = 6);
std::string format_complex(cplx z, int digits = 17);

}  // namespace tacnode
