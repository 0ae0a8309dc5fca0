#include "tacnode/poly.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "tacnode/errors.hpp"

namespace tacnode {
namespace poly {

Coeffs multiply(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coeffs add(std::span<const cplx> a, std::span<const cplx> b) {
  Coeffs out(std::max(a.size(), b.size()), cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Coeffs subtract(std::span<const cplx> a, std::span<const cplx> b) {
  Coeffs out(std::max(a.size(), b.size()), cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Coeffs scaled(std::span<const cplx> a, cplx s) {
  Coeffs out(a.begin(), a.end());
  for (auto& v : out) v *= s;
  return out;
}

cplx evaluate(std::span<const cplx> a, cplx z) {
  cplx acc(0.0);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

Coeffs derivative(std::span<const cplx> a) {
  if (a.size() <= 1) return {cplx(0.0)};
  Coeffs out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

Coeffs power_of_linear(cplx r, int k) {
  Coeffs out{cplx(1.0)};
  const Coeffs lin{-r, cplx(1.0)};
  for (int i = 0; i < k; ++i) out = multiply(out, lin);
  return out;
}

Coeffs taylor_at(std::span<const cplx> a, cplx z0) {
  // repeated synthetic division by (z - z0)
  Coeffs work(a.begin(), a.end());
  const std::size_t n = work.size();
  Coeffs out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) work[j - 1] += z0 * work[j];
    out[i] = work[i];
  }
  return out;
}

std::vector<double> taylor_magnitudes(std::span<const cplx> a, cplx z0) {
  std::vector<double> work(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) work[i] = std::abs(a[i]);
  const double r = std::abs(z0);
  const std::size_t n = work.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) work[j - 1] += r * work[j];
    out[i] = work[i];
  }
  return out;
}

double max_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace poly

MonicPoly MonicPoly::from_full(const Coeffs& full) {
  if (full.empty()) throw ContractViolation("empty coefficient vector");
  if (std::abs(full.back() - cplx(1.0)) > 1e-12) throw ContractViolation("polynomial is not monic");
  return MonicPoly(std::vector<cplx>(full.begin(), full.end() - 1));
}

MonicPoly MonicPoly::from_roots(std::span<const cplx> roots, std::span<const int> multiplicities) {
  Coeffs acc{cplx(1.0)};
  for (std::size_t i = 0; i < roots.size(); ++i)
    acc = poly::multiply(acc, poly::power_of_linear(roots[i], multiplicities[i]));
  acc.back() = 1.0;
  return from_full(acc);
}

Coeffs MonicPoly::full() const {
  Coeffs f = c_;
  f.push_back(cplx(1.0));
  return f;
}

cplx MonicPoly::operator()(cplx z) const {
  cplx acc(1.0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

MonicPoly MonicPoly::shifted(cplx s) const {
  MonicPoly out = *this;
  if (out.c_.empty()) throw ContractViolation("cannot shift a degree-0 polynomial");
  out.c_[0] += s;
  return out;
}

MonicPoly MonicPoly::rotated(cplx zeta) const {
  // coefficient of z^i becomes c_i zeta^i / zeta^n
  MonicPoly out = *this;
  const int n = degree();
  for (int i = 0; i < n; ++i) out.c_[static_cast<std::size_t>(i)] *= std::pow(zeta, i - n);
  return out;
}

std::string format_complex(cplx z, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits);
  // parts below the printed precision of the other part are dropped
  const double drop = std::pow(10.0, -digits);
  if (std::abs(z.imag()) <= drop * std::abs(z.real())) z.imag(0.0);
  if (std::abs(z.real()) <= drop * std::abs(z.imag())) z.real(0.0);
  if (z.imag() == 0.0) {
    os << z.real();
  } else if (z.real() == 0.0) {
    os << z.imag() << "i";
  } else {
    os << '(' << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

std::string format_poly(const MonicPoly& p, int digits) {
  std::ostringstream os;
  auto monomial = [](int k) -> std::string {
    if (k == 0) return "";
    if (k == 1) return "z";
    return "z^" + std::to_string(k);
  };
  os << (p.degree() == 0 ? "1" : monomial(p.degree()));
  // parts below the printed precision relative to the largest coefficient are not shown
  const double drop = std::pow(10.0, -digits) * std::max(1.0, poly::max_abs(p.coeffs()));
  for (int i = p.degree() - 1; i >= 0; --i) {
    cplx c = p.coeff(i);
    if (std::abs(c.real()) <= drop) c.real(0.0);
    if (std::abs(c.imag()) <= drop) c.imag(0.0);
    if (c == cplx(0.0)) continue;
    const bool real = c.imag() == 0.0;
    std::string body;
    if (real) {
      os << (c.real() < 0 ? " - " : " + ");
      const double a = std::abs(c.real());
      std::ostringstream num;
      num << std::setprecision(digits) << a;
      if (i == 0) body = num.str();
      else body = (a == 1.0 ? "" : num.str() + "*") + monomial(i);
    } else {
      os << " + ";
      body = format_complex(c, digits) + (i == 0 ? "" : "*" + monomial(i));
    }
    os << body;
  }
  return os.str();
}

}  // namespace tacnode
