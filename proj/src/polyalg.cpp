#include "tacnode/polyalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tacnode/errors.hpp"

namespace tacnode {

VersalPoint VersalPoint::origin(int m) {
  if (m < 2) throw ContractViolation("tacnode order must be >= 2");
  return {m, std::vector<cplx>(static_cast<std::size_t>(m - 1)), std::vector<cplx>(static_cast<std::size_t>(m))};
}

void VersalPoint::validate() const {
  if (m < 2) throw ContractViolation("tacnode order must be >= 2");
  if (alpha.size() != static_cast<std::size_t>(m - 1)) throw ContractViolation("alpha must have m-1 entries");
  if (beta.size() != static_cast<std::size_t>(m)) throw ContractViolation("beta must have m entries");
}

bool VersalPoint::on_hp() const {
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (beta[i] != cplx(0.0)) return false;
  return true;
}

MonicPoly VersalPoint::nu() const {
  std::vector<cplx> c(alpha);
  c.emplace_back(0.0);
  return MonicPoly(std::move(c));
}

MonicPoly discriminant(const VersalPoint& point) {
  point.validate();
  const Coeffs nu = point.nu().full();
  Coeffs delta = poly::multiply(nu, nu);
  for (std::size_t i = 0; i < point.beta.size(); ++i) delta[i] -= 4.0 * point.beta[i];
  return MonicPoly::from_full(delta);
}

VersalPoint invert_discriminant(const MonicPoly& delta) {
  const int n = delta.degree();
  if (n < 4 || n % 2 != 0) throw ContractViolation("discriminant must have even degree 2m with m >= 2");
  const int m = n / 2;
  const double scale = 1.0 + poly::max_abs(delta.coeffs());
  if (std::abs(delta.coeff(n - 1)) > 1e-12 * scale)
    throw ContractViolation("discriminant has a nonzero z^{2m-1} coefficient");

  // square root by long division from the top: the z^{m+k} coefficient fixes nu_k
  std::vector<cplx> root(static_cast<std::size_t>(m + 1), cplx(0.0));
  root[static_cast<std::size_t>(m)] = 1.0;
  for (int k = m - 1; k >= 0; --k) {
    cplx cross(0.0);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) cross += root[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)];
    }
    root[static_cast<std::size_t>(k)] = (delta.coeff(m + k) - cross) / 2.0;
  }
  root[static_cast<std::size_t>(m - 1)] = 0.0;

  VersalPoint point = VersalPoint::origin(m);
  for (int i = 0; i <= m - 2; ++i) point.alpha[static_cast<std::size_t>(i)] = root[static_cast<std::size_t>(i)];
  const Coeffs sq = poly::multiply(root, root);
  for (int i = 0; i < m; ++i)
    point.beta[static_cast<std::size_t>(i)] = (sq[static_cast<std::size_t>(i)] - delta.coeff(i)) / 4.0;
  return point;
}

namespace {

// max_i |c_i|^{1/(n-i)}: roots of p lie within twice this radius.
double root_scale(const MonicPoly& p) {
  const int n = p.degree();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = std::abs(p.coeff(i));
    if (a > 0.0) s = std::max(s, std::pow(a, 1.0 / (n - i)));
  }
  return s;
}

MonicPoly normalized(const MonicPoly& p, double s) {
  MonicPoly q = p;
  const int n = p.degree();
  for (int i = 0; i < n; ++i) q.coeffs()[static_cast<std::size_t>(i)] *= std::pow(s, i - n);
  return q;
}

std::vector<cplx> companion_eigenvalues(const MonicPoly& q) {
  const int n = q.degree();
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -q.coeff(i);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  if (solver.info() != Eigen::Success) throw NumericalFailure("companion eigenvalue iteration failed");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

cplx newton_polish(const Coeffs& f, cplx z, int iterations, double max_move) {
  const Coeffs df = poly::derivative(f);
  const cplx start = z;
  for (int it = 0; it < iterations; ++it) {
    const cplx d = poly::evaluate(df, z);
    if (d == cplx(0.0)) break;
    const cplx step = poly::evaluate(f, z) / d;
    z -= step;
    if (std::abs(z - start) > max_move) return start;
    if (std::abs(step) <= 4e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

struct Candidate {
  cplx centre;
  int multiplicity;
  double residual;
};

// Tries to certify one group of eigenvalues as a single root of multiplicity group.size().
bool certify(const Coeffs& q, const std::vector<cplx>& group, double tol, double radius, Candidate& out) {
  const int k = static_cast<int>(group.size());
  cplx centre = std::accumulate(group.begin(), group.end(), cplx(0.0)) / static_cast<double>(k);
  Coeffs dk = q;
  for (int i = 0; i < k - 1; ++i) dk = poly::derivative(dk);
  centre = newton_polish(dk, centre, 60, std::max(4.0 * radius, 1e-8));

  const Coeffs t = poly::taylor_at(q, centre);
  const std::vector<double> mag = poly::taylor_magnitudes(q, centre);
  // roots have unit scale here, so 1 floors the magnitude of every Taylor term
  auto ratio = [&](int i) {
    return std::abs(t[static_cast<std::size_t>(i)]) / std::max(mag[static_cast<std::size_t>(i)], 1.0);
  };
  double residual = 0.0;
  for (int i = 0; i < k; ++i) residual = std::max(residual, ratio(i));
  const double top = ratio(k);
  if (residual > tol || top <= tol) return false;
  out = {centre, k, residual};
  return true;
}

// Single-linkage grouping of points at the given radius.
std::vector<std::vector<cplx>> link(const std::vector<cplx>& pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);
  std::vector<std::vector<cplx>> groups;
  std::vector<long> index(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (index[r] < 0) {
      index[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(index[r])].push_back(pts[i]);
  }
  return groups;
}

}  // namespace

std::vector<cplx> polynomial_roots(const MonicPoly& p) {
  if (p.degree() == 0) return {};
  double s = root_scale(p);
  if (s == 0.0) return std::vector<cplx>(static_cast<std::size_t>(p.degree()), cplx(0.0));
  const MonicPoly q = normalized(p, s);
  const Coeffs qf = q.full();
  std::vector<cplx> roots = companion_eigenvalues(q);
  for (auto& r : roots) r = s * newton_polish(qf, r, 20, 1e-2);
  return roots;
}

std::vector<double> product_noise(const Coeffs& a, const Coeffs& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += std::abs(a[i]) * std::abs(b[j]);
  for (auto& v : out) v *= 8.0 * std::numeric_limits<double>::epsilon();
  return out;
}

std::vector<RootCluster> cluster_roots(const MonicPoly& input, double tol, const std::vector<double>& noise) {
  if (input.degree() < 1) throw ContractViolation("cluster_roots needs degree >= 1");
  if (!(tol > 0.0)) throw ContractViolation("cluster_roots needs tol > 0");
  MonicPoly p = input;
  for (std::size_t i = 0; i < noise.size() && i < p.coeffs().size(); ++i)
    if (std::abs(p.coeffs()[i]) <= noise[i]) p.coeffs()[i] = 0.0;
  const int n = p.degree();
  const double s0 = root_scale(p);
  if (s0 == 0.0) return {RootCluster{cplx(0.0), n, 0.0}};
  // the coefficient bound can overestimate; rescale again so the largest root has modulus 1
  std::vector<cplx> eig = companion_eigenvalues(normalized(p, s0));
  double far = 0.0;
  for (const auto& e : eig) far = std::max(far, std::abs(e));
  const double s = far > 0.0 ? s0 * far : s0;
  for (auto& e : eig) e *= s0 / s;
  const MonicPoly q = normalized(p, s);
  const Coeffs qf = q.full();

  for (double radius = 1e-13; radius < 1.0; radius *= 1.6) {
    const auto groups = link(eig, radius);
    std::vector<Candidate> found;
    bool ok = true;
    for (const auto& g : groups) {
      Candidate c{};
      if (!certify(qf, g, tol, radius, c)) {
        ok = false;
        break;
      }
      for (const auto& prev : found)
        if (std::abs(prev.centre - c.centre) <= std::max(radius, 1e-10)) ok = false;
      if (!ok) break;
      found.push_back(c);
    }
    if (!ok) continue;
    std::vector<RootCluster> out;
    for (const auto& c : found) out.push_back({s * c.centre, c.multiplicity, c.residual});
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
      if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
      if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
      return a.location.imag() < b.location.imag();
    });
    return out;
  }
  throw AmbiguousClustering("no certified grouping of the roots; retry with higher precision or another tolerance");
}

int SingularityProfile::total_tjurina() const {
  int s = 0;
  for (const auto& [k, c] : counts) s += k * c;
  return s;
}

std::string SingularityProfile::to_string() const {
  if (counts.empty()) return "smooth";
  std::ostringstream os;
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    os << (first ? "" : " + ") << it->second << "*A" << it->first;
    first = false;
  }
  return os.str();
}

SingularityProfile classify(const VersalPoint& point, double tol) {
  point.validate();
  if (point.on_hp() && point.beta[0] == cplx(0.0))
    throw Degenerate("beta_0 = 0 on H_p: nu - 2 sqrt(beta_0) and nu + 2 sqrt(beta_0) share factors");
  SingularityProfile prof;
  const Coeffs nu_full = point.nu().full();
  std::vector<double> noise = product_noise(nu_full, nu_full);
  for (std::size_t i = 0; i < point.beta.size(); ++i)
    noise[i] += 16.0 * std::numeric_limits<double>::epsilon() * std::abs(point.beta[i]);
  for (const auto& c : cluster_roots(discriminant(point), tol, noise))
    if (c.multiplicity >= 2) ++prof.counts[c.multiplicity - 1];
  return prof;
}

}  // namespace tacnode
