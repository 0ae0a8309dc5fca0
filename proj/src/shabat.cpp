#include "tacnode/shabat.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "tacnode/errors.hpp"

namespace tacnode {

void SolverConfig::validate() const {
  if (max_iterations <= 0 || restart_count <= 0) throw ContractViolation("solver iteration counts must be positive");
  if (!(newton_tolerance > 0.0)) throw ContractViolation("newton_tolerance must be positive");
}

namespace {

// Multiplicities of the distinct roots on one side: d_j copies of j (descending), then simple roots.
std::vector<int> side_multiplicities(const Counts& d, int m) {
  std::vector<int> mult;
  for (int j = static_cast<int>(d.size()) + 1; j >= 2; --j)
    for (int c = 0; c < count_at(d, j); ++c) mult.push_back(j);
  for (int c = 0; c < m - moved_points(d); ++c) mult.push_back(1);
  return mult;
}

Coeffs expand(std::span<const cplx> roots, std::span<const int> mult) {
  Coeffs acc{cplx(1.0)};
  for (std::size_t i = 0; i < roots.size(); ++i) acc = poly::multiply(acc, poly::power_of_linear(roots[i], mult[i]));
  return acc;
}

// p / (z - r), discarding the remainder.
Coeffs deflate(const Coeffs& p, cplx r) {
  Coeffs q(p.size() - 1);
  cplx carry(0.0);
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

class RootSystem {
 public:
  RootSystem(std::vector<int> plus, std::vector<int> minus, int m)
      : plus_(std::move(plus)), minus_(std::move(minus)), m_(m) {}

  std::size_t unknowns() const { return plus_.size() + minus_.size(); }

  Eigen::VectorXcd residual(const Eigen::VectorXcd& x) const {
    const auto [p, q] = products(x);
    Eigen::VectorXcd f(m_ + 1);
    for (int i = 0; i < m_; ++i) f(i) = p[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(i)];
    f(0) -= 2.0;
    cplx s(0.0);
    for (std::size_t i = 0; i < plus_.size(); ++i) s += static_cast<double>(plus_[i]) * x(static_cast<Eigen::Index>(i));
    f(m_) = s;
    return f;
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& x) const {
    const auto [p, q] = products(x);
    const auto np = static_cast<Eigen::Index>(plus_.size());
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m_ + 1, static_cast<Eigen::Index>(unknowns()));
    for (Eigen::Index i = 0; i < np; ++i) {
      const double k = plus_[static_cast<std::size_t>(i)];
      const Coeffs d = deflate(p, x(i));
      for (int r = 0; r < m_; ++r) jac(r, i) = -k * d[static_cast<std::size_t>(r)];
      jac(m_, i) = k;
    }
    for (std::size_t j = 0; j < minus_.size(); ++j) {
      const auto col = np + static_cast<Eigen::Index>(j);
      const double k = minus_[j];
      const Coeffs d = deflate(q, x(col));
      for (int r = 0; r < m_; ++r) jac(r, col) = k * d[static_cast<std::size_t>(r)];
    }
    return jac;
  }

  std::pair<Coeffs, Coeffs> products(const Eigen::VectorXcd& x) const {
    const auto np = plus_.size();
    std::vector<cplx> a(x.data(), x.data() + np);
    std::vector<cplx> b(x.data() + np, x.data() + x.size());
    return {expand(a, plus_), expand(b, minus_)};
  }

  const std::vector<int>& plus() const { return plus_; }
  const std::vector<int>& minus() const { return minus_; }
  int degree() const { return m_; }

 private:
  std::vector<int> plus_;
  std::vector<int> minus_;
  int m_;
};

double max_norm(const Eigen::VectorXcd& v) { return v.cwiseAbs().maxCoeff(); }

// Damped Newton from x. Returns true with x at a solution whose residual is below tol.
template <class System>
bool newton(const System& sys, Eigen::VectorXcd& x, const SolverConfig& cfg, double tol) {
  Eigen::VectorXcd f = sys.residual(x);
  double norm = max_norm(f);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (!std::isfinite(norm)) return false;
    const Eigen::MatrixXcd jac = sys.jacobian(x);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(jac);
    Eigen::VectorXcd step = lu.solve(-f);
    if (!step.allFinite()) return false;
    const double limit = 2.0 * (1.0 + x.cwiseAbs().maxCoeff());
    if (const double len = step.cwiseAbs().maxCoeff(); len > limit) step *= limit / len;

    bool accepted = false;
    for (double lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
      Eigen::VectorXcd trial = x + lambda * step;
      Eigen::VectorXcd ft = sys.residual(trial);
      const double nt = max_norm(ft);
      if (nt < norm || (norm < tol && nt <= norm)) {
        x = std::move(trial);
        f = std::move(ft);
        norm = nt;
        accepted = true;
        break;
      }
    }
    if (norm < tol * 1e-2) return true;
    if (!accepted) return norm < tol;
  }
  return norm < tol;
}

// Same equations with the critical values +-c free and one root pinned. Pinning fixes
// scale and rotation, which removes the attracting collapse of all roots to one point.
class AnchoredSystem {
 public:
  AnchoredSystem(const RootSystem& sys, Eigen::Index anchor, cplx value)
      : sys_(sys), anchor_(anchor), value_(value), weight_(Eigen::VectorXd::Ones(sys.degree() + 2)) {
    // row i carries coefficients of size binom(m, i) R^{m-i}
    const int m = sys.degree();
    const double r = std::abs(value);
    double binom = 1.0;
    for (int i = 0; i < m; ++i) {
      weight_(i) = 1.0 / (binom * std::pow(r, m - i));
      binom = binom * (m - i) / (i + 1);
    }
    weight_(m) = 1.0 / (m * r);
    weight_(m + 1) = 1.0 / r;
  }

  // y = (roots, c)
  Eigen::VectorXcd residual(const Eigen::VectorXcd& y) const {
    const auto n = y.size() - 1;
    Eigen::VectorXcd f(n + 1);
    f.head(n) = sys_.residual(y.head(n));
    f(0) += 2.0 - 2.0 * y(n);
    f(n) = y(anchor_) - value_;
    return f.cwiseProduct(weight_);
  }

  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& y) const {
    const auto n = y.size() - 1;
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    jac.topLeftCorner(n, n) = sys_.jacobian(y.head(n));
    jac(0, n) = -2.0;
    jac(n, anchor_) = 1.0;
    return weight_.asDiagonal() * jac;
  }

 private:
  const RootSystem& sys_;
  Eigen::Index anchor_;
  cplx value_;
  Eigen::VectorXd weight_;
};

// Anchored solve from x, then rescale to critical values +-1 and polish.
bool anchored_newton(const RootSystem& sys, Eigen::VectorXcd& x, const SolverConfig& cfg) {
  Eigen::Index anchor = 0;
  x.cwiseAbs().maxCoeff(&anchor);
  if (std::abs(x(anchor)) == 0.0) return false;
  const AnchoredSystem pinned(sys, anchor, x(anchor));
  Eigen::VectorXcd y(x.size() + 1);
  y.head(x.size()) = x;
  y(x.size()) = 1.0;
  const Eigen::VectorXcd start = x;
  const bool ok = newton(pinned, y, cfg, 1e-12);
  const cplx c = y(x.size());
  if (!ok || std::abs(c) < 1e-6 * std::pow(std::abs(x(anchor)), sys.degree())) {
    x = start;
    return newton(sys, x, cfg, cfg.newton_tolerance);
  }
  // nu(z) = nu^(lambda z) / c with lambda^m = c
  x = y.head(x.size()) / std::pow(c, 1.0 / sys.degree());
  return newton(sys, x, cfg, cfg.newton_tolerance);
}

// Distinct-root condition: collisions change the multiplicity census.
bool roots_separated(const Eigen::VectorXcd& x) {
  const double scale = 1.0 + x.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      if (std::abs(x(i) - x(j)) < 1e-5 * scale) return false;
  return true;
}

void centre(const RootSystem& sys, Eigen::VectorXcd& x);

Eigen::VectorXcd random_start(const RootSystem& sys, std::mt19937_64& rng, int attempt) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(sys.unknowns());
  const auto np = static_cast<Eigen::Index>(sys.plus().size());
  Eigen::VectorXcd x(n);
  const double radius = 0.6 + 0.9 * unit(rng);
  if (attempt % 2 == 0) {
    // interleaved rings: plus roots and minus roots alternate in angle
    const double phase = 2.0 * std::numbers::pi * unit(rng);
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool plus = i < np;
      const Eigen::Index k = plus ? i : i - np;
      const Eigen::Index cnt = plus ? np : n - np;
      const double ang = phase + 2.0 * std::numbers::pi * (static_cast<double>(k) + (plus ? 0.0 : 0.5)) /
                                     static_cast<double>(cnt);
      const double r = radius * (0.8 + 0.4 * unit(rng));
      x(i) = std::polar(r, ang + 0.3 * (unit(rng) - 0.5));
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) x(i) = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
  }
  centre(sys, x);
  return x;
}

// Translate so the no-z^{m-1} constraint holds exactly.
void centre(const RootSystem& sys, Eigen::VectorXcd& x) {
  const auto np = static_cast<Eigen::Index>(sys.plus().size());
  const auto n = x.size();
  cplx mean(0.0);
  double w = 0.0;
  for (Eigen::Index i = 0; i < np; ++i) {
    mean += static_cast<double>(sys.plus()[static_cast<std::size_t>(i)]) * x(i);
    w += sys.plus()[static_cast<std::size_t>(i)];
  }
  mean /= w;
  for (Eigen::Index i = 0; i < n; ++i) x(i) -= mean;
}

// Radial drawing of the plane tree of a permutation pair: one vertex per cycle of tau+
// (plus side) and of tau- (minus side), one edge per letter, edges around a vertex in
// cycle order. Returned in the unknown order of `sys`, with unit edge length.
Eigen::VectorXcd dessin_layout(const RootSystem& sys, const PermutationTriple& tr) {
  const int m = tr.m();
  const auto cyc_plus = tr.tau_plus.cycles();
  const auto cyc_minus = tr.tau_minus.cycles();
  const int nplus = static_cast<int>(cyc_plus.size());
  const int nv = nplus + static_cast<int>(cyc_minus.size());
  // vertex ids: plus cycles first
  std::vector<int> at_plus(static_cast<std::size_t>(m) + 1), at_minus(static_cast<std::size_t>(m) + 1);
  for (int v = 0; v < nplus; ++v)
    for (int e : cyc_plus[static_cast<std::size_t>(v)]) at_plus[static_cast<std::size_t>(e)] = v;
  for (int v = nplus; v < nv; ++v)
    for (int e : cyc_minus[static_cast<std::size_t>(v - nplus)]) at_minus[static_cast<std::size_t>(e)] = v;
  auto rotation = [&](int v) -> const Permutation& { return v < nplus ? tr.tau_plus : tr.tau_minus; };
  auto other_end = [&](int v, int e) {
    return v < nplus ? at_minus[static_cast<std::size_t>(e)] : at_plus[static_cast<std::size_t>(e)];
  };
  auto degree = [&](int v) {
    return static_cast<int>(v < nplus ? cyc_plus[static_cast<std::size_t>(v)].size()
                                      : cyc_minus[static_cast<std::size_t>(v - nplus)].size());
  };

  // subtree sizes (in edges) hanging below edge e on the side of vertex v
  std::function<int(int, int)> weight = [&](int v, int parent_edge) {
    int w = 1;
    for (int e = rotation(v)(parent_edge); e != parent_edge; e = rotation(v)(e)) w += weight(other_end(v, e), e);
    return w;
  };

  std::vector<cplx> pos(static_cast<std::size_t>(nv));
  int root = 0;
  for (int v = 1; v < nv; ++v)
    if (degree(v) > degree(root)) root = v;
  pos[static_cast<std::size_t>(root)] = 0.0;

  std::function<void(int, int, double, double, int)> place = [&](int v, int first_edge, double lo, double hi,
                                                                  int depth) {
    // edges of v in rotation order starting at first_edge, parent edge (if any) excluded
    std::vector<std::pair<int, int>> kids;  // (edge, weight)
    int total = 0;
    const int stop = depth == 0 ? first_edge : rotation(v).inverse()(first_edge);
    for (int e = first_edge;;) {
      if (!(depth > 0 && e == stop)) {
        const int w = weight(other_end(v, e), e);
        kids.emplace_back(e, w);
        total += w;
      }
      e = rotation(v)(e);
      if (e == first_edge) break;
    }
    double a = lo;
    for (const auto& [e, w] : kids) {
      const double b = a + (hi - lo) * w / total;
      const int u = other_end(v, e);
      const double mid = 0.5 * (a + b);
      pos[static_cast<std::size_t>(u)] = std::polar(static_cast<double>(depth + 1), mid);
      place(u, rotation(u)(e), a, b, depth + 1);
      a = b;
    }
  };
  const int start = rotation(root)(root < nplus ? cyc_plus[static_cast<std::size_t>(root)][0]
                                                : cyc_minus[static_cast<std::size_t>(root - nplus)][0]);
  place(root, start, 0.0, 2.0 * std::numbers::pi, 0);

  // match vertices to unknown slots by multiplicity
  Eigen::VectorXcd x(static_cast<Eigen::Index>(sys.unknowns()));
  auto fill = [&](const std::vector<int>& slots, int first_vertex, int count, Eigen::Index offset) {
    std::vector<bool> used(static_cast<std::size_t>(count), false);
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (int v = 0; v < count; ++v)
        if (!used[static_cast<std::size_t>(v)] && degree(first_vertex + v) == slots[s]) {
          used[static_cast<std::size_t>(v)] = true;
          x(offset + static_cast<Eigen::Index>(s)) = pos[static_cast<std::size_t>(first_vertex + v)];
          break;
        }
  };
  fill(sys.plus(), 0, nplus, 0);
  fill(sys.minus(), nplus, nv - nplus, static_cast<Eigen::Index>(sys.plus().size()));
  return x;
}

double arg_in_turn(cplx c) {
  double a = std::arg(c);
  if (a < 0) a += 2.0 * std::numbers::pi;
  if (a > 2.0 * std::numbers::pi - 1e-7) a = 0.0;
  return a;
}

}  // namespace

double solution_residual(const ShabatSolution& s) {
  const int m = s.nu.degree();
  std::vector<cplx> a, b;
  std::vector<int> ka, kb;
  for (const auto& r : s.roots_plus) {
    a.push_back(r.location);
    ka.push_back(r.multiplicity);
  }
  for (const auto& r : s.roots_minus) {
    b.push_back(r.location);
    kb.push_back(r.multiplicity);
  }
  const Coeffs p = expand(a, ka);
  const Coeffs q = expand(b, kb);
  const Coeffs plus = s.nu.shifted(1.0).full();
  const Coeffs minus = s.nu.shifted(-1.0).full();
  double res = m >= 1 ? std::abs(s.nu.coeff(m - 1)) : 0.0;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    res = std::max(res, std::abs(plus[i] - (i < p.size() ? p[i] : cplx(0.0))));
    res = std::max(res, std::abs(minus[i] - (i < q.size() ? q[i] : cplx(0.0))));
  }
  if (p.size() != plus.size() || q.size() != minus.size()) res = std::numeric_limits<double>::infinity();
  return res;
}

std::pair<MonicPoly, cplx> zeta_canonical(const MonicPoly& nu) {
  const int m = nu.degree();
  const double scale = poly::max_abs(nu.coeffs());
  MonicPoly best = nu;
  cplx best_zeta(1.0);
  std::vector<double> best_key;
  for (int r = 0; r < m; ++r) {
    const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * r / m);
    const MonicPoly cand = nu.rotated(zeta);
    std::vector<double> key;
    for (int i = 0; i < m; ++i) {
      const cplx c = cand.coeff(i);
      if (std::abs(c) > kStructuralZero * scale) key.push_back(arg_in_turn(c));
    }
    bool better = r == 0;
    for (std::size_t i = 0; !better && i < key.size(); ++i) {
      if (key[i] < best_key[i] - 1e-7) better = true;
      else if (key[i] > best_key[i] + 1e-7) break;
    }
    if (better) {
      best = cand;
      best_zeta = zeta;
      best_key = std::move(key);
    }
  }
  return {best, best_zeta};
}

ShabatSolution zeta_normalized(const ShabatSolution& s) {
  auto [nu, zeta] = zeta_canonical(s.nu);
  ShabatSolution out = s;
  out.nu = std::move(nu);
  // nu~(z) = nu(zeta z) vanishes at r / zeta
  for (auto& r : out.roots_plus) r.location /= zeta;
  for (auto& r : out.roots_minus) r.location /= zeta;
  out.residual = solution_residual(out);
  return out;
}

ShabatSolution solve(const AdmissibleTuple& tuple, const SolverConfig& config) {
  config.validate();
  const int m = tuple.m();
  const RootSystem sys(side_multiplicities(tuple.d_plus(), m), side_multiplicities(tuple.d_minus(), m), m);
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Eigen::VectorXcd tree = dessin_layout(sys, factorize(tuple));
  const double tree_radius = std::max(1.0, tree.cwiseAbs().maxCoeff());
  constexpr std::array kTreeScales{1.2, 0.8, 1.7, 0.55, 2.4};

  for (int attempt = 0; attempt < config.restart_count; ++attempt) {
    Eigen::VectorXcd x;
    if (attempt < 3 * static_cast<int>(kTreeScales.size()) || attempt % 2 == 0) {
      // the drawn tree, rescaled, with jitter growing over the attempts
      const double scale = kTreeScales[static_cast<std::size_t>(attempt) % kTreeScales.size()] / tree_radius;
      const double jitter = attempt < static_cast<int>(kTreeScales.size()) ? 0.0 : 0.15 * (1.0 + attempt / 50.0);
      x = scale * tree;
      for (Eigen::Index i = 0; i < x.size(); ++i)
        x(i) += scale * jitter * std::polar(unit(rng), 2.0 * std::numbers::pi * unit(rng));
      centre(sys, x);
    } else {
      x = random_start(sys, rng, attempt);
    }
    if (!anchored_newton(sys, x, config) || !roots_separated(x)) continue;

    const auto [p, q] = sys.products(x);
    std::vector<cplx> c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      c[static_cast<std::size_t>(i)] = 0.5 * ((p[static_cast<std::size_t>(i)] - (i == 0 ? 1.0 : 0.0)) +
                                              (q[static_cast<std::size_t>(i)] + (i == 0 ? 1.0 : 0.0)));
    c[static_cast<std::size_t>(m - 1)] = 0.0;

    ShabatSolution sol;
    sol.nu = MonicPoly(std::move(c));
    const auto np = static_cast<Eigen::Index>(sys.plus().size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (i < np) sol.roots_plus.push_back({x(i), sys.plus()[static_cast<std::size_t>(i)]});
      else sol.roots_minus.push_back({x(i), sys.minus()[static_cast<std::size_t>(i - np)]});
    }
    sol.seed = config.rng_seed;
    sol.attempts = attempt + 1;
    sol = zeta_normalized(sol);
    if (sol.residual < config.newton_tolerance) return sol;
  }
  throw NoConvergence("no converged start for " + tuple.to_string() + " after " +
                      std::to_string(config.restart_count) + " restarts");
}

AdmissibleTuple balanced_nodal_tuple(int m) {
  if (m < 2) throw ContractViolation("balanced nodal tuple needs m >= 2");
  const int plus = m / 2;
  const int minus = (m + 1) / 2 - 1;
  return AdmissibleTuple(plus ? Counts{plus} : Counts{}, minus ? Counts{minus} : Counts{});
}

ShabatSolution chebyshev_oracle(int m) {
  if (m < 2) throw ContractViolation("chebyshev_oracle needs m >= 2");
  Coeffs prev{cplx(2.0)};
  Coeffs cur{cplx(0.0), cplx(1.0)};
  for (int k = 2; k <= m; ++k) {
    Coeffs next = poly::subtract(poly::multiply(Coeffs{cplx(0.0), cplx(1.0)}, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  // nu(z) = P_m(u z) / 2 with u^m = 2
  const double u = std::pow(2.0, 1.0 / m);
  std::vector<cplx> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = 0.5 * cur[static_cast<std::size_t>(i)] * std::pow(u, i);

  ShabatSolution sol;
  sol.nu = MonicPoly(std::move(c));
  // nu(2^{1-1/m} cos t) = cos(m t)
  const double amp = std::pow(2.0, 1.0 - 1.0 / m);
  for (int k = 0; 2 * k <= m; ++k) {
    const double t = 2.0 * std::numbers::pi * k / m;
    const bool interior = k > 0 && 2 * k < m;
    sol.roots_minus.push_back({cplx(amp * std::cos(t)), interior ? 2 : 1});
  }
  for (int k = 0; 2 * k + 1 <= m; ++k) {
    const double t = std::numbers::pi * (2 * k + 1) / m;
    const bool interior = 2 * k + 1 < m;
    sol.roots_plus.push_back({cplx(amp * std::cos(t)), interior ? 2 : 1});
  }
  auto by_mult = [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.multiplicity > b.multiplicity; };
  std::stable_sort(sol.roots_plus.begin(), sol.roots_plus.end(), by_mult);
  std::stable_sort(sol.roots_minus.begin(), sol.roots_minus.end(), by_mult);
  sol.residual = solution_residual(sol);
  return sol;
}

VerifyReport verify(const ShabatSolution& solution, const AdmissibleTuple& tuple, double tol) {
  VerifyReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.issues.push_back(std::move(msg));
  };
  const int m = tuple.m();
  const MonicPoly& nu = solution.nu;
  if (nu.degree() != m) {
    fail("degree " + std::to_string(nu.degree()) + " != m = " + std::to_string(m));
    return rep;
  }
  const double scale = 1.0 + poly::max_abs(nu.coeffs());
  if (std::abs(nu.coeff(m - 1)) > tol * scale) fail("nonzero z^{m-1} coefficient");

  auto census_of = [](const std::vector<int>& mults) {
    std::map<int, int> c;
    for (int k : mults) ++c[k];
    return c;
  };
  auto expected = [&](const Counts& d) { return census_of(side_multiplicities(d, m)); };

  if (!solution.roots_plus.empty() || !solution.roots_minus.empty()) {
    std::vector<int> kp, km;
    for (const auto& r : solution.roots_plus) kp.push_back(r.multiplicity);
    for (const auto& r : solution.roots_minus) km.push_back(r.multiplicity);
    if (census_of(kp) != expected(tuple.d_plus())) fail("stored plus-side multiplicities do not match d+");
    if (census_of(km) != expected(tuple.d_minus())) fail("stored minus-side multiplicities do not match d-");
    rep.coefficient_residual = solution_residual(solution);
    if (!(rep.coefficient_residual <= tol * scale)) fail("product re-expansion residual too large");
  }

  // empty optional: the clustering was ambiguous
  auto clustered = [&](const MonicPoly& p, const std::vector<double>& noise) -> std::optional<std::map<int, int>> {
    try {
      std::vector<int> mults;
      for (const auto& c : cluster_roots(p, kDefaultClusterTol, noise)) mults.push_back(c.multiplicity);
      return census_of(mults);
    } catch (const Ambiguity&) {
      return std::nullopt;
    }
  };
  // coefficients are trusted to the solver's accuracy, not to machine precision
  const double accuracy = std::max(1e-11 * scale, 4.0 * solution.residual);
  const std::vector<double> shift_noise(static_cast<std::size_t>(m), accuracy);
  const auto plus_census = clustered(nu.shifted(1.0), shift_noise);
  const auto minus_census = clustered(nu.shifted(-1.0), shift_noise);
  if (!plus_census) fail("clustering nu+1 is ambiguous");
  else if (*plus_census != expected(tuple.d_plus())) fail("roots of nu+1 do not realise d+");
  if (!minus_census) fail("clustering nu-1 is ambiguous");
  else if (*minus_census != expected(tuple.d_minus())) fail("roots of nu-1 do not realise d-");

  const Coeffs sq = poly::multiply(nu.full(), nu.full());
  Coeffs disc = sq;
  disc[0] -= 1.0;
  std::vector<double> sq_noise(sq.size(), 0.0);
  for (std::size_t i = 0; i < sq.size(); ++i)
    for (std::size_t j = 0; j <= i && j <= static_cast<std::size_t>(m); ++j)
      if (i - j <= static_cast<std::size_t>(m)) sq_noise[i] += 2.0 * accuracy * std::abs(nu.coeff(static_cast<int>(j)));
  std::map<int, int> merged = expected(tuple.d_plus());
  for (const auto& [k, c] : expected(tuple.d_minus())) merged[k] += c;
  if (const auto disc_census = clustered(MonicPoly::from_full(disc), sq_noise)) {
    if (*disc_census != merged) fail("roots of nu^2-1 do not realise the profile");
  } else if (plus_census && minus_census) {
    // nu^2 - 1 = (nu - 1)(nu + 1) and the factors share no root, so their census is the union
    rep.notes.push_back("nu^2-1 is too ill-conditioned to cluster directly; its roots are those of nu+1 and nu-1");
  } else {
    fail("clustering nu^2-1 is ambiguous");
  }

  // Parity: nu(-z) (m even) or -nu(-z) (m odd, symmetric split) is again a solution for the
  // same tuple. It equals nu only when the solution is unique, which holds for nodal
  // profiles (the tree is a path) but not in general, so elsewhere a mismatch is only noted.
  const bool nodal = moved_points(tuple.d_plus()) + moved_points(tuple.d_minus()) ==
                     2 * (count_at(tuple.d_plus(), 2) + count_at(tuple.d_minus(), 2));
  int vanishing_parity = -1;
  if (m % 2 == 1 && tuple.is_symmetric()) vanishing_parity = 0;
  else if (m % 2 == 0) vanishing_parity = 1;
  if (vanishing_parity >= 0) {
    for (int i = vanishing_parity; i < m; i += 2)
      if (std::abs(nu.coeff(i)) > tol * scale) {
        const std::string msg = "coefficient c_" + std::to_string(i) + " breaks the parity pattern";
        if (nodal) fail(msg);
        else rep.notes.push_back(msg + " (a non-unique solution class)");
        break;
      }
  }
  return rep;
}

}  // namespace tacnode
