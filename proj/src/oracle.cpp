#include "slicealg/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "slicealg/hermite.hpp"
#include "slicealg/inner_product.hpp"
#include "slicealg/operators.hpp"

namespace slicealg {

namespace {

// Sign of e_A e_B with every generator squaring to -1, computed by moving
// the factors of B into A one generator at a time.  Returns the resulting
// mask through `a`.
int num_sign(std::uint32_t& a, std::uint32_t b) {
  int sign = 1;
  for (int i = 0; i < 32; ++i) {
    if (!((b >> i) & 1u)) continue;
    int swaps = 0;
    for (int j = i + 1; j < 32; ++j) swaps += (a >> j) & 1u;
    if (swaps % 2) sign = -sign;
    if ((a >> i) & 1u) {
      sign = -sign;  // e_i e_i = -1
      a &= ~(1u << i);
    } else {
      a |= 1u << i;
    }
  }
  return sign;
}

}  // namespace

double NumericMultivector::max_abs() const {
  double m = 0.0;
  for (double v : comp) m = std::max(m, std::fabs(v));
  return m;
}

NumericMultivector num_product(const NumericMultivector& a,
                               const NumericMultivector& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  NumericMultivector r(a.dim);
  for (std::uint32_t i = 0; i < a.comp.size(); ++i) {
    if (a.comp[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < b.comp.size(); ++j) {
      if (b.comp[j] == 0.0) continue;
      std::uint32_t mask = i;
      int sign = num_sign(mask, j);
      r.comp[mask] += sign * a.comp[i] * b.comp[j];
    }
  }
  return r;
}

NumericMultivector num_conjugate(const NumericMultivector& a) {
  NumericMultivector r(a.dim);
  for (std::uint32_t i = 0; i < a.comp.size(); ++i) {
    int g = 0;
    for (int bit = 0; bit < a.dim; ++bit) g += (i >> bit) & 1u;
    int sign = ((g * (g + 1) / 2) % 2) ? -1 : 1;
    r.comp[i] = sign * a.comp[i];
  }
  return r;
}

NumericMultivector eval_at_numeric(const DressedFunction& f, double c_val,
                                   double x0, double r,
                                   const std::vector<double>& omega, int m) {
  if (static_cast<int>(omega.size()) != m)
    throw std::invalid_argument("omega must have m components");
  NumericMultivector w(m + 1);
  for (int i = 0; i < m; ++i) w.comp[1u << (i + 1)] = omega[i];
  NumericMultivector e0(m + 1);
  e0.comp[1u] = 1.0;
  NumericMultivector we0 = num_product(w, e0);

  NumericMultivector out(m + 1);
  for (const auto& [mono, s] : f.poly.terms()) {
    double scale = std::pow(x0, mono.first) * std::pow(r, mono.second);
    out.comp[0] += scale * s[SliceCoeff::kOne].eval(c_val);
    double ce0 = s[SliceCoeff::kE0].eval(c_val);
    double cw = s[SliceCoeff::kW].eval(c_val);
    double cwe0 = s[SliceCoeff::kWE0].eval(c_val);
    for (std::uint32_t i = 0; i < out.comp.size(); ++i) {
      out.comp[i] += scale * (ce0 * e0.comp[i] + cw * w.comp[i] +
                              cwe0 * we0.comp[i]);
    }
  }
  if (f.rate != 0) {
    double damp = std::exp(-f.rate.get_d() * (x0 * x0 + r * r) / c_val);
    for (double& v : out.comp) v *= damp;
  }
  return out;
}

double num_distance(const Multivector& exact, const NumericMultivector& num,
                    double c_val) {
  if (exact.dim() != num.dim) throw std::invalid_argument("dimension mismatch");
  NumericMultivector diff = num;
  for (const auto& [mask, coeff] : exact.coeffs())
    diff.comp[mask] -= coeff.eval(c_val);
  return diff.max_abs();
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P_n'(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

void quad_inner(const DressedFunction& f, const DressedFunction& g, int m,
                double c_val, double& scalar_out, double& e0_out,
                double rel_tol) {
  const double rho = Rational(f.rate + g.rate).get_d();
  if (rho <= 0) throw std::invalid_argument("quad_inner: divergent integral");
  const double T = 12.0 * std::sqrt(c_val / rho);
  const double area =
      2.0 * std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0);

  // Numeric S-algebra product table, written out directly:
  // basis order (1, e0, w, we0).
  static const int idx[4][4] = {{0, 1, 2, 3},
                                {1, 0, 3, 2},
                                {2, 3, 0, 1},
                                {3, 2, 1, 0}};
  static const int sgn[4][4] = {{+1, +1, +1, +1},
                                {+1, -1, -1, +1},
                                {+1, +1, -1, -1},
                                {+1, -1, +1, -1}};

  // Cache coefficient evaluations once.
  struct Term {
    long a, b;
    double s[4];
  };
  auto flatten = [&](const SlicePoly& p) {
    std::vector<Term> out;
    for (const auto& [mono, s] : p.terms()) {
      Term t{mono.first, mono.second, {}};
      for (int i = 0; i < 4; ++i) t.s[i] = s[i].eval(c_val);
      out.push_back(t);
    }
    return out;
  };
  const auto ft = flatten(f.poly);
  const auto gt = flatten(g.poly);

  auto integrand = [&](double x0, double r, double& s0, double& s1) {
    double fv[4] = {0, 0, 0, 0}, gv[4] = {0, 0, 0, 0};
    for (const auto& t : ft) {
      double scale = std::pow(x0, t.a) * std::pow(r, t.b);
      for (int i = 0; i < 4; ++i) fv[i] += scale * t.s[i];
    }
    for (const auto& t : gt) {
      double scale = std::pow(x0, t.a) * std::pow(r, t.b);
      for (int i = 0; i < 4; ++i) gv[i] += scale * t.s[i];
    }
    // conj flips the sign of e0, w and we0.
    for (int i = 1; i < 4; ++i) fv[i] = -fv[i];
    double prod[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        prod[idx[i][j]] += sgn[i][j] * fv[i] * gv[j];
    double damp = std::exp(-rho * (x0 * x0 + r * r) / c_val);
    s0 = prod[0] * damp;
    s1 = prod[1] * damp;
  };

  double prev0 = 0.0, prev1 = 0.0;
  bool have_prev = false;
  for (int n = 32; n <= 512; n *= 2) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    double acc0 = 0.0, acc1 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x0 = T * x[i];          // x0 in [-T, T]
      const double wx = T * w[i];
      for (int j = 0; j < n; ++j) {
        const double r = 0.5 * T * (x[j] + 1.0);  // r in [0, T]
        const double wr = 0.5 * T * w[j];
        double s0, s1;
        integrand(x0, r, s0, s1);
        acc0 += wx * wr * s0;
        acc1 += wx * wr * s1;
      }
    }
    acc0 *= area;
    acc1 *= area;
    if (have_prev) {
      double scale = std::max({1.0, std::fabs(acc0), std::fabs(acc1)});
      if (std::fabs(acc0 - prev0) < rel_tol * scale &&
          std::fabs(acc1 - prev1) < rel_tol * scale) {
        scalar_out = acc0;
        e0_out = acc1;
        return;
      }
    }
    prev0 = acc0;
    prev1 = acc1;
    have_prev = true;
  }
  scalar_out = prev0;
  e0_out = prev1;
}

Report fd_check_d0(int max_j, int max_k, int m, double c_val) {
  Report rep;
  rep.suite = "finite-difference";
  const double h = 1e-5;
  std::vector<double> omega(m, 0.0);
  if (m == 1) {
    omega[0] = 1.0;
  } else {
    omega[0] = 0.6;
    omega[1] = 0.8;
  }
  const std::vector<std::pair<double, double>> points = {
      {0.3, 0.7}, {-1.1, 0.4}, {0.9, 1.3}, {-0.2, 2.1}, {1.7, 0.05}};

  NumericMultivector e0(m + 1);
  e0.comp[1u] = 1.0;
  NumericMultivector w(m + 1);
  for (int i = 0; i < m; ++i) w.comp[1u << (i + 1)] = omega[i];

  for (int j = 0; j <= max_j; ++j) {
    for (int k = 0; k <= max_k; ++k) {
      DressedFunction psi = hermite_function(j, k);
      DressedFunction dpsi = apply_D0(psi);
      for (const auto& [x0, r] : points) {
        NumericMultivector fp =
            eval_at_numeric(psi, c_val, x0 + h, r, omega, m);
        NumericMultivector fm =
            eval_at_numeric(psi, c_val, x0 - h, r, omega, m);
        NumericMultivector gp =
            eval_at_numeric(psi, c_val, x0, r + h, omega, m);
        NumericMultivector gm =
            eval_at_numeric(psi, c_val, x0, r - h, omega, m);
        NumericMultivector dx(m + 1), dr(m + 1);
        for (std::size_t i = 0; i < dx.comp.size(); ++i) {
          dx.comp[i] = (fp.comp[i] - fm.comp[i]) / (2 * h);
          dr.comp[i] = (gp.comp[i] - gm.comp[i]) / (2 * h);
        }
        NumericMultivector fd = num_product(e0, dx);
        NumericMultivector wr = num_product(w, dr);
        for (std::size_t i = 0; i < fd.comp.size(); ++i)
          fd.comp[i] += wr.comp[i];
        NumericMultivector exact =
            eval_at_numeric(dpsi, c_val, x0, r, omega, m);
        double err = 0.0;
        for (std::size_t i = 0; i < fd.comp.size(); ++i)
          err = std::max(err, std::fabs(fd.comp[i] - exact.comp[i]));
        double scale = std::max(1.0, exact.max_abs());
        std::ostringstream id;
        id << "D0 psi(" << j << "," << k << ") at (" << x0 << "," << r
           << ") m=" << m;
        rep.record(err / scale < 1e-8, "dirac", id.str(), "<1e-8",
                   std::to_string(err / scale));
      }
    }
  }
  return rep;
}

Report oracle_compare(int max_j, int max_k, int m, double c_val) {
  Report rep;
  rep.suite = "oracle";
  const Multivector one(m + 1, ExactScalar(1));
  for (int j1 = 0; j1 <= max_j; ++j1) {
    for (int k1 = 0; k1 <= max_k; ++k1) {
      DressedFunction f = hermite_function(j1, k1);
      for (int j2 = 0; j2 <= max_j; ++j2) {
        for (int k2 = 0; k2 <= max_k; ++k2) {
          DressedFunction g = hermite_function(j2, k2);
          Multivector exact = inner(f, g, m, one, one);
          double q0, q1;
          quad_inner(f, g, m, c_val, q0, q1);
          double e0v = scalar_part(exact).eval(c_val);
          double e1v = exact.coeff(1u).eval(c_val);
          double scale = std::max({1.0, std::fabs(e0v), std::fabs(e1v)});
          double err =
              std::max(std::fabs(q0 - e0v), std::fabs(q1 - e1v)) / scale;
          std::ostringstream id;
          id << "<psi(" << j1 << "," << k1 << "),psi(" << j2 << "," << k2
             << ")> m=" << m << " c=" << c_val;
          rep.record(err < 1e-8, "quadrature", id.str(), "<1e-8",
                     std::to_string(err));
        }
      }
    }
  }
  rep.merge(fd_check_d0(max_j, max_k, m, c_val));
  return rep;
}

}  // namespace slicealg
