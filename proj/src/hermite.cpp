#include "slicealg/hermite.hpp"

#include <sstream>
#include <stdexcept>

#include "slicealg/operators.hpp"

namespace slicealg {

namespace {

const ExactScalar kC = ExactScalar::c_pow(2);

Rational binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

DressedFunction raise_op(const DressedFunction& f) {
  // x - c D0
  DressedFunction xf = apply_X(f);
  DressedFunction df = apply_D0(f);
  return {xf.poly - df.poly * kC, f.rate};
}

std::string jk_id(int j, int k) {
  std::ostringstream os;
  os << "(j,k)=(" << j << "," << k << ")";
  return os.str();
}

}  // namespace

SlicePoly monogenic(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  SlicePoly base;  // x0 + r w
  base.add_term(1, 0, SliceCoeff(ExactScalar(1)));
  base.add_term(0, 1, SliceCoeff::basis(SliceCoeff::kW));
  SlicePoly pow{SliceCoeff(ExactScalar(1))};
  for (int i = 0; i < k; ++i) pow = pow * base;
  SliceCoeff e0_minus_1 = SliceCoeff::basis(SliceCoeff::kE0) -
                          SliceCoeff(ExactScalar(1));
  return pow.left_mul(e0_minus_1);
}

SlicePoly x_power(int n) {
  SlicePoly p{SliceCoeff(ExactScalar(1))};
  for (int i = 0; i < n; ++i) p = x_poly() * p;
  return p;
}

SlicePoly hermite_poly(int j, int k) {
  DressedFunction f{monogenic(k), 0};
  for (int i = 0; i < j; ++i) f = raise_op(f);
  return f.poly;
}

SlicePoly laguerre_form(int j, int k) {
  SlicePoly h;
  const int t = j / 2;
  if (j % 2 == 0) {
    for (int i = 0; i <= t; ++i) {
      Rational q = binom(t, i) * factorial(t + k) / factorial(k + i);
      Int two_pow = 1;
      for (int p = 0; p < t - i; ++p) two_pow *= 2;
      h = h + x_power(2 * i) *
                  ExactScalar::term(q * Rational(two_pow), 2 * (t - i), 0);
    }
  } else {
    for (int i = 0; i <= t; ++i) {
      Rational q = binom(t, i) * factorial(t + k + 1) / factorial(k + i + 1);
      Int two_pow = 1;
      for (int p = 0; p < t - i; ++p) two_pow *= 2;
      h = h + x_power(2 * i + 1) *
                  ExactScalar::term(q * Rational(two_pow), 2 * (t - i), 0);
    }
  }
  return h * monogenic(k);
}

SlicePoly laguerre_closed_form(int j, int k) {
  const int t = j / 2;
  const int upper = (j % 2 == 0) ? k : k + 1;
  // u = |x|^2 / 2c as a scalar slice polynomial.
  SlicePoly u;
  u.add_term(2, 0, SliceCoeff(ExactScalar::term(frac(1, 2), -2, 0)));
  u.add_term(0, 2, SliceCoeff(ExactScalar::term(frac(1, 2), -2, 0)));
  SlicePoly lag;
  SlicePoly u_pow{SliceCoeff(ExactScalar(1))};
  for (int i = 0; i <= t; ++i) {
    Rational q = binom(t + upper, t - i) / factorial(i);
    if (i % 2 == 1) q = -q;
    lag = lag + u_pow * ExactScalar(q);
    u_pow = u_pow * u;
  }
  Int two_c_pow = 1;
  for (int p = 0; p < t; ++p) two_c_pow *= 2;
  SlicePoly h = lag * ExactScalar::term(factorial(t) * Rational(two_c_pow),
                                        2 * t, 0);
  if (j % 2 == 1) h = x_poly() * h;
  return h * monogenic(k);
}

ExactScalar B_const(int j, int k) {
  return ExactScalar(j % 2 == 0 ? Rational(k) : Rational(-(k + 1)));
}

ExactScalar C_const(int j, int k) {
  const int t = j / 2;
  return ExactScalar(j % 2 == 0 ? Rational(-2 * t)
                                : Rational(-2 * (k + t + 1)));
}

ExactScalar A_const(int j, int k, int m) {
  const int t = j / 2;
  long exp = (j % 2 == 0) ? 2 * t + k + 1 : 2 * t + k + 2;
  Rational fac = factorial(t) *
                 ((j % 2 == 0) ? factorial(k + t) : factorial(k + t + 1));
  Int two_pow = 1;
  for (long p = 0; p < exp; ++p) two_pow *= 2;
  ExactScalar r = ExactScalar::term(2 * fac * Rational(two_pow), 2 * exp, 0);
  return r * ExactScalar::pi_pow(m + 2) * gamma_half(frac(m, 2)).inverse();
}

SlicePoly rodrigues(int j, int k, const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const Rational rate = 1 / lambda;
  const ExactScalar front{Rational(lambda - 2) / lambda};  // 1 - 2c/alpha
  DressedFunction f{monogenic(k), rate};
  for (int i = 0; i < j; ++i) {
    DressedFunction xf = apply_X(f);
    DressedFunction df = apply_D0(f);
    f = {xf.poly * front - df.poly * kC, rate};
  }
  if (f.rate != rate)
    throw std::logic_error("rodrigues: Gaussian rate drifted");
  return f.poly;
}

DressedFunction hermite_function(int j, int k) {
  return {hermite_poly(j, k), frac(1, 4)};
}

Report check_lowering(int j_max, int k_max) {
  Report rep;
  rep.suite = "lowering";
  for (int k = 0; k <= k_max; ++k) {
    SlicePoly prev = monogenic(k);
    DressedFunction d0m = apply_D0({prev, 0});
    rep.record(d0m.poly.is_zero(), "monogenicity",
               "D0 m_" + std::to_string(k), "0", d0m.poly.str());
    for (int j = 1; j <= j_max; ++j) {
      SlicePoly cur = hermite_poly(j, k);
      SlicePoly lhs = apply_D0({cur, 0}).poly;
      SlicePoly rhs = prev * C_const(j, k);
      rep.record(lhs == rhs, j % 2 == 0 ? "id1" : "id2",
                 "D0 H_j " + jk_id(j, k), rhs.str(), lhs.str());
      prev = cur;
    }
  }
  return rep;
}

Report check_ode(int j_max, int k_max) {
  Report rep;
  rep.suite = "ode";
  for (int k = 0; k <= k_max; ++k) {
    std::vector<SlicePoly> H;
    for (int j = 0; j <= j_max + 1; ++j) H.push_back(hermite_poly(j, k));
    for (int j = 0; j <= j_max; ++j) {
      DressedFunction f{H[j], 0};
      DressedFunction d = apply_D0(f);
      SlicePoly ode = apply_D0(d).poly * kC - apply_X(d).poly +
                      H[j] * C_const(j, k);
      rep.record(ode.is_zero(), "differential-equation", jk_id(j, k), "0",
                 ode.str());

      SlicePoly eig = apply_euler(f).poly + apply_X(d).poly;
      SlicePoly expect = H[j] * B_const(j, k);
      rep.record(eig == expect, "eigenrelation",
                 "(E+xD0)H_j " + jk_id(j, k), expect.str(), eig.str());

      if (j >= 1) {
        SlicePoly bis = apply_X(f).poly - H[j - 1] * (kC * C_const(j, k));
        rep.record(bis == H[j + 1], "recursion-bis", jk_id(j, k),
                   H[j + 1].str(), bis.str());
      }
    }
  }
  return rep;
}

Report check_closed_forms(int j_max, int k_max) {
  Report rep;
  rep.suite = "closed-forms";
  for (int k = 0; k <= k_max; ++k) {
    for (int j = 0; j <= j_max; ++j) {
      SlicePoly op = hermite_poly(j, k);
      SlicePoly lf = laguerre_form(j, k);
      SlicePoly lc = laguerre_closed_form(j, k);
      rep.record(op == lf, "coefficient-form", jk_id(j, k), op.str(),
                 lf.str());
      rep.record(op == lc, "laguerre-series", jk_id(j, k), op.str(),
                 lc.str());
    }
  }
  return rep;
}

Report check_rodrigues(int j_max, int k_max,
                       const std::vector<Rational>& lambdas) {
  Report rep;
  rep.suite = "rodrigues";
  for (const Rational& lambda : lambdas) {
    for (int k = 0; k <= k_max; ++k) {
      for (int j = 0; j <= j_max; ++j) {
        SlicePoly r = rodrigues(j, k, lambda);
        SlicePoly h = hermite_poly(j, k);
        rep.record(r == h, "lambda=" + lambda.get_str(), jk_id(j, k), h.str(),
                   r.str());
      }
    }
  }
  return rep;
}

Report check_ladder(int j_max, int k_max) {
  Report rep;
  rep.suite = "ladder";
  const ExactScalar half{frac(1, 2)};
  auto raise_psi = [&](const DressedFunction& f) {
    return DressedFunction{apply_X(f).poly * half - apply_D0(f).poly * kC,
                           f.rate};
  };
  auto lower_psi = [&](const DressedFunction& f) {
    return DressedFunction{-(apply_X(f).poly * half) - apply_D0(f).poly * kC,
                           f.rate};
  };
  for (int k = 0; k <= k_max; ++k) {
    DressedFunction ground = hermite_function(0, k);
    DressedFunction killed = lower_psi(ground);
    rep.record(killed.poly.is_zero(), "ground-state",
               "(-x/2-cD0) psi_0," + std::to_string(k), "0",
               killed.poly.str());
    DressedFunction prev = ground;
    for (int j = 1; j <= j_max; ++j) {
      DressedFunction cur = hermite_function(j, k);
      DressedFunction up = raise_psi(prev);
      rep.record(up == cur, "raising", jk_id(j, k), cur.str(), up.str());
      DressedFunction down = lower_psi(cur);
      DressedFunction expect{prev.poly * (-(kC * C_const(j, k))), prev.rate};
      rep.record(down == expect, "lowering", jk_id(j, k), expect.str(),
                 down.str());
      prev = cur;
    }
  }
  return rep;
}

Report check_oscillator(int j_max, int k_max) {
  Report rep;
  rep.suite = "oscillator";
  const ExactScalar quarter_inv_c = ExactScalar::term(frac(1, 4), -2, 0);
  for (int k = 0; k <= k_max; ++k) {
    for (int j = 0; j <= j_max; ++j) {
      DressedFunction psi = hermite_function(j, k);
      SlicePoly lhs = apply_D0(apply_D0(psi)).poly * kC +
                      apply_normsq(psi).poly * quarter_inv_c;
      SlicePoly rhs = psi.poly * ExactScalar(j + k + 1);
      rep.record(lhs == rhs, "eigenvalue", jk_id(j, k), rhs.str(), lhs.str());
    }
  }
  return rep;
}

}  // namespace slicealg
