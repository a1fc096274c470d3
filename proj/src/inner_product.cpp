#include "slicealg/inner_product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "slicealg/operators.hpp"
#include "slicealg/parallel.hpp"

namespace slicealg {

ExactScalar sphere_area(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return ExactScalar(2) * ExactScalar::pi_pow(m) *
         gamma_half(frac(m, 2)).inverse();
}

SphereProjection sphere_integral(const SliceCoeff& s, int m) {
  ExactScalar area = sphere_area(m);
  return {s[SliceCoeff::kOne] * area, s[SliceCoeff::kE0] * area, area};
}

Multivector inner(const DressedFunction& f, const DressedFunction& g, int m,
                  const Multivector& a, const Multivector& b) {
  const Rational rho = f.rate + g.rate;
  if (rho <= 0)
    throw std::invalid_argument("inner: combined Gaussian rate must be positive");
  if (a.dim() != m + 1 || b.dim() != m + 1)
    throw std::invalid_argument("inner: right constant dimension mismatch");
  SlicePoly p = f.poly.conj() * g.poly;
  ExactScalar s0, s1;
  const ExactScalar area = sphere_area(m);
  for (const auto& [mono, s] : p.terms()) {
    ExactScalar mom = gaussian_moment(mono.first, mono.second, rho);
    if (mom.is_zero()) continue;
    s0 += s[SliceCoeff::kOne] * area * mom;
    s1 += s[SliceCoeff::kE0] * area * mom;
  }
  Multivector mid(m + 1, s0);
  mid.add_term(1u, s1);
  return conjugate(a) * mid * b;
}

Report check_selfadjoint(int max_j, int max_k, int m) {
  Report rep;
  rep.suite = "adjoint";
  const Multivector one(m + 1, ExactScalar(1));

  std::vector<std::pair<std::string, DressedFunction>> fns;
  for (int j = 0; j <= max_j; ++j)
    for (int k = 0; k <= max_k; ++k)
      fns.push_back({"psi(" + std::to_string(j) + "," + std::to_string(k) + ")",
                     hermite_function(j, k)});
  // Dressed monomials complement the psi sweep.  Only monomials whose r
  // power matches the parity of the coefficient in w represent functions on
  // R^{m+1} (x_^k = r^k w^k); outside that subspace the r = 0 boundary term
  // of the integration by parts survives and adjointness genuinely fails.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int s = 0; s < 4; ++s) {
        const bool w_odd = (s == SliceCoeff::kW || s == SliceCoeff::kWE0);
        if ((b % 2 == 1) != w_odd) continue;
        DressedFunction mono{
            SlicePoly::monomial(a, b,
                                SliceCoeff::basis(
                                    static_cast<SliceCoeff::Basis>(s))),
            frac(1, 4)};
        fns.push_back({mono.poly.str(), mono});
      }

  struct Prepared {
    DressedFunction f, d0f, xf;
  };
  std::vector<Prepared> prep(fns.size());
  for (size_t i = 0; i < fns.size(); ++i)
    prep[i] = {fns[i].second, apply_D0(fns[i].second),
               apply_X(fns[i].second)};

  const long n = static_cast<long>(fns.size());
  std::vector<Report> partial(n);
  parallel_for(n, [&](long i) {
    Report& r = partial[i];
    for (long j = 0; j < n; ++j) {
      const std::string id = fns[i].first + " , " + fns[j].first;
      Multivector dl = inner(prep[i].d0f, prep[j].f, m, one, one);
      Multivector dr = inner(prep[i].f, prep[j].d0f, m, one, one);
      r.record(dl == dr, "D0-selfadjoint", "<D0 f,g>=<f,D0 g> " + id,
               dr.str(), dl.str());
      Multivector xl = inner(prep[i].xf, prep[j].f, m, one, one);
      Multivector xr = inner(prep[i].f, prep[j].xf, m, one, one);
      r.record(xl == -xr, "x-antiadjoint", "<x f,g>=-<f,x g> " + id,
               (-xr).str(), xl.str());
    }
  });
  for (const auto& r : partial) rep.merge(r);
  return rep;
}

std::vector<BetaScanRow> beta_scan(const std::vector<Rational>& lambdas,
                                   int m) {
  std::vector<BetaScanRow> rows;
  const Multivector one(m + 1, ExactScalar(1));
  // The degree-0 generator is absorbed into the right constants here, so
  // the test functions are 1 and h_{2,0} = x^2 + 2c times the Gaussian.
  const SlicePoly unit{SliceCoeff(ExactScalar(1))};
  for (const Rational& lambda : lambdas) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    const Rational rate = 1 / lambda;
    DressedFunction psi00{unit, rate};
    SlicePoly h2 = x_power(2) + SlicePoly{SliceCoeff(ExactScalar::c_pow(2) *
                                                     ExactScalar(2))};
    DressedFunction psi20{h2, rate};
    Multivector value = inner(psi00, psi20, m, one, one);
    // (4c - beta)(pi beta / 8) * sphere area, beta = lambda c.
    ExactScalar closed =
        ExactScalar::term(4 - lambda, 2, 0) *
        ExactScalar::term(lambda / 8, 2, 2) * sphere_area(m);
    Multivector expect(m + 1, closed);
    rows.push_back({lambda, value, closed, value.is_zero(), value == expect});
  }
  return rows;
}

Report check_beta_scan(const std::vector<Rational>& lambdas, int m) {
  Report rep;
  rep.suite = "beta-scan";
  for (const auto& row : beta_scan(lambdas, m)) {
    const std::string id = "lambda=" + row.lambda.get_str();
    rep.record(row.matches_closed_form, "closed-form", id,
               row.closed_form.str(), row.value.str());
    const bool should_vanish = (row.lambda == 4);
    rep.record(row.is_zero == should_vanish, "vanishing", id,
               should_vanish ? "0" : "nonzero", row.value.str());
  }
  return rep;
}

GramReport gram_matrix(int j_max, int k_max, int m, const Multivector& a1,
                       const Multivector& a2) {
  GramReport g{m, a1, a2, {}, {}};
  g.verification.suite = "orthogonality";
  std::vector<std::pair<int, int>> jk;
  for (int j = 0; j <= j_max; ++j)
    for (int k = 0; k <= k_max; ++k) jk.push_back({j, k});
  std::vector<DressedFunction> psi(jk.size());
  for (size_t i = 0; i < jk.size(); ++i)
    psi[i] = hermite_function(jk[i].first, jk[i].second);

  const long n = static_cast<long>(jk.size());
  std::vector<Multivector> vals(n * n, Multivector(m + 1));
  parallel_for(n * n, [&](long idx) {
    vals[idx] = inner(psi[idx / n], psi[idx % n], m, a1, a2);
  });

  const Multivector factor = conjugate(a1) * a2;
  for (long i = 0; i < n; ++i) {
    for (long j2 = 0; j2 < n; ++j2) {
      const auto [ja, ka] = jk[i];
      const auto [jb, kb] = jk[j2];
      const Multivector& v = vals[i * n + j2];
      g.entries.emplace(GramReport::Key{ja, ka, jb, kb}, v);
      std::ostringstream id;
      id << "<psi(" << ja << "," << ka << "),psi(" << jb << "," << kb
         << ")> m=" << m;
      if (ja == jb && ka == kb) {
        Multivector expect = factor * A_const(ja, ka, m);
        g.verification.record(v == expect, "diagonal", id.str(),
                              expect.str(), v.str());
      } else {
        g.verification.record(v.is_zero(), "off-diagonal", id.str(), "0",
                              v.str());
      }
    }
  }
  return g;
}

std::string GramReport::csv() const {
  std::vector<std::pair<int, int>> labels;
  for (const auto& [k, v] : entries) {
    std::pair<int, int> row{k.j1, k.k1};
    if (labels.empty() || labels.back() != row) {
      if (std::find(labels.begin(), labels.end(), row) == labels.end())
        labels.push_back(row);
    }
  }
  std::ostringstream os;
  os << "psi";
  for (const auto& [j, k] : labels) os << ",psi(" << j << ";" << k << ")";
  os << "\n";
  for (const auto& [j1, k1] : labels) {
    os << "psi(" << j1 << ";" << k1 << ")";
    for (const auto& [j2, k2] : labels) {
      const Multivector& v = entries.at({j1, k1, j2, k2});
      // Scalar entries render as canonical ExactScalar strings.
      if (v.is_zero()) {
        os << ",0";
      } else if (v.coeffs().size() == 1 && v.coeffs().begin()->first == 0) {
        os << "," << scalar_part(v).str();
      } else {
        os << ",\"" << v.str() << "\"";
      }
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json GramReport::to_json() const {
  nlohmann::json ents = nlohmann::json::array();
  for (const auto& [k, v] : entries)
    ents.push_back({{"j1", k.j1},
                    {"k1", k.k1},
                    {"j2", k.j2},
                    {"k2", k.k2},
                    {"value", v.to_json()}});
  return nlohmann::json{{"m", m},
                        {"a1", a1.to_json()},
                        {"a2", a2.to_json()},
                        {"entries", std::move(ents)},
                        {"verification", verification.to_json()}};
}

}  // namespace slicealg
