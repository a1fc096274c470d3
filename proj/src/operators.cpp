#include "slicealg/operators.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "slicealg/hermite.hpp"

namespace slicealg {

namespace {

// d/dx0 and d/dr of poly * exp(-rate |x|^2 / c), polynomial part only;
// the Gaussian factor is carried unchanged by the caller.
SlicePoly weighted_dx0(const DressedFunction& f) {
  SlicePoly p = f.poly.d_dx0();
  if (f.rate != 0)
    p = p + f.poly.mul_monomial(1, 0) *
                ExactScalar::term(-2 * f.rate, -2, 0);
  return p;
}

SlicePoly weighted_dr(const DressedFunction& f) {
  SlicePoly p = f.poly.d_dr();
  if (f.rate != 0)
    p = p + f.poly.mul_monomial(0, 1) *
                ExactScalar::term(-2 * f.rate, -2, 0);
  return p;
}

DressedFunction scale(const DressedFunction& f, const ExactScalar& s) {
  return {f.poly * s, f.rate};
}

DressedFunction add(const DressedFunction& f, const DressedFunction& g) {
  if (f.rate != g.rate) throw std::invalid_argument("rate mismatch");
  return {f.poly + g.poly, f.rate};
}

DressedFunction sub(const DressedFunction& f, const DressedFunction& g) {
  if (f.rate != g.rate) throw std::invalid_argument("rate mismatch");
  return {f.poly - g.poly, f.rate};
}

void require_bare(const DressedFunction& f, bool dressed, const char* op) {
  if (!dressed && f.rate != 0)
    throw std::invalid_argument(std::string(op) +
                                ": dressed input without chain-rule opt-in");
}

}  // namespace

DressedFunction apply_X(const DressedFunction& f) {
  return {x_poly() * f.poly, f.rate};
}

DressedFunction apply_D0(const DressedFunction& f) {
  SlicePoly p = weighted_dx0(f).left_mul(SliceCoeff::basis(SliceCoeff::kE0)) +
                weighted_dr(f).left_mul(SliceCoeff::basis(SliceCoeff::kW));
  return {p, f.rate};
}

DressedFunction apply_euler(const DressedFunction& f, bool dressed) {
  require_bare(f, dressed, "apply_euler");
  SlicePoly p = weighted_dx0(f).mul_monomial(1, 0) +
                weighted_dr(f).mul_monomial(0, 1);
  return {p, f.rate};
}

DressedFunction apply_slice_laplacian(const DressedFunction& f, bool dressed) {
  require_bare(f, dressed, "apply_slice_laplacian");
  DressedFunction dx{weighted_dx0(f), f.rate};
  DressedFunction dr{weighted_dr(f), f.rate};
  return {weighted_dx0(dx) + weighted_dr(dr), f.rate};
}

DressedFunction apply_normsq(const DressedFunction& f) {
  return {f.poly.mul_monomial(2, 0) + f.poly.mul_monomial(0, 2), f.rate};
}

namespace {

using Op = std::function<DressedFunction(const DressedFunction&)>;

struct Relation {
  const char* name;
  bool needs_euler_or_laplacian;
  Op lhs;
  Op rhs;
};

std::vector<Relation> osp_relations(bool dressed) {
  auto X = [](const DressedFunction& f) { return apply_X(f); };
  auto D0 = [](const DressedFunction& f) { return apply_D0(f); };
  auto N = [](const DressedFunction& f) { return apply_normsq(f); };
  auto E = [dressed](const DressedFunction& f) {
    return apply_euler(f, dressed);
  };
  auto L = [dressed](const DressedFunction& f) {
    return apply_slice_laplacian(f, dressed);
  };
  auto E1 = [E](const DressedFunction& f) { return add(E(f), f); };

  std::vector<Relation> rel;
  rel.push_back({"(i)", false,
                 [X](const DressedFunction& f) {
                   return scale(X(X(f)), ExactScalar(2));
                 },
                 [N](const DressedFunction& f) {
                   return scale(N(f), ExactScalar(-2));
                 }});
  rel.push_back({"(ii)", true,
                 [D0](const DressedFunction& f) {
                   return scale(D0(D0(f)), ExactScalar(2));
                 },
                 [L](const DressedFunction& f) {
                   return scale(L(f), ExactScalar(-2));
                 }});
  rel.push_back({"(iii)", true,
                 [X, D0](const DressedFunction& f) {
                   return add(X(D0(f)), D0(X(f)));
                 },
                 [E1](const DressedFunction& f) {
                   return scale(E1(f), ExactScalar(-2));
                 }});
  rel.push_back({"(iv)", true,
                 [E1, D0](const DressedFunction& f) {
                   return sub(E1(D0(f)), D0(E1(f)));
                 },
                 [D0](const DressedFunction& f) {
                   return scale(D0(f), ExactScalar(-1));
                 }});
  rel.push_back({"(v)", false,
                 [N, D0](const DressedFunction& f) {
                   return sub(N(D0(f)), D0(N(f)));
                 },
                 [X](const DressedFunction& f) {
                   return scale(X(f), ExactScalar(-2));
                 }});
  rel.push_back({"(vi)", true,
                 [E1, X](const DressedFunction& f) {
                   return sub(E1(X(f)), X(E1(f)));
                 },
                 X});
  rel.push_back({"(vii)", true,
                 [L, X](const DressedFunction& f) {
                   return sub(L(X(f)), X(L(f)));
                 },
                 [D0](const DressedFunction& f) {
                   return scale(D0(f), ExactScalar(2));
                 }});
  rel.push_back({"(viii)", true,
                 [E1, L](const DressedFunction& f) {
                   return sub(E1(L(f)), L(E1(f)));
                 },
                 [L](const DressedFunction& f) {
                   return scale(L(f), ExactScalar(-2));
                 }});
  rel.push_back({"(ix)", true,
                 [L, N](const DressedFunction& f) {
                   return sub(L(N(f)), N(L(f)));
                 },
                 [E1](const DressedFunction& f) {
                   return scale(E1(f), ExactScalar(4));
                 }});
  rel.push_back({"(x)", true,
                 [E1, N](const DressedFunction& f) {
                   return sub(E1(N(f)), N(E1(f)));
                 },
                 [N](const DressedFunction& f) {
                   return scale(N(f), ExactScalar(2));
                 }});
  return rel;
}

std::vector<DressedFunction> basis_monomials(int max_degree,
                                             const Rational& rate) {
  std::vector<DressedFunction> out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int s = 0; s < 4; ++s)
        out.push_back({SlicePoly::monomial(
                           a, b, SliceCoeff::basis(
                                     static_cast<SliceCoeff::Basis>(s))),
                       rate});
  return out;
}

std::string monomial_id(const DressedFunction& f) {
  std::ostringstream os;
  os << f.poly.str();
  if (f.rate != 0) os << " @rate=" << f.rate.get_str();
  return os.str();
}

}  // namespace

Report check_osp_relations(int max_degree, const std::vector<Rational>& rates,
                           bool dressed_euler) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
  Report rep;
  rep.suite = "osp";
  auto relations = osp_relations(dressed_euler);
  for (const Rational& rate : rates) {
    auto fns = basis_monomials(max_degree, rate);
    for (const auto& rel : relations) {
      if (rate != 0 && rel.needs_euler_or_laplacian && !dressed_euler)
        continue;
      for (const auto& f : fns) {
        DressedFunction l = rel.lhs(f), r = rel.rhs(f);
        rep.record(l == r, rel.name,
                   std::string(rel.name) + " on " + monomial_id(f), r.str(),
                   l.str());
        if (!rep.failures.empty()) return rep;  // first witness
      }
    }
  }
  return rep;
}

Report check_power_identities(int s_max, int max_degree) {
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  Report rep;
  rep.suite = "powers";
  auto Xpow = [](int n, DressedFunction f) {
    for (int i = 0; i < n; ++i) f = apply_X(f);
    return f;
  };
  for (int s = 1; s <= s_max; ++s) {
    for (const auto& f : basis_monomials(max_degree, 0)) {
      DressedFunction Ef = apply_euler(f);
      DressedFunction D0f = apply_D0(f);

      DressedFunction even_l = apply_D0(Xpow(2 * s, f));
      DressedFunction even_r = add(scale(Xpow(2 * s - 1, f), ExactScalar(-2 * s)),
                                   Xpow(2 * s, D0f));
      rep.record(even_l == even_r, "D0-even",
                 "D0 x^" + std::to_string(2 * s) + " on " + monomial_id(f),
                 even_r.str(), even_l.str());

      DressedFunction odd_l = apply_D0(Xpow(2 * s + 1, f));
      DressedFunction odd_r =
          sub(scale(Xpow(2 * s, add(scale(f, ExactScalar(s + 1)), Ef)),
                    ExactScalar(-2)),
              Xpow(2 * s + 1, D0f));
      rep.record(odd_l == odd_r, "D0-odd",
                 "D0 x^" + std::to_string(2 * s + 1) + " on " + monomial_id(f),
                 odd_r.str(), odd_l.str());

      DressedFunction eeven_l = apply_euler(Xpow(2 * s, f));
      DressedFunction eeven_r =
          Xpow(2 * s, add(scale(f, ExactScalar(2 * s)), Ef));
      rep.record(eeven_l == eeven_r, "E-even",
                 "E x^" + std::to_string(2 * s) + " on " + monomial_id(f),
                 eeven_r.str(), eeven_l.str());

      DressedFunction eodd_l = apply_euler(Xpow(2 * s + 1, f));
      DressedFunction eodd_r =
          Xpow(2 * s + 1, add(scale(f, ExactScalar(2 * s + 1)), Ef));
      rep.record(eodd_l == eodd_r, "E-odd",
                 "E x^" + std::to_string(2 * s + 1) + " on " + monomial_id(f),
                 eodd_r.str(), eodd_l.str());
    }
  }
  return rep;
}

namespace {

// Fraction-free (Bareiss) elimination helpers over exact rationals.

using Matrix = std::vector<std::vector<Rational>>;

// Reduces M to row echelon form in place, returns pivot columns.
std::vector<int> echelon(Matrix& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  // Clear denominators row by row, then run one-step fraction-free
  // elimination on the integer rows.
  for (auto& row : M) {
    Int lcm = 1;
    for (const auto& v : row)
      if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                          v.get_den().get_mpz_t());
    for (auto& v : row) v *= Rational(lcm);
  }
  Rational prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (M[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[r], M[pr]);
    const Rational piv = M[r][c];
    for (int i = r + 1; i < rows; ++i) {
      const Rational factor = M[i][c];
      for (int j = c; j < cols; ++j)
        M[i][j] = (M[i][j] * piv - M[r][j] * factor) / prev;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Matrix M) { return static_cast<int>(echelon(M).size()); }

// Kernel basis vectors of M (rows x cols), exact.
std::vector<std::vector<Rational>> nullspace(Matrix M, int cols) {
  auto pivots = echelon(M);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols, 0);
    v[fc] = 1;
    // Back-substitute over the echelon rows, bottom-up.
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      const int pc = pivots[r];
      Rational acc = 0;
      for (int j = pc + 1; j < cols; ++j)
        if (v[j] != 0) acc += M[r][j] * v[j];
      v[pc] = -acc / M[r][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of a homogeneous degree-k slice polynomial in the basis
// indexed by (a, s) with b = k - a.
std::vector<Rational> coords(const SlicePoly& p, int k) {
  std::vector<Rational> v(4 * (k + 1), 0);
  for (const auto& [m, s] : p.terms()) {
    if (m.first + m.second != k)
      throw std::invalid_argument("polynomial is not homogeneous of degree k");
    for (int i = 0; i < 4; ++i)
      if (!s[i].is_zero()) v[4 * m.first + i] = s[i].to_rational();
  }
  return v;
}

SlicePoly from_coords(const std::vector<Rational>& v, int k) {
  SlicePoly p;
  for (int a = 0; a <= k; ++a)
    for (int i = 0; i < 4; ++i)
      if (v[4 * a + i] != 0) {
        SliceCoeff s;
        s[i] = ExactScalar(v[4 * a + i]);
        p.add_term(a, k - a, s);
      }
  return p;
}

}  // namespace

std::vector<SlicePoly> kernel_basis(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const int cols = 4 * (k + 1);
  if (k == 0) {
    std::vector<SlicePoly> out;
    for (int i = 0; i < 4; ++i)
      out.push_back(from_coords(
          [&] {
            std::vector<Rational> v(4, 0);
            v[i] = 1;
            return v;
          }(),
          0));
    return out;
  }
  const int rows = 4 * k;
  Matrix M(rows, std::vector<Rational>(cols, 0));
  for (int a = 0; a <= k; ++a) {
    for (int i = 0; i < 4; ++i) {
      SliceCoeff s;
      s[i] = ExactScalar(1);
      DressedFunction f{SlicePoly::monomial(a, k - a, s), 0};
      auto img = coords(apply_D0(f).poly, k - 1);
      for (int r = 0; r < rows; ++r) M[r][4 * a + i] = img[r];
    }
  }
  std::vector<SlicePoly> out;
  for (auto& v : nullspace(std::move(M), cols))
    out.push_back(from_coords(v, k));
  return out;
}

Report check_kernel(int k_max) {
  Report rep;
  rep.suite = "kernel";
  for (int k = 0; k <= k_max; ++k) {
    auto basis = kernel_basis(k);
    rep.record(basis.size() == 4, "dimension", "dim ker D0, k=" + std::to_string(k),
               "4", std::to_string(basis.size()));
    // Generators m_k * s span the expected kernel.
    const int cols = 4 * (k + 1);
    SlicePoly mk = monogenic(k);
    Matrix gens;
    for (int i = 0; i < 4; ++i) {
      SliceCoeff s;
      s[i] = ExactScalar(1);
      gens.push_back(coords(mk * SlicePoly(s), k));
    }
    // Columns = generators; membership of v means rank does not grow.
    Matrix A(cols, std::vector<Rational>(4, 0));
    for (int i = 0; i < 4; ++i)
      for (int r = 0; r < cols; ++r) A[r][i] = gens[i][r];
    const int base_rank = rank(A);
    rep.record(base_rank == 4, "generator-rank",
               "rank of {m_k s}, k=" + std::to_string(k), "4",
               std::to_string(base_rank));
    for (const auto& kv : basis) {
      Matrix Aug(cols, std::vector<Rational>(5, 0));
      auto v = coords(kv, k);
      for (int r = 0; r < cols; ++r) {
        for (int i = 0; i < 4; ++i) Aug[r][i] = A[r][i];
        Aug[r][4] = v[r];
      }
      rep.record(rank(Aug) == base_rank, "membership",
                 "kernel vector in m_k S, k=" + std::to_string(k),
                 "member", kv.str());
    }
  }
  return rep;
}

Report check_commutant(int max_degree) {
  Report rep;
  rep.suite = "commutant";
  const ExactScalar c = ExactScalar::c_pow(2);
  auto A = [](const DressedFunction& f) {
    return add(apply_euler(f), apply_X(apply_D0(f)));
  };
  auto XcD0 = [&c](const DressedFunction& f) {
    return sub(apply_X(f), scale(apply_D0(f), c));
  };
  auto B = [&XcD0](const DressedFunction& f) { return XcD0(XcD0(f)); };
  for (const auto& f : basis_monomials(max_degree, 0)) {
    DressedFunction l = A(B(f)), r = B(A(f));
    rep.record(l == r, "commutant", "[E+xD0,(x-cD0)^2] on " + monomial_id(f),
               r.str(), l.str());
  }
  return rep;
}

}  // namespace slicealg
