#include "slicealg/slice.hpp"

#include <sstream>
#include <stdexcept>

namespace slicealg {

namespace {

// Product table of the basis (1, e0, w, we0): index and sign of b_i * b_j.
constexpr int kIdx[4][4] = {{0, 1, 2, 3},
                            {1, 0, 3, 2},
                            {2, 3, 0, 1},
                            {3, 2, 1, 0}};
constexpr int kSign[4][4] = {{+1, +1, +1, +1},
                             {+1, -1, -1, +1},
                             {+1, +1, -1, -1},
                             {+1, -1, +1, -1}};
constexpr int kConjSign[4] = {+1, -1, -1, -1};
constexpr const char* kBasisName[4] = {"1", "e0", "w", "w*e0"};

}  // namespace

SliceCoeff SliceCoeff::basis(Basis b) {
  SliceCoeff s;
  s.comps_[b] = ExactScalar(1);
  return s;
}

bool SliceCoeff::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

SliceCoeff SliceCoeff::operator-() const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i) r.comps_[i] = -comps_[i];
  return r;
}

SliceCoeff SliceCoeff::operator+(const SliceCoeff& o) const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i) r.comps_[i] = comps_[i] + o.comps_[i];
  return r;
}

SliceCoeff SliceCoeff::operator-(const SliceCoeff& o) const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i) r.comps_[i] = comps_[i] - o.comps_[i];
  return r;
}

SliceCoeff SliceCoeff::operator*(const SliceCoeff& o) const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i) {
    if (comps_[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.comps_[j].is_zero()) continue;
      ExactScalar p = comps_[i] * o.comps_[j];
      if (kSign[i][j] < 0) p = -p;
      r.comps_[kIdx[i][j]] += p;
    }
  }
  return r;
}

SliceCoeff SliceCoeff::operator*(const ExactScalar& s) const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i) r.comps_[i] = comps_[i] * s;
  return r;
}

SliceCoeff SliceCoeff::conj() const {
  SliceCoeff r;
  for (int i = 0; i < 4; ++i)
    r.comps_[i] = kConjSign[i] < 0 ? -comps_[i] : comps_[i];
  return r;
}

std::string SliceCoeff::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (comps_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comps_[i].str() << ")";
    if (i != 0) os << "*" << kBasisName[i];
  }
  return os.str();
}

SliceCoeff s_mul(const SliceCoeff& s, const SliceCoeff& t) { return s * t; }

SlicePoly SlicePoly::monomial(long a, long b, const SliceCoeff& s) {
  SlicePoly p;
  p.add_term(a, b, s);
  return p;
}

void SlicePoly::add_term(long a, long b, const SliceCoeff& s) {
  if (s.is_zero()) return;
  Monomial m{a, b};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = s;
  } else {
    it->second = it->second + s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long SlicePoly::degree() const {
  long d = -1;
  for (const auto& [m, s] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

SlicePoly SlicePoly::operator-() const {
  SlicePoly r;
  for (const auto& [m, s] : terms_) r.terms_[m] = -s;
  return r;
}

SlicePoly SlicePoly::operator+(const SlicePoly& o) const {
  SlicePoly r(*this);
  for (const auto& [m, s] : o.terms_) r.add_term(m.first, m.second, s);
  return r;
}

SlicePoly SlicePoly::operator-(const SlicePoly& o) const {
  return *this + (-o);
}

SlicePoly SlicePoly::operator*(const SlicePoly& o) const {
  SlicePoly r;
  for (const auto& [ma, sa] : terms_)
    for (const auto& [mb, sb] : o.terms_)
      r.add_term(ma.first + mb.first, ma.second + mb.second, sa * sb);
  return r;
}

SlicePoly SlicePoly::operator*(const ExactScalar& s) const {
  SlicePoly r;
  for (const auto& [m, t] : terms_) r.add_term(m.first, m.second, t * s);
  return r;
}

SlicePoly SlicePoly::left_mul(const SliceCoeff& s) const {
  SlicePoly r;
  for (const auto& [m, t] : terms_) r.add_term(m.first, m.second, s * t);
  return r;
}

SlicePoly SlicePoly::mul_monomial(long a, long b) const {
  SlicePoly r;
  for (const auto& [m, t] : terms_) r.add_term(m.first + a, m.second + b, t);
  return r;
}

SlicePoly SlicePoly::d_dx0() const {
  SlicePoly r;
  for (const auto& [m, t] : terms_)
    if (m.first > 0)
      r.add_term(m.first - 1, m.second, t * ExactScalar(m.first));
  return r;
}

SlicePoly SlicePoly::d_dr() const {
  SlicePoly r;
  for (const auto& [m, t] : terms_)
    if (m.second > 0)
      r.add_term(m.first, m.second - 1, t * ExactScalar(m.second));
  return r;
}

SlicePoly SlicePoly::conj() const {
  SlicePoly r;
  for (const auto& [m, t] : terms_) r.terms_[m] = t.conj();
  return r;
}

std::string SlicePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, t] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.first > 0) {
      os << "x0";
      if (m.first > 1) os << "^" << m.first;
    }
    if (m.second > 0) {
      os << (m.first > 0 ? " " : "") << "r";
      if (m.second > 1) os << "^" << m.second;
    }
    if (m.first > 0 || m.second > 0) os << " * ";
    os << "[" << t.str() << "]";
  }
  return os.str();
}

SlicePoly poly_mul(const SlicePoly& p, const SlicePoly& q) { return p * q; }

std::string DressedFunction::str() const {
  std::ostringstream os;
  os << poly.str();
  if (rate != 0)
    os << " * exp(-" << rate.get_str() << "*(x0^2+r^2)/c)";
  return os.str();
}

Multivector embed_coeff(const SliceCoeff& s, const std::vector<Rational>& omega,
                        int m) {
  if (static_cast<int>(omega.size()) != m)
    throw std::invalid_argument("direction dimension mismatch");
  Rational norm = 0;
  for (const auto& w : omega) norm += w * w;
  if (norm != 1) throw std::invalid_argument("direction is not a unit vector");
  const int dim = m + 1;
  Multivector w_hat(dim);
  for (int i = 0; i < m; ++i)
    w_hat.add_term(1u << (i + 1), ExactScalar(Rational(omega[i])));
  Multivector e0 = Multivector::generator(dim, 0);
  Multivector r = Multivector(dim, s[SliceCoeff::kOne]);
  r = r + e0 * s[SliceCoeff::kE0];
  r = r + w_hat * s[SliceCoeff::kW];
  r = r + (w_hat * e0) * s[SliceCoeff::kWE0];
  return r;
}

Multivector embed_at(const DressedFunction& f, const Rational& x0,
                     const Rational& r, const std::vector<Rational>& omega,
                     const Rational& c_val) {
  if (f.rate != 0)
    throw std::invalid_argument(
        "embed_at handles bare polynomials; use the numeric oracle for "
        "dressed functions");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  const int m = static_cast<int>(omega.size());
  Multivector acc(m + 1);
  for (const auto& [mono, s] : f.poly.terms()) {
    Rational v = 1;
    for (long i = 0; i < mono.first; ++i) v *= x0;
    for (long i = 0; i < mono.second; ++i) v *= r;
    SliceCoeff sv;
    for (int i = 0; i < 4; ++i) sv[i] = s[i].subst_c(c_val) * ExactScalar(v);
    acc = acc + embed_coeff(sv, omega, m);
  }
  return acc;
}

SlicePoly x_poly() {
  SlicePoly p;
  p.add_term(1, 0, SliceCoeff::basis(SliceCoeff::kE0));
  p.add_term(0, 1, SliceCoeff::basis(SliceCoeff::kW));
  return p;
}

}  // namespace slicealg
