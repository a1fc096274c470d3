#include "slicealg/exact_scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace slicealg {

namespace {

// Splits n > 0 as outside^2 * squarefree.
void reduce_sqrt(Int n, Int& outside, Int& squarefree) {
  outside = 1;
  for (Int d = 2; d * d <= n; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      outside *= d;
    }
  }
  squarefree = n;
}

std::string pow_str(const char* base, long doubled) {
  std::ostringstream os;
  if (doubled == 2) {
    os << base;
  } else if (doubled % 2 == 0) {
    os << base << "^" << doubled / 2;
  } else {
    os << base << "^(" << doubled << "/2)";
  }
  return os.str();
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

ExactScalar::ExactScalar(const Rational& q) {
  if (q != 0) terms_[TermKey{}] = q;
}

ExactScalar ExactScalar::term(const Rational& q, long c2, long pi2, long sq) {
  if (sq <= 0) throw std::invalid_argument("radicand must be positive");
  ExactScalar x;
  if (q != 0) x.terms_[TermKey{c2, pi2, sq}] = q;
  return x;
}

bool ExactScalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == TermKey{};
}

Rational ExactScalar::to_rational() const {
  if (terms_.empty()) return 0;
  if (!is_rational()) throw std::domain_error("not a pure rational: " + str());
  return terms_.begin()->second;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r(*this);
  for (auto& [k, q] : r.terms_) q = -q;
  return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  ExactScalar r(*this);
  for (const auto& [k, q] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_[k] = q;
    } else {
      it->second += q;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return *this + (-o);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  ExactScalar r;
  for (const auto& [ka, qa] : terms_) {
    for (const auto& [kb, qb] : o.terms_) {
      // sqrt(u)*sqrt(v) = gcd(u,v)*sqrt((u/g)*(v/g)) with u, v squarefree.
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(ka.sq).get_mpz_t(), Int(kb.sq).get_mpz_t());
      Rational q = qa * qb * Rational(g);
      TermKey k{ka.c2 + kb.c2, ka.pi2 + kb.pi2,
                (ka.sq / g.get_si()) * (kb.sq / g.get_si())};
      if (q == 0) continue;
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_[k] = q;
      } else {
        it->second += q;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

ExactScalar ExactScalar::inverse() const {
  if (terms_.size() != 1)
    throw std::domain_error("inverse defined for single-term values only");
  const auto& [k, q] = *terms_.begin();
  // 1/(q sqrt(d)) = sqrt(d)/(q d)
  return term(1 / (q * k.sq), -k.c2, -k.pi2, k.sq);
}

double ExactScalar::eval(double c_val) const {
  double acc = 0.0;
  for (const auto& [k, q] : terms_) {
    acc += q.get_d() * std::sqrt(static_cast<double>(k.sq)) *
           std::pow(c_val, k.c2 / 2.0) * std::pow(M_PI, k.pi2 / 2.0);
  }
  return acc;
}

ExactScalar ExactScalar::subst_c(const Rational& c_val) const {
  if (c_val <= 0) throw std::invalid_argument("c must be positive");
  ExactScalar r;
  for (const auto& [k, q] : terms_) {
    Rational f = q;
    long half = k.c2 / 2;           // rounds toward zero
    long rem = k.c2 - 2 * half;     // -1, 0 or 1
    Rational p = 1;
    Rational base = (half >= 0) ? c_val : 1 / c_val;
    for (long i = 0; i < std::abs(half); ++i) p *= base;
    f *= p;
    long sq = k.sq;
    if (rem != 0) {
      // c^(+-1/2) = sqrt(num*den)/den or sqrt(num*den)/num
      Int rad = c_val.get_num() * c_val.get_den();
      Int outside, squarefree;
      reduce_sqrt(rad, outside, squarefree);
      f *= frac(outside, rem > 0 ? c_val.get_den() : c_val.get_num());
      Int g;
      mpz_gcd(g.get_mpz_t(), squarefree.get_mpz_t(), Int(sq).get_mpz_t());
      f *= Rational(g);
      sq = (sq / g.get_si()) * Int(squarefree / g).get_si();
    }
    r += term(f, 0, k.pi2, sq);
  }
  return r;
}

std::string ExactScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    Rational aq = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = (k.c2 == 0 && k.pi2 == 0 && k.sq == 1);
    bool unit_coeff = (aq == 1);
    if (!unit_coeff || bare) os << aq;
    bool need_star = !unit_coeff || bare;
    auto emit = [&](const std::string& f) {
      if (need_star) os << "*";
      os << f;
      need_star = true;
    };
    if (k.sq != 1) emit("sqrt(" + Int(k.sq).get_str() + ")");
    if (k.c2 != 0) emit(pow_str("c", k.c2));
    if (k.pi2 != 0) emit(pow_str("pi", k.pi2));
  }
  return os.str();
}

nlohmann::json ExactScalar::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, q] : terms_) {
    nlohmann::json t{{"num", q.get_num().get_str()},
                     {"den", q.get_den().get_str()},
                     {"c2", k.c2},
                     {"pi2", k.pi2}};
    if (k.sq != 1) t["sq"] = k.sq;
    arr.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(arr)}};
}

ExactScalar ExactScalar::from_json(const nlohmann::json& j) {
  ExactScalar x;
  for (const auto& t : j.at("terms")) {
    Rational q(Int(t.at("num").get<std::string>()),
               Int(t.at("den").get<std::string>()));
    q.canonicalize();
    x += term(q, t.at("c2").get<long>(), t.at("pi2").get<long>(),
              t.value("sq", 1L));
  }
  return x;
}

ExactScalar gamma_half(const Rational& z) {
  Rational z2 = 2 * z;
  if (z <= 0 || z2.get_den() != 1)
    throw std::invalid_argument("gamma_half: z must be a positive half-integer");
  Int n = z2.get_num();  // z = n/2
  if (n % 2 == 0) {
    // Gamma(m) = (m-1)!
    Int f = 1;
    for (Int i = 2; i < n / 2; ++i) f *= i;
    return ExactScalar(Rational(f));
  }
  // Gamma(n/2) = (n/2 - 1)(n/2 - 2)...(1/2) * sqrt(pi)
  Rational q = 1;
  for (Rational w = z - 1; w > 0; w -= 1) q *= w;
  return ExactScalar::term(q, 0, 1);
}

ExactScalar gaussian_moment(long a, long b, const Rational& rho) {
  if (a < 0 || b < 0) throw std::invalid_argument("gaussian_moment: negative exponent");
  if (rho <= 0) throw std::invalid_argument("gaussian_moment: rate must be positive (divergent integral)");
  if (a % 2 == 1) return ExactScalar();
  long e = a + b + 2;  // (c/rho)^(e/2)
  ExactScalar g = frac(1, 2) * (gamma_half(frac(a + 1, 2)) *
                                    gamma_half(frac(b + 1, 2)));
  Rational inv_rho = 1 / rho;
  Rational q = 1;
  long sq = 1;
  for (long i = 0; i < e / 2; ++i) q *= inv_rho;
  if (e % 2 == 1) {
    // sqrt(num/den) = sqrt(num*den)/den
    Int rad = inv_rho.get_num() * inv_rho.get_den();
    Int outside, squarefree;
    reduce_sqrt(rad, outside, squarefree);
    q *= frac(outside, inv_rho.get_den());
    sq = squarefree.get_si();
  }
  return g * ExactScalar::term(q, e, 0, sq);
}

}  // namespace slicealg
