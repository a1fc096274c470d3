#include "slicealg/clifford.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace slicealg {

std::string blade_str(BladeMask m) {
  if (m == 0) return "1";
  std::ostringstream os;
  for (int i = 0; i < 32; ++i)
    if (m & (1u << i)) os << "e" << i;
  return os.str();
}

int blade_grade(BladeMask m) { return std::popcount(m); }

BladeMask blade_product(BladeMask a, BladeMask b, int& sign) {
  // Count transpositions needed to sort the concatenated index list: for
  // each index i of b, the indices of a above i must move past it.
  int swaps = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(b & (1u << i))) continue;
    swaps += std::popcount(a & ~((1u << (i + 1)) - 1));
  }
  int contractions = std::popcount(a & b);  // each e_i^2 = -1
  sign = ((swaps + contractions) % 2 == 0) ? 1 : -1;
  return a ^ b;
}

Multivector::Multivector(int dim, const ExactScalar& scalar) : dim_(dim) {
  add_term(0, scalar);
}

Multivector Multivector::generator(int dim, int i) {
  if (i < 0 || i >= dim) throw std::out_of_range("generator index");
  Multivector v(dim);
  v.add_term(1u << i, ExactScalar(1));
  return v;
}

Multivector Multivector::blade(int dim, BladeMask m, const ExactScalar& c) {
  Multivector v(dim);
  v.add_term(m, c);
  return v;
}

ExactScalar Multivector::coeff(BladeMask m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? ExactScalar() : it->second;
}

void Multivector::add_term(BladeMask m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    coeffs_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Multivector Multivector::operator-() const {
  Multivector r(dim_);
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = -c;
  return r;
}

Multivector Multivector::operator+(const Multivector& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  Multivector r(*this);
  for (const auto& [m, c] : o.coeffs_) r.add_term(m, c);
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  return *this + (-o);
}

Multivector Multivector::operator*(const Multivector& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  Multivector r(dim_);
  for (const auto& [ma, ca] : coeffs_) {
    for (const auto& [mb, cb] : o.coeffs_) {
      int sign;
      BladeMask m = blade_product(ma, mb, sign);
      ExactScalar c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(m, c);
    }
  }
  return r;
}

Multivector Multivector::operator*(const ExactScalar& s) const {
  Multivector r(dim_);
  for (const auto& [m, c] : coeffs_) r.add_term(m, c * s);
  return r;
}

bool Multivector::operator==(const Multivector& o) const {
  return dim_ == o.dim_ && coeffs_ == o.coeffs_;
}

std::string Multivector::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m != 0) os << "*" << blade_str(m);
  }
  return os.str();
}

nlohmann::json Multivector::to_json() const {
  nlohmann::json blades = nlohmann::json::array();
  for (const auto& [m, c] : coeffs_) {
    nlohmann::json idx = nlohmann::json::array();
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) idx.push_back(i);
    blades.push_back({{"idx", std::move(idx)}, {"coeff", c.to_json()}});
  }
  return nlohmann::json{{"dim", dim_}, {"blades", std::move(blades)}};
}

Multivector Multivector::from_json(const nlohmann::json& j) {
  Multivector v(j.at("dim").get<int>());
  for (const auto& b : j.at("blades")) {
    BladeMask m = 0;
    for (int i : b.at("idx")) m |= 1u << i;
    v.add_term(m, ExactScalar::from_json(b.at("coeff")));
  }
  return v;
}

Multivector geometric_product(const Multivector& u, const Multivector& v) {
  return u * v;
}

Multivector conjugate(const Multivector& u) {
  Multivector r(u.dim());
  for (const auto& [m, c] : u.coeffs()) {
    int g = blade_grade(m);
    bool flip = ((g * (g + 1)) / 2) % 2 == 1;
    r.add_term(m, flip ? -c : c);
  }
  return r;
}

ExactScalar scalar_part(const Multivector& u) { return u.coeff(0); }

Report verify_tilde_embedding(int m) {
  Report rep;
  rep.suite = "tilde-embedding";
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const int dim = m + 1;
  auto E = [&](int i) { return Multivector::generator(dim, i); };
  std::vector<Multivector> b;  // b_i = E0*Ei, i = 1..m
  b.reserve(m);
  for (int i = 1; i <= m; ++i) b.push_back(E(0) * E(i));

  Multivector zero(dim);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      Multivector anti = b[i - 1] * b[j - 1] + b[j - 1] * b[i - 1];
      Multivector expect =
          (i == j) ? Multivector(dim, ExactScalar(-2)) : zero;
      std::ostringstream id;
      id << "b" << i << "b" << j << "+b" << j << "b" << i;
      rep.record(anti == expect, "generator-relations", id.str(),
                 expect.str(), anti.str());
    }
    Multivector anti0 = E(0) * b[i - 1] + b[i - 1] * E(0);
    rep.record(anti0 == zero, "e0-anticommutation",
               "e0 b" + std::to_string(i), "0", anti0.str());
  }

  // Paravector transport: E0 (x0 + sum x_i Ei) = x0 E0 + sum x_i b_i,
  // with generic distinct rational coordinates.
  Multivector para(dim, ExactScalar(frac(1, 2)));
  Multivector image = Multivector::blade(dim, 1u, ExactScalar(frac(1, 2)));
  for (int i = 1; i <= m; ++i) {
    ExactScalar xi{frac(2 * i + 1, 3)};
    para = para + E(i) * xi;
    image = image + b[i - 1] * xi;
  }
  Multivector lhs = E(0) * para;
  rep.record(lhs == image, "paravector-transport", "e0*(x0+sum xi Ei)",
             image.str(), lhs.str());
  return rep;
}

}  // namespace slicealg
