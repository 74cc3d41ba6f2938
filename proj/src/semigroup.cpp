#include "torikit/semigroup.hpp"

#include <sstream>

#include "torikit/error.hpp"
#include "torikit/fan.hpp"

namespace torikit {

std::vector<IntVector> AffineSemigroup::monoid_generators() const {
  std::vector<IntVector> out = hilbert_basis;
  for (const auto& u : lineality_units) {
    out.push_back(u);
    out.push_back(-u);
  }
  return out;
}

bool contains(const AffineSemigroup& s, const IntVector& m) { return s.dual_cone.contains(m); }

AlgebraElement AlgebraElement::monomial(const IntVector& exponent, const Rational& coefficient) {
  AlgebraElement a;
  a.add_term(exponent, coefficient);
  return a;
}

Rational AlgebraElement::coefficient(const IntVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const IntVector& m, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.rank() != m.rank())
    throw DimensionError("monomial exponents of different rank");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool AlgebraElement::is_regular_in(const AffineSemigroup& s) const {
  for (const auto& [m, c] : terms_)
    if (!contains(s, m)) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    if (mag != 1) os << mag << '*';
    os << "chi^" << m.to_string();
  }
  return os.str();
}

AlgebraElement boundary_projection(const Ray& rho_i, const AffineSemigroup& s, const AlgebraElement& a) {
  if (rho_i.rank() != s.rank()) throw DimensionError("boundary_projection: rank mismatch");
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) {
    if (!contains(s, m))
      throw IntegrityError("boundary_projection: exponent " + m.to_string() +
                           " is not in the semigroup");
    const Integer p = pairing(m, rho_i.generator());
    if (p < 0)
      throw IntegrityError("boundary_projection: <" + m.to_string() + ", " +
                           rho_i.generator().to_string() + "> < 0");
    if (p == 0) out.add_term(m, c);
  }
  return out;
}

AffineSemigroup fan_coordinate_semigroup(const Fan& fan) {
  return hilbert_basis(dual(support_cone(fan).cone));
}

}  // namespace torikit
