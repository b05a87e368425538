#include "kissdp/tripoly.hpp"

#include <stdexcept>

namespace kissdp {

TriPoly TriPoly::monomial(const Monomial& m, const Rational& c) {
  TriPoly p;
  p.add_term(m, c);
  return p;
}

TriPoly TriPoly::from_uni(const UniPoly& p, int var) {
  if (var < 0 || var > 2) throw std::invalid_argument("variable index out of range");
  TriPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    Monomial m{0, 0, 0};
    m[var] = k;
    out.add_term(m, p.coeff(k));
  }
  return out;
}

int TriPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

Rational TriPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TriPoly::add_term(const Monomial& m, const Rational& c) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TriPoly::operator()(const Rational& u, const Rational& v, const Rational& t) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_)
    acc += c * pow_int(u, m[0]) * pow_int(v, m[1]) * pow_int(t, m[2]);
  return acc;
}

TriPoly TriPoly::operator-() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return out;
}

TriPoly operator*(const Rational& s, const TriPoly& a) {
  TriPoly out;
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

TriPoly TriPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  TriPoly r(Rational(1));
  TriPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e >>= 1) b = b * b;
  }
  return r;
}

TriPoly TriPoly::permute_vars(const std::array<int, 3>& perm) const {
  TriPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial pm{0, 0, 0};
    for (int i = 0; i < 3; ++i) pm[perm[i]] = m[i];
    out.add_term(pm, c);
  }
  return out;
}

TriPoly TriPoly::substitute(const TriPoly& su, const TriPoly& sv, const TriPoly& st) const {
  // Power caches keyed by exponent.
  auto powers = [](const TriPoly& base, int maxe) {
    std::vector<TriPoly> p(maxe + 1);
    p[0] = TriPoly(Rational(1));
    for (int i = 1; i <= maxe; ++i) p[i] = p[i - 1] * base;
    return p;
  };
  int mu = 0, mv = 0, mt = 0;
  for (const auto& [m, c] : terms_) {
    mu = std::max(mu, m[0]);
    mv = std::max(mv, m[1]);
    mt = std::max(mt, m[2]);
  }
  auto pu = powers(su, mu), pv = powers(sv, mv), pt = powers(st, mt);
  TriPoly out;
  for (const auto& [m, c] : terms_) out += c * (pu[m[0]] * pv[m[1]] * pt[m[2]]);
  return out;
}

UniPoly TriPoly::substitute_uni(const UniPoly& su, const UniPoly& sv, const UniPoly& st) const {
  auto powers = [](const UniPoly& base, int maxe) {
    std::vector<UniPoly> p(maxe + 1);
    p[0] = UniPoly(Rational(1));
    for (int i = 1; i <= maxe; ++i) p[i] = p[i - 1] * base;
    return p;
  };
  int mu = 0, mv = 0, mt = 0;
  for (const auto& [m, c] : terms_) {
    mu = std::max(mu, m[0]);
    mv = std::max(mv, m[1]);
    mt = std::max(mt, m[2]);
  }
  auto pu = powers(su, mu), pv = powers(sv, mv), pt = powers(st, mt);
  UniPoly out;
  for (const auto& [m, c] : terms_) out += c * (pu[m[0]] * pv[m[1]] * pt[m[2]]);
  return out;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*u^" + std::to_string(m[0]) + "*v^" + std::to_string(m[1]) +
           "*t^" + std::to_string(m[2]);
  }
  return out;
}

}  // namespace kissdp
