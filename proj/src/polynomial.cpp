#include "dlg/polynomial.hpp"

namespace dlg {

Polynomial Polynomial::constant(int nvars, const Q& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Q& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Polynomial Polynomial::coefficient_of(int var, int e) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != e) continue;
    Monomial r = m;
    r[var] = 0;
    out.add_term(r, c);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomials over different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomials over different rings");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomials over different rings");
  Polynomial out(a.nvars_);
  Polynomial::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

Q Polynomial::evaluate(const std::vector<Q>& point) const {
  Q acc = 0;
  for (const auto& [m, c] : terms_) {
    Q t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Q a = abs(c);
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i] + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    }
    if (mono.empty()) out += a.get_str();
    else out += (a == 1 ? "" : a.get_str() + "*") + mono;
  }
  return out;
}

}  // namespace dlg
