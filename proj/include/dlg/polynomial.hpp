#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlg/arith.hpp"

namespace dlg {

/// Sparse multivariate polynomial over Q; a monomial is a dense exponent
/// vector over a fixed number of variables.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Q& c);
  static Polynomial variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const std::map<Monomial, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int degree_in(int var) const;

  /// Coefficient of var^e, as a polynomial in the remaining variables.
  Polynomial coefficient_of(int var, int e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Q& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Q& c) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Q evaluate(const std::vector<Q>& point) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Monomial& m, const Q& c);
  int nvars_;
  std::map<Monomial, Q> terms_;
};

}  // namespace dlg
