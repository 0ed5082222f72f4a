#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlg/exterior.hpp"
#include "dlg/hilbert.hpp"
#include "dlg/linalg.hpp"
#include "dlg/polynomial.hpp"
#include "dlg/poset.hpp"

namespace dlg {

/// Row degrees k_i of the n x 2n polynomial matrix: d = l*n + q,
/// k_i = l+1 for i < q and l otherwise.
std::vector<int> row_degrees(int d, int n);

/// The generic n x 2n matrix with entries sum_k x_{ij}^(k) t^k.  Variable 0
/// is t; the coefficient variables follow row by row.
struct PolyMatrix {
  int d = 0;
  int n = 0;
  std::vector<int> degrees;
  std::vector<std::string> names;
  std::vector<std::vector<Polynomial>> entries;  // n rows, 2n columns

  static PolyMatrix generic(int d, int n);
  int nvars() const { return static_cast<int>(names.size()); }
  /// Index of x_{ij}^(k), 0-based row and column.
  int var(int i, int j, int k) const;
};

/// Determinant by permutation expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// phi(p_s^(a)) = coefficient of t^a in the s-minor; products for monomials.
Polynomial phi_image(const PolyMatrix& X, const std::vector<PluckerIndex>& monomial);

/// Degree-2 monomial p_i p_j over an indexed list of variables, i <= j.
using MonomialKey = std::pair<int, int>;
inline MonomialKey monomial_key(int i, int j) { return i <= j ? MonomialKey{i, j} : MonomialKey{j, i}; }

using Quadric = std::map<MonomialKey, Q>;

/// Basis of the degree-2 part of ker(phi), in the variables p_s^(a).
struct QuadricSystem {
  int d = 0;
  int n = 0;
  std::vector<PluckerIndex> vars;  // all n-subsets at all levels, sorted
  std::vector<Quadric> relations;
  std::size_t monomial_count = 0;
};

struct KernelOptions {
  std::uint64_t seed = 1;
  std::size_t max_monomials = 20000;
  std::size_t symbolic_checks = 3;
};

QuadricSystem ideal_quadrics(int d, int n, const KernelOptions& options = {});

/// Data of a degree-d Lagrangian quasimap t -> rowspace(I | X(t)) with
/// X(t) = X0 + sum_k R_k / (t - s_k), each R_k of rank one.  X0 and R_k are
/// symmetric under reflection in the antidiagonal.
struct QuasimapData {
  int n = 0;
  Matrix X0;
  std::vector<Matrix> residues;
  std::vector<Q> poles;
};

QuasimapData random_quasimap(int n, int d, std::uint64_t seed);

/// Values of every p_s^(a) at a point of LQ_d(n).
struct LagrangianPoint {
  int n = 0;
  int d = 0;
  std::map<PluckerIndex, Q> values;
  const Q& at(const PluckerIndex& p) const { return values.at(p); }
};

/// Coefficients of the Pluecker vector, cleared of the poles, as polynomials of degree d.
LagrangianPoint quasimap_coordinates(const QuasimapData& data);
LagrangianPoint lagrangian_point(int n, int d, std::uint64_t seed);

Q evaluate(const LinearFunctional& f, const LagrangianPoint& pt);

/// Doset variables p_(lower,upper)^(a), identified with Northeast coordinates.
struct DosetVariable {
  DosetItem item;  // indices into DosetStructure::elements
  PluckerIndex representative;
};

struct QuadraticRelation {
  MonomialKey lead;  // non-standard
  Quadric terms;     // lead has coefficient 1
};

struct StraighteningSystem {
  int d = 0;
  int n = 0;
  DosetStructure ds;
  std::vector<DosetVariable> vars;  // sorted by the term order
  std::vector<QuadraticRelation> relations;
  std::vector<std::string> problems;  // structural failures found while building

  std::string var_label(int v) const;
  std::string monomial_label(const MonomialKey& m) const;
  int var_of(const PluckerIndex& ne) const;
  bool is_standard(const MonomialKey& m) const;
  /// Poset elements (lower, upper, lower, upper) of the two factors in the given order.
  std::vector<PosetElement> endpoints(int first, int second) const;
  /// Term order on degree-2 monomials: degree reverse lexicographic over the variable order.
  bool monomial_less(const MonomialKey& a, const MonomialKey& b) const;

 private:
  std::map<PluckerIndex, int> var_index_;
  friend StraighteningSystem straightening_relations(int, int, const QuadricSystem&, const NormalFormTable&);
};

StraighteningSystem straightening_relations(int d, int n, const QuadricSystem& quadrics,
                                            const NormalFormTable& normal_forms);
StraighteningSystem straightening_relations(int d, int n, const KernelOptions& options = {});

/// Rewrites a monomial as a combination of standard monomials.
Quadric straighten(const MonomialKey& m, const StraighteningSystem& sys);

/// Value of a doset-variable quadric at a point.
Q evaluate(const Quadric& q, const StraighteningSystem& sys, const LagrangianPoint& pt);

struct AslReport {
  int d = 0;
  int n = 0;
  std::size_t variables = 0;
  std::size_t standard_monomials = 0;
  std::size_t nonstandard_monomials = 0;
  std::size_t relations = 0;
  Z hilbert_at_two = 0;
  int evaluation_points = 0;
  bool basis_ok = false;
  bool lex_condition_ok = false;
  bool two_term_condition_ok = false;
  bool evaluation_ok = false;
  bool hilbert_count_ok = false;
  std::vector<std::string> failures;
  bool passed() const;
  std::string str() const;
};

AslReport verify_asl(const StraighteningSystem& sys, int points = 20, std::uint64_t seed = 7);

}  // namespace dlg
