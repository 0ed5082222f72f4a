#pragma once

#include <string>
#include <vector>

#include "dlg/arith.hpp"
#include "dlg/poset.hpp"

namespace dlg {

/// c[u][v]: number of chains with u diagonal and v off-diagonal elements,
/// u = 0..P+1, v = 0..D-P.
struct ChainCountMatrix {
  int P = 0;
  int D = 0;
  std::vector<std::vector<Z>> c;

  const Z& at(int u, int v) const { return c[u][v]; }
  Z total() const;
  /// Rows indexed by v, columns by u, as aligned text.
  std::string str() const;
  friend bool operator==(const ChainCountMatrix&, const ChainCountMatrix&) = default;
};

/// A doset element: (lower, upper) indices, equal for the diagonal.
struct DosetItem {
  int lower;
  int upper;
  bool diagonal() const { return lower == upper; }
  friend bool operator==(const DosetItem&, const DosetItem&) = default;
  friend auto operator<=>(const DosetItem&, const DosetItem&) = default;
};

/// Diagonal elements then off-diagonal pairs, in a linear extension of the doset order.
std::vector<DosetItem> doset_items(const FiniteDoset& ds);

/// e < f in the doset order: upper(e) <= lower(f), e != f.
bool doset_less(const FiniteDoset& ds, const DosetItem& e, const DosetItem& f);

/// Every chain of the doset, each as an increasing list of items.
std::vector<std::vector<DosetItem>> enumerate_chains(const FiniteDoset& ds);

enum class ChainMethod { Automatic, Enumerate, DynamicProgramming };

/// Automatic enumerates for at most 20 poset elements and cross-checks
/// against the dynamic program; above that only the dynamic program runs.
ChainCountMatrix chain_count_matrix(const FiniteDoset& ds, ChainMethod method = ChainMethod::Automatic);

/// Univariate polynomial with rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<Q> coeffs;

  int degree() const;
  Q leading() const;
  Q operator()(const Q& w) const;
  std::string str(const std::string& var = "w") const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
};

using HilbertPolynomial = RationalPolynomial;

HilbertPolynomial hilbert_polynomial(const ChainCountMatrix& c);

/// Number of standard monomials of degree w supported on the chains.
Z hilbert_function(const ChainCountMatrix& c, int w);

Z proj_degree(const ChainCountMatrix& c);
int proj_dimension(const ChainCountMatrix& c);

/// Elements below x, or above x when dual is set.
FiniteDoset schubert_subdoset(const FiniteDoset& ds, int x, bool dual = false);

/// Sum over saturated chains from x to the maximum of 2^(doset covers).
Z weighted_maximal_chain_count(const FiniteDoset& ds, int x);

/// alpha < beta with (alpha, beta) in the doset.
FiniteDoset barbell_fixture();
/// alpha < beta, gamma < delta with pairs (alpha, gamma) and (beta, delta).
FiniteDoset diamond_fixture();

}  // namespace dlg
