#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlg/arith.hpp"
#include "dlg/combinatorics.hpp"

namespace dlg {

/// Increasing list of elements of <n>: a basis k-vector e_{s_1} ^ ... ^ e_{s_k}.
using Subset = std::vector<int>;

/// Sorts s in place and returns the sign of the sorting permutation,
/// or 0 when an element repeats.
int sort_with_sign(std::vector<int>& s);

/// Element of the k-th exterior power of C^{2n} with exact coefficients.
class MultiVector {
 public:
  MultiVector(int n, int k) : n_(n), k_(k) {}
  static MultiVector basis(int n, const std::vector<int>& entries);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<Subset, Q>& terms() const { return terms_; }
  Q coefficient(const Subset& s) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * e_{entries} with entries in any order.
  void add(std::vector<int> entries, const Q& c);
  MultiVector& operator+=(const MultiVector& o);
  std::string str(const std::string& symbol = "v") const;
  friend bool operator==(const MultiVector&, const MultiVector&) = default;

 private:
  int n_;
  int k_;
  std::map<Subset, Q> terms_;
};

/// Element of the k-th exterior power of the dual, tagged with a level a;
/// the basis functional e*_s at level a is the coordinate p_s^(a).
class LinearFunctional {
 public:
  LinearFunctional(int n, int k, int level = 0) : n_(n), k_(k), level_(level) {}

  int n() const { return n_; }
  int k() const { return k_; }
  int level() const { return level_; }
  const std::map<Subset, Q>& terms() const { return terms_; }
  Q coefficient(const Subset& s) const;
  bool is_zero() const { return terms_.empty(); }

  void add(std::vector<int> entries, const Q& c);
  std::string str(const std::string& symbol = "p") const;
  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  int n_;
  int k_;
  int level_;
  std::map<Subset, Q> terms_;
};

/// Contraction by Omega = sum_i e_{-i} ^ e_i: each matched pair is moved to the
/// front by adjacent transpositions and removed.
MultiVector contract_omega(const MultiVector& v);

/// Omega ^ phi, written in sorted coordinates.
LinearFunctional wedge_omega(const LinearFunctional& phi);

/// <phi, v> with e*_s dual to e_s.
Q pairing(const LinearFunctional& phi, const MultiVector& v);

/// The forms Omega ^ e*_beta for beta an (n-2)-subset, at every level 0..d.
std::vector<LinearFunctional> linear_forms_L(int d, int n);

/// (d - 2a) H* + sum of h*_{a_i} over entries whose negative is absent.
struct Weight {
  std::vector<int> h;  // indexed by i = 1..n at h[i-1]
  int H = 0;
  std::string str() const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight weight_of(const Subset& entries, int n, int level, int d);

/// A bijection from alpha (an m-subset of [2m]) to its complement.
struct Matching {
  std::map<int, int> pairs;
  bool is_descending() const;
};

/// M(alpha_i) = i-th smallest element of the complement.
Matching canonical_matching(const std::vector<int>& alpha, int m);

/// Zero-weight vector v_alpha for alpha_+ = alpha inside [2m]; n = 2m.
Subset zero_weight_sequence(const std::vector<int>& alpha_plus);

/// K_alpha = sum over I of (-1)^|I| v_{I.alpha}; alpha an m-subset of [2m].
MultiVector kernel_element(const std::vector<int>& alpha, const Matching& matching, int m);

/// Kernel element attached to an n-sequence in any weight slice: the
/// zero-weight indices are flattened, K is formed with the canonical matching
/// and lifted back by wedging with the fixed entries.
MultiVector slice_kernel_element(const SignedSequence& a);

/// Dimension of the kernel of contraction on the zero-weight part of
/// the 2m-th exterior power of C^{4m}, by exact rank.
int zero_weight_dimension(int m);

/// A Pluecker coordinate p_s^(a), s any n-subset of <n>.
struct PluckerIndex {
  SignedSequence seq;
  int level = 0;
  std::string str() const;
  friend bool operator==(const PluckerIndex&, const PluckerIndex&) = default;
  friend auto operator<=>(const PluckerIndex&, const PluckerIndex&) = default;
};

/// For each coordinate, its expression in Northeast coordinates modulo L_{d,n}.
struct NormalFormTable {
  int d = 0;
  int n = 0;
  std::map<PluckerIndex, std::map<PluckerIndex, Q>> forms;
  const std::map<PluckerIndex, Q>& of(const PluckerIndex& p) const;
};

/// Per weight slice Gaussian elimination of L_{d,n}, non-Northeast columns first.
NormalFormTable northeast_normal_form(int d, int n);

/// Same result from one elimination over the whole coordinate space.
NormalFormTable northeast_normal_form_unsliced(int d, int n);

}  // namespace dlg
