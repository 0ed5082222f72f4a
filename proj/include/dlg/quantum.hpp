#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dlg/arith.hpp"
#include "dlg/combinatorics.hpp"

namespace dlg {

/// Finite Z-combination of sigma_lambda q^e, lambda symmetric in (n^n).
class QHElement {
 public:
  using Key = std::pair<Partition, int>;

  explicit QHElement(int n) : n_(n) {}
  static QHElement schubert(const Partition& lambda, int n, int q_exponent = 0);

  int n() const { return n_; }
  const std::map<Key, Z>& terms() const { return terms_; }
  Z coefficient(const Partition& lambda, int q_exponent) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& lambda, int q_exponent, const Z& c);
  QHElement& operator+=(const QHElement& o);

  /// "2·σ[2,1] + 1·σ[]·q^1"; "0" when empty.
  std::string str() const;
  friend bool operator==(const QHElement&, const QHElement&) = default;

 private:
  int n_;
  std::map<Key, Z> terms_;
};

/// sigma_lambda * sigma_box in H*(LG(n)).
QHElement classical_pieri(const Partition& lambda, int n);

/// Multiplication by sigma_box in QH*(LG(n)); terms with q-exponent above
/// max_q are dropped, max_q < 0 means no truncation.
QHElement quantum_pieri(const QHElement& x, int max_q);

/// 180-degree rotated complement in (n^n).
Partition dual_partition(const Partition& lambda, int n);

/// Rank of alpha^(a) in P_{d,n}: strict size + a(n+1).
int poset_rank(const Partition& lambda, int level, int n);

/// Coefficient of sigma_{(n^n)} q^d in sigma_lambda * sigma_box^pi.
Z schubert_variety_degree(const Partition& lambda, int d, int n);

}  // namespace dlg
