#include "dlg/quantum.hpp"

#include "dlg/poset.hpp"

namespace dlg {

namespace {

void require_symmetric(const Partition& lambda, int n) {
  if (!lambda.fits(n) || !lambda.is_symmetric())
    throw DomainError("partition " + lambda.str() + " is not symmetric inside the square");
}

}  // namespace

QHElement QHElement::schubert(const Partition& lambda, int n, int q_exponent) {
  QHElement x(n);
  x.add(lambda, q_exponent, 1);
  return x;
}

Z QHElement::coefficient(const Partition& lambda, int q_exponent) const {
  auto it = terms_.find({lambda, q_exponent});
  return it == terms_.end() ? Z(0) : it->second;
}

void QHElement::add(const Partition& lambda, int q_exponent, const Z& c) {
  require_symmetric(lambda, n_);
  if (q_exponent < 0) throw DomainError("negative q-exponent");
  Z& slot = terms_[{lambda, q_exponent}];
  slot += c;
  if (sgn(slot) == 0) terms_.erase({lambda, q_exponent});
}

QHElement& QHElement::operator+=(const QHElement& o) {
  if (o.n_ != n_) throw DomainError("adding classes of different LG(n)");
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

std::string QHElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string rows;
    for (std::size_t i = 0; i < k.first.rows.size(); ++i) rows += (i ? "," : "") + std::to_string(k.first.rows[i]);
    out += c.get_str() + "·σ[" + rows + "]";
    if (k.second > 0) out += "·q^" + std::to_string(k.second);
  }
  return out;
}

QHElement classical_pieri(const Partition& lambda, int n) {
  return quantum_pieri(QHElement::schubert(lambda, n, 0), 0);
}

QHElement quantum_pieri(const QHElement& x, int max_q) {
  const int n = x.n();
  QHElement out(n);
  for (const auto& [key, coeff] : x.terms()) {
    const PosetElement e{partition_to_sequence(key.first, n), key.second};
    const int cap = max_q < 0 ? key.second + 1 : max_q;
    for (const auto& [y, type] : classified_covers(e, cap)) {
      const Z weight = type == CoverType::SameLevelDoset ? 2 : 1;
      out.add(sequence_to_partition(y.seq), y.level, coeff * weight);
    }
  }
  return out;
}

Partition dual_partition(const Partition& lambda, int n) {
  require_symmetric(lambda, n);
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = n - lambda.row(n - 1 - r);
  return Partition(rows);
}

int poset_rank(const Partition& lambda, int level, int n) {
  int strict = 0;
  for (int p : strict_partition(partition_to_sequence(lambda, n))) strict += p;
  return strict + level * (n + 1);
}

Z schubert_variety_degree(const Partition& lambda, int d, int n) {
  require_symmetric(lambda, n);
  const int top = n * (n + 1) / 2 + d * (n + 1);
  QHElement x = QHElement::schubert(lambda, n, 0);
  for (int step = poset_rank(lambda, 0, n); step < top; ++step) x = quantum_pieri(x, d);
  std::vector<int> full(n, n);
  return x.coefficient(Partition(full), d);
}

}  // namespace dlg
