#include "dlg/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <sstream>

namespace dlg {

Z ChainCountMatrix::total() const {
  Z t = 0;
  for (const auto& row : c)
    for (const auto& x : row) t += x;
  return t;
}

std::string ChainCountMatrix::str() const {
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int v = 0; v <= D - P; ++v) {
    std::vector<std::string> row;
    for (int u = 0; u <= P + 1; ++u) {
      row.push_back(c[u][v].get_str());
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t u = 0; u < row.size(); ++u)
      out << (u ? " " : "") << std::string(width - row[u].size(), ' ') << row[u];
    out << "\n";
  }
  return out.str();
}

std::vector<DosetItem> doset_items(const FiniteDoset& ds) {
  const int m = ds.size();
  std::vector<int> below(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ds.less(j, i)) ++below[i];
  std::vector<DosetItem> items;
  for (int i = 0; i < m; ++i) items.push_back({i, i});
  for (auto [a, b] : ds.pairs()) items.push_back({a, b});
  std::stable_sort(items.begin(), items.end(), [&](const DosetItem& e, const DosetItem& f) {
    return std::pair{below[e.lower], below[e.upper]} < std::pair{below[f.lower], below[f.upper]};
  });
  return items;
}

bool doset_less(const FiniteDoset& ds, const DosetItem& e, const DosetItem& f) {
  return !(e == f) && ds.leq(e.upper, f.lower);
}

namespace {

void for_each_chain(const FiniteDoset& ds, const std::function<void(const std::vector<DosetItem>&)>& visit) {
  const auto items = doset_items(ds);
  std::vector<DosetItem> current;
  visit(current);
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    for (std::size_t k = from; k < items.size(); ++k) {
      if (!current.empty() && !doset_less(ds, current.back(), items[k])) continue;
      current.push_back(items[k]);
      visit(current);
      extend(k + 1);
      current.pop_back();
    }
  };
  extend(0);
}

}  // namespace

std::vector<std::vector<DosetItem>> enumerate_chains(const FiniteDoset& ds) {
  std::vector<std::vector<DosetItem>> out;
  for_each_chain(ds, [&](const std::vector<DosetItem>& chain) { out.push_back(chain); });
  return out;
}

namespace {

ChainCountMatrix empty_matrix(const FiniteDoset::Ranks& r) {
  ChainCountMatrix m;
  m.P = r.P;
  m.D = r.D;
  m.c.assign(r.P + 2, std::vector<Z>(r.D - r.P + 1, 0));
  return m;
}

ChainCountMatrix count_by_enumeration(const FiniteDoset& ds, const FiniteDoset::Ranks& r) {
  ChainCountMatrix m = empty_matrix(r);
  std::vector<std::vector<unsigned long long>> tally(m.c.size(), std::vector<unsigned long long>(m.c[0].size(), 0));
  for_each_chain(ds, [&](const std::vector<DosetItem>& chain) {
    int u = 0, v = 0;
    for (const auto& e : chain) (e.diagonal() ? u : v)++;
    if (u > r.P + 1 || v > r.D - r.P) throw InternalError("chain longer than the rank allows");
    ++tally[u][v];
  });
  for (std::size_t u = 0; u < tally.size(); ++u)
    for (std::size_t v = 0; v < tally[u].size(); ++v) m.c[u][v] = Z(std::to_string(tally[u][v]));
  return m;
}

ChainCountMatrix count_by_dp(const FiniteDoset& ds, const FiniteDoset::Ranks& r) {
  ChainCountMatrix m = empty_matrix(r);
  const auto items = doset_items(ds);
  const int U = r.P + 2, V = r.D - r.P + 1;
  // table[k][u][v]: chains whose largest item is items[k].
  std::vector<std::vector<std::vector<Z>>> table(items.size(), std::vector<std::vector<Z>>(U, std::vector<Z>(V, 0)));
  m.c[0][0] = 1;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const int du = items[k].diagonal() ? 1 : 0, dv = 1 - du;
    auto& t = table[k];
    t[du][dv] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!doset_less(ds, items[j], items[k])) continue;
      for (int u = 0; u + du < U; ++u)
        for (int v = 0; v + dv < V; ++v)
          if (sgn(table[j][u][v])) t[u + du][v + dv] += table[j][u][v];
    }
    for (int u = 0; u < U; ++u)
      for (int v = 0; v < V; ++v) m.c[u][v] += t[u][v];
  }
  return m;
}

}  // namespace

ChainCountMatrix chain_count_matrix(const FiniteDoset& ds, ChainMethod method) {
  const auto r = ds.require_ranked();
  switch (method) {
    case ChainMethod::Enumerate:
      return count_by_enumeration(ds, r);
    case ChainMethod::DynamicProgramming:
      return count_by_dp(ds, r);
    case ChainMethod::Automatic:
      break;
  }
  ChainCountMatrix dp = count_by_dp(ds, r);
  if (ds.size() <= 20) {
    if (!(count_by_enumeration(ds, r) == dp)) throw InternalError("chain enumeration and dynamic program disagree");
  }
  return dp;
}

int RationalPolynomial::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (sgn(coeffs[k])) return k;
  return -1;
}

Q RationalPolynomial::leading() const {
  int k = degree();
  return k < 0 ? Q(0) : coeffs[k];
}

Q RationalPolynomial::operator()(const Q& w) const {
  Q acc = 0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * w + coeffs[k];
  return acc;
}

std::string RationalPolynomial::str(const std::string& var) const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Q c = coeffs[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    Q a = abs(c);
    std::string num = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
    if (k == 0) out += a.get_str();
    else out += (a == 1 ? "" : num) + var + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.empty() ? "0" : out;
}

namespace {

/// binomial(w - s, k) as a polynomial in w.
RationalPolynomial shifted_binomial(long s, int k) {
  std::vector<Q> p{1};
  for (int j = 0; j < k; ++j) {
    std::vector<Q> next(p.size() + 1, 0);
    const Q root = s + j;
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= root * p[i];
    }
    p = std::move(next);
  }
  Q fact = 1;
  for (int j = 2; j <= k; ++j) fact *= j;
  for (auto& x : p) x /= fact;
  return {p};
}

}  // namespace

HilbertPolynomial hilbert_polynomial(const ChainCountMatrix& c) {
  HilbertPolynomial hp{std::vector<Q>(c.P + 1, 0)};
  for (int u = 1; u <= c.P + 1; ++u)
    for (int v = 0; v <= c.D - c.P; ++v) {
      if (sgn(c.c[u][v]) == 0) continue;
      auto b = shifted_binomial(v + 1, u - 1);
      for (std::size_t k = 0; k < b.coeffs.size(); ++k) hp.coeffs[k] += Q(c.c[u][v]) * b.coeffs[k];
    }
  return hp;
}

Z hilbert_function(const ChainCountMatrix& c, int w) {
  Z total = 0;
  for (int u = 0; u <= c.P + 1; ++u)
    for (int v = 0; v <= c.D - c.P; ++v) {
      if (u == 0) {
        if (v == w) total += c.c[u][v];
      } else if (w - v >= u) {
        total += c.c[u][v] * binomial(w - v - 1, u - 1);
      }
    }
  return total;
}

Z proj_degree(const ChainCountMatrix& c) {
  Z two_power;
  mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(c.D - c.P));
  return two_power * c.c[c.P + 1][0];
}

int proj_dimension(const ChainCountMatrix& c) { return c.P; }

FiniteDoset schubert_subdoset(const FiniteDoset& ds, int x, bool dual) {
  std::vector<bool> keep(ds.size());
  for (int y = 0; y < ds.size(); ++y) keep[y] = dual ? ds.leq(x, y) : ds.leq(y, x);
  return ds.restrict(keep);
}

Z weighted_maximal_chain_count(const FiniteDoset& ds, int x) {
  const int top = ds.maximum();
  if (top < 0) throw DomainError("doset has no maximum");
  std::vector<Z> memo(ds.size(), -1);
  std::function<Z(int)> count = [&](int v) -> Z {
    if (v == top) return 1;
    if (memo[v] >= 0) return memo[v];
    Z s = 0;
    for (int w : ds.up(v)) s += (ds.is_doset_cover(v, w) ? 2 : 1) * count(w);
    return memo[v] = s;
  };
  return count(x);
}

FiniteDoset barbell_fixture() { return FiniteDoset({"alpha", "beta"}, {{0, 1}}, {{0, 1}}); }

FiniteDoset diamond_fixture() {
  return FiniteDoset({"alpha", "beta", "gamma", "delta"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {{0, 2}, {1, 3}});
}

}  // namespace dlg
