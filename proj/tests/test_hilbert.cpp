#include <doctest.h>

#include <functional>
#include <set>

#include "dlg/hilbert.hpp"

using namespace dlg;

namespace {

// Items e, f comparable: the upper end of one lies below the lower end of the other.
bool comparable(const FiniteDoset& ds, const DosetItem& e, const DosetItem& f) {
  return ds.leq(e.upper, f.lower) || ds.leq(f.upper, e.lower);
}

std::vector<DosetItem> all_items(const FiniteDoset& ds) {
  std::vector<DosetItem> items;
  for (int i = 0; i < ds.size(); ++i) items.push_back({i, i});
  for (auto [a, b] : ds.pairs()) items.push_back({a, b});
  return items;
}

// Chains by subset enumeration, counted by (diagonal, off-diagonal) sizes.
std::map<std::pair<int, int>, long> brute_chain_counts(const FiniteDoset& ds) {
  const auto items = all_items(ds);
  const int k = static_cast<int>(items.size());
  std::map<std::pair<int, int>, long> counts;
  for (long mask = 0; mask < (1L << k); ++mask) {
    bool chain = true;
    int u = 0, v = 0;
    for (int i = 0; i < k && chain; ++i) {
      if (!(mask >> i & 1)) continue;
      (items[i].diagonal() ? u : v)++;
      for (int j = i + 1; j < k; ++j)
        if ((mask >> j & 1) && !comparable(ds, items[i], items[j])) chain = false;
    }
    if (chain) ++counts[{u, v}];
  }
  return counts;
}

// Degree-w standard monomials: multisets whose support is a chain, off-diagonal items used once.
long brute_standard_monomials(const FiniteDoset& ds, int w) {
  const auto items = all_items(ds);
  const int k = static_cast<int>(items.size());
  long count = 0;
  std::vector<int> mult(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k) {
      if (left) return;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (mult[a] && mult[b] && !comparable(ds, items[a], items[b])) return;
      ++count;
      return;
    }
    const int cap = items[i].diagonal() ? left : std::min(left, 1);
    for (int m = 0; m <= cap; ++m) {
      mult[i] = m;
      rec(i + 1, left - m);
    }
    mult[i] = 0;
  };
  rec(0, w);
  return count;
}

std::vector<std::pair<std::string, FiniteDoset>> fixtures() {
  std::vector<std::pair<std::string, FiniteDoset>> out{{"barbell", barbell_fixture()}, {"diamond", diamond_fixture()}};
  for (auto [d, n] : {std::pair{0, 2}, {0, 3}, {1, 2}, {2, 2}, {1, 3}})
    out.push_back({"D" + std::to_string(d) + std::to_string(n), build_doset(d, n).doset});
  return out;
}

}  // namespace

TEST_CASE("barbell") {
  const auto ds = barbell_fixture();
  const auto chains = enumerate_chains(ds);
  std::set<std::set<DosetItem>> got;
  for (const auto& ch : chains) got.insert(std::set<DosetItem>(ch.begin(), ch.end()));
  const DosetItem a{0, 0}, b{1, 1}, ab{0, 1};
  const std::set<std::set<DosetItem>> expect{{}, {a}, {b}, {ab}, {a, b}, {a, ab}, {ab, b}, {a, ab, b}};
  CHECK(chains.size() == 8);
  CHECK(got == expect);
  const auto c = chain_count_matrix(ds);
  CHECK(hilbert_polynomial(c).str() == "2w + 1");
  CHECK(proj_dimension(c) == 1);
  CHECK(proj_degree(c) == 2);
}

TEST_CASE("diamond") {
  const auto ds = diamond_fixture();
  const auto c = chain_count_matrix(ds);
  REQUIRE(c.P == 2);
  REQUIRE(c.D == 3);
  // {(alpha,gamma), gamma, delta} is a chain, so row v = 1 reads 2 6 6 2.
  const std::vector<std::vector<int>> rows{{1, 4, 5, 2}, {2, 6, 6, 2}};
  for (int v = 0; v <= 1; ++v)
    for (int u = 0; u <= 3; ++u) CHECK(c.at(u, v) == rows[v][u]);
  const auto hp = hilbert_polynomial(c);
  CHECK(hp.str() == "2w^2 + 3w + 1");
  CHECK(hp == RationalPolynomial{{1, 3, 2}});
  for (int w = 2; w <= 5; ++w) CHECK(hp(Q(w)) == Q(brute_standard_monomials(ds, w)));
  CHECK(proj_dimension(c) == 2);
  CHECK(proj_degree(c) == 4);
  CHECK(c.str() == "1 4 5 2\n2 6 6 2\n");
}

TEST_CASE("single point and unranked inputs") {
  const FiniteDoset point({"x"}, {}, {});
  const auto c = chain_count_matrix(point);
  CHECK(c.c == std::vector<std::vector<Z>>{{1}, {1}});
  CHECK(proj_degree(c) == 1);
  const FiniteDoset unranked({"a", "b", "c", "e"}, {{0, 1}, {1, 2}, {0, 3}}, {});
  CHECK_THROWS_AS(chain_count_matrix(unranked), DomainError);
}

TEST_CASE("chain counts agree with subset enumeration") {
  for (const auto& [name, ds] : fixtures()) {
    if (ds.size() + ds.pairs().size() > 22) continue;
    CAPTURE(name);
    const auto c = chain_count_matrix(ds, ChainMethod::Enumerate);
    std::map<std::pair<int, int>, long> got;
    for (int u = 0; u <= c.P + 1; ++u)
      for (int v = 0; v <= c.D - c.P; ++v)
        if (c.at(u, v) != 0) got[{u, v}] = c.at(u, v).get_si();
    CHECK(got == brute_chain_counts(ds));
  }
}

TEST_CASE("enumeration and dynamic programming agree") {
  for (const auto& [name, ds] : fixtures()) {
    CAPTURE(name);
    CHECK(chain_count_matrix(ds, ChainMethod::Enumerate) == chain_count_matrix(ds, ChainMethod::DynamicProgramming));
  }
  const auto ds = build_doset(2, 3).doset;
  CHECK(chain_count_matrix(ds, ChainMethod::Enumerate) == chain_count_matrix(ds, ChainMethod::DynamicProgramming));
}

TEST_CASE("matrix invariants, degree and leading coefficient") {
  for (const auto& [name, ds] : fixtures()) {
    CAPTURE(name);
    const auto c = chain_count_matrix(ds);
    CHECK(c.at(0, 0) == 1);
    for (int v = 0; v <= c.D - c.P; ++v) CHECK(c.at(c.P + 1, v) == binomial(c.D - c.P, v) * c.at(c.P + 1, 0));
    const auto hp = hilbert_polynomial(c);
    CHECK(hp.degree() == c.P);
    Q factorial = 1;
    for (int k = 2; k <= c.P; ++k) factorial *= k;
    CHECK(hp.leading() * factorial == Q(proj_degree(c)));
    for (int w = c.D - c.P + 1; w <= c.D - c.P + 6; ++w) {
      const Q value = hp(Q(w));
      CHECK(value.get_den() == 1);
      CHECK(value == Q(hilbert_function(c, w)));
    }
    const int top = ds.maximum(), bottom = ds.minimum();
    REQUIRE(top >= 0);
    REQUIRE(bottom >= 0);
    CHECK(weighted_maximal_chain_count(ds, bottom) == proj_degree(c));
    CHECK(weighted_maximal_chain_count(ds, top) == 1);
  }
}

TEST_CASE("Hilbert function counts standard monomials") {
  for (auto [d, n] : {std::pair{0, 2}, {0, 3}, {1, 2}}) {
    const auto ds = build_doset(d, n).doset;
    const auto c = chain_count_matrix(ds);
    const auto hp = hilbert_polynomial(c);
    for (int w = 1; w <= 3; ++w) {
      const long brute = brute_standard_monomials(ds, w);
      CHECK(hilbert_function(c, w) == brute);
      if (d == 0) CHECK(hp(Q(w)) == Q(brute));
    }
  }
  CHECK(hilbert_polynomial(chain_count_matrix(barbell_fixture()))(Q(3)) == brute_standard_monomials(barbell_fixture(), 3));
}

TEST_CASE("LG(2)") {
  const auto c = chain_count_matrix(build_doset(0, 2).doset);
  CHECK(proj_dimension(c) == 3);
  CHECK(proj_degree(c) == 2);
  CHECK(hilbert_polynomial(c).leading() == Q(1, 3));
}

TEST_CASE("Schubert sub-dosets") {
  for (auto [d, n] : {std::pair{0, 2}, {1, 2}, {0, 3}, {1, 3}}) {
    const auto ds = build_doset(d, n).doset;
    const int top = ds.maximum(), bottom = ds.minimum();
    CHECK(chain_count_matrix(schubert_subdoset(ds, top)) == chain_count_matrix(ds));
    CHECK(chain_count_matrix(schubert_subdoset(ds, bottom, true)) == chain_count_matrix(ds));
    const auto point = chain_count_matrix(schubert_subdoset(ds, bottom));
    CHECK(proj_degree(point) == 1);
    CHECK(proj_dimension(point) == 0);
    for (int x = 0; x < ds.size(); ++x)
      CHECK(weighted_maximal_chain_count(ds, x) == proj_degree(chain_count_matrix(schubert_subdoset(ds, x, true))));
  }
  CHECK(weighted_maximal_chain_count(build_doset(0, 2).doset, 0) == 2);
}

TEST_CASE("a doset equal to its diagonal has degree equal to its maximal chain count") {
  const FiniteDoset boolean({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {});
  CHECK(proj_degree(chain_count_matrix(boolean)) == 2);
}

TEST_CASE("rational polynomial printing") {
  CHECK(RationalPolynomial{{Q(1, 2), 0, Q(-3, 4)}}.str() == "-(3/4)w^2 + 1/2");
  CHECK(RationalPolynomial{{0}}.str() == "0");
  CHECK(RationalPolynomial{{-1, 1}}.str() == "w - 1");
}
