#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "dlg/exterior.hpp"
#include "dlg/linalg.hpp"

using namespace dlg;

namespace {

SignedSequence seq(const char* text, int n) { return parse_sequence(text, n); }

std::vector<std::vector<int>> subsets(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    if (i == pool.size()) return;
    cur.push_back(pool[i]);
    rec(i + 1);
    cur.pop_back();
    rec(i + 1);
  };
  rec(0);
  return out;
}

// Contraction computed pair by pair straight from the definition: remove
// e_{-i} and e_i at sorted positions p < q with sign (-1)^(p+q-1).
MultiVector oracle_contract(const MultiVector& v) {
  MultiVector out(v.n(), v.k() - 2);
  for (const auto& [s, c] : v.terms())
    for (std::size_t p = 0; p < s.size(); ++p)
      for (std::size_t q = p + 1; q < s.size(); ++q)
        if (s[p] == -s[q]) {
          std::vector<int> rest;
          for (std::size_t r = 0; r < s.size(); ++r)
            if (r != p && r != q) rest.push_back(s[r]);
          out.add(rest, (p + q) % 2 ? c : Q(-c));
        }
  return out;
}

Matrix contraction_matrix(const std::vector<Subset>& sources, int n) {
  std::map<Subset, int> row;
  std::vector<std::pair<Subset, Q>> entries;
  Matrix m;
  std::vector<std::map<Subset, Q>> images;
  for (const auto& s : sources) images.push_back(contract_omega(MultiVector::basis(n, s)).terms());
  for (const auto& img : images)
    for (const auto& [t, c] : img) row.emplace(t, static_cast<int>(row.size()));
  m.assign(row.size(), Row(sources.size(), 0));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [t, c] : images[j]) m[row[t]][j] = c;
  return m;
}

}  // namespace

TEST_CASE("contraction examples and definition") {
  CHECK(contract_omega(MultiVector::basis(4, {-4, 4})).coefficient({}) == 1);
  MultiVector expect(4, 2);
  expect.add({-4, 4}, 1);
  expect.add({-2, 2}, 1);
  CHECK(contract_omega(MultiVector::basis(4, {-4, -2, 2, 4})) == expect);
  CHECK_THROWS_AS(contract_omega(MultiVector::basis(2, {1})), DomainError);
  for (int n = 2; n <= 4; ++n)
    for (int k = 2; k <= 2 * n; k += 2)
      for (const auto& s : subsets(alphabet(n), k)) {
        const auto v = MultiVector::basis(n, s);
        CHECK(contract_omega(v) == oracle_contract(v));
      }
}

TEST_CASE("wedge and contraction are dual, 200 random pairs at n = 3, 4") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pick(0, 1000000);
  auto rational = [&] {
    Q q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (int n : {3, 4})
    for (int trial = 0; trial < 100; ++trial) {
      const int k = 1 + trial % (2 * n - 2);
      const auto small = subsets(alphabet(n), k), big = subsets(alphabet(n), k + 2);
      LinearFunctional phi(n, k);
      MultiVector v(n, k + 2);
      for (int t = 0; t < 4; ++t) {
        phi.add(small[pick(rng) % small.size()], rational());
        v.add(big[pick(rng) % big.size()], rational());
      }
      CHECK(pairing(wedge_omega(phi), v) == pairing(phi, contract_omega(v)));
    }
}

TEST_CASE("linear forms of LG(4) at weight zero") {
  const std::vector<std::pair<std::vector<int>, std::vector<const char*>>> expect{
      {{-1, 1}, {"\\bar4\\bar114", "\\bar3\\bar113", "\\bar2\\bar112"}},
      {{-2, 2}, {"\\bar4\\bar224", "\\bar3\\bar223", "\\bar2\\bar112"}},
      {{-3, 3}, {"\\bar4\\bar334", "\\bar3\\bar223", "\\bar3\\bar113"}},
      {{-4, 4}, {"\\bar4\\bar334", "\\bar4\\bar224", "\\bar4\\bar114"}}};
  for (const auto& [beta, terms] : expect) {
    LinearFunctional phi(4, 2);
    phi.add(beta, 1);
    LinearFunctional want(4, 4);
    for (const char* t : terms) want.add(seq(t, 4).entries(), 1);
    CHECK(wedge_omega(phi) == want);
  }
  LinearFunctional phi(6, 4);
  phi.add({-6, 1, 3, 6}, 1);
  LinearFunctional want(6, 6);
  want.add(seq("\\bar6\\bar51356", 6).entries(), 1);
  want.add(seq("\\bar6\\bar41346", 6).entries(), 1);
  want.add(seq("\\bar6\\bar21236", 6).entries(), -1);
  CHECK(wedge_omega(phi) == want);
}

TEST_CASE("generators of L_{d,n}") {
  CHECK(linear_forms_L(0, 1).empty());
  for (int n = 2; n <= 4; ++n) {
    const auto forms = linear_forms_L(1, n);
    CHECK(forms.size() == 2 * subsets(alphabet(n), n - 2).size());
    for (const auto& f : forms) {
      std::set<Weight> weights;
      for (const auto& [s, c] : f.terms()) {
        bool pair = false;
        for (int x : s) pair = pair || std::find(s.begin(), s.end(), -x) != s.end();
        CHECK(pair);
        weights.insert(weight_of(s, n, f.level(), 1));
      }
      CHECK(weights.size() <= 1);
    }
  }
}

TEST_CASE("weights") {
  const auto w = weight_of(seq("\\bar4\\bar123", 4).entries(), 4, 1, 2);
  CHECK(w.H == 0);
  CHECK(w.h == std::vector<int>{-1, 1, 1, -1});
  for (const auto& s : fiber({seq("\\bar4\\bar213", 4), seq("\\bar3\\bar124", 4)}))
    CHECK(weight_of(s.entries(), 4, 0, 0).h == std::vector<int>(4, 0));
}

TEST_CASE("kernel elements") {
  Matching m1;
  m1.pairs[2] = 1;
  const auto K = kernel_element({2}, m1, 1);
  CHECK(K.terms().size() == 2);
  CHECK(contract_omega(K).is_zero());
  Matching bad;
  bad.pairs[2] = 2;
  CHECK_THROWS_AS(kernel_element({2}, bad, 1), DomainError);

  MultiVector k1(4, 4);
  k1.add(seq("\\bar4\\bar224", 4).entries(), 1);
  k1.add(seq("\\bar4\\bar114", 4).entries(), -1);
  k1.add(seq("\\bar3\\bar223", 4).entries(), -1);
  k1.add(seq("\\bar3\\bar113", 4).entries(), 1);
  CHECK(slice_kernel_element(seq("\\bar4\\bar224", 4)) == k1);
  MultiVector k2(4, 4);
  k2.add(seq("\\bar4\\bar334", 4).entries(), 1);
  k2.add(seq("\\bar4\\bar114", 4).entries(), -1);
  k2.add(seq("\\bar3\\bar223", 4).entries(), -1);
  k2.add(seq("\\bar2\\bar112", 4).entries(), 1);
  CHECK(slice_kernel_element(seq("\\bar4\\bar334", 4)) == k2);
  CHECK(contract_omega(k1).is_zero());
  CHECK(contract_omega(k2).is_zero());
}

TEST_CASE("Northeast kernel elements are annihilated by contraction, m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> pool;
    for (int i = 1; i <= 2 * m; ++i) pool.push_back(i);
    int northeast = 0;
    for (const auto& alpha : subsets(pool, m)) {
      if (!is_northeast(SignedSequence(2 * m, zero_weight_sequence(alpha)))) continue;
      ++northeast;
      const auto M = canonical_matching(alpha, m);
      CHECK(M.is_descending());
      CHECK(contract_omega(kernel_element(alpha, M, m)).is_zero());
    }
    CHECK(northeast == zero_weight_dimension(m));
  }
  CHECK(zero_weight_dimension(1) == 1);
  CHECK(zero_weight_dimension(2) == 2);
  CHECK(zero_weight_dimension(3) == 5);
}

TEST_CASE("Northeast kernel elements form a basis of each weight slice") {
  auto check_slice = [](int n, const std::vector<SignedSequence>& slice) {
    std::vector<Subset> sources;
    std::vector<SignedSequence> northeast;
    for (const auto& s : slice) {
      sources.push_back(s.entries());
      if (is_northeast(s)) northeast.push_back(s);
    }
    const int cols = static_cast<int>(sources.size());
    const int kernel_dim = cols - rank(contraction_matrix(sources, n), cols);
    std::map<Subset, int> col;
    for (int j = 0; j < cols; ++j) col[sources[j]] = j;
    Matrix ks;
    for (const auto& s : northeast) {
      const auto K = slice_kernel_element(s);
      CHECK(contract_omega(K).is_zero());
      Row r(cols, 0);
      for (const auto& [t, c] : K.terms()) r[col.at(t)] = c;
      ks.push_back(r);
    }
    CHECK(static_cast<int>(northeast.size()) == kernel_dim);
    CHECK(rank(ks, cols) == kernel_dim);
  };
  std::map<Weight, std::vector<SignedSequence>> slices;
  for (const auto& s : all_sequences(4)) slices[weight_of(s.entries(), 4, 0, 0)].push_back(s);
  for (const auto& [w, slice] : slices) check_slice(4, slice);
  std::vector<SignedSequence> zero6;
  for (const auto& s : all_sequences(6))
    if (weight_of(s.entries(), 6, 0, 0).h == std::vector<int>(6, 0)) zero6.push_back(s);
  check_slice(6, zero6);
}

TEST_CASE("normal forms of LG(4)") {
  const auto t = northeast_normal_form(0, 4);
  auto p = [](const char* s) { return PluckerIndex{parse_sequence(s, 4), 0}; };
  CHECK(t.of(p("\\bar4\\bar114")) == std::map<PluckerIndex, Q>{{p("\\bar4\\bar224"), -1}, {p("\\bar4\\bar334"), -1}});
  CHECK(t.of(p("\\bar2\\bar112")) == std::map<PluckerIndex, Q>{{p("\\bar4\\bar334"), 1}});
  CHECK(t.of(p("\\bar4\\bar224")) == std::map<PluckerIndex, Q>{{p("\\bar4\\bar224"), 1}});
  // p_a - sigma_a p_{a^t} lies in L for each binomial; the "+" version does not.
  for (const char* a : {"\\bar2\\bar112", "\\bar3\\bar113", "\\bar3\\bar223"}) {
    const auto x = p(a);
    const PluckerIndex xt{transpose(x.seq), 0};
    auto reduce = [&](const std::vector<std::pair<PluckerIndex, Q>>& combo) {
      std::map<PluckerIndex, Q> acc;
      for (const auto& [q, c] : combo)
        for (const auto& [ne, e] : t.of(q)) acc[ne] += c * e;
      std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
      return acc;
    };
    CHECK(reduce({{x, 1}, {xt, -sigma_sign(x.seq)}}).empty());
    CHECK_FALSE(reduce({{x, 1}, {xt, 1}}).empty());
  }
}

TEST_CASE("triangularity at weight zero, n = 4, 6") {
  for (int n : {4, 6}) {
    const auto t = northeast_normal_form(0, n);
    for (const auto& [x, combo] : t.forms) {
      if (weight_of(x.seq.entries(), n, 0, 0).h != std::vector<int>(n, 0) || is_northeast(x.seq)) continue;
      const auto rep = northeast_representative(pi(x.seq));
      auto positive = [](const SignedSequence& s) {
        std::vector<int> out;
        for (int v : s.entries())
          if (v > 0) out.push_back(v);
        return out;
      };
      const auto it = combo.find({rep, 0});
      REQUIRE(it != combo.end());
      CHECK(abs(it->second) == 1);
      for (const auto& [ne, c] : combo) {
        if (ne.seq == rep) continue;
        const auto a = positive(rep), b = positive(ne.seq);
        REQUIRE(a.size() == b.size());
        bool geq = true;
        for (std::size_t i = 0; i < a.size(); ++i) geq = geq && b[i] >= a[i];
        CHECK(geq);
        CHECK(b != a);
      }
    }
  }
}

TEST_CASE("sliced and unsliced elimination agree, n = 4, d = 1") {
  const auto a = northeast_normal_form(1, 4), b = northeast_normal_form_unsliced(1, 4);
  CHECK(a.forms == b.forms);
  for (const auto& [x, combo] : a.forms) {
    for (const auto& [ne, c] : combo) {
      CHECK(is_northeast(ne.seq));
      CHECK(ne.level == x.level);
      CHECK(weight_of(ne.seq.entries(), 4, ne.level, 1) == weight_of(x.seq.entries(), 4, x.level, 1));
    }
  }
}

TEST_CASE("sign of sorting") {
  std::vector<int> s{3, 1, 2};
  CHECK(sort_with_sign(s) == 1);
  CHECK(s == std::vector<int>{1, 2, 3});
  std::vector<int> r{2, 1};
  CHECK(sort_with_sign(r) == -1);
  std::vector<int> z{1, 1};
  CHECK(sort_with_sign(z) == 0);
}
