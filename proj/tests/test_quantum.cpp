#include <doctest.h>

#include "dlg/hilbert.hpp"
#include "dlg/quantum.hpp"

using namespace dlg;

namespace {

std::vector<PosetElement> elements(int d, int n) {
  std::vector<PosetElement> out;
  for (int a = 0; a <= d; ++a)
    for (const auto& s : admissible_sequences(n)) out.push_back({s, a});
  return out;
}

// sigma_alpha q^a * sigma_box from covers found by comparing all pairs.
QHElement brute_pieri(const PosetElement& x, int d) {
  const int n = x.seq.n();
  const auto all = elements(d, n);
  QHElement out(n);
  for (const auto& y : all) {
    if (y == x || !leq(x, y)) continue;
    bool between = false;
    for (const auto& z : all)
      if (!(z == x) && !(z == y) && leq(x, z) && leq(z, y)) between = true;
    if (between) continue;
    const bool doset = y.level == x.level && y.seq.negative_count() == x.seq.negative_count();
    out.add(sequence_to_partition(y.seq), y.level, doset ? 2 : 1);
  }
  return out;
}

}  // namespace

TEST_CASE("classical Pieri examples") {
  CHECK(classical_pieri(Partition({2, 2}), 2).is_zero());
  CHECK(classical_pieri(Partition(), 2) == QHElement::schubert(Partition({1}), 2));
  QHElement two(2);
  two.add(Partition({2, 1}), 0, 2);
  CHECK(classical_pieri(Partition({1}), 2) == two);
  CHECK(two.str() == "2·σ[2,1]");
  CHECK(QHElement(3).str() == "0");
  CHECK_THROWS_AS(QHElement::schubert(Partition({2}), 2), DomainError);
}

TEST_CASE("hook removal") {
  CHECK(hook_removal(Partition({3, 1, 1}), 3) == Partition());
  CHECK(hook_removal(Partition({2, 2}), 2) == Partition({1}));
  CHECK_FALSE(hook_removal(Partition({1}), 2).has_value());
}

TEST_CASE("quantum Pieri examples") {
  CHECK(quantum_pieri(QHElement::schubert(Partition({2, 2}), 2, 1), 1).is_zero());
  QHElement expect(2);
  expect.add(Partition({2, 2}), 0, 1);
  expect.add(Partition(), 1, 1);
  CHECK(quantum_pieri(QHElement::schubert(Partition({2, 1}), 2), 1) == expect);
  CHECK(quantum_pieri(QHElement::schubert(Partition({2, 1}), 2), 3) == expect);
  CHECK(quantum_pieri(QHElement::schubert(Partition({2, 1}), 2), -1) == expect);
  CHECK(expect.str() == "1·σ[]·q^1 + 1·σ[2,2]");
}

TEST_CASE("truncation at q^0 is the classical product, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : admissible_sequences(n)) {
      const auto lambda = sequence_to_partition(s);
      CHECK(quantum_pieri(QHElement::schubert(lambda, n), 0) == classical_pieri(lambda, n));
    }
}

TEST_CASE("quantum Pieri is the weighted cover sum, n <= 3, d <= 2") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 2; ++d)
      for (const auto& x : elements(d, n)) {
        const auto got = quantum_pieri(QHElement::schubert(sequence_to_partition(x.seq), n, x.level), d);
        CHECK(got == brute_pieri(x, d));
        for (const auto& [key, c] : got.terms()) CHECK((c == 1 || c == 2));
      }
}

TEST_CASE("at most one level-raising cover, n <= 4, d <= 3") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const auto& x : elements(d, n)) {
        int jumps = 0;
        for (const auto& [y, t] : classified_covers(x, d)) jumps += t == CoverType::LevelJump;
        CHECK(jumps <= 1);
      }
}

TEST_CASE("dual partition is an order-reversing involution, n <= 5") {
  CHECK(dual_partition(Partition(), 3) == Partition({3, 3, 3}));
  CHECK(dual_partition(Partition({3, 3, 3}), 3) == Partition());
  CHECK(dual_partition(Partition({1}), 2) == Partition({2, 1}));
  for (int n = 1; n <= 5; ++n) {
    const auto adm = admissible_sequences(n);
    for (const auto& a : adm) {
      const auto la = sequence_to_partition(a);
      const auto da = dual_partition(la, n);
      CHECK(da.is_symmetric());
      CHECK(dual_partition(da, n) == la);
      for (const auto& b : adm) {
        const auto lb = sequence_to_partition(b);
        CHECK(la.contains(lb) == dual_partition(lb, n).contains(da));
      }
    }
  }
}

TEST_CASE("Schubert variety degrees") {
  CHECK(schubert_variety_degree(Partition({2, 2}), 0, 2) == 1);
  CHECK(schubert_variety_degree(Partition(), 0, 2) == 2);
  for (auto [n, d] : {std::pair{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
    const auto ds = build_doset(d, n);
    for (const auto& s : admissible_sequences(n)) {
      const int x = ds.index_of({s, 0});
      const Z chains = weighted_maximal_chain_count(ds.doset, x);
      CHECK(schubert_variety_degree(sequence_to_partition(s), d, n) == chains);
      CHECK(proj_degree(chain_count_matrix(schubert_subdoset(ds.doset, x, true))) == chains);
    }
  }
  for (auto [n, d] : {std::pair{2, 0}, {2, 1}, {3, 0}}) {
    const auto ds = build_doset(d, n);
    const int corank = ds.doset.require_ranked().P;
    QHElement x = QHElement::schubert(Partition(), n);
    for (int k = 0; k < corank; ++k) x = quantum_pieri(x, d);
    QHElement expect(n);
    expect.add(Partition(std::vector<int>(n, n)), d, proj_degree(chain_count_matrix(ds.doset)));
    CHECK(x == expect);
  }
}

TEST_CASE("poset rank") {
  CHECK(poset_rank(Partition(), 0, 3) == 0);
  CHECK(poset_rank(Partition({3, 3, 3}), 2, 3) == 6 + 8);
}
