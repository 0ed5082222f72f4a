#include <doctest.h>

#include "dlg/serialize.hpp"

using namespace dlg;

TEST_CASE("sequences") {
  const auto a = parse_sequence("\\bar4\\bar213", 4);
  CHECK(to_json(a).dump() == "[-4,-2,1,3]");
  CHECK(sequence_from_json(Json::parse("[-4,-2,1,3]"), 4) == a);
  CHECK(sequence_from_json(Json("\\bar4\\bar213"), 4) == a);
  CHECK_THROWS_AS(sequence_from_json(Json::parse("[1,1,2,3]"), 4), DomainError);
}

TEST_CASE("rationals") {
  CHECK(rational_from_json(to_json(Q(-3, 4))) == Q(-3, 4));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK(to_json(Z(7)).dump() == "7");
  Z big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
  CHECK(to_json(big).dump() == "\"" + big.get_str() + "\"");
  CHECK_THROWS_AS(rational_from_json(Json("x")), DomainError);
}

TEST_CASE("doset round trip") {
  for (auto [d, n] : {std::pair{0, 2}, {1, 3}, {2, 2}}) {
    const auto ds = build_doset(d, n);
    const Json j = to_json(ds);
    CHECK(j.at("elements").size() == ds.elements.size());
    const auto back = doset_from_json(Json::parse(j.dump()));
    CHECK(back.elements == ds.elements);
    CHECK(back.covers == ds.covers);
    CHECK(back.doset.pairs() == ds.doset.pairs());
    CHECK(to_json(back) == j);
  }
  CHECK(to_json(build_doset(0, 1)).dump() ==
        R"({"covers":[[0,1,2]],"d":0,"elements":[[[-1],0],[[1],0]],"n":1})");
  CHECK_THROWS_AS(doset_from_json(Json::parse(R"({"d":0,"n":1,"elements":[[[-1],0]],"covers":[[0,5,1]]})")),
                  DomainError);
  CHECK_THROWS_AS(doset_from_json(Json::parse(R"({"d":0})")), DomainError);
}

TEST_CASE("normal form round trip") {
  const auto t = northeast_normal_form(1, 3);
  const auto back = normal_forms_from_json(Json::parse(to_json(t).dump()));
  CHECK(back.forms == t.forms);
  CHECK(back.d == 1);
  CHECK(back.n == 3);
}

TEST_CASE("other objects") {
  QHElement x(2);
  x.add(Partition({2, 2}), 0, 1);
  x.add(Partition(), 1, 1);
  const Json j = to_json(x);
  CHECK(j.at("terms").size() == 2);
  CHECK(j.at("text") == x.str());
  const auto c = chain_count_matrix(diamond_fixture());
  CHECK(to_json(c).at("c").dump() == "[[1,2],[4,6],[5,6],[2,2]]");
  CHECK(to_json(hilbert_polynomial(c)).at("text") == "2w^2 + 3w + 1");
  const auto sys = straightening_relations(0, 2);
  const Json r = to_json(sys);
  REQUIRE(r.at("relations").size() == 1);
  CHECK(r.at("relations")[0].at("lead").size() == 2);
  CHECK(to_json(verify_asl(sys)).at("passed") == true);
  const auto pt = to_json(lagrangian_point(2, 1, 3));
  CHECK(pt.at("values").size() == 12);
}
