#include "dlg/serialize.hpp"

namespace dlg {

Json to_json(const Z& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Q& q) { return q.get_str(); }

Q rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) throw DomainError("expected a rational number");
  Q q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad rational " + j.get<std::string>());
  q.canonicalize();
  return q;
}

Json to_json(const SignedSequence& a) { return a.entries(); }

SignedSequence sequence_from_json(const Json& j, int n) {
  if (j.is_string()) return parse_sequence(j.get<std::string>(), n);
  if (!j.is_array()) throw DomainError("expected a sequence");
  return SignedSequence(n, j.get<std::vector<int>>());
}

Json to_json(const Partition& lambda) { return lambda.rows; }

Json to_json(const PosetElement& x) { return Json::array({to_json(x.seq), x.level}); }

Json to_json(const PluckerIndex& p) { return Json::array({to_json(p.seq), p.level}); }

PluckerIndex plucker_from_json(const Json& j, int n) {
  if (!j.is_array() || j.size() != 2) throw DomainError("expected [seq, level]");
  return {sequence_from_json(j[0], n), j[1].get<int>()};
}

Json to_json(const DosetStructure& ds) {
  Json elements = Json::array(), covers = Json::array();
  for (const auto& e : ds.elements) elements.push_back(to_json(e));
  for (const auto& c : ds.covers) covers.push_back({c.lower, c.upper, static_cast<int>(c.type)});
  return {{"d", ds.d}, {"n", ds.n}, {"elements", elements}, {"covers", covers}};
}

DosetStructure doset_from_json(const Json& j) {
  try {
    const int d = j.at("d").get<int>(), n = j.at("n").get<int>();
    std::vector<PosetElement> elements;
    for (const auto& e : j.at("elements")) elements.push_back({sequence_from_json(e.at(0), n), e.at(1).get<int>()});
    std::vector<Cover> covers;
    const int m = static_cast<int>(elements.size());
    for (const auto& c : j.at("covers")) {
      const int a = c.at(0).get<int>(), b = c.at(1).get<int>(), t = c.at(2).get<int>();
      if (a < 0 || a >= m || b < 0 || b >= m || t < 1 || t > 3) throw DomainError("bad cover entry");
      covers.push_back({a, b, static_cast<CoverType>(t)});
    }
    return make_doset_structure(d, n, std::move(elements), std::move(covers));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed doset JSON: ") + e.what());
  }
}

Json to_json(const ChainCountMatrix& c) {
  Json rows = Json::array();
  for (const auto& row : c.c) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(r);
  }
  return {{"P", c.P}, {"D", c.D}, {"c", rows}};
}

Json to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(to_json(c));
  return {{"coefficients", coeffs}, {"text", p.str()}};
}

Json to_json(const QHElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"partition", to_json(key.first)}, {"q", key.second}, {"coefficient", to_json(c)}});
  return {{"n", x.n()}, {"terms", terms}, {"text", x.str()}};
}

Json to_json(const NormalFormTable& t) {
  Json forms = Json::array();
  for (const auto& [p, combo] : t.forms) {
    Json c = Json::array();
    for (const auto& [ne, coeff] : combo) c.push_back({to_json(coeff), to_json(ne)});
    forms.push_back({{"index", to_json(p)}, {"combination", c}});
  }
  return {{"d", t.d}, {"n", t.n}, {"forms", forms}};
}

NormalFormTable normal_forms_from_json(const Json& j) {
  try {
    NormalFormTable t;
    t.d = j.at("d").get<int>();
    t.n = j.at("n").get<int>();
    for (const auto& f : j.at("forms")) {
      auto& combo = t.forms[plucker_from_json(f.at("index"), t.n)];
      for (const auto& c : f.at("combination")) combo[plucker_from_json(c.at(1), t.n)] = rational_from_json(c.at(0));
    }
    return t;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed normal-form JSON: ") + e.what());
  }
}

Json variable_json(const StraighteningSystem& sys, int v) {
  const auto& it = sys.vars[v].item;
  const auto &lo = sys.ds.elements[it.lower], &hi = sys.ds.elements[it.upper];
  return Json::array({to_json(lo.seq), to_json(hi.seq), lo.level});
}

Json to_json(const StraighteningSystem& sys) {
  Json rels = Json::array();
  for (const auto& r : sys.relations) {
    Json terms = Json::array();
    for (const auto& [m, c] : r.terms) terms.push_back({to_json(c), variable_json(sys, m.first), variable_json(sys, m.second)});
    rels.push_back({{"lead", {variable_json(sys, r.lead.first), variable_json(sys, r.lead.second)}}, {"terms", terms}});
  }
  return {{"d", sys.d}, {"n", sys.n}, {"relations", rels}, {"problems", sys.problems}};
}

Json to_json(const AslReport& r) {
  return {{"d", r.d},
          {"n", r.n},
          {"variables", r.variables},
          {"standard_monomials", r.standard_monomials},
          {"nonstandard_monomials", r.nonstandard_monomials},
          {"relations", r.relations},
          {"hilbert_at_two", to_json(r.hilbert_at_two)},
          {"evaluation_points", r.evaluation_points},
          {"basis", r.basis_ok},
          {"lexicographic", r.lex_condition_ok},
          {"two_term", r.two_term_condition_ok},
          {"evaluation", r.evaluation_ok},
          {"hilbert_count", r.hilbert_count_ok},
          {"passed", r.passed()},
          {"failures", r.failures}};
}

Json to_json(const LagrangianPoint& pt) {
  Json values = Json::array();
  for (const auto& [p, v] : pt.values) values.push_back({to_json(p), to_json(v)});
  return {{"d", pt.d}, {"n", pt.n}, {"values", values}};
}

}  // namespace dlg
