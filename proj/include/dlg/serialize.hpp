#pragma once

#include <json.hpp>

#include "dlg/exterior.hpp"
#include "dlg/hilbert.hpp"
#include "dlg/poset.hpp"
#include "dlg/quantum.hpp"
#include "dlg/straightening.hpp"

namespace dlg {

using Json = nlohmann::json;

/// Integers as JSON numbers when they fit, otherwise as decimal strings;
/// rationals always as strings "p" or "p/q".
Json to_json(const Z& z);
Json to_json(const Q& q);
Q rational_from_json(const Json& j);

/// [-4,-2,1,3]
Json to_json(const SignedSequence& a);
/// Accepts the integer array or the text form.
SignedSequence sequence_from_json(const Json& j, int n);

Json to_json(const Partition& lambda);
Json to_json(const PosetElement& x);
Json to_json(const PluckerIndex& p);
PluckerIndex plucker_from_json(const Json& j, int n);

/// {"d","n","elements":[[seq, level],...],"covers":[[i, j, type],...]}
Json to_json(const DosetStructure& ds);
DosetStructure doset_from_json(const Json& j);

Json to_json(const ChainCountMatrix& c);
Json to_json(const RationalPolynomial& p);
Json to_json(const QHElement& x);

/// {"d","n","forms":[{"index":[seq, level],"combination":[[coeff,[seq, level]],...]},...]}
Json to_json(const NormalFormTable& t);
NormalFormTable normal_forms_from_json(const Json& j);

/// A doset variable as [lower-seq, upper-seq, level].
Json variable_json(const StraighteningSystem& sys, int v);
/// {"d","n","relations":[{"lead":[var,var],"terms":[[coeff,var,var],...]},...]}
Json to_json(const StraighteningSystem& sys);
Json to_json(const AslReport& r);
Json to_json(const LagrangianPoint& pt);

}  // namespace dlg
