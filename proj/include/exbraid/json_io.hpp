#pragma once

#include "exbraid/braid.hpp"
#include "exbraid/category.hpp"
#include "exbraid/cyclo.hpp"
#include "exbraid/finiteness.hpp"
#include "exbraid/fusion.hpp"
#include "exbraid/matrixrep.hpp"
#include "exbraid/rootdata.hpp"
#include "json.hpp"

namespace exbraid {

using Json = nlohmann::ordered_json;

// {"conductor": N, "coeffs": ["p/q", ...], "approx": [re, im]}
Json to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const WeightSystem& ws);
WeightSystem weight_system_from_json(const Json& j);

Json to_json(const FusionDecomposition& fd);
FusionDecomposition fusion_from_json(const Json& j);

Json to_json(const Spectrum& s);
Json to_json(const Verdict& v);
Json to_json(const MatrixCertificate& c);
Json to_json(const CaseReport& r);
Json to_json(const ClassifyRow& r, Algebra a);
Json to_json(const TotientBound& t);

// Fields for a category: algebra, ell, rank, alcove (with labels).
Json category_json(const CategorySpec& spec);

}  // namespace exbraid
