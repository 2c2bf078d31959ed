#include "exbraid/json_io.hpp"

#include "exbraid/error.hpp"
#include "exbraid/labels.hpp"

namespace exbraid {

Json to_json(const CycloNumber& x) {
  Json j;
  j["conductor"] = x.conductor();
  Json cs = Json::array();
  for (const auto& c : x.coeffs()) cs.push_back(c.get_str());
  j["coeffs"] = cs;
  const auto z = embed_complex(x);
  j["approx"] = {z.real(), z.imag()};
  return j;
}

CycloNumber cyclo_from_json(const Json& j) {
  std::vector<mpq_class> cs;
  for (const auto& c : j.at("coeffs")) {
    mpq_class q(c.get<std::string>());
    q.canonicalize();
    cs.push_back(q);
  }
  return CycloNumber::from_coeffs(j.at("conductor").get<std::uint32_t>(), cs);
}

Json to_json(const Weight& w) { return Json(w.c); }

Weight weight_from_json(const Json& j) { return Weight(j.get<std::vector<int>>()); }

Json to_json(const WeightSystem& ws) {
  Json j;
  j["highest"] = to_json(ws.highest);
  j["dim"] = ws.dim.get_str();
  Json dom = Json::array();
  for (const auto& [w, m] : ws.dominant) dom.push_back({{"weight", to_json(w)}, {"multiplicity", m}});
  j["dominant"] = dom;
  return j;
}

WeightSystem weight_system_from_json(const Json& j) {
  WeightSystem ws;
  ws.highest = weight_from_json(j.at("highest"));
  ws.dim = mpz_class(j.at("dim").get<std::string>());
  for (const auto& e : j.at("dominant"))
    ws.dominant.emplace_back(weight_from_json(e.at("weight")), e.at("multiplicity").get<long>());
  return ws;
}

Json to_json(const FusionDecomposition& fd) {
  Json j;
  j["left"] = to_json(fd.left);
  j["right"] = to_json(fd.right);
  j["truncated"] = fd.truncated;
  j["ell"] = fd.ell;
  Json s = Json::array();
  for (const auto& x : fd.summands)
    s.push_back({{"weight", to_json(x.weight)}, {"multiplicity", x.multiplicity}, {"parity", parity_name(x.parity)}});
  j["summands"] = s;
  Json d = Json::array();
  for (const auto& x : fd.discarded)
    d.push_back({{"weight", to_json(x.weight)}, {"multiplicity", x.multiplicity}, {"reason", x.reason}});
  j["discarded"] = d;
  return j;
}

FusionDecomposition fusion_from_json(const Json& j) {
  FusionDecomposition fd;
  fd.left = weight_from_json(j.at("left"));
  fd.right = weight_from_json(j.at("right"));
  fd.truncated = j.at("truncated").get<bool>();
  fd.ell = j.at("ell").get<int>();
  for (const auto& x : j.at("summands"))
    fd.summands.push_back({weight_from_json(x.at("weight")), x.at("multiplicity").get<long>(),
                           parse_parity(x.at("parity").get<std::string>())});
  for (const auto& x : j.at("discarded"))
    fd.discarded.push_back({weight_from_json(x.at("weight")), x.at("multiplicity").get<long>(),
                            x.at("reason").get<std::string>()});
  return fd;
}

Json to_json(const Spectrum& s) {
  Json j;
  j["ell"] = s.ell;
  j["normalization"] = normalization_name(s.normalization);
  j["source"] = s.source;
  j["symbolic"] = s.to_string();
  Json vs = Json::array();
  for (const auto& e : s.values) {
    Json v;
    v["symbol"] = e.to_string();
    v["sign"] = e.sign;
    v["exponent"] = e.exponent.get_str();
    v["value"] = to_json(e.value);
    v["parity"] = parity_name(e.parity);
    v["summand"] = e.summand ? to_json(*e.summand) : Json(nullptr);
    vs.push_back(v);
  }
  j["values"] = vs;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["outcome"] = outcome_name(v.outcome);
  j["certificate"] = v.certificate;
  j["assumptions"] = v.assumptions;
  j["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
  j["po"] = v.po ? Json(*v.po) : Json(nullptr);
  return j;
}

Json to_json(const MatrixCertificate& c) {
  Json j;
  j["ell"] = c.ell;
  j["jmax"] = c.jmax;
  j["braid_relation"] = c.braid_relation;
  j["result"] = c.result();
  j["first_scalar_power"] = c.first_scalar_power ? Json(*c.first_scalar_power) : Json(nullptr);
  j["conductor"] = c.conductor;
  return j;
}

Json to_json(const CaseReport& r) {
  Json j;
  j["algebra"] = algebra_name(r.algebra);
  j["ell"] = r.ell;
  j["rank"] = r.rank;
  j["verdict_sought"] = r.verdict_sought;
  j["note"] = r.note;
  auto obj = [&](const std::optional<Weight>& w) {
    if (!w) return Json(nullptr);
    return Json{{"weight", to_json(*w)}, {"label", label_string(r.algebra, *w)}};
  };
  j["object"] = obj(r.object);
  j["target"] = obj(r.target);
  j["d"] = r.d;
  j["spectrum"] = r.spectrum ? to_json(*r.spectrum) : Json(nullptr);
  j["po"] = r.verdict.po ? Json(*r.verdict.po) : Json(nullptr);
  j["verdict"] = r.verdict_sought ? to_json(r.verdict) : Json(nullptr);
  j["matrix"] = r.matrix ? to_json(*r.matrix) : Json(nullptr);
  return j;
}

Json to_json(const ClassifyRow& r, Algebra a) {
  return {{"algebra", algebra_name(a)}, {"ell", r.ell}, {"rank", r.rank}, {"pointed", r.pointed}};
}

Json to_json(const TotientBound& t) {
  Json j;
  j["row"] = witness_row_name(t.row);
  j["relation"] = t.relation_string;
  j["degree"] = t.degree;
  j["max_ell"] = t.max_ell;
  return j;
}

Json category_json(const CategorySpec& spec) {
  Json j;
  j["algebra"] = algebra_name(spec.algebra());
  j["ell"] = spec.ell();
  j["theta"] = spec.m_divides() ? "theta0" : "theta1";
  const auto labels = alcove(spec);
  j["rank"] = labels.size();
  Json a = Json::array();
  for (const auto& w : labels) a.push_back({{"weight", to_json(w)}, {"label", label_string(spec.algebra(), w)}});
  j["alcove"] = a;
  return j;
}

}  // namespace exbraid
