#include "exbraid/cli.hpp"

#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "exbraid/braid.hpp"
#include "exbraid/cache.hpp"
#include "exbraid/error.hpp"
#include "exbraid/finiteness.hpp"
#include "exbraid/json_io.hpp"
#include "exbraid/labels.hpp"
#include "exbraid/matrixrep.hpp"
#include "exbraid/report.hpp"

namespace exbraid {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string approx_string(const CycloNumber& x) {
  const auto z = embed_complex(x);
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& doc, const std::string& text) {
  if (cfg.format == "json")
    out << doc.dump(2) << "\n";
  else
    out << text;
}

Algebra need_algebra(const RunConfig& cfg) {
  if (!cfg.algebra) throw UsageError("--algebra is required for " + cfg.command);
  return *cfg.algebra;
}

std::vector<int> ells_of(const RunConfig& cfg) {
  if (cfg.ell && cfg.ell_range) throw UsageError("give either --ell or --ell-range, not both");
  if (cfg.ell) return {*cfg.ell};
  if (cfg.ell_range) {
    std::vector<int> v;
    for (int l = cfg.ell_range->first; l <= cfg.ell_range->second; ++l) v.push_back(l);
    return v;
  }
  throw UsageError("--ell or --ell-range is required for " + cfg.command);
}

CategorySpec make_spec(Algebra a, int ell) {
  if (!CategorySpec::nonempty(a, ell))
    throw UsageError("C(" + algebra_name(a) + ", l=" + std::to_string(ell) + ") has an empty alcove");
  return CategorySpec(a, ell);
}

Weight object_of(const RunConfig& cfg, Algebra a) {
  try {
    return parse_object(a, cfg.object);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
}

int cmd_alcove(const RunConfig& cfg, std::ostream& out) {
  const Algebra a = need_algebra(cfg);
  Json docs = Json::array();
  std::ostringstream text;
  for (int ell : ells_of(cfg)) {
    if (cfg.ell_range && !CategorySpec::nonempty(a, ell)) continue;
    const CategorySpec spec = make_spec(a, ell);
    Json j = category_json(spec);
    text << spec.to_string() << ": rank " << j["rank"].get<std::size_t>() << "\n";
    for (const auto& e : j["alcove"]) {
      Weight w = weight_from_json(e["weight"]);
      text << "  " << std::left << std::setw(28) << w.to_string() << e["label"].get<std::string>() << "\n";
    }
    docs.push_back(j);
  }
  emit(out, cfg, cfg.ell ? docs[0] : docs, text.str());
  return kExitOk;
}

int cmd_fpdim(const RunConfig& cfg, std::ostream& out) {
  const Algebra a = need_algebra(cfg);
  if (cfg.object.empty()) throw UsageError("--object is required for fpdim");
  const Weight w = object_of(cfg, a);
  Json docs = Json::array();
  std::ostringstream text;
  for (int ell : ells_of(cfg)) {
    if (cfg.ell_range && !CategorySpec::nonempty(a, ell)) continue;
    const CategorySpec spec = make_spec(a, ell);
    Json j;
    j["algebra"] = algebra_name(a);
    j["ell"] = ell;
    j["object"] = {{"weight", to_json(w)}, {"label", label_string(a, w)}};
    if (!in_alcove(spec, w)) throw UsageError(w.to_string() + " is not in the alcove of " + spec.to_string());
    const CycloNumber d = fpdim(spec, w);
    const CycloNumber d2 = d * d;
    j["fpdim"] = to_json(d);
    j["fpdim_squared"] = to_json(d2);
    const auto integral = as_integer(d2);
    j["square_integral"] = integral.has_value();
    text << spec.to_string() << " FPdim " << label_string(a, w) << " = " << approx_string(d) << "  (exact "
         << d.to_string() << ")" << (integral ? "  FPdim^2 = " + integral->get_str() : "  FPdim^2 not an integer")
         << "\n";
    docs.push_back(j);
  }
  emit(out, cfg, cfg.ell ? docs[0] : docs, text.str());
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  std::vector<Algebra> algs = cfg.algebra ? std::vector<Algebra>{*cfg.algebra} : all_algebras();
  std::vector<std::pair<Algebra, ClassifyRow>> rows;
  Json doc = Json::array();
  for (Algebra a : algs)
    for (const auto& r : classify_weakly_integral(a, nullptr, cfg.threads)) {
      rows.emplace_back(a, r);
      doc.push_back(to_json(r, a));
    }
  std::ostringstream text;
  if (cfg.algebra) {
    for (const auto& [a, r] : rows)
      text << algebra_name(a) << " l=" << r.ell << " rank " << r.rank << (r.pointed ? " pointed" : "") << "\n";
    if (rows.empty()) text << algebra_name(*cfg.algebra) << ": none\n";
  } else {
    text << render_table1(rows);
  }
  emit(out, cfg, doc, text.str());
  return kExitOk;
}

// Designated spectrum for the category when no object is given.
Spectrum designated_spectrum(const CategorySpec& spec, Json& j) {
  const Algebra a = spec.algebra();
  if (a == Algebra::G2 || a == Algebra::F4) {
    const Weight v = parse_object(a, "l1");
    j["object"] = {{"weight", to_json(v)}, {"label", label_string(a, v)}};
    return sigma_spectrum(spec, v);
  }
  const Weight v = en_vector_weight(a), t = en_target_weight(a);
  j["object"] = {{"weight", to_json(v)}, {"label", label_string(a, v)}};
  j["target"] = {{"weight", to_json(t)}, {"label", label_string(a, t)}};
  Spectrum s = en_series_spectrum(spec);
  Spectrum fused = restricted_spectrum(spec, v, t);
  j["fusion_spectrum"] = to_json(fused);
  j["fusion_agrees_up_to_scale"] = equal_up_to_scale(s.exact(), fused.exact()).has_value();
  return s;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Algebra a = need_algebra(cfg);
  Json docs = Json::array();
  std::ostringstream text;
  for (int ell : ells_of(cfg)) {
    if (cfg.ell_range && !CategorySpec::nonempty(a, ell)) continue;
    const CategorySpec spec = make_spec(a, ell);
    Json j;
    j["algebra"] = algebra_name(a);
    j["ell"] = ell;
    Spectrum s;
    if (cfg.object.empty()) {
      s = designated_spectrum(spec, j);
    } else {
      const Weight v = object_of(cfg, a);
      if (!in_alcove(spec, v)) throw UsageError(v.to_string() + " is not in the alcove of " + spec.to_string());
      j["object"] = {{"weight", to_json(v)}, {"label", label_string(a, v)}};
      const auto sq = tensor_square_truncated(spec, v);
      j["square"] = to_json(sq);
      s = sigma_spectrum(spec, v, sq);
    }
    if (cfg.normalize) s = normalize_ratios(s);
    j["spectrum"] = to_json(s);
    j["distinct"] = s.distinct();
    const auto po = projective_order(s);
    j["po"] = po ? Json(*po) : Json(nullptr);
    text << spec.to_string() << " " << j["object"]["label"].get<std::string>() << ": " << s.to_string()
         << "  d=" << s.size() << " po=" << (po ? std::to_string(*po) : "inf")
         << (s.distinct() ? "" : "  (repeated values)") << "\n";
    docs.push_back(j);
  }
  emit(out, cfg, cfg.ell ? docs[0] : docs, text.str());
  return kExitOk;
}

int cmd_decide(const RunConfig& cfg, std::ostream& out) {
  const Algebra a = need_algebra(cfg);
  std::vector<CaseReport> cases;
  for (int ell : ells_of(cfg)) {
    if (cfg.ell_range && !CategorySpec::nonempty(a, ell)) continue;
    const CategorySpec spec = make_spec(a, ell);
    if (cfg.object.empty()) {
      cases.push_back(analyze(spec, cfg.jmax));
      continue;
    }
    const Weight z = object_of(cfg, a);
    if (!in_alcove(spec, z)) throw UsageError(z.to_string() + " is not in the alcove of " + spec.to_string());
    CaseReport r;
    r.algebra = a;
    r.ell = ell;
    r.rank = alcove_rank(spec);
    r.object = z;
    r.target = z;
    TWResult tw = tw_irreducibility(spec, z);
    r.spectrum = tw.spectrum;
    r.d = tw.d;
    if (!tw.certified) {
      r.verdict.reason = "tw-refused: " + tw.refusal;
    } else if (tw.d < 2 || tw.d > 5) {
      r.verdict.reason = "dimension " + std::to_string(tw.d) + " outside 2..5";
    } else {
      r.verdict = decide(*tw.spectrum, tw.d, Evidence::TWVerified);
      r.verdict.certificate.insert(r.verdict.certificate.begin(), tag::kTW);
    }
    cases.push_back(r);
  }
  Json doc = Json::array();
  for (const auto& c : cases) doc.push_back(to_json(c));
  emit(out, cfg, cfg.ell ? doc[0] : doc, render_verdicts(cases));
  return kExitOk;
}

int cmd_verify_matrix(const RunConfig& cfg, std::ostream& out) {
  Json doc = Json::array();
  std::ostringstream text;
  bool all_ok = true;
  for (int ell : ells_of(cfg)) {
    const MatrixCertificate c = verify_matrix(ell, cfg.jmax);
    all_ok = all_ok && c.braid_relation;
    doc.push_back(to_json(c));
    text << "l=" << ell << " ABA=BAB " << (c.braid_relation ? "yes" : "NO") << "  C=AB^-1 " << c.result()
         << " (j <= " << c.jmax << (c.first_scalar_power ? ", first j=" + std::to_string(*c.first_scalar_power) : "")
         << ")  conductor " << c.conductor << "\n";
  }
  emit(out, cfg, cfg.ell ? doc[0] : doc, text.str());
  return all_ok ? kExitOk : kExitComputation;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  ReportOptions opt;
  opt.tables = cfg.tables || !cfg.verdicts;
  opt.verdicts = cfg.verdicts || !cfg.tables;
  opt.threads = cfg.threads;
  opt.jmax = cfg.jmax;
  if (cfg.algebra) {
    std::vector<VerdictRange> r;
    for (const auto& v : default_verdict_ranges())
      if (v.algebra == *cfg.algebra) r.push_back(v);
    opt.ranges = r;
  }
  if (cfg.ell_range)
    for (auto& r : opt.ranges) {
      r.lo = cfg.ell_range->first;
      r.hi = cfg.ell_range->second;
    }
  ReportResult res = run_report(opt);
  emit(out, cfg, res.doc, res.text);
  return res.mismatches.empty() ? kExitOk : kExitMismatch;
}

void error_document(std::ostream& err, const RunConfig& cfg, const std::string& kind, const std::string& msg,
                    int code) {
  if (cfg.format == "json") {
    Json j;
    j["error"] = {{"kind", kind}, {"message", msg}, {"exit_code", code}};
    err << j.dump(2) << "\n";
  } else {
    err << "error (" << kind << "): " << msg << "\n";
  }
}

}  // namespace

std::pair<int, int> parse_ell_range(const std::string& s) {
  static const std::regex re(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw PreconditionError("range must look like A..B, got '" + s + "'");
  const int a = std::stoi(m[1].str()), b = std::stoi(m[2].str());
  if (a > b) throw PreconditionError("empty range '" + s + "'");
  return {a, b};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact braid-group image and weak-integrality analysis for exceptional quantum group categories"};
  app.require_subcommand(1);
  std::string algebra, ell_range;
  int ell = 0, jmax = 0;

  auto common = [&](CLI::App* sub, bool needs_object) {
    sub->add_option("--algebra", algebra, "g2, f4, e6, e7 or e8");
    sub->add_option("--ell", ell, "level l (q = exp(pi i / l))")->check(CLI::Range(2, 100000));
    sub->add_option("--ell-range", ell_range, "inclusive range A..B");
    if (needs_object)
      sub->add_option("--object", cfg.object,
                      "weight coordinates (internal numbering, e.g. 0,0,0,1) or labels (e.g. l1, 2l1+l4)");
    sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cache-dir", cfg.cache_dir, std::string("cache directory (fallback: $") + kCacheEnv + ")");
    sub->add_option("--jmax", jmax, "largest power tried in the matrix check")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  };
  auto* s_alcove = app.add_subcommand("alcove", "list the simple objects");
  common(s_alcove, false);
  auto* s_fpdim = app.add_subcommand("fpdim", "exact FP-dimension of an object");
  common(s_fpdim, true);
  auto* s_classify = app.add_subcommand("classify", "weakly integral categories of rank >= 2");
  common(s_classify, false);
  auto* s_spectrum = app.add_subcommand("spectrum", "eigenvalues of the braid generator");
  common(s_spectrum, true);
  s_spectrum->add_flag("--normalize", cfg.normalize, "rescale to ratio-normalized form");
  auto* s_decide = app.add_subcommand("decide", "finiteness verdict for the braid group image");
  common(s_decide, true);
  auto* s_matrix = app.add_subcommand("verify-matrix", "explicit 4-dimensional representation checks");
  common(s_matrix, false);
  auto* s_report = app.add_subcommand("report", "tables and verdict suite with regression check");
  common(s_report, false);
  s_report->add_flag("--tables", cfg.tables, "weak-integrality tables only");
  s_report->add_flag("--verdicts", cfg.verdicts, "verdict suite only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    error_document(err, cfg, "usage", os.str().empty() ? e.what() : os.str(), kExitUsage);
    return kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!algebra.empty()) {
      try {
        cfg.algebra = parse_algebra(algebra);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    if (ell) cfg.ell = ell;
    if (jmax) cfg.jmax = jmax;
    if (!ell_range.empty()) {
      try {
        cfg.ell_range = parse_ell_range(ell_range);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }

    std::optional<ScopedCache> cache;
    if (auto dir = resolve_cache_dir(cfg.cache_dir)) cache.emplace(*dir);

    if (cfg.command == "alcove") return cmd_alcove(cfg, out);
    if (cfg.command == "fpdim") return cmd_fpdim(cfg, out);
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out);
    if (cfg.command == "decide") return cmd_decide(cfg, out);
    if (cfg.command == "verify-matrix") return cmd_verify_matrix(cfg, out);
    return cmd_report(cfg, out);
  } catch (const UsageError& e) {
    error_document(err, cfg, "usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const InternalError& e) {
    error_document(err, cfg, "internal", e.what(), kExitComputation);
    return kExitComputation;
  } catch (const SizeBoundExceeded& e) {
    error_document(err, cfg, "size-bound", e.what(), kExitComputation);
    return kExitComputation;
  } catch (const Error& e) {
    error_document(err, cfg, "computation", e.what(), kExitComputation);
    return kExitComputation;
  }
}

}  // namespace exbraid
