#include "theta/job.hpp"

#include <set>

#include "theta/rallis.hpp"
#include "theta/strata.hpp"
#include "theta/verify.hpp"

namespace theta {

namespace {

const std::set<std::string> kCommands = {
    "rallis-apply",   "rallis-preimage", "scs-theta",
    "scs-congruence", "lparam-check",    "lparam-map",
    "lparam-invariants", "lparam-pullback", "strata",
    "crosscheck",     "verify-all"};

RingContext ring_of(const Json& job) {
  if (!job.contains("ring")) return RingContext(2, 1);
  return ring_from_json(job.at("ring"));
}

std::optional<Specialization> spec_of(const Json& job,
                                      const RingContext& ctx) {
  if (!job.contains("specialization") || job.at("specialization").is_null())
    return std::nullopt;
  return specialization_from_json(job.at("specialization"), ctx);
}

const Json& params_of(const Json& job) {
  static const Json empty = Json::object();
  if (!job.contains("params")) return empty;
  const Json& p = job.at("params");
  if (!p.is_object()) throw SchemaError("params must be an object");
  return p;
}

Specialization require_spec(const std::optional<Specialization>& spec) {
  if (!spec)
    throw MissingSqrtQ("this command needs a specialization (ell, v_image)");
  return *spec;
}

TameParam<PFElem> param_from(const Json& params, const RingContext& ctx,
                             const Specialization& spec) {
  Matrix<PFElem> frob =
      pf_matrix_from_json(require_field(params, "frob"), spec.target);
  Matrix<PFElem> gen =
      pf_matrix_from_json(require_field(params, "gen"), spec.target);
  return make_tame_param(std::move(frob), std::move(gen), ctx);
}

Json coeffs_to_json(const Poly<PFElem>& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(pf_to_json(c));
  return out;
}

Poly<PFElem> coeffs_from_json(const Json& j, const FqField& fld) {
  if (!j.is_array() || j.empty())
    throw SchemaError("coeffs must be a nonempty list, constant term first");
  std::vector<PFElem> cs;
  cs.reserve(j.size());
  for (const auto& c : j) cs.push_back(pf_from_json(c, fld));
  return Poly<PFElem>(std::move(cs));
}

Json dispatch(const std::string& command, const Json& job) {
  RingContext ctx = ring_of(job);
  std::optional<Specialization> spec = spec_of(job, ctx);
  const Json& params = params_of(job);

  if (command == "rallis-apply") {
    int n = static_cast<int>(require_int(params, "n"));
    int m = static_cast<int>(require_int(params, "m"));
    LaurentPoly f = poly_from_json(require_field(params, "poly"));
    return Json{{"poly", poly_to_json(apply_rallis(build_rallis(n, m), f))}};
  }

  if (command == "rallis-preimage") {
    int n = static_cast<int>(require_int(params, "n"));
    int m = static_cast<int>(require_int(params, "m"));
    int bound = params.contains("bound")
                    ? static_cast<int>(require_int(params, "bound"))
                    : 0;
    LaurentPoly g = poly_from_json(require_field(params, "poly"));
    LaurentPoly f = invariant_preimage(build_rallis(n, m), g, bound);
    return Json{{"poly", poly_to_json(f)}};
  }

  if (command == "scs-theta") {
    int n = static_cast<int>(require_int(params, "n"));
    Support s = support_from_json(require_field(params, "support"));
    return Json{{"support", support_to_json(theta_support(s, n))}};
  }

  if (command == "scs-congruence") {
    int n = static_cast<int>(require_int(params, "n"));
    Specialization sp = require_spec(spec);
    Support triv = trivial_rep_support(n);
    Support twisted = twist_support(triv, BaseScalar::v_power(2));
    Integer qn = 1;
    for (int i = 0; i < n; ++i) qn *= ctx.q;
    return Json{{"equal", support_equal(triv, twisted, sp)},
                {"divides", (qn - 1) % sp.target.ell == 0}};
  }

  if (command == "lparam-check") {
    Specialization sp = require_spec(spec);
    TameParam<PFElem> P = param_from(params, ctx, sp);
    return Json{{"tame", check_tame(P)}};
  }

  if (command == "lparam-map") {
    Specialization sp = require_spec(spec);
    int n = static_cast<int>(require_int(params, "n"));
    TameParam<PFElem> P = param_from(params, ctx, sp);
    TameParam<PFElem> image = l_theta(P, n, sp.v_image);
    return Json{{"frob", pf_matrix_to_json(image.frob)},
                {"gen", pf_matrix_to_json(image.gen)}};
  }

  if (command == "lparam-invariants") {
    Specialization sp = require_spec(spec);
    TameParam<PFElem> P = param_from(params, ctx, sp);
    Word w = word_from_json(require_field(params, "word"));
    InvariantVector<PFElem> iv = word_invariants(P, w);
    return Json{{"word", word_to_json(iv.word)},
                {"coeffs", coeffs_to_json(iv.coeffs)},
                {"alpha1", iv.word.frob_count()}};
  }

  if (command == "lparam-pullback") {
    Specialization sp = require_spec(spec);
    Poly<PFElem> pushed =
        coeffs_from_json(require_field(params, "coeffs"), sp.target);
    long alpha1 = require_int(params, "alpha1");
    if (alpha1 < 0) throw SchemaError("alpha1 must be nonnegative");
    const Json& blocks_json = require_field(params, "scalar_blocks");
    if (!blocks_json.is_array())
      throw SchemaError("scalar_blocks must be a list");
    std::vector<PFElem> blocks;
    for (const auto& b : blocks_json)
      blocks.push_back(pf_from_json(b, sp.target));
    Poly<PFElem> source = pullback_coefficients(pushed, alpha1, blocks);
    return Json{{"coeffs", coeffs_to_json(source)}};
  }

  if (command == "strata") {
    int n = static_cast<int>(require_int(params, "n"));
    int m = static_cast<int>(require_int(params, "m"));
    long q = require_int(params, "q");
    Json out = report_to_json(enumerate_strata(n, m, q));
    if (params.contains("transitivity") && params["transitivity"].is_boolean() &&
        params["transitivity"].get<bool>()) {
      Json trans = Json::array();
      for (int k = 0; k <= std::min(n, m); ++k)
        trans.push_back(orbit_transitivity_check(n, m, k, q));
      out["transitive"] = std::move(trans);
    }
    return out;
  }

  if (command == "crosscheck") {
    int n = static_cast<int>(require_int(params, "n"));
    const Json& diag = require_field(params, "diag");
    if (!diag.is_array() || diag.empty())
      throw SchemaError("diag must be a nonempty list of units");
    std::vector<BaseScalar> entries;
    for (const auto& d : diag) entries.push_back(unit_from_json(d));
    return Json{{"equal", satake_crosscheck(entries, n, ctx)}};
  }

  if (command == "verify-all") {
    VerifyOptions opts;
    if (params.contains("seed"))
      opts.seed = static_cast<uint64_t>(require_int(params, "seed"));
    if (params.contains("scale")) {
      const Json& s = params.at("scale");
      if (!s.is_string() || (s != "small" && s != "full"))
        throw SchemaError("scale must be small or full");
      opts.full = s == "full";
    }
    auto results = run_all_suites(opts);
    Json suites = Json::array();
    bool all = true;
    for (const auto& r : results) {
      all = all && r.passed();
      Json notes = Json::array();
      for (const auto& n : r.notes) notes.push_back(n);
      suites.push_back(Json{{"name", r.name},
                            {"cases", r.cases},
                            {"failures", r.failures},
                            {"status", r.passed() ? "pass" : "fail"},
                            {"notes", std::move(notes)}});
    }
    return Json{{"seed", opts.seed},
                {"scale", opts.full ? "full" : "small"},
                {"suites", std::move(suites)},
                {"all_passed", all}};
  }

  throw SchemaError("unknown command: " + command);
}

Json provenance(const Json& job) {
  Json prov;
  prov["command"] = job.contains("command") ? job.at("command") : Json();
  prov["toolkit-version"] = kToolkitVersion;
  try {
    RingContext ctx = ring_of(job);
    prov["ring"] = ring_to_json(ctx);
    auto spec = spec_of(job, ctx);
    prov["specialization"] = spec ? specialization_to_json(*spec) : Json();
  } catch (const Error&) {
    // Leave provenance partial when the job's context itself is broken.
  }
  return prov;
}

}  // namespace

RunResult run_job(const Json& job) {
  RunResult out;
  out.doc["provenance"] = provenance(job);
  try {
    if (!job.is_object()) throw SchemaError("job must be a JSON object");
    const Json& cmd = require_field(job, "command");
    if (!cmd.is_string()) throw SchemaError("command must be a string");
    std::string command = cmd.get<std::string>();
    if (!kCommands.count(command))
      throw SchemaError("unknown command: " + command);
    Json result = dispatch(command, job);
    if (command == "verify-all" && !result.at("all_passed").get<bool>())
      out.exit_code = 2;
    out.doc["result"] = std::move(result);
  } catch (const SchemaError& e) {
    out.doc["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    out.exit_code = 1;
  } catch (const Error& e) {
    out.doc["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    out.exit_code = 2;
  } catch (const Json::exception& e) {
    out.doc["error"] = Json{{"code", "SchemaError"}, {"message", e.what()}};
    out.exit_code = 1;
  }
  return out;
}

}  // namespace theta
