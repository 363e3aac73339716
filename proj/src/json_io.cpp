#include "theta/json_io.hpp"

#include <algorithm>

namespace theta {

namespace {

Json coeff_triple(const Rational& c, int vpow) {
  return Json{{"num", c.get_num().get_str()},
              {"den", c.get_den().get_str()},
              {"vpow", vpow}};
}

Rational rational_from_triple(const Json& t) {
  if (!t.is_object() || !t.contains("num") || !t.contains("den"))
    throw SchemaError("coefficient must carry num and den strings");
  if (!t["num"].is_string() || !t["den"].is_string())
    throw SchemaError("num and den must be decimal strings");
  Rational r;
  try {
    r = rational_from_strings(t["num"].get<std::string>(),
                              t["den"].get<std::string>());
  } catch (const std::invalid_argument&) {
    throw SchemaError("malformed decimal string");
  }
  if (t["den"].get<std::string>() == "0")
    throw SchemaError("zero denominator");
  return r;
}

}  // namespace

const Json& require_field(const Json& j, const std::string& name) {
  if (!j.is_object() || !j.contains(name))
    throw SchemaError("missing field: " + name);
  return j.at(name);
}

long require_int(const Json& j, const std::string& name) {
  const Json& f = require_field(j, name);
  if (!f.is_number_integer()) throw SchemaError(name + " must be an integer");
  return f.get<long>();
}

Json scalar_to_json(const BaseScalar& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) out.push_back(coeff_triple(c, k));
  return out;
}

BaseScalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("scalar must be a list of terms");
  BaseScalar out;
  for (const auto& t : j) {
    long vpow = require_int(t, "vpow");
    out += BaseScalar::term(rational_from_triple(t), static_cast<int>(vpow));
  }
  return out;
}

Json unit_to_json(const BaseScalar& x) {
  if (!x.is_unit()) throw NotAUnit("expected a single-term unit");
  const auto& [k, c] = *x.terms().begin();
  return coeff_triple(c, k);
}

BaseScalar unit_from_json(const Json& j) {
  long vpow = require_int(j, "vpow");
  BaseScalar out = BaseScalar::term(rational_from_triple(j),
                                    static_cast<int>(vpow));
  if (!out.is_unit()) throw SchemaError("unit coefficient must be nonzero");
  return out;
}

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    for (const auto& [k, coeff] : c.terms()) {
      Json t;
      t["exp"] = e;
      t["coeff"] = coeff_triple(coeff, k);
      terms.push_back(std::move(t));
    }
  return Json{{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
  long vars = require_int(j, "vars");
  if (vars < 0) throw SchemaError("vars must be nonnegative");
  const Json& terms = require_field(j, "terms");
  if (!terms.is_array()) throw SchemaError("terms must be a list");
  LaurentPoly p(static_cast<int>(vars));
  for (const auto& t : terms) {
    const Json& exp = require_field(t, "exp");
    if (!exp.is_array() || static_cast<long>(exp.size()) != vars)
      throw SchemaError("exp must list one integer per variable");
    LaurentPoly::Exponents e;
    e.reserve(exp.size());
    for (const auto& x : exp) {
      if (!x.is_number_integer()) throw SchemaError("exponents must be integers");
      e.push_back(x.get<int>());
    }
    const Json& coeff = require_field(t, "coeff");
    long vpow = require_int(coeff, "vpow");
    p.add_term(e, BaseScalar::term(rational_from_triple(coeff),
                                   static_cast<int>(vpow)));
  }
  return p;
}

Json support_to_json(const Support& s) {
  Json elems = Json::array();
  for (const auto& e : s.elements()) {
    Json el;
    el["symbol"] = Json{{"label", e.symbol.label},
                        {"size", e.symbol.size},
                        {"dual", e.symbol.dual_label}};
    el["twist"] = unit_to_json(e.twist);
    elems.push_back(std::move(el));
  }
  return Json{{"group_rank", s.group_rank()}, {"elements", std::move(elems)}};
}

Support support_from_json(const Json& j) {
  const Json& elems = require_field(j, "elements");
  if (!elems.is_array()) throw SchemaError("elements must be a list");
  std::vector<SupportElement> out;
  for (const auto& el : elems) {
    const Json& sym = require_field(el, "symbol");
    const Json& label = require_field(sym, "label");
    const Json& dual = require_field(sym, "dual");
    if (!label.is_string() || !dual.is_string())
      throw SchemaError("symbol labels must be strings");
    long size = require_int(sym, "size");
    if (size < 1) throw SchemaError("symbol size must be positive");
    CuspidalSymbol symbol = CuspidalSymbol::make(
        label.get<std::string>(), static_cast<int>(size),
        dual.get<std::string>());
    out.push_back({symbol, unit_from_json(require_field(el, "twist"))});
  }
  Support s{std::move(out)};
  if (j.contains("group_rank") &&
      require_int(j, "group_rank") != s.group_rank())
    throw SchemaError("group_rank does not match the elements");
  return s;
}

Json word_to_json(const Word& w) {
  Json letters = Json::array();
  for (Letter l : w.letters)
    letters.push_back(l == Letter::frob ? "FROB" : "GEN");
  return Json{{"letters", std::move(letters)}};
}

Word word_from_json(const Json& j) {
  const Json& letters = require_field(j, "letters");
  if (!letters.is_array() || letters.empty())
    throw SchemaError("letters must be a nonempty list");
  std::vector<Letter> ls;
  for (const auto& l : letters) {
    if (!l.is_string()) throw SchemaError("letters must be strings");
    std::string s = l.get<std::string>();
    if (s == "FROB")
      ls.push_back(Letter::frob);
    else if (s == "GEN")
      ls.push_back(Letter::gen);
    else
      throw SchemaError("letters must be FROB or GEN");
  }
  return Word(std::move(ls));
}

Json report_to_json(const StrataReport& r) {
  auto str_list = [](const std::vector<Integer>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
  };
  return Json{{"n", r.n},
              {"m", r.m},
              {"q", r.q},
              {"counts", str_list(r.counts)},
              {"cumulative", str_list(r.cumulative)},
              {"stabilizer_orders", str_list(r.stabilizer_orders)},
              {"gl_n", r.gl_n.get_str()},
              {"gl_m", r.gl_m.get_str()}};
}

Json pf_to_json(const PFElem& x) {
  if (x.in_prime_subfield()) return Json(x.a());
  return Json::array({x.a(), x.b()});
}

PFElem pf_from_json(const Json& j, const FqField& fld) {
  if (j.is_number_integer()) return PFElem(fld, j.get<long>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer()) {
    if (!fld.ext && j[1].get<long>() != 0)
      throw SchemaError("extension coordinate given for a prime field");
    return PFElem(fld, j[0].get<long>(), j[1].get<long>());
  }
  throw SchemaError("field elements are integers or [a, b] pairs");
}

Json pf_matrix_to_json(const Matrix<PFElem>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(pf_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<PFElem> pf_matrix_from_json(const Json& j, const FqField& fld) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a nonempty list of rows");
  int n = static_cast<int>(j.size());
  Matrix<PFElem> m(n, n, PFElem::zero(fld));
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n)
      throw SchemaError("matrix must be square");
    for (int k = 0; k < n; ++k) m.at(i, k) = pf_from_json(j[i][k], fld);
  }
  return m;
}

Json ring_to_json(const RingContext& ctx) {
  return Json{{"p", ctx.p}, {"f", ctx.f}};
}

RingContext ring_from_json(const Json& j) {
  long p = require_int(j, "p");
  long f = j.contains("f") ? require_int(j, "f") : 1;
  try {
    return RingContext(p, f);
  } catch (const BadShape& e) {
    throw SchemaError(e.what());
  }
}

Json specialization_to_json(const Specialization& s) {
  return Json{{"ell", s.target.ell},
              {"extension", s.target.ext},
              {"v_image", pf_to_json(s.v_image)}};
}

Specialization specialization_from_json(const Json& j,
                                        const RingContext& ctx) {
  long ell = require_int(j, "ell");
  if (!is_prime(ell)) throw SchemaError("ell must be prime");
  bool ext = j.contains("extension") && j["extension"].is_boolean() &&
             j["extension"].get<bool>();
  FqField fld = ext ? FqField::quadratic(ell) : FqField::prime(ell);
  PFElem v = pf_from_json(require_field(j, "v_image"), fld);
  return Specialization(ctx, fld, v);
}

}  // namespace theta
