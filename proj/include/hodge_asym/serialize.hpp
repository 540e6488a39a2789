#pragma once

// JSON forms of certificates and their parts. Field order is fixed
// (ordered_json); rationals are "num/den" strings, never floats.

#include <string>
#include <vector>

#include <json.hpp>

#include "hodge_asym/pipeline.hpp"

namespace hodge_asym {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing JSON field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad JSON field '") + key + "': " + e.what());
  }
}

inline const Json& sub(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace detail

// --- scalars and small values ----------------------------------------------

inline Json rational_to_json(const Rational& q) { return to_fraction_string(q); }
inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::InvalidInput, "rational must be a \"num/den\" string");
  return parse_rational(j.get<std::string>());
}

inline Json dpoly_to_json(const DPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_to_json(c));
  return out;
}
inline DPoly dpoly_from_json(const Json& j) {
  std::vector<Rational> coef;
  for (const auto& c : j) coef.push_back(rational_from_json(c));
  return DPoly(std::move(coef));
}

inline Json slopes_to_json(const SlopeMultiset& s) {
  Json out = Json::array();
  for (const auto& [slope, m] : s) out.push_back(Json::array({rational_to_json(slope), m}));
  return out;
}

inline Json hodge_to_json(const HodgePolynomial& h) {
  Json coeffs = Json::array();
  for (const auto& [ij, c] : h.terms()) coeffs.push_back(Json::array({ij.first, ij.second, c}));
  return coeffs;
}
inline HodgePolynomial hodge_from_json(const Json& j) {
  HodgePolynomial out;
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "Hodge coefficients must be an array");
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::InvalidInput, "Hodge term must be [i, j, c]");
    out.add_term(t[0].get<int>(), t[1].get<int>(), t[2].get<Count>());
  }
  return out;
}

inline Json char_rep_to_json(const CharRep& v) { return format_char_rep(v); }
inline CharRep char_rep_from_json(const Json& j) {
  if (!j.is_string()) fail(ErrorKind::InvalidInput, "representation must be a string like \"l=5; 1:1,2:1\"");
  return parse_char_rep(j.get<std::string>());
}

inline Json linear_form_to_json(const LinearForm& lf) {
  Json opaque = Json::object();
  for (const auto& [s, c] : lf.opaque) opaque[s] = c;
  return Json{{"exact", lf.exact}, {"opaque", opaque}};
}
inline LinearForm linear_form_from_json(const Json& j) {
  LinearForm out;
  out.exact = detail::get_field<Count>(j, "exact");
  for (const auto& [s, c] : detail::sub(j, "opaque").items()) out.opaque[s] = c.get<Count>();
  return out;
}

inline Json ledger_to_json(const DeltaLedger& ledger) {
  Json entries = Json::array();
  for (const auto& [ij, lf] : ledger.entries()) {
    entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"value", linear_form_to_json(lf)}});
  }
  return Json{{"scale", ledger.scale()}, {"exact_through", ledger.exact_through()}, {"entries", entries}};
}
inline DeltaLedger ledger_from_json(const Json& j) {
  DeltaLedger out(detail::get_field<std::string>(j, "scale"), detail::get_field<int>(j, "exact_through"));
  for (const auto& e : detail::sub(j, "entries")) {
    out.set(detail::get_field<int>(e, "i"), detail::get_field<int>(e, "j"), linear_form_from_json(detail::sub(e, "value")));
  }
  return out;
}

inline Json delta_expr_to_json(const DeltaExpr& e) {
  Json opaque = Json::object();
  for (const auto& [s, p] : e.opaque) opaque[s] = dpoly_to_json(p);
  return Json{{"display", e.to_string()}, {"scale", e.scale}, {"exact", dpoly_to_json(e.exact)}, {"opaque", opaque}};
}
inline DeltaExpr delta_expr_from_json(const Json& j) {
  DeltaExpr out;
  out.scale = detail::get_field<std::string>(j, "scale");
  out.exact = dpoly_from_json(detail::sub(j, "exact"));
  for (const auto& [s, p] : detail::sub(j, "opaque").items()) out.opaque[s] = dpoly_from_json(p);
  return out;
}

// --- CM data ---------------------------------------------------------------

inline Json cm_to_json(const CMData& z) {
  Json layers = Json::array();
  Json phis = Json::array();
  Json slopes = Json::array();
  for (const auto& layer : z.U_layers) layers.push_back(char_rep_to_json(layer));
  for (const auto& phi : z.phi_per_layer) {
    phis.push_back(phi);
    slopes.push_back(slopes_to_json(st_slopes(phi, z.ctx)));
  }
  return Json{{"p", z.ctx.p},
              {"l", z.ctx.l},
              {"ord", z.ctx.ord},
              {"selector", format_selector(z.selector)},
              {"V", char_rep_to_json(z.V)},
              {"U", char_rep_to_json(z.U)},
              {"U_layers", layers},
              {"phi_per_layer", phis},
              {"st_slopes_per_layer", slopes},
              {"W_omega", char_rep_to_json(z.W_omega)},
              {"W_o", char_rep_to_json(z.W_o)},
              {"r0", z.r0},
              {"r1", z.r1},
              {"oriented", z.oriented},
              {"degree3_slice", degree_slice_descending(equivariant_diamond(z), 3)}};
}

inline CMData cm_from_json(const Json& j) {
  CMData z;
  z.ctx = PrimeContext::make(detail::get_field<int>(j, "p"), detail::get_field<int>(j, "l"));
  if (z.ctx.ord != detail::get_field<int>(j, "ord")) fail(ErrorKind::InvalidInput, "stored ord is wrong");
  for (char c : detail::get_field<std::string>(j, "selector")) z.selector.push_back(c == '1');
  z.V = char_rep_from_json(detail::sub(j, "V"));
  z.U = char_rep_from_json(detail::sub(j, "U"));
  for (const auto& layer : detail::sub(j, "U_layers")) z.U_layers.push_back(char_rep_from_json(layer));
  z.phi_per_layer = detail::get_field<std::vector<std::vector<int>>>(j, "phi_per_layer");
  z.W_omega = char_rep_from_json(detail::sub(j, "W_omega"));
  z.W_o = char_rep_from_json(detail::sub(j, "W_o"));
  z.r0 = detail::get_field<Count>(j, "r0");
  z.r1 = detail::get_field<Count>(j, "r1");
  z.oriented = detail::get_field<bool>(j, "oriented");
  return z;
}

// --- certificate -----------------------------------------------------------

template <class T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const Json& j, const char* key) {
  const auto& v = detail::sub(j, key);
  if (v.is_null()) return std::nullopt;
  return detail::get_field<T>(j, key);
}

inline Json options_to_json(const ConstructOptions& o) {
  Json embellish = Json::array();
  if (o.special_fiber) embellish.push_back("special-fiber");
  if (o.polarization) embellish.push_back("polarization");
  return Json{{"l", optional_to_json(o.l)},
              {"l_bound", o.l_bound},
              {"selector", o.selector},
              {"max_layers", o.max_layers},
              {"embellish", embellish},
              {"polarization_hd", optional_to_json(o.polarization_hd)},
              {"polarization_k", optional_to_json(o.polarization_k)},
              {"polarization_dim", optional_to_json(o.polarization_dim)}};
}

inline ConstructOptions options_from_json(const Json& j) {
  ConstructOptions o;
  o.l = optional_from_json<int>(j, "l");
  o.l_bound = detail::get_field<int>(j, "l_bound");
  o.selector = detail::get_field<std::string>(j, "selector");
  o.max_layers = detail::get_field<int>(j, "max_layers");
  for (const auto& e : detail::sub(j, "embellish")) {
    const auto name = e.get<std::string>();
    if (name == "special-fiber") {
      o.special_fiber = true;
    } else if (name == "polarization") {
      o.polarization = true;
    } else {
      fail(ErrorKind::InvalidInput, "unknown embellishment '" + name + "'");
    }
  }
  o.polarization_hd = optional_from_json<Count>(j, "polarization_hd");
  o.polarization_k = optional_from_json<Count>(j, "polarization_k");
  o.polarization_dim = optional_from_json<int>(j, "polarization_dim");
  return o;
}

inline Json aux_to_json(const AuxCase& a) {
  return Json{{"kind", to_string(a.kind)},
              {"n", a.n},
              {"s", a.s},
              {"ambient_dims", a.ambient_dims},
              {"surface_fallback", a.surface_fallback}};
}

inline AuxCase aux_from_json(const Json& j) {
  AuxCase a;
  const auto kind = detail::get_field<std::string>(j, "kind");
  if (kind == "none") {
    a.kind = AuxKind::None;
  } else if (kind == "tower") {
    a.kind = AuxKind::Tower;
  } else if (kind == "p1_power") {
    a.kind = AuxKind::P1Power;
  } else {
    fail(ErrorKind::InvalidInput, "unknown auxiliary case '" + kind + "'");
  }
  a.n = detail::get_field<int>(j, "n");
  a.s = detail::get_field<int>(j, "s");
  a.ambient_dims = detail::get_field<std::vector<Count>>(j, "ambient_dims");
  a.surface_fallback = detail::get_field<bool>(j, "surface_fallback");
  return a;
}

inline Json special_fiber_to_json(const SpecialFiberRecord& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"d_prime", s.d_prime},
                           {"slice", Json{{"h10", s.slice.h10}, {"h20", s.slice.h20}, {"h30", s.slice.h30},
                                          {"h01", s.slice.h01}, {"h02", s.slice.h02}, {"h03", s.slice.h03}}},
                           {"delta30", s.fix.delta30},
                           {"l", s.fix.l},
                           {"h30", s.fix.h30},
                           {"h03", s.fix.h03},
                           {"delta_after", s.fix.delta_after},
                           {"shift", s.fix.shift},
                           {"closed_forms_match", s.fix.closed_forms_match},
                           {"symmetric", s.fix.symmetric}});
  }
  return Json{{"l_formula", std::to_string(r.multiplier) + "*d' - 1"}, {"multiplier", r.multiplier}, {"samples", samples}};
}

inline SpecialFiberRecord special_fiber_from_json(const Json& j) {
  using detail::get_field;
  SpecialFiberRecord r;
  r.multiplier = get_field<Count>(j, "multiplier");
  for (const auto& s : detail::sub(j, "samples")) {
    SpecialFiberSample out;
    out.d_prime = get_field<Count>(s, "d_prime");
    const auto& sl = detail::sub(s, "slice");
    out.slice = SpecialFiberSlice{get_field<Count>(sl, "h10"), get_field<Count>(sl, "h20"), get_field<Count>(sl, "h30"),
                                  get_field<Count>(sl, "h01"), get_field<Count>(sl, "h02"), get_field<Count>(sl, "h03")};
    out.fix.delta30 = get_field<Count>(s, "delta30");
    out.fix.l = get_field<Count>(s, "l");
    out.fix.h30 = get_field<Count>(s, "h30");
    out.fix.h03 = get_field<Count>(s, "h03");
    out.fix.delta_after = get_field<Count>(s, "delta_after");
    out.fix.shift = get_field<Count>(s, "shift");
    out.fix.closed_forms_match = get_field<bool>(s, "closed_forms_match");
    out.fix.symmetric = get_field<bool>(s, "symmetric");
    r.samples.push_back(out);
  }
  return r;
}

inline Json polarization_to_json(const PolarizationRecord& r) {
  return Json{{"Hd", r.hd}, {"k", r.k}, {"dim", r.dim}, {"n", r.choice.n}, {"value", r.choice.value}};
}

inline PolarizationRecord polarization_from_json(const Json& j) {
  using detail::get_field;
  return {get_field<Count>(j, "Hd"), get_field<Count>(j, "k"), get_field<int>(j, "dim"),
          {get_field<Count>(j, "n"), get_field<Count>(j, "value")}};
}

inline Json certificate_to_json(const ConstructionCertificate& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks) checks.push_back(Json{{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  Json out{
      {"version", c.version},
      {"schema", c.schema},
      {"inputs", Json{{"p", c.p}, {"i", c.target.first}, {"j", c.target.second}, {"options", options_to_json(c.options)}}},
      {"normalized_target", Json::array({c.normalized.first, c.normalized.second})},
      {"transposed", c.transposed},
      {"cm", cm_to_json(c.cm)},
      {"search", Json{{"layers", c.search_layers}, {"candidates_tried", c.search_candidates_tried}}},
      {"z_diamond", Json{{"dim", c.cm.dim()}, {"coeffs", hodge_to_json(c.z_diamond)}}},
      {"degree3_slice_unoriented", c.degree3_slice_unoriented},
      {"degree3_slice", c.degree3_slice},
      {"xprime", Json{{"h_i0", c.xprime.h_i0}, {"h_0i", c.xprime.h_0i}}},
      {"ledger", ledger_to_json(c.ledger)},
      {"aux_case", aux_to_json(c.aux)},
      {"delta_result", delta_expr_to_json(c.delta_result)},
      {"d_policy", Json{{"kind", c.d_policy.kind},
                        {"smallest_d", c.d_policy.smallest_d},
                        {"max_exceptions", c.d_policy.max_exceptions},
                        {"statement", c.d_policy.statement}}},
      {"checks", checks},
      {"embellishments", Json{{"special_fiber", c.special_fiber ? special_fiber_to_json(*c.special_fiber) : Json(nullptr)},
                              {"polarization", c.polarization ? polarization_to_json(*c.polarization) : Json(nullptr)}}}};
  return out;
}

inline ConstructionCertificate certificate_from_json(const Json& j) {
  using detail::get_field;
  using detail::sub;
  ConstructionCertificate c;
  c.version = get_field<std::string>(j, "version");
  c.schema = get_field<int>(j, "schema");
  if (c.schema != kSchemaVersion) fail(ErrorKind::InvalidInput, "unsupported certificate schema " + std::to_string(c.schema));
  const auto& in = sub(j, "inputs");
  c.p = get_field<int>(in, "p");
  c.target = {get_field<int>(in, "i"), get_field<int>(in, "j")};
  c.options = options_from_json(sub(in, "options"));
  auto norm = get_field<std::vector<int>>(j, "normalized_target");
  if (norm.size() != 2) fail(ErrorKind::InvalidInput, "normalized_target must have two entries");
  c.normalized = {norm[0], norm[1]};
  c.transposed = get_field<bool>(j, "transposed");
  c.cm = cm_from_json(sub(j, "cm"));
  c.search_layers = get_field<int>(sub(j, "search"), "layers");
  c.search_candidates_tried = get_field<Count>(sub(j, "search"), "candidates_tried");
  c.z_diamond = hodge_from_json(sub(sub(j, "z_diamond"), "coeffs"));
  c.degree3_slice_unoriented = get_field<std::vector<Count>>(j, "degree3_slice_unoriented");
  c.degree3_slice = get_field<std::vector<Count>>(j, "degree3_slice");
  c.xprime.h_i0 = get_field<std::vector<Count>>(sub(j, "xprime"), "h_i0");
  c.xprime.h_0i = get_field<std::vector<Count>>(sub(j, "xprime"), "h_0i");
  c.ledger = ledger_from_json(sub(j, "ledger"));
  c.aux = aux_from_json(sub(j, "aux_case"));
  c.delta_result = delta_expr_from_json(sub(j, "delta_result"));
  const auto& dp = sub(j, "d_policy");
  c.d_policy = {get_field<std::string>(dp, "kind"), get_field<Count>(dp, "smallest_d"), get_field<int>(dp, "max_exceptions"),
                get_field<std::string>(dp, "statement")};
  for (const auto& ch : sub(j, "checks")) {
    c.checks.push_back({get_field<std::string>(ch, "name"), get_field<bool>(ch, "passed"), get_field<std::string>(ch, "detail")});
  }
  const auto& emb = sub(j, "embellishments");
  if (!sub(emb, "special_fiber").is_null()) c.special_fiber = special_fiber_from_json(sub(emb, "special_fiber"));
  if (!sub(emb, "polarization").is_null()) c.polarization = polarization_from_json(sub(emb, "polarization"));
  return c;
}

inline std::string serialize_certificate(const ConstructionCertificate& c) { return certificate_to_json(c).dump(2) + "\n"; }

inline ConstructionCertificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

/// Re-runs the construction from the stored inputs.
inline ConstructionCertificate regenerate(const ConstructionCertificate& stored) {
  return theorem_main(stored.p, stored.target.first, stored.target.second, stored.options);
}

}  // namespace hodge_asym
