#include "ricci/io.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace ricci {

using nlohmann::json;

const char* tetrad_name(Tetrad t) { return t == Tetrad::Null ? "null" : "orthonormal"; }

namespace {

std::optional<Tetrad> tetrad_from_name(const std::string& s) {
  if (s == "null") return Tetrad::Null;
  if (s == "orthonormal") return Tetrad::Orthonormal;
  return std::nullopt;
}

[[noreturn]] void bad(const std::string& msg) { throw ClassifyError(ErrorKind::BadInput, msg); }

// One component: integer, fraction string, or float. Returns whether the
// value stayed rational.
bool parse_component(const json& j, Rat* r, double* f) {
  if (j.is_number_integer()) {
    *r = Rat(j.get<long long>());
    *f = to_double(*r);
    return true;
  }
  if (j.is_string()) {
    auto v = parse_rational(j.get<std::string>());
    if (!v) bad("cannot parse component string '" + j.get<std::string>() + "'");
    *r = *v;
    *f = to_double(*r);
    return true;
  }
  if (j.is_number_float()) {
    *f = j.get<double>();
    if (!std::isfinite(*f)) bad("non-finite component");
    *r = Rat(0);
    return false;
  }
  bad("component must be an integer, a fraction string, or a number");
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json symbol_json(const RicciTypeSymbol& s) {
  json terms = json::array();
  for (const auto& t : s.terms) {
    json jt;
    jt["pair"] = t.pair;
    jt["multiplicity"] = t.n;
    jt["q"] = t.q;
    if (!t.pair) jt["causal_class"] = causal_class_name(t.cls);
    terms.push_back(jt);
  }
  json out;
  out["left"] = pp_type_name(s.left);
  out["right"] = pp_type_name(s.right);
  out["eigenvalues"] = terms;
  out["v"] = s.v;
  out["display"] = render_symbol(s);
  return out;
}

}  // namespace

TensorDocument parse_tensor_document(const std::string& text,
                                     std::optional<Tetrad> tetrad_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top-level JSON value must be an object");
  TensorDocument doc;
  if (j.contains("tetrad")) {
    if (!j["tetrad"].is_string()) bad("'tetrad' must be a string");
    auto t = tetrad_from_name(j["tetrad"].get<std::string>());
    if (!t) bad("'tetrad' must be \"null\" or \"orthonormal\"");
    doc.tetrad = *t;
  } else if (tetrad_override) {
    doc.tetrad = *tetrad_override;
  } else {
    bad("missing 'tetrad' key and no --tetrad given");
  }
  if (tetrad_override && j.contains("tetrad")) {
    auto t = tetrad_from_name(j["tetrad"].get<std::string>());
    if (t && *t != *tetrad_override)
      bad("--tetrad contradicts the document's 'tetrad' key");
  }
  if (!j.contains("components")) bad("missing 'components' key");
  const json& comp = j["components"];
  if (!comp.is_array() || comp.size() != 4) bad("'components' must be a 4x4 array");
  doc.rational = true;
  for (int i = 0; i < 4; ++i) {
    if (!comp[i].is_array() || comp[i].size() != 4) bad("'components' must be a 4x4 array");
    for (int k = 0; k < 4; ++k)
      doc.rational &= parse_component(comp[i][k], &doc.m_rat[i][k], &doc.m_f[i][k]);
  }
  if (!doc.rational) {
    // Rational entries parsed before the mode was known still need float values.
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        if (doc.m_f[i][k] == 0.0 && doc.m_rat[i][k] != 0) doc.m_f[i][k] = to_double(doc.m_rat[i][k]);
  }
  return doc;
}

std::string report_to_json(const ClassificationReport& rep, int indent) {
  json j;
  j["schema"] = "ricci-classification/1";
  j["mode"] = rep.rational_mode ? "rational" : "float";
  j["input_tetrad"] = tetrad_name(rep.input_tetrad);
  json cp;
  if (rep.rational_mode) {
    cp["c2"] = rep.c2_str;
    cp["c3"] = rep.c3_str;
    cp["c4"] = rep.c4_str;
  } else {
    cp["c2"] = fmt_double(rep.c2);
    cp["c3"] = fmt_double(rep.c3);
    cp["c4"] = fmt_double(rep.c4);
  }
  j["characteristic"] = cp;
  json inv;
  inv["I"] = fmt_double(rep.inv.I);
  inv["J"] = fmt_double(rep.inv.J);
  inv["K"] = fmt_double(rep.inv.K);
  inv["L"] = fmt_double(rep.inv.L);
  inv["N"] = fmt_double(rep.inv.N);
  inv["P"] = fmt_double(rep.inv.P);
  inv["Delta"] = fmt_double(rep.inv.Delta);
  j["invariants"] = inv;
  j["root_pattern"] = pattern_name(rep.pattern);
  json eig = json::array();
  for (const auto& e : rep.eigen.entries) {
    json je;
    je["value"] = e.value_str;
    je["pair"] = e.pair;
    je["algebraic"] = e.alg;
    je["geometric"] = e.geo;
    je["q"] = e.q;
    if (e.has_cls) je["causal_class"] = causal_class_name(e.cls);
    eig.push_back(je);
  }
  j["eigenvalues"] = eig;
  j["v"] = rep.eigen.v;
  j["exact_eigendata"] = rep.eigen.exact;
  j["plebanski"] = {{"left", pp_type_name(rep.pp_left)}, {"right", pp_type_name(rep.pp_right)}};
  j["symbol"] = symbol_json(rep.symbol);
  if (rep.registry_id) {
    const TypeRegistryEntry* e = find_entry(*rep.registry_id);
    j["type"] = {{"id", e->id}, {"code", e->code}, {"family", e->parent}, {"display", e->display}};
  } else {
    j["type"] = nullptr;
  }
  j["warnings"] = rep.warnings;
  return j.dump(indent) + "\n";
}

std::string report_to_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "mode:         " << (rep.rational_mode ? "rational" : "float") << "\n";
  os << "tetrad:       " << tetrad_name(rep.input_tetrad) << "\n";
  if (rep.rational_mode)
    os << "char poly:    x^4 + (" << rep.c2_str << ") x^2 - (" << rep.c3_str << ") x + ("
       << rep.c4_str << ")\n";
  else
    os << "char poly:    x^4 + (" << fmt_double(rep.c2) << ") x^2 - (" << fmt_double(rep.c3)
       << ") x + (" << fmt_double(rep.c4) << ")\n";
  os << "root pattern: " << pattern_name(rep.pattern) << "\n";
  os << "eigenvalues:\n";
  for (const auto& e : rep.eigen.entries) {
    os << "  " << (e.pair ? "pair " : "real ") << e.value_str << "  alg " << e.alg << "  geo "
       << e.geo << "  q " << e.q;
    if (e.has_cls) os << "  class " << causal_class_name(e.cls);
    os << "\n";
  }
  os << "plebanski:    " << pp_type_name(rep.pp_left) << " x " << pp_type_name(rep.pp_right)
     << "\n";
  os << "symbol:       " << render_symbol(rep.symbol) << "\n";
  if (rep.registry_id) {
    const TypeRegistryEntry* e = find_entry(*rep.registry_id);
    os << "type:         #" << e->id << " (" << e->code << ")  " << e->display << "\n";
  } else {
    os << "type:         (no registry entry)\n";
  }
  for (const auto& w : rep.warnings) os << "warning:      " << w << "\n";
  return os.str();
}

std::string registry_to_json(int indent) {
  json out;
  out["schema"] = "ricci-registry/1";
  json entries = json::array();
  for (const auto& e : registry()) {
    json je;
    je["id"] = e.id;
    je["code"] = e.code;
    je["family"] = e.parent;
    RicciTypeSymbol s;
    s.left = e.left;
    s.right = e.right;
    s.terms = e.terms;
    s.v = e.v;
    je["symbol"] = symbol_json(s);
    je["degenerations"] = e.successors;
    je["parameters"] = e.params_doc;
    entries.push_back(je);
  }
  out["types"] = entries;
  return out.dump(indent) + "\n";
}

}  // namespace ricci
