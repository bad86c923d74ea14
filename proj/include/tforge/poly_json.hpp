#ifndef TFORGE_POLY_JSON_HPP
#define TFORGE_POLY_JSON_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "tforge/finite_field.hpp"
#include "tforge/multipoly.hpp"

namespace tforge {

// Insertion-ordered JSON keeps report output byte-identical across runs.
using Json = nlohmann::ordered_json;

inline Json coef_to_json(const ZZ& dom, const Int& c) { return dom.str(c); }
inline Json coef_to_json(const QQ& dom, const Rat& c) { return dom.str(c); }
inline Json coef_to_json(const GFp& dom, const std::uint64_t& c) { return dom.str(c); }

// Extension-field coefficients as coordinate vectors over F_p.
inline Json coef_to_json(const GFq&, const FqField::Coord& c) {
  Json a = Json::array();
  for (auto v : c) a.push_back(std::to_string(v));
  return a;
}

inline Int parse_int_string(const std::string& s) { return Int(s); }

inline void coef_from_json(const ZZ&, const Json& j, Int& out) {
  out = parse_int_string(j.get<std::string>());
}
inline void coef_from_json(const QQ&, const Json& j, Rat& out) {
  out = Rat(j.get<std::string>());
  out.canonicalize();
}
inline void coef_from_json(const GFp& dom, const Json& j, std::uint64_t& out) {
  out = mod_u64(Int(j.get<std::string>()), dom.p());
}
inline void coef_from_json(const GFq& dom, const Json& j, FqField::Coord& out) {
  FqField::Coord c;
  for (const auto& v : j) c.push_back(mod_u64(Int(v.get<std::string>()), dom.F->p()));
  out = dom.F->from_coords(std::move(c));
}

template <class D>
Json poly_to_json(const MultiPoly<D>& p, const std::vector<std::string>& vars) {
  Json j;
  Json jvars = Json::array();
  for (int v = 0; v < p.nvars(); ++v) jvars.push_back(vars[static_cast<std::size_t>(v)]);
  j["vars"] = std::move(jvars);
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json jt;
    Json exps = Json::array();
    for (int v = 0; v < p.nvars(); ++v) exps.push_back(t.mono.exponent(v));
    jt["exp"] = std::move(exps);
    jt["coef"] = coef_to_json(p.domain(), t.coef);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

template <class D>
MultiPoly<D> poly_from_json(const Json& j, const D& dom) {
  const auto& vars = j.at("vars");
  int nvars = static_cast<int>(vars.size());
  std::vector<typename MultiPoly<D>::Term> ts;
  for (const auto& jt : j.at("terms")) {
    Monomial m;
    const auto& exps = jt.at("exp");
    if (static_cast<int>(exps.size()) != nvars) throw Error("term exponent length mismatch");
    for (int v = 0; v < nvars; ++v) m.set_exponent(v, exps[static_cast<std::size_t>(v)].get<unsigned>());
    typename D::Elem c = dom.zero();
    coef_from_json(dom, jt.at("coef"), c);
    ts.push_back({m, std::move(c)});
  }
  return MultiPoly<D>::from_terms(dom, nvars, ts);
}

}  // namespace tforge

#endif
