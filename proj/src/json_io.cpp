#include "polypart/json_io.hpp"

#include <sstream>

namespace polypart {

namespace {

json term_list(const std::map<ExponentVector, BigInt>& terms) {
  json arr = json::array();
  for (const auto& [e, c] : terms) arr.push_back({{"exponent", e}, {"coefficient", c.str()}});
  return arr;
}

}  // namespace

void to_json(json& j, const MultiPolynomial& p) { j = {{"nvars", p.nvars()}, {"terms", term_list(p.terms())}}; }

void from_json(const json& j, MultiPolynomial& p) {
  p = MultiPolynomial(j.at("nvars").get<std::size_t>());
  for (const json& t : j.at("terms"))
    p.add_term(t.at("exponent").get<ExponentVector>(), BigInt(t.at("coefficient").get<std::string>()));
}

void to_json(json& j, const TruncatedSeries& s) {
  j = {{"nvars", s.nvars()}, {"order", s.order()}, {"terms", term_list(s.terms())}};
}

void from_json(const json& j, TruncatedSeries& s) {
  s = TruncatedSeries(j.at("nvars").get<std::size_t>(), j.at("order").get<int>());
  for (const json& t : j.at("terms"))
    s.add(t.at("exponent").get<ExponentVector>(), BigInt(t.at("coefficient").get<std::string>()));
}

void to_json(json& j, const RationalGF& g) {
  json terms = json::array();
  for (const SimpleTerm& t : g.terms())
    terms.push_back({{"numerator", term_list(t.numerator.terms())}, {"denominator", t.denominator}});
  j = {{"nvars", g.nvars()}, {"terms", std::move(terms)}};
}

void from_json(const json& j, RationalGF& g) {
  const auto n = j.at("nvars").get<std::size_t>();
  g = RationalGF(n);
  for (const json& t : j.at("terms")) {
    SimpleTerm term{MultiPolynomial(n), t.at("denominator").get<std::vector<ExponentVector>>()};
    for (const json& m : t.at("numerator"))
      term.numerator.add_term(m.at("exponent").get<ExponentVector>(), BigInt(m.at("coefficient").get<std::string>()));
    g.add_term(std::move(term));
  }
}

void to_json(json& j, const GeneratorCone& g) {
  j = {{"rays", g.rays}, {"open", std::vector<bool>(g.open)}, {"apex", g.apex}};
}

void from_json(const json& j, GeneratorCone& g) {
  g = make_generator_cone(j.at("rays").get<std::vector<IntVector>>(), j.at("open").get<std::vector<bool>>());
  if (j.contains("apex")) g.apex = j.at("apex").get<IntVector>();
}

void to_json(json& j, const HalfspaceCone& h) {
  j = {{"rows", h.rows}, {"strict", std::vector<bool>(h.strict)}, {"apex", h.apex}};
}

void from_json(const json& j, HalfspaceCone& h) {
  h = make_halfspace_cone(j.at("rows").get<std::vector<IntVector>>(), j.at("strict").get<std::vector<bool>>());
  if (j.contains("apex")) h.apex = j.at("apex").get<IntVector>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json::object();
  j["id"] = r.id;
  j["params"] = r.params;
  j["method"] = std::string(to_string(r.method));
  j["order"] = r.order ? json(*r.order) : json(nullptr);
  j["points"] = r.points ? json(*r.points) : json(nullptr);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["checked"] = r.checked;
  j["outcome"] = r.passed ? "pass" : "fail";
  j["error"] = r.error ? json(*r.error) : json(nullptr);
  if (r.witness) {
    json w = {{"lhs", to_string(r.witness->lhs)}, {"rhs", to_string(r.witness->rhs)}};
    if (r.witness->exponent) w["exponent"] = *r.witness->exponent;
    if (!r.witness->point.empty()) {
      json pt = json::array();
      for (const BigRat& x : r.witness->point) pt.push_back(to_string(x));
      w["point"] = std::move(pt);
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
}

void to_json(json& j, const ConjectureRow& row) {
  std::string match = "none";
  if (row.matches_j_minus_1 && row.matches_j) match = "both";
  else if (row.matches_j_minus_1) match = "j-1";
  else if (row.matches_j) match = "j";
  j = {{"j", row.j},
       {"normalized_volume", row.volume.str()},
       {"graphs_on_j_minus_1", row.graphs_on_j_minus_1.str()},
       {"graphs_on_j", row.graphs_on_j.str()},
       {"match", match}};
}

std::string to_json_lines(const PointSet& p) {
  std::ostringstream out;
  for (const IntVector& x : p.points) out << json(x).dump() << '\n';
  return out.str();
}

}  // namespace polypart
