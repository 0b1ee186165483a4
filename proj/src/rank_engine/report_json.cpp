#include "noethera/report_json.hpp"

namespace noethera {

using nlohmann::json;

json to_json(const RankValue& v) {
  switch (v.kind) {
    case RankValue::Kind::Exact: return v.lo;
    case RankValue::Kind::Interval: return json{{"lo", v.lo}, {"hi", v.hi}};
    case RankValue::Kind::AtLeast: return json{{"at_least", v.lo}};
    case RankValue::Kind::Infinite: return "infinite";
  }
  return nullptr;
}

json to_json(const BoundsReport& b) {
  json j{{"statement", "lrk <= rk <= lrk + 1"}, {"holds", b.holds}};
  j["slack"] = b.slack ? json(*b.slack) : json(nullptr);
  return j;
}

namespace {

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

}  // namespace

json to_json(const RankReport& r) {
  json j;
  j["object"] = r.object;
  j["rk"] = to_json(r.rk);
  j["lrk"] = to_json(r.lrk);
  j["of_local_rank"] = optional_bool(r.of_local_rank);
  json w{{"rk", nullptr}, {"lrk", nullptr}};
  if (r.rk_witness)
    w["rk"] = {{"ideal", r.rk_witness->ideal}, {"generators", r.rk_witness->generators}, {"mu", r.rk_witness->mu}};
  if (r.lrk_witness)
    w["lrk"] = {{"maximal_ideal", r.lrk_witness->maximal_ideal},
                {"ideal", r.lrk_witness->ideal},
                {"local_mu", r.lrk_witness->local_mu}};
  j["witnesses"] = w;
  j["bounds"] = to_json(sandwich(r.rk, r.lrk));
  j["dimension"] = to_string(r.dimension);
  j["finite_rank"] = r.finite_rank;
  j["partial"] = r.partial;
  j["lattice_size"] = r.lattice_size ? json(*r.lattice_size) : json(nullptr);
  j["notes"] = r.notes;
  j["components"] = json::array();
  for (const auto& c : r.components) j["components"].push_back(to_json(c));
  return j;
}

json to_json(const Classification& c) {
  auto verdict = [](bool of_local_rank) { return of_local_rank ? "of-local-rank" : "not-of-local-rank"; };
  json j;
  j["object"] = c.object;
  j["verdict"] = verdict(c.of_local_rank);
  j["of_local_rank"] = c.of_local_rank;
  j["structural_verdict"] = verdict(c.structural_of_local_rank);
  j["numeric_verdict"] = c.numeric_of_local_rank ? json(verdict(*c.numeric_of_local_rank)) : json("undetermined");
  j["components"] = json::array();
  for (const auto& comp : c.components) {
    json e{{"description", comp.description}, {"tag", to_string(comp.tag)}};
    e["reason"] = comp.reason ? json(*comp.reason) : json(nullptr);
    j["components"].push_back(e);
  }
  j["reasons"] = c.reasons;
  j["rk"] = to_json(c.rk);
  j["lrk"] = to_json(c.lrk);
  j["bounds"] = to_json(sandwich(c.rk, c.lrk));
  j["dimension"] = to_string(c.dimension);
  j["finite_rank"] = c.dimension != Dimension::AtLeastTwo;
  return j;
}

json to_json(const PolynomialReport& p) {
  json j;
  j["base"] = p.base;
  j["base_size"] = p.base_size;
  j["nilradical_size"] = p.nilradical_size;
  j["reduced_size"] = p.reduced_size;
  j["reduced_is_product_of_fields"] = p.reduced_is_product_of_fields;
  j["field_factors"] = json::array();
  for (const auto& f : p.field_factors)
    j["field_factors"].push_back({{"field_size", f.field_size},
                                  {"samples", f.samples},
                                  {"all_principal", f.all_principal},
                                  {"example", f.example}});
  j["length"] = p.length;
  j["length_bound"] = "rk A[t] <= length(A)";
  j["rk"] = to_json(p.rk);
  j["lrk"] = to_json(p.lrk);
  j["classification"] = to_json(p.classification);
  return j;
}

json to_json(const FiniteRing& ring, const IdealSet& ideal) {
  std::vector<std::string> gens;
  for (Elem g : greedy_generators(ring, ideal)) gens.push_back(ring.label(g));
  return {{"size", ideal.size()}, {"hex", ideal.members().to_hex()}, {"generators", gens}};
}

json to_json(const HilbertFunction& h) {
  json j{{"values", h.values}, {"residue_field_size", h.residue_field_size}};
  j["first_zero"] = h.first_zero ? json(*h.first_zero) : json(nullptr);
  if (h.stabilized)
    j["stabilized"] = {{"start", h.stabilized->start},
                       {"end", h.stabilized->end},
                       {"value", h.stabilized->value},
                       {"note", "trailing constant window before truncation; not a multiplicity"}};
  else
    j["stabilized"] = nullptr;
  return j;
}

json decomposition_json(const FiniteRing& ring, const LocalDecomposition& d) {
  json j;
  j["size"] = ring.size();
  j["idempotents"] = json::array();
  j["factors"] = json::array();
  for (const auto& f : d.factors) {
    j["idempotents"].push_back({{"index", f.idempotent}, {"label", ring.label(f.idempotent)}});
    j["factors"].push_back({{"presentation", f.ring.presentation().text()},
                            {"size", f.ring.size()},
                            {"residue_field_size", f.residue_field_size}});
  }
  return j;
}

}  // namespace noethera
