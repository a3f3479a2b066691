#include "clusteraut/serialize.hpp"

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

Json rows_json(const ExchangeMatrix& b, std::size_t from, std::size_t to) {
  Json rows = Json::array();
  for (std::size_t j = from; j < to; ++j) {
    Json row = Json::array();
    for (std::size_t i = 0; i < b.n(); ++i) row.push_back(b(j, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json coeff_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({coeff_json(t.coeff), t.exps}));
  return out;
}

Json to_json(const ExchangeMatrix& b) {
  Json out;
  out["exchangeable"] = rows_json(b, 0, b.n());
  out["frozen"] = rows_json(b, b.n(), b.rows());
  out["labels"] = b.row_labels();
  return out;
}

ExchangeMatrix matrix_from_json(const Json& j) {
  try {
    std::vector<std::vector<Int>> rows = j.at("exchangeable").get<std::vector<std::vector<Int>>>();
    const std::size_t n = rows.size();
    if (j.contains("frozen"))
      for (const auto& r : j.at("frozen").get<std::vector<std::vector<Int>>>()) rows.push_back(r);
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return ExchangeMatrix(IntMatrix::from_rows(rows), n, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed matrix json: ") + e.what());
  }
}

Json to_json(const ExchangeGraph& g) {
  Json out;
  out["rank"] = g.n();
  out["seed_count"] = g.size();
  Json vars = Json::array();
  for (const auto& v : g.variables()) vars.push_back(to_string(v));
  out["variables"] = std::move(vars);
  Json seeds = Json::array();
  for (SeedId s = 0; s < g.size(); ++s) {
    const auto& rec = g.seed(s);
    seeds.push_back({{"id", s}, {"variables", rec.cluster}, {"matrix", to_json(rec.matrix)}});
  }
  out["seeds"] = std::move(seeds);
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  out["edges"] = std::move(edges);
  return out;
}

Json to_json(const ClusterAutomorphism& f) {
  Json out{{"perm", f.perm}, {"direct", f.direct}};
  if (!f.frozen_perm.empty()) out["frozen_perm"] = f.frozen_perm;
  return out;
}

Json to_json(const AutGroup& g) {
  Json gens = Json::array();
  for (const auto& f : g.generators) gens.push_back(to_json(f));
  return {{"order", g.order()}, {"structure", g.structure}, {"direct", g.direct_count}, {"generators", gens}};
}

Json to_json(const TauGroup& t, const RootSystem& rs) {
  Json roots = Json::array();
  for (const auto& r : rs.almost_positive()) roots.push_back(rs.render(r));
  return {{"type", rs.type().to_string()},
          {"rotation_order", t.rotation_order},
          {"order", t.order},
          {"structure", "D" + std::to_string(t.rotation_order)},
          {"roots", roots},
          {"tau_plus", t.tau_plus},
          {"tau_minus", t.tau_minus}};
}

Json to_json(const FoldReport& r) {
  Json out{{"source", r.source.to_string()},
           {"group_order", r.group_order},
           {"folded", to_json(r.folded)},
           {"computed_type", r.computed_type ? Json(r.computed_type->to_string()) : Json()},
           {"listed_type", r.listed_type ? Json(r.listed_type->to_string()) : Json()},
           {"matches_listed", r.matches_listed},
           {"matches_listed_up_to_duality", r.matches_listed_up_to_duality},
           {"projection_commutes_with_tau", r.pi_commutes_with_tau},
           {"projection_onto_roots", r.pi_onto_roots},
           {"invariant_seeds", r.invariant_seed_count},
           {"folded_seeds", r.folded_seed_count},
           {"seed_bijection", r.seed_bijection},
           {"variables_onto", r.variables_onto}};
  if (r.quotient) {
    const auto& q = *r.quotient;
    out["quotient"] = {{"unfolded_order", q.unfolded_order}, {"group_order", q.group_order},
                       {"folded_order", q.folded_order},     {"normal", q.normal},
                       {"order_law", q.order_law},           {"induced_isomorphism", q.induced_isomorphism},
                       {"tau_compatible", q.tau_compatible}};
  }
  return out;
}

}  // namespace clusteraut
