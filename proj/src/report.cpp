#include "artin/report.hpp"

#include "artin/errors.hpp"
#include "artin/words.hpp"

namespace artin {

std::string word_string(std::span<const int> word) {
  std::string out;
  for (int g : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g + 1);
  }
  return out;
}

Json hom_json(const CoxeterGroup& w, const WHom& h) {
  Json out = Json::array();
  for (const auto& x : h.images) out.push_back(word_string(w.reduced_word(x)));
  return out;
}

Json info_json(const CoxeterGroup& w, std::uint64_t seed) {
  Json out;
  out["graph"] = w.graph().code();
  out["rank"] = w.rank();
  out["order"] = w.order();
  out["reflections"] = w.reflections().size();
  out["w0"] = word_string(w.reduced_word(w.longest_element()));
  out["w0_length"] = w.length(w.longest_element());
  Json center = Json::array();
  for (const auto& z : w.center_elements()) center.push_back(word_string(w.reduced_word(z)));
  out["center"] = center;
  out["coxeter_number"] = nullptr;
  out["xi"] = nullptr;
  out["delta"] = nullptr;
  out["central_generator"] = nullptr;
  if (w.graph().connected()) {
    out["coxeter_number"] = w.coxeter_number();
    Json xi = Json::array();
    for (int v : w.xi()) xi.push_back(v + 1);
    out["xi"] = xi;
    auto f = fundamental_and_central(w);
    out["delta"] = f.delta.str();
    out["central_generator"] = f.central.str();
  }
  out["conjugacy_classes"] = nullptr;
  if (w.order() <= kMaxClassEnumerationOrder) out["conjugacy_classes"] = ConjugacyClasses(w, seed).size();
  return out;
}

Json existence_json(const CoxeterGroup& w, const ProperExistence& e) {
  Json out;
  out["graph"] = w.graph().code();
  out["exists"] = e.exists;
  out["witness"] = nullptr;
  if (e.witness) {
    Json blocks = Json::array();
    for (int b : e.witness->blocks) blocks.push_back(b);
    out["witness"] = {{"signs", e.witness->value}, {"blocks", blocks}};
  }
  return out;
}

Json classes_json(const CoxeterGroup& w, const HomClassReport& r) {
  Json out;
  out["graph"] = r.graph;
  out["mode"] = to_string(r.mode);
  out["proper_count"] = r.proper_count();
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json row;
    row["name"] = c.name ? Json(*c.name) : Json(nullptr);
    row["images"] = hom_json(w, c.images);
    row["image_order"] = c.image_order;
    row["homs"] = c.homs;
    row["conjugacy_classes"] = c.conjugacy_classes;
    row["proper"] = c.proper;
    row["ordinary"] = c.ordinary;
    classes.push_back(row);
  }
  out["classes"] = classes;
  return out;
}

Json catalog_json(const CoxeterGroup& w, const std::vector<NamedHom>& entries) {
  Json out;
  out["graph"] = w.graph().code();
  Json rows = Json::array();
  for (const auto& e : entries) {
    Json row;
    row["name"] = e.name;
    row["images"] = hom_json(w, e.hom);
    row["valid"] = is_valid(w, e.hom);
    if (row["valid"]) {
      row["ucep"] = is_ucep(w, e.hom);
      row["proper"] = is_proper(w, e.hom);
      row["ordinary"] = is_ordinary(w, e.hom);
      row["image_order"] = image_order(w, e.hom);
    }
    rows.push_back(row);
  }
  out["entries"] = rows;
  return out;
}

Json obstruction_json(const ObstructionResult& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["variables"] = r.variables;
  out["equations"] = r.equations;
  out["rank"] = r.rank;
  out["certificate"] = r.certificate;
  return out;
}

Json theorem31_json(const CoxeterGroup& w, const Theorem31Report& r) {
  Json out;
  out["graph"] = r.graph;
  out["source"] = r.source;
  out["vacuous"] = r.vacuous;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["name"] = row.name ? Json(*row.name) : Json(nullptr);
    j["images"] = hom_json(w, row.hom);
    j["image_order"] = row.image_order;
    j["proper"] = row.proper;
    j["obstruction"] = obstruction_json(row.result);
    rows.push_back(j);
  }
  out["rows"] = rows;
  return out;
}

Json h3_json(const H3SearchResult& r) {
  CoxeterGroup w(CoxeterGraph::parse("H3"));
  Json out;
  out["x1"] = r.x1;
  out["x2"] = r.x2;
  Json x3 = Json::array();
  for (std::size_t k = 0; k < r.x3.size(); ++k)
    x3.push_back({{"name", r.x3_names[k] ? Json(*r.x3_names[k]) : Json(nullptr)},
                  {"images", hom_json(w, r.x3[k])}});
  out["x3"] = x3;
  return out;
}

Json search_json(const SearchReport& r) {
  Json out;
  out["graph"] = r.graph;
  out["seed"] = r.seed;
  Json timings = Json::object();
  for (const auto& [stage, secs] : r.timings) timings[stage] = secs;
  out["timings"] = timings;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["class_size"] = row.class_size;
    j["representative"] = word_string(row.representative_word);
    j["x"] = row.x;
    j["d"] = row.d;
    j["y"] = row.y;
    j["z"] = row.z;
    j["z_tilde"] = row.z_tilde;
    j["u"] = row.u ? Json(*row.u) : Json(nullptr);
    j["v"] = row.v ? Json(*row.v) : Json(nullptr);
    rows.push_back(j);
  }
  out["rows"] = rows;
  out["v2"] = r.v2 ? Json(*r.v2) : Json(nullptr);
  out["v2_prime"] = r.v2_prime ? Json(*r.v2_prime) : Json(nullptr);
  out["v2_equals_v2_prime"] = r.v2_equals_v2_prime ? Json(*r.v2_equals_v2_prime) : Json(nullptr);
  return out;
}

Json bn_json(const BnVerification& r) {
  CoxeterGroup w(CoxeterGraph::parse(r.report.graph));
  Json out = classes_json(w, r.report);
  out["proper_match"] = r.proper_match;
  out["catalog_unique"] = r.catalog_unique;
  return out;
}

Json without_timings(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "timings") out[it.key()] = without_timings(it.value());
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(without_timings(v));
    return out;
  }
  return j;
}

}  // namespace artin
