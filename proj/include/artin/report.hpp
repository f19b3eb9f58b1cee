#pragma once

#include <json.hpp>

#include "artin/hom.hpp"
#include "artin/pipelines.hpp"
#include "artin/urep.hpp"

namespace artin {

using Json = nlohmann::json;

/// Words are printed 1-based, "1 2 1"; the identity is "".
std::string word_string(std::span<const int> word);
Json hom_json(const CoxeterGroup& w, const WHom& h);

Json info_json(const CoxeterGroup& w, std::uint64_t seed);
Json existence_json(const CoxeterGroup& w, const ProperExistence& e);
Json classes_json(const CoxeterGroup& w, const HomClassReport& r);
Json catalog_json(const CoxeterGroup& w, const std::vector<NamedHom>& entries);
Json obstruction_json(const ObstructionResult& r);
Json theorem31_json(const CoxeterGroup& w, const Theorem31Report& r);
Json h3_json(const H3SearchResult& r);
Json search_json(const SearchReport& r);
Json bn_json(const BnVerification& r);

/// Copy of j with every "timings" member removed.
Json without_timings(const Json& j);

}  // namespace artin
