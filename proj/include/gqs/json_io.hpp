#pragma once

#include "gqs/d21a.hpp"
#include "gqs/equivalence.hpp"
#include "gqs/grading.hpp"
#include "gqs/rootdata.hpp"

#include <json.hpp>

namespace gqs {

nlohmann::json to_json(const RootSystem& sys);
nlohmann::json to_json(const GradedDecomposition& g);
nlohmann::json to_json(const ClassificationEntry& e);
nlohmann::json to_json(const std::vector<ClassificationEntry>& entries);
nlohmann::json to_json(const StructureTable& t);

// Round-trip parsers. Both validate the payload against a freshly built
// object and throw std::runtime_error on any mismatch.
const RootSystem& root_system_from_json(const nlohmann::json& j);
GradedDecomposition grading_from_json(const nlohmann::json& j);

} // namespace gqs
