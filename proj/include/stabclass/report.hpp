#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stabclass/bordism.hpp"
#include "stabclass/classification.hpp"
#include "stabclass/hypothesis.hpp"
#include "stabclass/manifold.hpp"
#include "stabclass/spectral.hpp"

namespace stabclass {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json to_json(const AbelianGroup& a);
Json to_json(const HypothesisReport& r);
Json to_json(const E2Page& page);
Json to_json(const DiagonalReport& d);
Json to_json(const ClassificationTable& t);
Json to_json(const InvariantVector& v);
Json to_json(const Comparison& c);
Json to_json(const CoefficientTable& t);

/// One row of a catalog scan.
struct CatalogRow {
  std::string group;
  std::size_t order = 0;
  HypothesisReport hypothesis;
  std::vector<std::size_t> smooth_counts, top_counts;  // empty unless applicable
};
Json to_json(const CatalogRow& r);

std::string render_text(const AbelianGroup& a);
std::string render_text(const HypothesisReport& r);
std::string render_text(const E2Page& page);
std::string render_text(const DiagonalReport& d);
std::string render_text(const std::vector<ClassificationTable>& tables);
std::string render_text(const Comparison& c);
std::string render_text(const CoefficientTable& t);
std::string render_text(const std::vector<CatalogRow>& rows);

}  // namespace stabclass
