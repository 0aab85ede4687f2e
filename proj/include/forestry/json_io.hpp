#pragma once

// JSON encodings of elements, morphisms and reports. Term lists are always
// emitted sorted by canonical key.

#include "forestry/incidence.hpp"
#include "forestry/oracles.hpp"
#include "forestry/prelie.hpp"

#include <json.hpp>

namespace forestry {

using json = nlohmann::json;

json to_json(const HallElement& f);
json to_json(const TensorElement& t);
json to_json(const PrimitiveElement& x);
json to_json(const Morphism& m);
json to_json(const HomomorphismReport& r);

/// Throws std::invalid_argument on malformed input or keys outside the family.
HallElement hall_from_json(const json& j);
PrimitiveElement primitive_from_json(const json& j);
/// Source and target are parsed as written, so indices follow source order.
/// The result is validated.
Morphism morphism_from_json(const json& j);

/// Preorder serialization of a forest that keeps the stored child order, so
/// re-parsing it reproduces `position` as the vertex numbering.
struct LabeledForest {
  std::string text;
  /// position[v] is the index vertex v gets when `text` is parsed.
  std::vector<int> position;
};
LabeledForest labeled_form(const Forest& f);

}  // namespace forestry
