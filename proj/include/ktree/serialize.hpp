#pragma once

#include <string>

#include "json.hpp"
#include "ktree/quiver.hpp"

namespace ktree {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q, const DimVector& dims);
Json representation_to_json(const Representation& x);

// Readers reject unknown or missing fields with a SchemaError naming the path.
QuiverWithDims quiver_from_json(const nlohmann::json& j, const std::string& path = "$");
Representation representation_from_json(const nlohmann::json& j, const std::string& path = "$");

// Canonical text: two-space indentation, trailing newline.
std::string serialize(const Quiver& q, const DimVector& dims);
std::string serialize(const Representation& x);
QuiverWithDims deserialize_quiver(const std::string& text);
Representation deserialize_representation(const std::string& text);

// Graphviz. Vertex label "id:dim", arrow label = colour when present.
std::string to_dot(const Quiver& q, const DimVector& dims);
// Coefficient quiver: node label "vertex/basis", edge label = arrow id.
std::string to_dot(const CoefficientQuiver& g);
// TikZ picture with sources in the left column and sinks in the right.
std::string to_tikz(const Quiver& q, const DimVector& dims);

}  // namespace ktree
