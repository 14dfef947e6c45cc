#pragma once

#include <json.hpp>

#include "arithmetree/grove.hpp"
#include "arithmetree/hopf.hpp"

namespace atree {

nlohmann::json to_json(const Coordinate& c);
nlohmann::json to_json(const Name& v);  // {"name": literal, "tree": literal, "coords": [...]}
nlohmann::json to_json(const LinComb& x);
nlohmann::json to_json(const TensorComb& x);
nlohmann::json to_json(const Grove& g);

}  // namespace atree
