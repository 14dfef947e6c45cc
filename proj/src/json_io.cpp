#include "arithmetree/json_io.hpp"

#include <algorithm>

namespace atree {

using nlohmann::json;

json to_json(const Coordinate& c) {
  switch (c.kind) {
    case Coordinate::Kind::Open:
      return {{"kind", "open"}, {"pos", c.pos}};
    case Coordinate::Kind::Bare:
      return {{"kind", "bare"}, {"pos", c.pos}};
    case Coordinate::Kind::Close:
      return {{"kind", "close"}, {"exps", c.exps}};
  }
  return {};
}

json to_json(const Name& v) {
  json coords = json::array();
  for (const auto& c : v.coords()) coords.push_back(to_json(c));
  return {{"name", v.str()}, {"tree", decode_name(v).str()}, {"coords", coords}};
}

json to_json(const LinComb& x) {
  json out = json::array();
  for (const auto& [v, c] : x.terms())
    out.push_back({{"coefficient", rational_str(c)}, {"name", v.str()}, {"tree", decode_name(v).str()}});
  return out;
}

json to_json(const TensorComb& x) {
  json out = json::array();
  for (const auto& [ab, c] : x.terms())
    out.push_back({{"coefficient", rational_str(c)},
                   {"left", decode_name(ab.first).str()},
                   {"right", decode_name(ab.second).str()}});
  return out;
}

json to_json(const Grove& g) {
  json members = json::array();
  std::vector<std::string> lits;
  for (const auto& v : g.members()) lits.push_back(v.str());
  std::sort(lits.begin(), lits.end());
  for (auto& s : lits) members.push_back(s);
  return {{"degree", g.degree()}, {"members", members}};
}

}  // namespace atree
