#include "affschur/serialize.hpp"

#include "affschur/errors.hpp"

namespace affschur {

Json to_json(const Composition& c) { return Json(c.parts); }
Json to_json(const Partition& p) { return Json(p.parts); }
Json to_json(const IndexTuple& i) { return Json(std::vector<int>(i)); }

Json to_json(const Multisegment& s) {
  Json out = Json::array();
  for (const auto& seg : s.segments())
    out.push_back(Json{{"center", seg.center.to_string()}, {"length", seg.length}});
  return out;
}

Json to_json(const std::vector<FieldElem>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

Json to_json(const DominantTuple& q) {
  Json out = Json::array();
  for (const auto& list : q.roots()) out.push_back(to_json(list));
  return out;
}

Json to_json(const UPoly& p) {
  if (p.is_zero()) return Json::array({"0"});
  return Json(p.to_strings());
}

FieldElem field_elem_from_json(const Json& j, const Param& param) {
  if (j.is_string()) return parse_field_elem(j.get<std::string>(), param);
  if (j.is_number_integer()) return FieldElem(j.get<long>());
  throw ParseError("expected a field element string, got " + j.dump());
}

Multisegment multisegment_from_json(const Json& j, const Param& param) {
  if (!j.is_array()) throw ParseError("multisegment must be a JSON array");
  std::vector<Segment> segs;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("center") || !e.contains("length") || e.size() != 2)
      throw ParseError("segment must be {\"center\": ..., \"length\": ...}: " + e.dump());
    if (!e["length"].is_number_integer()) throw ParseError("segment length must be an integer");
    int length = e["length"].get<int>();
    if (length < 1) throw DomainError("segment length must be positive");
    FieldElem center = field_elem_from_json(e["center"], param);
    if (center.is_zero()) throw DomainError("segment center must be nonzero");
    segs.push_back({center, length});
  }
  return Multisegment(std::move(segs));
}

DominantTuple tuple_from_json(const Json& j, const Param& param) {
  if (!j.is_array()) throw ParseError("dominant tuple must be a JSON array of root lists");
  std::vector<std::vector<FieldElem>> roots;
  for (const auto& list : j) {
    if (!list.is_array()) throw ParseError("each polynomial must be a list of roots");
    std::vector<FieldElem> rs;
    for (const auto& x : list) rs.push_back(field_elem_from_json(x, param));
    roots.push_back(std::move(rs));
  }
  return DominantTuple(std::move(roots));
}

std::vector<FieldElem> grid_from_json(const Json& j, const Param& param) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("centers")) throw ParseError("grid object needs a \"centers\" list");
    list = &j["centers"];
  }
  if (!list->is_array()) throw ParseError("grid must be a list of centers");
  std::vector<FieldElem> out;
  for (const auto& x : *list) {
    FieldElem c = field_elem_from_json(x, param);
    if (c.is_zero()) throw DomainError("grid centers must be nonzero");
    out.push_back(c);
  }
  return out;
}

}  // namespace affschur
