#include "patterngf/export.hpp"

namespace patterngf {

using nlohmann::json;

json to_json(const TruncatedSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

json to_json(const BivariateSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) {
    json terms = json::object();
    for (const auto& [e, v] : c.terms()) terms[std::to_string(e)] = v.get_str();
    out.push_back(std::move(terms));
  }
  return out;
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

json to_json(const Census& c) {
  json out;
  out["n"] = c.n;
  json avoid = json::array();
  for (const auto& p : c.avoid) avoid.push_back(p.to_string());
  out["avoid"] = std::move(avoid);
  out["count"] = c.count ? json(c.count->to_string()) : json(nullptr);
  json hist = json::array();
  for (const auto& [r, v] : c.histogram) hist.push_back({{"occurrences", r.get_str()}, {"count", v.get_str()}});
  out["histogram"] = std::move(hist);
  out["total"] = c.total().get_str();
  return out;
}

std::string json_document(const std::string& kind, json payload) {
  json doc;
  doc["schema"] = kJsonSchema;
  doc["kind"] = kind;
  doc["data"] = std::move(payload);
  return doc.dump(2);
}

}  // namespace patterngf
