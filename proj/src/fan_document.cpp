#include "torikit/fan_document.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "torikit/error.hpp"

namespace torikit {

namespace {

using json = nlohmann::json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Integer read_integer(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  throw ParseError("field '" + field + "': expected an integer");
}

std::size_t read_index(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ParseError("field '" + field + "': expected a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw ValidationError("field '" + field + "': negative index " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

const json& require_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError("field '" + field + "': expected an array");
  return v;
}

std::string integer_text(const Integer& x) { return x.get_str(); }

}  // namespace

FanDocument parse_fan(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed fan document at " + location(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError("fan document must be an object");
  for (const auto& [key, value] : root.items())
    if (key != "rank" && key != "rays" && key != "cones" && key != "name")
      throw ParseError("unknown field '" + key + "'");
  for (const char* key : {"rank", "rays", "cones"})
    if (!root.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

  FanDocument doc;
  const json& rank = root["rank"];
  if (!rank.is_number_integer() || (!rank.is_number_unsigned() && rank.get<std::int64_t>() < 0))
    throw ParseError("field 'rank': expected a non-negative integer");
  doc.rank = rank.get<std::size_t>();
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ParseError("field 'name': expected a string");
    doc.name = root["name"].get<std::string>();
  }

  const json& rays = require_array(root["rays"], "rays");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string field = "rays[" + std::to_string(i) + "]";
    const json& r = require_array(rays[i], field);
    if (r.size() != doc.rank)
      throw ValidationError(field + ": length " + std::to_string(r.size()) + " differs from rank " +
                            std::to_string(doc.rank));
    IntVector v(doc.rank);
    for (std::size_t j = 0; j < r.size(); ++j)
      v[j] = read_integer(r[j], field + "[" + std::to_string(j) + "]");
    if (std::find(doc.rays.begin(), doc.rays.end(), v) != doc.rays.end())
      throw ValidationError(field + ": duplicate ray " + v.to_string());
    doc.rays.push_back(std::move(v));
  }

  const json& cones = require_array(root["cones"], "cones");
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const std::string field = "cones[" + std::to_string(i) + "]";
    const json& c = require_array(cones[i], field);
    std::vector<std::size_t> indices;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const std::string f = field + "[" + std::to_string(j) + "]";
      const std::size_t idx = read_index(c[j], f);
      if (idx >= doc.rays.size())
        throw ValidationError(f + ": ray index " + std::to_string(idx) + " out of range (" +
                              std::to_string(doc.rays.size()) + " rays)");
      indices.push_back(idx);
    }
    doc.cones.push_back(std::move(indices));
  }
  return doc;
}

std::string serialize_fan(const FanDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  if (doc.name) os << "  \"name\": " << json(*doc.name).dump() << ",\n";
  os << "  \"rank\": " << doc.rank << ",\n";
  os << "  \"rays\": [";
  for (std::size_t i = 0; i < doc.rays.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < doc.rays[i].rank(); ++j) os << (j ? "," : "") << integer_text(doc.rays[i][j]);
    os << ']';
  }
  os << "],\n";
  os << "  \"cones\": [";
  for (std::size_t i = 0; i < doc.cones.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < doc.cones[i].size(); ++j) os << (j ? "," : "") << doc.cones[i][j];
    os << ']';
  }
  os << "]\n}\n";
  return os.str();
}

Fan build_fan(const FanDocument& doc) {
  std::vector<std::vector<IntVector>> cones;
  for (const auto& idx : doc.cones) {
    std::vector<IntVector> gens;
    for (std::size_t i : idx) {
      if (i >= doc.rays.size()) throw ValidationError("ray index " + std::to_string(i) + " out of range");
      gens.push_back(doc.rays[i]);
    }
    cones.push_back(std::move(gens));
  }
  return validate(doc.rank, cones);
}

FanDocument document_from_fan(const Fan& f, std::optional<std::string> name) {
  FanDocument doc;
  doc.rank = f.ambient_rank();
  doc.name = std::move(name);
  for (const auto& r : f.rays()) doc.rays.push_back(r.generator());
  for (const auto& c : f.maximal_cones()) {
    if (c.is_zero() && f.cones().size() > 1) continue;
    doc.cones.push_back(f.ray_indices(c));
  }
  return doc;
}

}  // namespace torikit
