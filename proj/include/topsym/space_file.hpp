#pragma once

// JSON space files: {"name", "maximal_simplices", "positive_region"?, "negative_region"?}.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/spaces.hpp"
#include "topsym/split.hpp"

namespace topsym {

struct SpaceFile {
  std::string name;
  std::vector<Simplex> maximal_simplices;
  std::optional<std::vector<Simplex>> positive_region;
  std::optional<std::vector<Simplex>> negative_region;

  SimplicialComplex complex() const { return SimplicialComplex::from_maximal(maximal_simplices); }

  /// Missing regions: the positive one defaults to empty when both are absent, otherwise
  /// the absent one is the closure of the rest of the boundary.
  BoundarySplit to_split() const {
    auto w = complex();
    auto region = [](const std::vector<Simplex>& tops) { return SimplicialComplex::from_maximal(tops); };
    if (positive_region && negative_region) return BoundarySplit(w, region(*positive_region), region(*negative_region));
    if (positive_region) return BoundarySplit::from_positive(w, region(*positive_region));
    if (negative_region) return BoundarySplit::from_negative(w, region(*negative_region));
    return BoundarySplit::all_negative(w);
  }
};

namespace detail {

inline std::vector<Simplex> read_simplices(const nlohmann::json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("space file: '" + field + "' must be an array of vertex lists");
  std::vector<Simplex> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError("space file: entries of '" + field + "' must be arrays");
    Simplex raw;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw InputError("space file: vertices in '" + field + "' must be integers");
      raw.push_back(v.get<Vertex>());
    }
    out.push_back(normalize_simplex(raw));
  }
  return out;
}

inline nlohmann::json simplices_json(const std::vector<Simplex>& simplices) {
  auto arr = nlohmann::json::array();
  for (const auto& s : simplices) arr.push_back(s);
  return arr;
}

}  // namespace detail

/// Parses and validates a space file. Region errors surface here, naming the simplex.
inline SpaceFile parse_space_file(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
  }
  if (!doc.is_object()) throw InputError("space file: top level must be an object");

  SpaceFile f;
  if (!doc.contains("name") || !doc["name"].is_string()) throw InputError("space file: missing string field 'name'");
  f.name = doc["name"].get<std::string>();
  if (!doc.contains("maximal_simplices")) throw InputError("space file: missing field 'maximal_simplices'");
  f.maximal_simplices = detail::read_simplices(doc["maximal_simplices"], "maximal_simplices");
  if (doc.contains("positive_region")) f.positive_region = detail::read_simplices(doc["positive_region"], "positive_region");
  if (doc.contains("negative_region")) f.negative_region = detail::read_simplices(doc["negative_region"], "negative_region");
  if (f.positive_region || f.negative_region) (void)f.to_split();
  return f;
}

/// One field per line, each simplex list on a single line.
inline std::string write_space_file(const SpaceFile& f) {
  std::string out = "{\n";
  out += "  \"name\": " + nlohmann::json(f.name).dump() + ",\n";
  out += "  \"maximal_simplices\": " + detail::simplices_json(f.maximal_simplices).dump();
  if (f.positive_region) out += ",\n  \"positive_region\": " + detail::simplices_json(*f.positive_region).dump();
  if (f.negative_region) out += ",\n  \"negative_region\": " + detail::simplices_json(*f.negative_region).dump();
  return out + "\n}\n";
}

inline SpaceFile space_file_from_split(std::string name, const BoundarySplit& split) {
  return {std::move(name), split.domain().maximal_simplices(), split.positive().maximal_simplices(),
          split.negative().maximal_simplices()};
}

inline SpaceFile space_file_from(std::string name, const CatalogObject& obj) {
  if (const auto* s = std::get_if<BoundarySplit>(&obj)) return space_file_from_split(std::move(name), *s);
  return {std::move(name), std::get<SimplicialComplex>(obj).maximal_simplices(), std::nullopt, std::nullopt};
}

}  // namespace topsym
