// Copyright 2026 The digicov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings.
//
//   image   {"dim": n, "t": t, "points": [[c1,...,cn], ...]}
//   curve   image + "order": [indices into "points"]
//   map     {"source": image | "path", "target": image | "path",
//            "pairs": [[[x...], [y...]], ...]}
//   report  {"predicate", "holds", "surjective", "witness",
//            "per_base": [{"b", "cond1", "cond2", "cond3", "equality38"}]}

#ifndef DIGICOV_IO_HPP
#define DIGICOV_IO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "digicov/catalog.hpp"
#include "digicov/covering.hpp"
#include "digicov/lattice.hpp"
#include "digicov/morphism.hpp"
#include "digicov/witness.hpp"

namespace digicov::io {

using nlohmann::json;

/// Thrown for JSON input that does not describe a valid object.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError("parse error: " + what) {}
};

inline json to_json(const Point& p) { return p.coords; }

inline Point point_from_json(const json& j, std::optional<std::size_t> dim = std::nullopt) {
  if (!j.is_array()) throw ParseError("point must be an array of integers");
  Point p;
  for (const auto& c : j) {
    if (!c.is_number_integer()) throw ParseError("point coordinates must be integers");
    p.coords.push_back(c.get<Coord>());
  }
  if (dim && p.dim() != *dim) {
    throw ParseError("point " + to_string(p) + " does not have dimension " + std::to_string(*dim));
  }
  return p;
}

inline json to_json(const DigitalImage& img) {
  json pts = json::array();
  for (const auto& p : img.points()) pts.push_back(to_json(p));
  return {{"dim", img.dim()}, {"t", img.kind().t()}, {"points", pts}};
}

inline int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

/// Rejects duplicate points and t outside [1, dim].
inline DigitalImage image_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("image must be an object");
  const int dim = int_field(j, "dim");
  const int t = int_field(j, "t");
  if (dim < 1 || t < 1 || t > dim) {
    throw ParseError("need 1 <= t <= dim, got t=" + std::to_string(t) + " dim=" + std::to_string(dim));
  }
  if (!j.contains("points") || !j.at("points").is_array()) throw ParseError("missing \"points\" array");
  std::vector<Point> pts;
  std::set<Point> seen;
  for (const auto& pj : j.at("points")) {
    auto p = point_from_json(pj, static_cast<std::size_t>(dim));
    if (!seen.insert(p).second) throw ParseError("duplicate point " + to_string(p));
    pts.push_back(std::move(p));
  }
  return DigitalImage(t, dim, std::move(pts));
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

inline json to_json(const SimpleClosedCurve& c) {
  json j = to_json(c.image);
  json order = json::array();
  for (const auto& p : c.order) order.push_back(c.image.index_of(p));
  j["order"] = order;
  return j;
}

/// "order" indexes the "points" array as written in the file.
inline SimpleClosedCurve curve_from_json(const json& j) {
  const auto img = image_from_json(j);
  if (!j.contains("order") || !j.at("order").is_array()) throw ParseError("missing \"order\" array");
  const auto& raw = j.at("points");
  std::vector<Point> order;
  for (const auto& ij : j.at("order")) {
    if (!ij.is_number_unsigned() || ij.get<std::size_t>() >= raw.size()) {
      throw ParseError("curve order index out of range");
    }
    order.push_back(point_from_json(raw.at(ij.get<std::size_t>())));
  }
  if (order.size() != img.size()) throw ParseError("curve order must list every point once");
  return validate_scc(std::move(order), img.kind());
}

inline json to_json(const DigitalMap& f) {
  json pairs = json::array();
  for (const auto& [x, y] : f.pairs()) pairs.push_back({to_json(x), to_json(y)});
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"pairs", pairs}};
}

/// Image fields may hold an image object or a path, resolved against base.
inline DigitalMap map_from_json(const json& j, const std::filesystem::path& base = {}) {
  if (!j.is_object()) throw ParseError("map must be an object");
  auto side = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    const auto& v = j.at(key);
    if (v.is_string()) return image_from_json(read_json_file(base / v.get<std::string>()));
    return image_from_json(v);
  };
  auto source = side("source");
  auto target = side("target");
  if (!j.contains("pairs") || !j.at("pairs").is_array()) throw ParseError("missing \"pairs\" array");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& pj : j.at("pairs")) {
    if (!pj.is_array() || pj.size() != 2) throw ParseError("each pair must be [source, target]");
    pairs.emplace_back(point_from_json(pj[0], static_cast<std::size_t>(source.dim())),
                       point_from_json(pj[1], static_cast<std::size_t>(target.dim())));
  }
  try {
    return DigitalMap::from_pairs(std::move(source), std::move(target), pairs);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline DigitalMap load_map(const std::filesystem::path& path) {
  return map_from_json(read_json_file(path), path.parent_path());
}

inline json to_json(const Witness& w) {
  struct Visitor {
    json operator()(const NonContinuousAt& v) const {
      return {{"x", to_json(v.x)}, {"x_prime", to_json(v.x_prime)}};
    }
    json operator()(const NotInjective& v) const {
      return {{"x1", to_json(v.x1)}, {"x2", to_json(v.x2)}};
    }
    json operator()(const NotSurjective& v) const { return {{"y", to_json(v.y)}}; }
    json operator()(const InverseNotContinuousAt& v) const {
      return {{"y", to_json(v.y)}, {"y_prime", to_json(v.y_prime)}};
    }
    json operator()(const LocalFailure& v) const {
      return {{"x", to_json(v.x)}, {"reason", to_string(v.reason)},
              {"first", to_json(v.first)}, {"second", to_json(v.second)}};
    }
    json operator()(const CoveringFailure& v) const {
      return {{"b", to_json(v.b)}, {"clause", v.clause}, {"e", to_json(v.e)},
              {"reason", to_string(v.reason)}, {"first", to_json(v.first)},
              {"second", to_json(v.second)}};
    }
    json operator()(const MissingPreimagePoint& v) const {
      return {{"b", to_json(v.b)}, {"e", to_json(v.e)}};
    }
    json operator()(const OverlappingSheets& v) const {
      return {{"b", to_json(v.b)}, {"e_i", to_json(v.e_i)}, {"e_j", to_json(v.e_j)}};
    }
  };
  json j = std::visit(Visitor{}, w);
  j["type"] = witness_name(w);
  return j;
}

inline Witness witness_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw ParseError("witness needs a \"type\"");
  }
  const auto type = j.at("type").get<std::string>();
  auto pt = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("witness missing \"") + key + "\"");
    return point_from_json(j.at(key));
  };
  auto reason = [&]() {
    if (!j.contains("reason") || !j.at("reason").is_string()) throw ParseError("witness missing \"reason\"");
    auto d = defect_from_string(j.at("reason").get<std::string>());
    if (!d) throw ParseError("unknown witness reason");
    return *d;
  };
  if (type == "NonContinuousAt") return NonContinuousAt{pt("x"), pt("x_prime")};
  if (type == "NotInjective") return NotInjective{pt("x1"), pt("x2")};
  if (type == "NotSurjective") return NotSurjective{pt("y")};
  if (type == "InverseNotContinuousAt") return InverseNotContinuousAt{pt("y"), pt("y_prime")};
  if (type == "LocalFailure") return LocalFailure{pt("x"), reason(), pt("first"), pt("second")};
  if (type == "CoveringFailure") {
    return CoveringFailure{pt("b"), int_field(j, "clause"), pt("e"), reason(), pt("first"), pt("second")};
  }
  if (type == "MissingPreimagePoint") return MissingPreimagePoint{pt("b"), pt("e")};
  if (type == "OverlappingSheets") return OverlappingSheets{pt("b"), pt("e_i"), pt("e_j")};
  throw ParseError("unknown witness type '" + type + "'");
}

inline json to_json(const Verdict& v) {
  return {{"holds", v.holds}, {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

inline json to_json(const BaseReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json j = {{"b", to_json(r.b)},           {"cond1", r.cond1},
            {"cond2", opt(r.cond2)},       {"cond3", opt(r.cond3)},
            {"equality38", r.equality38}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.index_set.empty()) {
    json m = json::array();
    for (const auto& p : r.index_set) m.push_back(to_json(p));
    j["index_set"] = m;
  }
  return j;
}

inline json to_json(const PredicateReport& r) {
  json per_base = json::array();
  for (const auto& b : r.per_base) per_base.push_back(to_json(b));
  return {{"predicate", r.predicate},
          {"holds", r.holds},
          {"surjective", r.surjective},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"per_base", per_base}};
}

inline json to_json(const Classification& c) {
  return {{"continuous", to_json(c.continuous)},
          {"wl_surjection", to_json(c.wl_surjection)},
          {"local_isomorphism", to_json(c.local_isomorphism)},
          {"pseudo_original", to_json(c.pseudo_original)},
          {"pseudo_revised", to_json(c.pseudo_revised)},
          {"covering", to_json(c.covering)}};
}

}  // namespace digicov::io

#endif  // DIGICOV_IO_HPP
