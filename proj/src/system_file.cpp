#include "confaces/system_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace confaces {

namespace {

using nlohmann::json;

std::vector<std::string> string_row(const json& row, const char* what) {
  if (!row.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : row) {
    if (!e.is_string()) {
      throw ParseError(std::string(what) +
                       " entries must be rational strings like \"1/2\"");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

RatVec rational_row(const json& row, const char* what) {
  RatVec out;
  for (const std::string& s : string_row(row, what)) {
    out.push_back(parse_rational(s));
  }
  return out;
}

}  // namespace

SystemFile parse_system_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("system file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("system file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("system file needs an integer field \"n\"");
  }
  if (!j.contains("matrices") || !j["matrices"].is_array() ||
      j["matrices"].empty()) {
    throw ParseError("system file needs a non-empty \"matrices\" array");
  }

  SystemFile sf;
  sf.system.n = j["n"].get<int>();
  if (sf.system.n < 2) throw ParseError("\"n\" must be at least 2");
  for (const auto& mj : j["matrices"]) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != sf.system.n) {
      throw ParseError("each matrix must have exactly n rows");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& rj : mj) rows.push_back(string_row(rj, "matrix row"));
    sf.system.matrices.push_back(RatMatrix::from_strings(rows));
  }
  if (j.contains("names")) {
    if (!j["names"].is_array() ||
        j["names"].size() != j["matrices"].size()) {
      throw ParseError("\"names\" must list one name per matrix");
    }
    for (const auto& e : j["names"]) {
      if (!e.is_string()) throw ParseError("\"names\" entries must be strings");
      sf.system.labels.push_back(e.get<std::string>());
    }
  }

  if (j.contains("custom_polyhedron")) {
    const json& pj = j["custom_polyhedron"];
    if (!pj.is_object() || !pj.contains("constraints") ||
        !pj.contains("face_reps")) {
      throw ParseError(
          "\"custom_polyhedron\" needs \"constraints\" and \"face_reps\"");
    }
    CustomPolyhedron2D poly;
    for (const auto& cj : pj["constraints"]) {
      if (!cj.is_object() || !cj.contains("a") || !cj.contains("b") ||
          !cj["b"].is_string()) {
        throw ParseError(
            "each constraint needs a vector \"a\" and a rational string \"b\"");
      }
      RatVec a = rational_row(cj["a"], "constraint vector");
      if (a.size() != 2) {
        throw ParseError("constraint vectors must have 2 entries");
      }
      poly.constraints.emplace_back(std::move(a),
                                    parse_rational(cj["b"].get<std::string>()));
    }
    for (const auto& rj : pj["face_reps"]) {
      RatVec rep = rational_row(rj, "face representative");
      if (rep.size() != 2) {
        throw ParseError("face representatives must have 2 entries");
      }
      poly.face_reps.push_back(std::move(rep));
    }
    if (sf.system.n != 2) {
      throw ParseError("custom polyhedron mode requires n = 2");
    }
    sf.polyhedron = std::move(poly);
  }
  return sf;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read system file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_file(buf.str());
}

}  // namespace confaces
