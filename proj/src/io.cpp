// Copyright 2026 The plc Authors.
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

#include "plc/io.hpp"

#include <fstream>
#include <sstream>

#include "plc/error.hpp"
#include "plc/library.hpp"

namespace plc {
namespace {

Json PointList(Mask s) { return Json(ToList(s)); }

// Reads an array of point labels; labels are range checked by the callers'
// constructors, only the JSON shape is checked here.
Mask ReadPoints(const Json& j, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorCode::kParseError, field + ": expected array");
  Mask out = 0;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::kParseError, field + ": expected integer label");
    }
    int p = v.get<int>();
    if (p < 1 || p > kMaxPoints) {
      throw Error(ErrorCode::kLabelOutOfRange,
                  field + ": label " + std::to_string(p));
    }
    if ((out & Bit(p)) != 0) {
      throw Error(ErrorCode::kParseError,
                  field + ": repeated label " + std::to_string(p));
    }
    out |= Bit(p);
  }
  return out;
}

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int ReadD(const Json& j) {
  const Json& d = Field(j, "d");
  if (!d.is_number_integer()) throw Error(ErrorCode::kParseError, "d: expected integer");
  return d.get<int>();
}

// Single-digit labels are written without separators.
std::string Digits(Mask s) {
  bool compact = (s & ~FullMask(9)) == 0;
  std::string out;
  ForEach(s, [&](int p) {
    if (!compact && !out.empty()) out += ',';
    out += std::to_string(p);
  });
  return out;
}

}  // namespace

Json ToJson(const Configuration& c) {
  Json lines = Json::array();
  for (Mask l : c.lines()) lines.push_back(PointList(l));
  return Json{{"d", c.d()}, {"lines", lines}};
}

Json ToJson(const Matroid& m) {
  Json classes = Json::array();
  for (Mask c : m.classes()) classes.push_back(PointList(c));
  Json lines = Json::array();
  for (Mask l : m.lines()) {
    Json row = Json::array();
    for (size_t i = 0; i < m.classes().size(); ++i) {
      if (Contains(l, Bit(Lowest(m.classes()[i])))) row.push_back(i);
    }
    lines.push_back(row);
  }
  return Json{{"d", m.d()},
              {"loops", PointList(m.loops())},
              {"classes", classes},
              {"lines_over_classes", lines},
              {"rank", m.rank()}};
}

Json ToJson(const XSystem& s) {
  Json x = Json::array();
  for (Mask m : s.x()) x.push_back(PointList(m));
  return Json{{"d", s.d()}, {"X", x}};
}

XSystem XSystemFromJson(const Json& j) {
  int d = ReadD(j);
  const Json& xj = Field(j, "X");
  if (!xj.is_array()) throw Error(ErrorCode::kParseError, "X: expected array");
  std::vector<Mask> x;
  for (const Json& m : xj) x.push_back(ReadPoints(m, "X"));
  return XSystem::Create(d, x);
}

Configuration ConfigurationFromJson(const Json& j) {
  int d = ReadD(j);
  const Json& lines = Field(j, "lines");
  if (!lines.is_array()) throw Error(ErrorCode::kParseError, "lines: expected array");
  std::vector<Mask> masks;
  for (const Json& l : lines) masks.push_back(ReadPoints(l, "lines"));
  return Configuration::FromMasks(d, masks);
}

Matroid MatroidFromJson(const Json& j) {
  int d = ReadD(j);
  Mask loops = ReadPoints(Field(j, "loops"), "loops");
  const Json& cj = Field(j, "classes");
  if (!cj.is_array()) throw Error(ErrorCode::kParseError, "classes: expected array");
  std::vector<Mask> classes;
  for (const Json& c : cj) classes.push_back(ReadPoints(c, "classes"));
  const Json& lj = Field(j, "lines_over_classes");
  if (!lj.is_array()) {
    throw Error(ErrorCode::kParseError, "lines_over_classes: expected array");
  }
  std::vector<Mask> lines;
  for (const Json& l : lj) {
    if (!l.is_array()) {
      throw Error(ErrorCode::kParseError, "lines_over_classes: expected array");
    }
    Mask pts = 0;
    for (const Json& v : l) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<size_t>() >= classes.size()) {
        throw Error(ErrorCode::kParseError, "lines_over_classes: bad class index");
      }
      pts |= classes[v.get<size_t>()];
    }
    lines.push_back(pts);
  }
  Matroid m = Matroid::Create(d, loops, classes, lines);
  if (j.contains("rank")) {
    if (!j.at("rank").is_number_integer() || j.at("rank").get<int>() != m.rank()) {
      throw Error(ErrorCode::kParseError, "rank does not match the structure");
    }
  }
  return m;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, source + ": " + e.what());
  }
}

Configuration ParseConfig(const std::string& name_or_path) {
  if (auto named = FindNamed(name_or_path)) return *named;
  if (!std::ifstream(name_or_path)) {
    throw Error(ErrorCode::kInvalidArgument,
                "neither a library name nor a readable file: " + name_or_path);
  }
  return ConfigurationFromJson(
      ParseJsonText(ReadFile(name_or_path), name_or_path));
}

std::string Describe(const Matroid& m) {
  std::string out = "d=" + std::to_string(m.d());
  if (m.loops() != 0) out += " loops{" + Digits(m.loops()) + "}";
  std::string classes;
  for (Mask c : m.classes()) {
    if (Size(c) < 2) continue;
    if (!classes.empty()) classes += ' ';
    classes += Digits(c);
  }
  if (!classes.empty()) out += " classes{" + classes + "}";
  std::string lines;
  for (Mask l : m.LinePointSets()) {
    if (!lines.empty()) lines += ' ';
    lines += Digits(l);
  }
  if (!lines.empty()) out += " lines{" + lines + "}";
  out += " rank=" + std::to_string(m.rank());
  return out;
}

}  // namespace plc
