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

#include "plc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "plc/error.hpp"
#include "plc/library.hpp"
#include "plc/oracle.hpp"
#include "plc/symmetry.hpp"
#include "plc/xmatroid.hpp"

namespace plc {
namespace {

std::string SetString(Mask s) {
  std::string out = "{";
  ForEach(s, [&](int p) {
    if (out.size() > 1) out += ',';
    out += std::to_string(p);
  });
  return out + "}";
}

std::string KindName(MinimalKind k) { return std::string(1, KindLetter(k)); }

// Members in canonical-form order, ties broken by the labeled matroid.
std::vector<MinimalMember> SortedMembers(std::vector<MinimalMember> members) {
  std::vector<std::tuple<Matroid, Matroid, size_t>> keys;
  for (size_t i = 0; i < members.size(); ++i) {
    keys.emplace_back(CanonicalForm(members[i].matroid), members[i].matroid, i);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<MinimalMember> out;
  for (const auto& k : keys) out.push_back(members[std::get<2>(k)]);
  return out;
}

Json ToJson(const MinimalMember& m) {
  return Json{{"kind", KindName(m.kind)},
              {"witness", m.witness},
              {"matroid", ToJson(m.matroid)}};
}

Json ToJson(const VarietyNode& n) {
  Json j{{"kind", n.kind == VarietyKind::kCircuit ? "circuit" : "matroid"},
         {"matroid", ToJson(n.matroid)},
         {"describe", Describe(n.matroid)}};
  if (!n.component.empty()) j["component"] = n.component;
  j["nilpotent"] = TriName(n.nilpotent);
  j["solvable"] = TriName(n.solvable);
  j["irreducible"] = TriName(n.irreducible);
  j["realizable"] = TriName(n.realizable);
  return j;
}

Json MatroidList(const std::vector<Matroid>& ms) {
  Json out = Json::array();
  for (const Matroid& m : ms) out.push_back(ToJson(m));
  return out;
}

std::string NodeName(const VarietyNode& n) {
  std::string out = n.kind == VarietyKind::kCircuit ? "V_C[" : "V[";
  out += Describe(n.matroid) + "]";
  if (!n.component.empty()) out += " component " + n.component;
  return out;
}

void WriteJson(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  f << j.dump(2) << "\n";
}

struct Options {
  std::string config;
  std::string file;
  std::string json;
  std::string facts = "default";
  std::string set = "all";
  std::string order = "sweep";
  int depth = kDefaultDecompositionDepth;
  bool allow_seven = false;
};

Configuration LoadConfig(const Options& o) {
  if (!o.file.empty() && !o.config.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give a configuration name or --file, not both");
  }
  if (!o.file.empty()) {
    return ConfigurationFromJson(ParseJsonText(ReadFile(o.file), o.file));
  }
  if (o.config.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no configuration given");
  }
  return ParseConfig(o.config);
}

std::string ConfigLabel(const Options& o) {
  return o.file.empty() ? o.config : o.file;
}

XSystem LoadXSystem(const Options& o) {
  if (o.file.empty()) throw Error(ErrorCode::kInvalidArgument, "--file is required");
  return XSystemFromJson(ParseJsonText(ReadFile(o.file), o.file));
}

// "all", "none", or a comma-separated list of points.
std::vector<Mask> ParseSets(const std::string& text, int d) {
  std::vector<Mask> out;
  if (text == "all") {
    for (Mask s = 0; s <= FullMask(d); ++s) out.push_back(s);
    return out;
  }
  if (text == "none") return {0};
  Mask s = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int p = 0;
    try {
      size_t used = 0;
      p = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "--set: bad point \"" + item + "\"");
    }
    if (p < 1 || p > d) {
      throw Error(ErrorCode::kLabelOutOfRange, "--set: point " + std::to_string(p));
    }
    s |= Bit(p);
  }
  return {s};
}

int ReportTable(const char* name, const XSystem& sys, const SetFunction& table,
                const Options& o, std::ostream& out) {
  std::vector<Mask> sets = ParseSets(o.set, sys.d());
  out << name << ": d=" << sys.d() << ", " << sys.x().size() << " members in X\n";
  if (o.set == "all") {
    out << DumpTable(table);
  } else {
    for (Mask s : sets) out << name << SetString(s) << " = " << table[s] << "\n";
  }
  Json rows = Json::array();
  for (Mask s : sets) rows.push_back(Json{{"set", ToList(s)}, {"value", table[s]}});
  WriteJson(o.json, Json{{"system", ToJson(sys)}, {"function", name}, {"values", rows}});
  return kExitOk;
}

int RunLibrary(const Options& o, std::ostream& out) {
  Json j = Json::array();
  for (const NamedConfiguration& n : Library()) {
    out << n.name << "  d=" << n.configuration.d() << "  lines="
        << n.configuration.lines().size() << "  " << n.notes << "\n";
    j.push_back(Json{{"name", n.name},
                     {"notes", n.notes},
                     {"configuration", ToJson(n.configuration)}});
  }
  WriteJson(o.json, j);
  return kExitOk;
}

void PrintMembers(const std::string& title, const Configuration& c,
                  const std::vector<MinimalMember>& members, std::ostream& out,
                  Json* json) {
  std::vector<MinimalMember> sorted = SortedMembers(members);
  std::vector<Matroid> ms;
  std::map<Matroid, MinimalKind> kinds;
  for (const MinimalMember& m : sorted) {
    ms.push_back(m.matroid);
    kinds[m.matroid] = m.kind;
  }
  std::vector<OrbitClass> orbits = OrbitClassify(Automorphisms(c), ms);
  out << title << ": " << sorted.size() << " minimal matroids in " << orbits.size()
      << " orbit classes\n";
  Json oj = Json::array();
  for (size_t i = 0; i < orbits.size(); ++i) {
    const OrbitClass& oc = orbits[i];
    out << "  orbit " << i + 1 << "  size " << oc.size << "  kind "
        << KindLetter(kinds[oc.representative]) << "  "
        << Describe(oc.representative) << "\n";
    oj.push_back(Json{{"size", oc.size},
                      {"kind", KindName(kinds[oc.representative])},
                      {"representative", ToJson(oc.representative)}});
  }
  out << "members:\n";
  Json mj = Json::array();
  for (const MinimalMember& m : sorted) {
    out << "  " << KindLetter(m.kind) << "  " << Describe(m.matroid) << "  via "
        << m.witness << "\n";
    mj.push_back(ToJson(m));
  }
  *json = Json{{"ambient", ToJson(c)},
               {"count", sorted.size()},
               {"orbits", oj},
               {"members", mj}};
}

int RunMin(const std::string& verb, const Options& o, std::ostream& out) {
  Configuration c = LoadConfig(o);
  std::vector<MinimalMember> members;
  if (verb == "min") {
    members = MinMatroids(c).members;
  } else if (verb == "min-a") {
    members = MinAWithWitness(c);
  } else {
    members = MinBWithWitness(c);
  }
  Json j;
  PrintMembers(verb + "(" + ConfigLabel(o) + ")", c, members, out, &j);
  WriteJson(o.json, j);
  return kExitOk;
}

int RunMZero(const Options& o, std::ostream& out) {
  Configuration c = LoadConfig(o);
  Mask z = MZero(c);
  out << "m-zero(" << ConfigLabel(o) << ") = " << SetString(z) << "\n";
  WriteJson(o.json, Json{{"ambient", ToJson(c)}, {"m_zero", ToList(z)}});
  return kExitOk;
}

int RunAut(const Options& o, std::ostream& out) {
  Configuration c = LoadConfig(o);
  PermutationGroup g = Automorphisms(c);
  out << "aut(" << ConfigLabel(o) << "): order " << g.order << ", "
      << g.generators.size() << " generators\n";
  Json gens = Json::array();
  for (const Permutation& p : g.generators) {
    out << "  " << CycleString(p) << "\n";
    gens.push_back(CycleString(p));
  }
  WriteJson(o.json, Json{{"ambient", ToJson(c)}, {"order", g.order}, {"generators", gens}});
  return kExitOk;
}

int RunDecompose(const Options& o, std::ostream& out) {
  Configuration c = LoadConfig(o);
  FactTable facts;
  if (o.facts == "default") {
    facts = LoadFacts(DefaultFactsPath());
  } else if (o.facts != "none") {
    facts = LoadFacts(o.facts);
  }
  Decomposition d = Decompose(c, facts, o.depth);
  out << "decompose(" << ConfigLabel(o) << "): " << d.components.size()
      << " components, " << (d.complete ? "complete" : "incomplete") << ", depth "
      << d.depth_used << ", " << d.expansions << " expansions\n";
  for (const VarietyNode& n : d.components) out << "  " << NodeName(n) << "\n";
  if (!d.covered.empty()) out << "circuit containments used:\n";
  for (const CoverStep& s : d.covered) {
    out << "  V_C[" << Describe(s.circuit) << "]: " << s.citation << "\n";
  }
  if (!d.pruned.empty()) out << "pruned:\n";
  for (const PruneStep& s : d.pruned) {
    out << "  " << NodeName(s.removed) << " in V[" << Describe(s.container)
        << "]: " << s.reason << "\n";
  }
  if (!d.dropped.empty()) out << "dropped as not realizable:\n";
  for (const VarietyNode& n : d.dropped) out << "  " << NodeName(n) << "\n";
  if (!d.unexpanded.empty()) out << "unexpanded at the depth limit:\n";
  for (const VarietyNode& n : d.unexpanded) out << "  " << NodeName(n) << "\n";
  WriteJson(o.json, ToJson(d));
  return d.complete ? kExitOk : kExitExhausted;
}

int RunMinX(const Options& o, std::ostream& out) {
  XSystem sys = LoadXSystem(o);
  std::vector<Matroid> ms = MinimalXMatroidsRank3(sys);
  out << "min-x: " << ms.size() << " minimal X-matroids of rank at most three\n";
  for (const Matroid& m : ms) out << "  " << Describe(m) << "\n";
  WriteJson(o.json, Json{{"system", ToJson(sys)}, {"minimal", MatroidList(ms)}});
  return kExitOk;
}

int RunOracleCheck(const Options& o, std::ostream& out, std::ostream& err) {
  Configuration c = LoadConfig(o);
  EnumerationBudget budget;
  budget.allow_seven = o.allow_seven;
  std::vector<Matroid> fast = MinMatroids(c).Matroids();
  std::vector<Matroid> brute = BruteMinimal(Matroid::FromConfiguration(c), budget);
  std::sort(fast.begin(), fast.end());
  std::vector<Matroid> only_fast;
  std::vector<Matroid> only_brute;
  std::set_difference(fast.begin(), fast.end(), brute.begin(), brute.end(),
                      std::back_inserter(only_fast));
  std::set_difference(brute.begin(), brute.end(), fast.begin(), fast.end(),
                      std::back_inserter(only_brute));
  bool agree = only_fast.empty() && only_brute.empty();
  out << "oracle-check(" << ConfigLabel(o) << "): algorithm " << fast.size()
      << ", brute force " << brute.size() << ", " << (agree ? "agree" : "DISAGREE")
      << "\n";
  for (const Matroid& m : only_fast) out << "  algorithm only: " << Describe(m) << "\n";
  for (const Matroid& m : only_brute) out << "  brute force only: " << Describe(m) << "\n";
  WriteJson(o.json, Json{{"ambient", ToJson(c)},
                         {"agree", agree},
                         {"algorithm_only", MatroidList(only_fast)},
                         {"brute_only", MatroidList(only_brute)}});
  if (!agree) {
    err << "error: minimal matroid sets differ\n";
    return kExitInvalid;
  }
  return kExitOk;
}

VxOrder ParseOrder(const std::string& s) {
  if (s == "sweep") return VxOrder::kSweep;
  if (s == "priority") return VxOrder::kPriority;
  if (s == "reversed") return VxOrder::kPriorityReversed;
  throw Error(ErrorCode::kInvalidArgument, "--order: unknown order " + s);
}

}  // namespace

Json ToJson(const MinimalSet& s) {
  Json members = Json::array();
  for (const MinimalMember& m : SortedMembers(s.members)) members.push_back(ToJson(m));
  return Json{{"ambient", ToJson(s.ambient)}, {"members", members}};
}

Json ToJson(const Decomposition& d) {
  Json components = Json::array();
  for (const VarietyNode& n : d.components) components.push_back(ToJson(n));
  Json covered = Json::array();
  for (const CoverStep& s : d.covered) {
    covered.push_back(Json{{"circuit", ToJson(s.circuit)},
                           {"objects", MatroidList(s.objects)},
                           {"circuit_objects", MatroidList(s.circuit_objects)},
                           {"citation", s.citation}});
  }
  Json pruned = Json::array();
  for (const PruneStep& s : d.pruned) {
    pruned.push_back(Json{{"removed", ToJson(s.removed)},
                          {"container", ToJson(s.container)},
                          {"reason", s.reason}});
  }
  Json dropped = Json::array();
  for (const VarietyNode& n : d.dropped) dropped.push_back(ToJson(n));
  Json unexpanded = Json::array();
  for (const VarietyNode& n : d.unexpanded) unexpanded.push_back(ToJson(n));
  return Json{{"ambient", ToJson(d.ambient)},
              {"complete", d.complete},
              {"depth_used", d.depth_used},
              {"expansions", d.expansions},
              {"subsumed", d.subsumed},
              {"components", components},
              {"covered", covered},
              {"pruned", pruned},
              {"dropped", dropped},
              {"unexpanded", unexpanded}};
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Point-line configurations, minimal matroids and circuit varieties",
               "plc"};
  app.require_subcommand(1);
  Options o;
  auto config_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", o.config, "library name or configuration file");
    sub->add_option("--file", o.file, "configuration file");
    sub->add_option("--json", o.json, "write the structured report here");
    return sub;
  };
  auto x_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--file", o.file, "X-system file {\"d\", \"X\"}")->required();
    sub->add_option("--json", o.json, "write the structured report here");
    return sub;
  };
  config_command("min", "all minimal matroids, with orbit classes");
  config_command("min-a", "minimal matroids with double points and no loops");
  config_command("min-b", "minimal simple matroids");
  config_command("m-zero", "points whose loop matroid is minimal");
  config_command("aut", "automorphism group");
  CLI::App* decompose = config_command("decompose", "circuit variety decomposition");
  decompose->add_option("--facts", o.facts, "fact file, \"default\" or \"none\"");
  decompose->add_option("--depth", o.depth, "expansion depth limit");
  CLI::App* oracle = config_command("oracle-check", "compare min with brute force");
  oracle->add_flag("--allow-seven", o.allow_seven, "permit seven-point ground sets");
  x_command("xval", "val_X table")->add_option("--set", o.set, "all, none or points");
  CLI::App* vx = x_command("vx", "v_X table");
  vx->add_option("--set", o.set, "all, none or points");
  vx->add_option("--order", o.order, "sweep, priority or reversed");
  x_command("min-x", "minimal X-matroids of rank at most three");
  CLI::App* library = app.add_subcommand("library", "list the named configurations");
  library->add_option("--json", o.json, "write the structured report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "library") return RunLibrary(o, out);
    if (verb == "min" || verb == "min-a" || verb == "min-b") return RunMin(verb, o, out);
    if (verb == "m-zero") return RunMZero(o, out);
    if (verb == "aut") return RunAut(o, out);
    if (verb == "decompose") return RunDecompose(o, out);
    if (verb == "oracle-check") return RunOracleCheck(o, out, err);
    if (verb == "xval") {
      XSystem sys = LoadXSystem(o);
      return ReportTable("val", sys, ValTable(sys), o, out);
    }
    if (verb == "vx") {
      XSystem sys = LoadXSystem(o);
      return ReportTable("v", sys, VxTable(sys, ParseOrder(o.order)), o, out);
    }
    if (verb == "min-x") return RunMinX(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool exhausted = e.code() == ErrorCode::kBudgetExceeded ||
                     e.code() == ErrorCode::kDepthExhausted;
    return exhausted ? kExitExhausted : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace plc
