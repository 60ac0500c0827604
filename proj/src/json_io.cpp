/*
 * Copyright 2026 The teamlogic Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "teamlogic/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "teamlogic/error.hpp"

namespace teamlogic {

namespace {

template <typename T>
T get(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Parse, std::string(what) + ": bad \"" + key + "\"");
  }
}

}  // namespace

Json structure_to_json(const Structure& s) {
  Json rel = Json::object();
  Json arities = Json::object();
  bool need_arities = false;
  for (const auto& [name, arity] : s.signature().relations) {
    Json tuples = Json::array();
    for (const auto& t : s.tuples(name)) tuples.push_back(t);
    if (tuples.empty()) need_arities = true;
    rel[name] = std::move(tuples);
    arities[name] = arity;
  }
  Json j;
  j["domain"] = s.domain_size();
  j["relations"] = std::move(rel);
  if (need_arities) j["arities"] = std::move(arities);
  j["constants"] = s.constants();
  return j;
}

Structure structure_from_json(const Json& j) {
  const auto domain = get<Element>(j, "domain", "structure");
  Signature sig;
  std::map<std::string, std::set<Tuple>> relations;
  if (j.contains("relations")) {
    const auto rel = get<std::map<std::string, std::vector<Tuple>>>(j, "relations", "structure");
    for (const auto& [name, tuples] : rel) {
      if (tuples.empty()) continue;
      sig.relations[name] = static_cast<int>(tuples.front().size());
      relations[name].insert(tuples.begin(), tuples.end());
    }
  }
  if (j.contains("arities")) {
    for (const auto& [name, arity] : get<std::map<std::string, int>>(j, "arities", "structure")) {
      auto it = sig.relations.find(name);
      if (it != sig.relations.end() && it->second != arity) {
        throw Error(ErrorKind::Parse, "structure: arity of '" + name + "' disagrees with its tuples");
      }
      sig.relations[name] = arity;
    }
  }
  for (const auto& [name, tuples] : relations) {
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != sig.relations[name]) {
        throw Error(ErrorKind::Parse, "structure: tuple of wrong arity in '" + name + "'");
      }
    }
  }
  std::map<std::string, Element> constants;
  if (j.contains("constants")) constants = get<std::map<std::string, Element>>(j, "constants", "structure");
  for (const auto& [name, value] : constants) sig.constants.push_back(name);
  return Structure(std::move(sig), domain, std::move(relations), std::move(constants));
}

Json team_to_json(const Team& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) rows.push_back(t.row_tuple(i));
  return Json{{"vars", t.vars()}, {"rows", std::move(rows)}};
}

Team team_from_json(const Json& j) {
  auto vars = get<std::vector<std::string>>(j, "vars", "team");
  auto rows = get<std::vector<Tuple>>(j, "rows", "team");
  for (const auto& r : rows) {
    if (r.size() != vars.size()) throw Error(ErrorKind::Parse, "team: row width differs from vars");
  }
  if (vars.empty()) return rows.empty() ? Team() : Team::unit();
  return Team(std::move(vars), std::move(rows));
}

Json profile_to_json(const FragmentProfile& p) {
  return Json{{"forall_count", p.forall_count},
              {"max_inc_arity", p.max_inc_arity},
              {"max_dep_arity", p.max_dep_arity},
              {"max_ind_distinct_vars", p.max_ind_distinct_vars},
              {"atoms_used", p.atoms_used}};
}

Json translation_to_json(const TranslationReport& r) {
  Json selectors = Json::array();
  for (const auto& f : r.selector_literals) selectors.push_back(render(f));
  return Json{{"pass", r.pass},
              {"input", render(r.input)},
              {"output", render(r.output)},
              {"fresh_variables", r.fresh_variables},
              {"before", profile_to_json(r.before)},
              {"after", profile_to_json(r.after)},
              {"renamed", r.renamed},
              {"selector_literals", std::move(selectors)}};
}

Json witness_to_json(const Witness& w) {
  Json j{{"kind", to_string(w.kind)}, {"team", team_to_json(w.team)}};
  if (!w.aux.empty()) {
    Json aux = Json::array();
    for (const auto& t : w.aux) aux.push_back(team_to_json(t));
    j["aux"] = std::move(aux);
  }
  if (!w.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : w.children) kids.push_back(witness_to_json(c));
    j["children"] = std::move(kids);
  }
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

}  // namespace teamlogic
