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

#ifndef TEAMLOGIC_JSON_IO_HPP
#define TEAMLOGIC_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "teamlogic/evaluator.hpp"
#include "teamlogic/structures.hpp"
#include "teamlogic/syntax.hpp"
#include "teamlogic/transform.hpp"

namespace teamlogic {

using Json = nlohmann::json;

// {"domain": n, "relations": {"E": [[0,1]]}, "constants": {"c": 0}} plus an
// optional "arities" object for relations that have no tuples.
Json structure_to_json(const Structure& s);
Structure structure_from_json(const Json& j);

// {"vars": [...], "rows": [[...]]}, rows in lexicographic order.
Json team_to_json(const Team& t);
Team team_from_json(const Json& j);

Json profile_to_json(const FragmentProfile& p);
Json translation_to_json(const TranslationReport& r);
Json witness_to_json(const Witness& w);

// Parses JSON text; malformed input raises ErrorKind::Parse.
Json parse_json(const std::string& text);

std::string read_file(const std::string& path);
// A path to an existing file is read; anything else is taken as inline text.
std::string file_or_inline(const std::string& arg);

}  // namespace teamlogic

#endif  // TEAMLOGIC_JSON_IO_HPP
