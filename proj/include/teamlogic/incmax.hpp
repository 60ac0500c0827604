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


#ifndef TEAMLOGIC_INCMAX_HPP
#define TEAMLOGIC_INCMAX_HPP

#include <cstdint>

#include "teamlogic/structures.hpp"
#include "teamlogic/syntax.hpp"

namespace teamlogic {

struct IncmaxStats {
  std::uint64_t sweeps = 0;          // inclusion-atom deletion sweeps
  std::uint64_t outer_iterations = 0;  // ∧ and ∀ fixpoint rounds
  std::uint64_t max_rows = 0;
};

// The largest Y ⊆ X with M, Y ⊨ φ under lax semantics. φ must be in the
// inclusion fragment; anything else throws ErrorKind::Fragment.
Team max_subteam(const Structure& m, const Team& team, const Formula& f,
                 IncmaxStats* stats = nullptr);

// M, X ⊨ φ, decided as max_subteam(M, X, φ) == X.
bool eval_inclusion(const Structure& m, const Team& team, const Formula& f,
                    IncmaxStats* stats = nullptr);

}  // namespace teamlogic

#endif  // TEAMLOGIC_INCMAX_HPP
