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

#ifndef TEAMLOGIC_ERROR_HPP
#define TEAMLOGIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace teamlogic {

enum class ErrorKind {
  Invalid,        // precondition or invariant violated by the caller
  Parse,          // malformed formula / JSON text
  Fragment,       // formula outside the fragment an operation accepts
  ResourceLimit,  // exhaustive search exceeded its budget
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::Invalid, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

}  // namespace teamlogic

#endif  // TEAMLOGIC_ERROR_HPP
