/*
 * Copyright 2026 the rdftfb authors
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
#include "rdftfb/errors.hpp"

namespace rdftfb {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::usage: return "E_USAGE";
    case ErrorCode::parse: return "E_PARSE";
    case ErrorCode::infeasible: return "E_INFEASIBLE";
    case ErrorCode::aliasing: return "E_ALIASING";
    case ErrorCode::invalid: return "E_INVALID";
    case ErrorCode::not_found: return "E_NOT_FOUND";
    case ErrorCode::io: return "E_IO";
    case ErrorCode::graph: return "E_GRAPH";
    case ErrorCode::budget: return "E_BUDGET";
    case ErrorCode::select: return "E_SELECT";
    case ErrorCode::input: return "E_INPUT";
  }
  return "E_UNKNOWN";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rdftfb
