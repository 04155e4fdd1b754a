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
#pragma once

#include <stdexcept>
#include <string>

namespace rdftfb {

/// Stable error categories. The CLI prints these as machine-greppable
/// codes of the form `error[E_ALIASING]: ...`, one line per failure.
enum class ErrorCode {
  usage,       ///< bad command line
  parse,       ///< malformed input file
  infeasible,  ///< filter specification cannot be met
  aliasing,    ///< decimation factor violates the aliasing bound
  invalid,     ///< argument outside a documented precondition
  not_found,   ///< requested measurement level never crossed
  io,          ///< file system failure
  graph,       ///< structural dataflow-graph violation
  budget,      ///< pipeline stage budget below the largest node delay
  select,      ///< select-line value out of range
  input,       ///< non-finite or otherwise rejected sample
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace rdftfb
