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

#include <algorithm>

#include "rdftfb/dfg.hpp"
#include "rdftfb/errors.hpp"

namespace rdftfb {

/// Per-operator delays in abstract time units. The defaults keep the
/// multiplier dominant and make the modulator combine chain the longest
/// path of the generated architecture; every figure is configurable.
/// Routing is modeled as a constant per traversed edge and defaults to
/// zero (logic delay dominates; tools optimize wiring).
struct DelayModel {
  double const_mult = 2.0;
  double adder = 1.0;
  double mux = 0.5;
  double reg_clk_to_out = 0.1;
  double t_setup = 0.1;
  double t_hold = 0.05;
  double routing = 0.0;  ///< optional per-edge constant

  /// Combinational contribution of a node inside a timing path.
  /// Registers, inputs and outputs bound paths and contribute zero here;
  /// clock-to-out and setup enter the clock-period formulas instead.
  double node_delay(NodeKind kind) const {
    switch (kind) {
      case NodeKind::const_mult: return const_mult;
      case NodeKind::adder: return adder;
      case NodeKind::mux: return mux;
      default: return 0.0;
    }
  }

  double max_combinational_delay() const {
    return std::max(const_mult, std::max(adder, mux));
  }

  /// All delays must be >= 0 and clock-to-out + setup positive.
  void validate() const {
    const bool nonneg = const_mult >= 0.0 && adder >= 0.0 && mux >= 0.0 &&
                        reg_clk_to_out >= 0.0 && t_setup >= 0.0 &&
                        t_hold >= 0.0 && routing >= 0.0;
    if (!nonneg) raise(ErrorCode::invalid, "delay model values must be >= 0");
    if (!(reg_clk_to_out + t_setup > 0.0)) {
      raise(ErrorCode::invalid,
            "register clock-to-out plus setup time must be positive");
    }
  }
};

}  // namespace rdftfb
