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

#include "rdftfb/dfg.hpp"
#include "rdftfb/prototype_filter.hpp"

namespace rdftfb {

/// Register-level netlist of the reconfigurable bank, transposed
/// polyphase form.
///
/// Structure per polyphase branch i:
///  - a shared coefficient-product bank: one const_mult per distinct
///    coefficient value (symmetry halves the count to ceil(L/2)), all fed
///    by the broadcast input;
///  - per decimation factor f, a tail accumulation chain over the
///    factor-f coefficient products, with the branch spacing realized as
///    N registers between stages;
///  - a sel_M mux cascade choosing the active tail, a shared N-register
///    stage, and the head adder that adds the branch's leading product;
///  - a sel_p mux cascade choosing the leading coefficient page (the head
///    coefficient is coeffs[i*f], which varies with the factor);
///  - i alignment registers on the branch output.
/// The modulation section multiplies each delayed branch by its twiddle
/// rotation (branch 0 and subband 0 need none) and combines the N terms
/// per output through an adder chain, branch 0 joining last.
///
/// In normal operation sel_p and sel_M both carry the decimation factor.
/// Output sample n depends on input sample n (zero latency), so an
/// unpipelined simulation aligns sample-for-sample with the functional
/// channelizer.
///
/// Requires a symmetric prototype, num_subbands >= 2, and max_factor
/// meeting the aliasing bound for the prototype bandwidth.
DataflowGraph build_rdftfb_graph(const PrototypeFilter& prototype,
                                 int num_subbands, int max_factor);

}  // namespace rdftfb
