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
#include "rdftfb/graph_build.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "rdftfb/cdm.hpp"
#include "rdftfb/errors.hpp"

namespace rdftfb {

namespace {

struct Builder {
  DataflowGraph g;
  int n = 0;       // subbands
  int m_max = 1;   // factor ceiling
  int length = 0;  // prototype taps

  NodeId input = kNoNode;
  NodeId ground = kNoNode;
  std::vector<NodeId> bank;  // one const_mult per distinct coefficient

  NodeId zero() {
    // Constant-0 source; an input node that is not stimulus-designated
    // is driven with zero every cycle.
    if (ground == kNoNode) {
      ground = g.add_node(NodeKind::input, Section::io, "gnd");
    }
    return ground;
  }

  /// Product of the broadcast input with coefficient index j; symmetric
  /// taps share the mirror multiplier.
  NodeId product(std::size_t tap) {
    const std::size_t mirror = static_cast<std::size_t>(length) - 1 - tap;
    return bank[std::min(tap, mirror)];
  }

  NodeId delay_chain(NodeId from, int count, Section section,
                     const std::string& prefix) {
    NodeId cur = from;
    for (int r = 0; r < count; ++r) {
      const NodeId reg = g.add_node(NodeKind::reg, section,
                                    prefix + "." + std::to_string(r));
      g.connect(cur, reg, 0);
      cur = reg;
    }
    return cur;
  }

  /// Number of coefficient slots branch i uses under decimation factor f:
  /// #{m >= 0 : i + m*N < ceil(L/f)}.
  int slots(int branch, int factor) const {
    const int decimated =
        (length + factor - 1) / factor;  // retained-coefficient count
    if (branch >= decimated) return 0;
    return (decimated - branch + n - 1) / n;
  }

  /// Transposed accumulation chain over the factor-f tail coefficients of
  /// a branch (slots m >= 1); stages are spaced by N registers.
  NodeId build_tail(int branch, int factor) {
    const int p = slots(branch, factor);
    if (p <= 1) return zero();
    const std::string stem =
        "b" + std::to_string(branch) + ".f" + std::to_string(factor);
    NodeId cur = product(static_cast<std::size_t>(
        (branch + (p - 1) * n) * factor));
    for (int m = p - 2; m >= 1; --m) {
      const NodeId delayed =
          delay_chain(cur, n, Section::filter, stem + ".z" + std::to_string(m));
      const NodeId sum = g.add_node(NodeKind::adder, Section::filter,
                                    stem + ".a" + std::to_string(m));
      g.connect(product(static_cast<std::size_t>((branch + m * n) * factor)),
                sum, 0);
      g.connect(delayed, sum, 1);
      cur = sum;
    }
    return cur;
  }

  /// Cascade of 2-input muxes: candidates[f-1] is routed while the line
  /// carries f; factor 1 is the pass-through base case.
  NodeId build_cascade(const std::vector<NodeId>& candidates,
                       const std::string& line, int branch) {
    NodeId sel = candidates[0];
    for (int f = 2; f <= m_max; ++f) {
      const NodeId mux = g.add_node(
          NodeKind::mux, Section::filter,
          "b" + std::to_string(branch) + "." + line + ".f" + std::to_string(f));
      auto& node = g.nodes[static_cast<std::size_t>(mux)];
      node.sel.line = line;
      node.sel.match = f;
      node.group = line + "/b" + std::to_string(branch);
      g.connect(sel, mux, 0);
      g.connect(candidates[static_cast<std::size_t>(f - 1)], mux, 1);
      sel = mux;
    }
    return sel;
  }
};

}  // namespace

DataflowGraph build_rdftfb_graph(const PrototypeFilter& prototype,
                                 int num_subbands, int max_factor) {
  prototype.validate();
  if (num_subbands < 2) {
    raise(ErrorCode::invalid, "subband count must be at least 2");
  }
  if (max_factor < 1) {
    raise(ErrorCode::invalid, "max decimation factor must be at least 1");
  }
  if (!prototype.symmetric) {
    raise(ErrorCode::graph,
          "the architecture shares symmetric coefficient products; the "
          "prototype must be linear phase");
  }
  ensure_factor_valid(prototype, max_factor);

  Builder b;
  b.n = num_subbands;
  b.m_max = max_factor;
  b.length = static_cast<int>(prototype.length());

  b.input = b.g.add_node(NodeKind::input, Section::io, "x");
  b.g.stimulus_inputs.push_back(b.input);

  // Shared product bank: one multiplier per distinct coefficient value.
  const int distinct = (b.length + 1) / 2;
  b.bank.reserve(static_cast<std::size_t>(distinct));
  for (int j = 0; j < distinct; ++j) {
    const NodeId mult = b.g.add_node(NodeKind::const_mult, Section::filter,
                                     "h" + std::to_string(j));
    b.g.nodes[static_cast<std::size_t>(mult)].coeff = {
        prototype.coeffs[static_cast<std::size_t>(j)], 0.0};
    b.g.connect(b.input, mult, 0);
    b.bank.push_back(mult);
  }

  // Polyphase branches.
  std::vector<NodeId> branch_delayed(static_cast<std::size_t>(num_subbands));
  for (int i = 0; i < num_subbands; ++i) {
    const std::string stem = "b" + std::to_string(i);

    std::vector<NodeId> tails;
    tails.reserve(static_cast<std::size_t>(max_factor));
    for (int f = 1; f <= max_factor; ++f) {
      tails.push_back(b.build_tail(i, f));
    }
    const NodeId tail_sel = b.build_cascade(tails, "sel_M", i);
    const NodeId tail_delayed =
        b.delay_chain(tail_sel, num_subbands, Section::filter, stem + ".zhead");

    std::vector<NodeId> heads;
    heads.reserve(static_cast<std::size_t>(max_factor));
    for (int f = 1; f <= max_factor; ++f) {
      heads.push_back(i * f < b.length
                          ? b.product(static_cast<std::size_t>(i * f))
                          : b.zero());
    }
    const NodeId head_sel = b.build_cascade(heads, "sel_p", i);

    const NodeId head_sum =
        b.g.add_node(NodeKind::adder, Section::filter, stem + ".head");
    b.g.connect(head_sel, head_sum, 0);
    b.g.connect(tail_delayed, head_sum, 1);

    branch_delayed[static_cast<std::size_t>(i)] =
        b.delay_chain(head_sum, i, Section::io, stem + ".zout");
  }

  // Modulation: per output, rotate each delayed branch by its twiddle and
  // combine through an adder chain; branch 0 (twiddle 1 for every output)
  // joins last so the undelayed branch touches only one adder.
  for (int k = 0; k < num_subbands; ++k) {
    const std::string stem = "y" + std::to_string(k);
    auto term = [&](int i) {
      const int t = (k * i) % num_subbands;
      if (t == 0) return branch_delayed[static_cast<std::size_t>(i)];
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                           static_cast<double>(num_subbands);
      const NodeId rot =
          b.g.add_node(NodeKind::const_mult, Section::modulator,
                       "rot.k" + std::to_string(k) + ".i" + std::to_string(i));
      b.g.nodes[static_cast<std::size_t>(rot)].coeff = {std::cos(angle),
                                                        std::sin(angle)};
      b.g.connect(branch_delayed[static_cast<std::size_t>(i)], rot, 0);
      return rot;
    };

    NodeId acc = term(1);
    for (int i = 2; i < num_subbands; ++i) {
      const NodeId sum = b.g.add_node(NodeKind::adder, Section::modulator,
                                      stem + ".a" + std::to_string(i - 1));
      b.g.connect(acc, sum, 0);
      b.g.connect(term(i), sum, 1);
      acc = sum;
    }
    const NodeId final_sum =
        b.g.add_node(NodeKind::adder, Section::modulator,
                     stem + ".a" + std::to_string(num_subbands - 1));
    b.g.connect(acc, final_sum, 0);
    b.g.connect(branch_delayed[0], final_sum, 1);

    const NodeId out = b.g.add_node(NodeKind::output, Section::io, stem);
    b.g.connect(final_sum, out, 0);
    b.g.outputs.push_back(out);
  }

  if (max_factor >= 2) {
    b.g.selects.push_back({"sel_p", 1, max_factor, 1});
    b.g.selects.push_back({"sel_M", 1, max_factor, 1});
  }

  b.g.num_subbands = num_subbands;
  b.g.max_factor = max_factor;
  b.g.prototype_length = b.length;
  b.g.validate();
  return b.g;
}

}  // namespace rdftfb
