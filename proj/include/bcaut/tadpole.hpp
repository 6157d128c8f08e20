#ifndef BCAUT_TADPOLE_HPP
#define BCAUT_TADPOLE_HPP

// Representation built around one letter whose transition graph splits
// into "tadpoles": a simple path q_1 -> ... -> q_m followed by the edge
// q_m -> q_j. States are laid out so that this letter maps code q to q+1,
// except at the end of a component where it jumps back by m - j.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "automata.hpp"
#include "encoding.hpp"
#include "gadgets.hpp"
#include "synthesis.hpp"

namespace bcaut {

/// Raised when some component of the letter's graph is not a tadpole.
class not_tadpole : public error {
 public:
  not_tadpole(state_id state, const std::string& what) : error(what), state_(state) {}
  state_id state() const noexcept { return state_; }

 private:
  state_id state_;
};

struct tadpole_component {
  std::size_t m = 0;  // number of states
  std::size_t j = 0;  // 1-based position the last state jumps back to
  std::vector<state_id> members;  // q_1 .. q_m
};

/// Splits the functional graph of `letter` into tadpole components, in
/// order of their smallest state.
inline std::vector<tadpole_component> tadpole_decompose(const dfa& d, letter_id letter) {
  const std::size_t s = d.num_states();
  if (letter >= d.alphabet_size()) {
    throw range_error("letter out of range");
  }
  auto next = [&](state_id q) { return d.next(q, letter); };

  // mark cycle states: walk from every state until a revisit
  std::vector<int> color(s, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<bool> on_cycle(s, false);
  for (state_id start = 0; start < s; ++start) {
    std::vector<state_id> path;
    state_id q = start;
    while (color[q] == 0) {
      color[q] = 1;
      path.push_back(q);
      q = next(q);
    }
    if (color[q] == 1) {
      for (state_id c = q;;) {
        on_cycle[c] = true;
        c = next(c);
        if (c == q) break;
      }
    }
    for (state_id p : path) color[p] = 2;
  }

  std::vector<std::vector<state_id>> off_preds(s);
  for (state_id p = 0; p < s; ++p) {
    if (!on_cycle[p]) off_preds[next(p)].push_back(p);
  }
  for (state_id q = 0; q < s; ++q) {
    if (off_preds[q].size() >= 2) {
      throw not_tadpole(q, "state " + std::to_string(q) + " has " +
                               std::to_string(off_preds[q].size()) +
                               " predecessors off the cycle");
    }
  }

  std::vector<bool> placed(s, false);
  std::vector<tadpole_component> out;
  for (state_id seed = 0; seed < s; ++seed) {
    if (placed[seed]) continue;
    // find the cycle of seed's component
    state_id c = seed;
    while (!on_cycle[c]) c = next(c);
    std::vector<state_id> cycle;
    for (state_id x = c;;) {
      cycle.push_back(x);
      x = next(x);
      if (x == c) break;
    }
    std::vector<state_id> entries;
    for (state_id x : cycle) {
      if (!off_preds[x].empty()) entries.push_back(x);
    }
    if (entries.size() >= 2) {
      throw not_tadpole(entries[1], "cycle through state " + std::to_string(c) +
                                        " is entered by a second path at state " +
                                        std::to_string(entries[1]));
    }
    tadpole_component comp;
    state_id cycle_head;
    if (entries.empty()) {
      cycle_head = *std::min_element(cycle.begin(), cycle.end());
    } else {
      cycle_head = entries.front();
      std::vector<state_id> tail;
      for (state_id x = off_preds[cycle_head].front();;) {
        tail.push_back(x);
        if (off_preds[x].empty()) break;
        x = off_preds[x].front();
      }
      comp.members.assign(tail.rbegin(), tail.rend());
    }
    comp.j = comp.members.size() + 1;
    for (state_id x = cycle_head;;) {
      comp.members.push_back(x);
      x = next(x);
      if (x == cycle_head) break;
    }
    comp.m = comp.members.size();
    for (state_id x : comp.members) placed[x] = true;
    out.push_back(std::move(comp));
  }
  // seeds are scanned in id order, so this is usually a no-op
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  return out;
}

/// All components of one (m, j) type occupy codes first..last.
struct layout_block {
  std::size_t m = 0;
  std::size_t j = 0;
  std::uint64_t first = 0;  // M(m, j)
  std::uint64_t last = 0;   // N(m, j)
  bool operator==(const layout_block&) const = default;
};

struct component_layout {
  std::vector<layout_block> blocks;  // sorted by (m, j)
  std::vector<state_id> order;       // order[code] = state

  /// Number of distinct (m, j) pairs.
  std::size_t distinct_pairs() const noexcept { return blocks.size(); }
};

inline component_layout theorem3_layout(std::vector<tadpole_component> comps) {
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return std::tie(a.m, a.j) < std::tie(b.m, b.j);
  });
  component_layout lay;
  for (const auto& c : comps) {
    const std::uint64_t first = lay.order.size();
    lay.order.insert(lay.order.end(), c.members.begin(), c.members.end());
    if (!lay.blocks.empty() && lay.blocks.back().m == c.m && lay.blocks.back().j == c.j) {
      lay.blocks.back().last = lay.order.size() - 1;
    } else {
      lay.blocks.push_back({c.m, c.j, first, lay.order.size() - 1});
    }
  }
  return lay;
}

/// b_q -> b_q circuit for the laid-out letter: q + 1, or q - (m - j) when
/// M <= q <= N and q + 1 == M (mod m).
inline circuit build_f1_single_letter(const component_layout& lay, std::size_t b_q) {
  if (lay.order.size() > (std::uint64_t{1} << b_q)) {
    throw interface_mismatch("layout has more states than b_q bits can encode");
  }
  circuit_builder bld(b_q);
  if (b_q == 0) {
    return std::move(bld).finish();
  }
  const gadgets::wires q = input_refs(0, b_q);
  gadgets::wires result = gadgets::increment(bld, q);
  const std::uint64_t codes = std::uint64_t{1} << b_q;
  for (const auto& blk : lay.blocks) {
    const std::uint64_t jump = blk.m - blk.j;
    if (jump + 1 == codes) continue;  // the wrap-around of q + 1 already lands there
    ref in_block = gadgets::in_range(bld, q, blk.first, blk.last);
    ref at_end = gadgets::mod_equals(bld, q, (blk.first + blk.m - 1) % blk.m, blk.m);
    ref cond = bld.and_(in_block, at_end);
    gadgets::wires target = gadgets::subtract_const(bld, q, jump);
    for (std::size_t i = 0; i < b_q; ++i) {
      result[i] = bld.mux(cond, target[i], result[i]);
    }
  }
  for (ref r : result) bld.output(r);
  return sweep(std::move(bld).finish());
}

/// Minimal-width representation whose transition circuit handles `letter`
/// with build_f1_single_letter and all other letters with a synthesized
/// circuit; the start is moved to all zeros afterwards.
inline representation theorem3_representation(const dfa& d, letter_id letter,
                                               cost_model cm = cost_model::gates_plus_outputs) {
  const component_layout lay = theorem3_layout(tadpole_decompose(d, letter));
  const std::size_t s = d.num_states();
  const std::size_t k = d.alphabet_size();
  encoding e;
  e.b_q = ceil_log2(s);
  e.b_sigma = ceil_log2(k);
  for (std::uint64_t a = 0; a < k; ++a) e.input_code.push_back(a);
  e.state_code.assign(s, 0);
  for (std::uint64_t code = 0; code < lay.order.size(); ++code) {
    e.state_code[lay.order[code]] = code;
  }

  const circuit f1 = build_f1_single_letter(lay, e.b_q);
  representation r;
  r.cm = cm;
  r.enc = e;
  if (k == 1) {
    r.f = f1;
  } else {
    truth_table others(e.b_sigma + e.b_q, e.b_q);
    for (state_id q = 0; q < s; ++q) {
      for (letter_id a = 0; a < k; ++a) {
        if (a == letter) continue;
        others.set_row_value(transition_input(e, e.input_code[a], e.state_code[q]),
                             e.state_code[d.next(q, a)]);
      }
    }
    const circuit f2 = synthesize_from_table(others);
    circuit_builder bld(e.b_sigma + e.b_q);
    const gadgets::wires x = input_refs(0, e.b_sigma);
    const gadgets::wires q = input_refs(e.b_sigma, e.b_q);
    ref is_letter = gadgets::eq_const(bld, x, e.input_code[letter]);
    auto out1 = embed(bld, f1, q);
    auto out2 = embed(bld, f2, input_refs(0, e.b_sigma + e.b_q));
    for (std::size_t i = 0; i < e.b_q; ++i) {
      bld.output(bld.or_(bld.and_(is_letter, out1[i]), out2[i]));
    }
    r.f = sweep(std::move(bld).finish());
  }
  r.g = synthesize_from_table(acceptance_table(d, e));
  const std::uint64_t start_code = e.state_code[d.start()];
  if (start_code != 0) {
    r = normalize_start_zero(r, to_bits(start_code, e.b_q));
  }
  return r;
}

}  // namespace bcaut

#endif
