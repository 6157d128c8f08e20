#ifndef BCAUT_NFA_CIRCUIT_HPP
#define BCAUT_NFA_CIRCUIT_HPP

// Subset construction as a circuit: one register bit per NFA state, and
//   q'_i = OR_a ( (x == a) AND OR_{p in src(a, i)} q_p ).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "automata.hpp"
#include "encoding.hpp"
#include "gadgets.hpp"

namespace bcaut {

namespace detail {

/// sources[i][a] lists the register positions p with an a-edge p -> i, ascending.
using edge_sources = std::vector<std::vector<std::vector<std::size_t>>>;

inline edge_sources sources_of(const nfa& n) {
  edge_sources src(n.num_states(), std::vector<std::vector<std::size_t>>(n.alphabet_size()));
  for (const auto& e : n.edges()) src[e.to][e.letter].push_back(e.from);
  return src;
}

/// Builds the next-state wires. Decoders (x == code) are created on first
/// use and shared. Source lists must be sorted.
inline std::vector<ref> nfa_block(circuit_builder& bld, const std::vector<ref>& x,
                                  const std::vector<std::uint64_t>& codes,
                                  const std::vector<ref>& state, const edge_sources& src) {
  const std::size_t k = codes.size();
  std::vector<std::optional<ref>> decoder(k);
  auto dec = [&](std::size_t a) {
    if (!decoder[a]) decoder[a] = gadgets::eq_const(bld, x, codes[a]);
    return *decoder[a];
  };
  auto disjunction = [&](const std::vector<std::size_t>& ps) {
    std::vector<ref> rs;
    for (auto p : ps) rs.push_back(state[p]);
    return bld.or_all(rs);
  };
  std::vector<ref> out;
  for (const auto& per_letter : src) {
    // sources shared by every letter need no decoder:
    //   OR_a (dec_a AND (C OR R_a)) == C OR OR_a (dec_a AND R_a)
    std::vector<std::size_t> common = per_letter[0];
    for (std::size_t a = 1; a < k; ++a) {
      std::vector<std::size_t> keep;
      std::set_intersection(common.begin(), common.end(), per_letter[a].begin(),
                            per_letter[a].end(), std::back_inserter(keep));
      common = std::move(keep);
    }
    std::vector<ref> terms;
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::size_t> rest;
      std::set_difference(per_letter[a].begin(), per_letter[a].end(), common.begin(),
                          common.end(), std::back_inserter(rest));
      if (rest.empty()) continue;
      terms.push_back(bld.and_(dec(a), disjunction(rest)));
    }
    out.push_back(bld.or_(disjunction(common), bld.or_all(terms)));
  }
  return out;
}

}  // namespace detail

/// b_q = number of NFA states, b_sigma = ceil(log k), letter a has code a.
/// The register value after a word is the set of reachable states; the
/// start set is moved to all zeros with normalize_start_zero.
inline representation nfa_to_circuit(const nfa& n, cost_model cm = cost_model::gates_plus_outputs) {
  const std::size_t k = n.alphabet_size();
  const std::size_t m = n.num_states();
  representation r;
  r.cm = cm;
  r.enc.b_sigma = ceil_log2(k);
  r.enc.b_q = m;
  for (std::uint64_t a = 0; a < k; ++a) r.enc.input_code.push_back(a);

  circuit_builder fb(r.enc.b_sigma + m);
  auto next = detail::nfa_block(fb, input_refs(0, r.enc.b_sigma), r.enc.input_code,
                                input_refs(r.enc.b_sigma, m), detail::sources_of(n));
  for (ref o : next) fb.output(o);
  r.f = sweep(std::move(fb).finish());

  circuit_builder gb(m);
  std::vector<ref> acc;
  for (state_id q = 0; q < m; ++q) {
    if (n.accepting(q)) acc.push_back(gb.input(q));
  }
  gb.output(gb.or_all(acc));
  r.g = std::move(gb).finish();

  if (n.start_count() > 0) {
    r = normalize_start_zero(r, n.starts());
  }
  return r;
}

}  // namespace bcaut

#endif
