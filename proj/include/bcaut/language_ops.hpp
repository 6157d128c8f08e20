#ifndef BCAUT_LANGUAGE_OPS_HPP
#define BCAUT_LANGUAGE_OPS_HPP

// Closure constructions on representations. Results carry input codes
// but no state codes: their registers hold product states or subsets,
// which are recovered with extract().

#include <cstddef>
#include <vector>

#include "automata.hpp"
#include "encoding.hpp"
#include "nfa_circuit.hpp"

namespace bcaut {

namespace detail {

inline void check_same_inputs(const representation& a, const representation& b) {
  check_interfaces(a);
  check_interfaces(b);
  if (a.enc.b_sigma != b.enc.b_sigma || a.enc.input_code != b.enc.input_code) {
    throw interface_mismatch("representations use different input codes");
  }
}

inline std::vector<ref> concat_refs(std::vector<ref> a, const std::vector<ref>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Both registers side by side; G combines the two acceptance bits.
inline representation parallel(const representation& r1, const representation& r2, bool conj) {
  check_same_inputs(r1, r2);
  const std::size_t bs = r1.enc.b_sigma;
  const std::size_t q1 = r1.enc.b_q;
  const std::size_t q2 = r2.enc.b_q;
  representation r;
  r.cm = r1.cm;
  r.enc.b_sigma = bs;
  r.enc.b_q = q1 + q2;
  r.enc.input_code = r1.enc.input_code;

  circuit_builder fb(bs + q1 + q2, false);
  const auto x = input_refs(0, bs);
  auto o1 = embed(fb, r1.f, concat_refs(x, input_refs(bs, q1)));
  auto o2 = embed(fb, r2.f, concat_refs(x, input_refs(bs + q1, q2)));
  for (ref o : concat_refs(o1, o2)) fb.output(o);
  r.f = std::move(fb).finish();

  circuit_builder gb(q1 + q2, false);
  ref a1 = embed(gb, r1.g, input_refs(0, q1))[0];
  ref a2 = embed(gb, r2.g, input_refs(q1, q2))[0];
  gb.output(conj ? gb.and_(a1, a2) : gb.or_(a1, a2));
  r.g = std::move(gb).finish();
  return r;
}

}  // namespace detail

inline representation op_union(const representation& r1, const representation& r2) {
  return detail::parallel(r1, r2, false);
}

inline representation op_intersect(const representation& r1, const representation& r2) {
  return detail::parallel(r1, r2, true);
}

/// One NOT on the acceptance output (or none when it cancels a NOT).
inline representation op_complement(const representation& r) {
  check_interfaces(r);
  representation out = r;
  circuit_builder gb(r.enc.b_q, false);
  ref a = embed(gb, r.g, input_refs(0, r.enc.b_q))[0];
  gb.output(gb.not_(a));
  out.g = sweep(std::move(gb).finish());
  return out;
}

inline representation op_reverse(const dfa& d, cost_model cm = cost_model::gates_plus_outputs) {
  return nfa_to_circuit(reverse_nfa(d), cm);
}

inline representation op_star(const dfa& d, cost_model cm = cost_model::gates_plus_outputs) {
  return nfa_to_circuit(star_nfa(d), cm);
}

/// L(r1) L(d2). The register is r1's register followed by one bit per
/// state of d2. The bit of d2's start is also set whenever r1 moves into
/// an accepting state, i.e. whenever G1(F1(x, p)) holds.
inline representation op_concat(const representation& r1, const dfa& d2) {
  check_interfaces(r1);
  if (r1.enc.alphabet_size() != d2.alphabet_size()) {
    throw interface_mismatch("concatenation needs equal alphabets");
  }
  const std::size_t bs = r1.enc.b_sigma;
  const std::size_t q1 = r1.enc.b_q;
  const std::size_t n = d2.num_states();
  representation r;
  r.cm = r1.cm;
  r.enc.b_sigma = bs;
  r.enc.b_q = q1 + n;
  r.enc.input_code = r1.enc.input_code;

  detail::edge_sources src(n, std::vector<std::vector<std::size_t>>(d2.alphabet_size()));
  for (state_id q = 0; q < n; ++q) {
    for (letter_id a = 0; a < d2.alphabet_size(); ++a) src[d2.next(q, a)][a].push_back(q);
  }

  circuit_builder fb(bs + q1 + n);
  const auto x = input_refs(0, bs);
  auto p_next = embed(fb, r1.f, detail::concat_refs(x, input_refs(bs, q1)));
  ref enters_accept = embed(fb, r1.g, p_next)[0];
  auto d_next = detail::nfa_block(fb, x, r1.enc.input_code, input_refs(bs + q1, n), src);
  d_next[d2.start()] = fb.or_(d_next[d2.start()], enters_accept);
  for (ref o : detail::concat_refs(p_next, d_next)) fb.output(o);
  r.f = sweep(std::move(fb).finish());

  circuit_builder gb(q1 + n);
  std::vector<ref> acc;
  for (state_id q = 0; q < n; ++q) {
    if (d2.accepting(q)) acc.push_back(gb.input(q1 + q));
  }
  gb.output(gb.or_all(acc));
  r.g = std::move(gb).finish();

  // the empty prefix: d2 starts active when r1 accepts the empty word
  if (evaluate(r1.g, bitstring(q1, false)).at(0)) {
    bitstring mask(q1 + n, false);
    mask[q1 + d2.start()] = true;
    r = normalize_start_zero(r, mask);
  }
  return r;
}

}  // namespace bcaut

#endif
