#ifndef BCAUT_FAMILIES_HPP
#define BCAUT_FAMILIES_HPP

// Named automata used by tests, samples and the CLI.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "automata.hpp"
#include "encoding.hpp"

namespace bcaut {

/// L_n over {0,1}: the n-th letter from the end is 1. State v holds the
/// last n letters, newest in the most significant bit.
inline dfa nth_from_end_dfa(std::size_t n) {
  if (n == 0 || n > 16) throw range_error("nth_from_end_dfa needs 1 <= n <= 16");
  const std::size_t s = std::size_t{1} << n;
  std::vector<state_id> delta(2 * s);
  std::vector<bool> acc(s);
  for (std::size_t v = 0; v < s; ++v) {
    for (std::size_t x = 0; x < 2; ++x) {
      delta[v * 2 + x] = static_cast<state_id>((x << (n - 1)) | (v >> 1));
    }
    acc[v] = (v & 1U) != 0;
  }
  return dfa(s, 2, std::move(delta), 0, std::move(acc));
}

/// Gate-free representation of nth_from_end_dfa(n): F shifts the letter
/// into the register, G reads the oldest bit. State v has code v.
inline representation shift_register_representation(std::size_t n,
                                                     cost_model cm = cost_model::gates_plus_outputs) {
  const dfa d = nth_from_end_dfa(n);
  representation r;
  r.cm = cm;
  r.enc.b_sigma = 1;
  r.enc.b_q = n;
  r.enc.input_code = {0, 1};
  for (std::uint64_t v = 0; v < d.num_states(); ++v) r.enc.state_code.push_back(v);
  r.f = circuit(1 + n);
  for (std::size_t i = 0; i < n; ++i) r.f.add_output(ref::input(i));
  r.g = circuit(n);
  r.g.add_output(ref::input(n - 1));
  return r;
}

/// Counts letter 0 modulo s and accepts on multiples of s; every other
/// letter leaves the state alone.
inline dfa counter_dfa(std::size_t s, std::size_t k) {
  if (s == 0 || k == 0) throw range_error("counter_dfa needs s, k >= 1");
  std::vector<state_id> delta(s * k);
  std::vector<bool> acc(s, false);
  acc[0] = true;
  for (state_id q = 0; q < s; ++q) {
    delta[q * k] = static_cast<state_id>((q + 1) % s);
    for (letter_id a = 1; a < k; ++a) delta[q * k + a] = q;
  }
  return dfa(s, k, std::move(delta), 0, std::move(acc));
}

}  // namespace bcaut

#endif
