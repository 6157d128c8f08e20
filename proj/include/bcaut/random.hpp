#ifndef BCAUT_RANDOM_HPP
#define BCAUT_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "automata.hpp"

namespace bcaut {

using rng_type = std::mt19937_64;

/// Uniform over all s^(sk) transition tables and 2^s accepting sets, start 0.
inline dfa random_dfa(std::size_t s, std::size_t k, rng_type& rng) {
  std::uniform_int_distribution<state_id> pick(0, static_cast<state_id>(s - 1));
  std::bernoulli_distribution coin(0.5);
  std::vector<state_id> delta(s * k);
  for (auto& t : delta) {
    t = pick(rng);
  }
  std::vector<bool> acc(s);
  for (std::size_t q = 0; q < s; ++q) {
    acc[q] = coin(rng);
  }
  return dfa(s, k, std::move(delta), 0, std::move(acc));
}

/// Each of the k*n*n possible edges is present with probability `density`.
/// With `single_start` only state 0 is initial, otherwise each state is
/// initial with probability one half (at least one is forced).
inline nfa random_nfa(std::size_t n, std::size_t k, double density,
                      bool single_start, rng_type& rng) {
  std::bernoulli_distribution edge(density);
  std::bernoulli_distribution coin(0.5);
  std::vector<nfa_edge> edges;
  for (state_id p = 0; p < n; ++p) {
    for (letter_id a = 0; a < k; ++a) {
      for (state_id q = 0; q < n; ++q) {
        if (edge(rng)) {
          edges.push_back({p, a, q});
        }
      }
    }
  }
  std::vector<bool> starts(n, false), acc(n, false);
  if (single_start) {
    starts[0] = true;
  } else {
    bool any = false;
    for (std::size_t q = 0; q < n; ++q) {
      starts[q] = coin(rng);
      any = any || starts[q];
    }
    if (!any) {
      starts[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = true;
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    acc[q] = coin(rng);
  }
  return nfa(n, k, std::move(edges), std::move(starts), std::move(acc));
}

/// Draws uniform DFAs until one is minimal with exactly s states.
inline dfa random_minimal_dfa(std::size_t s, std::size_t k, rng_type& rng) {
  for (;;) {
    dfa d = random_dfa(s, k, rng);
    if (is_minimal(d)) {
      return canonical_form(d);
    }
  }
}

}  // namespace bcaut

#endif
