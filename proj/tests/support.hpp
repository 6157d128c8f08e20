#ifndef BCAUT_TESTS_SUPPORT_HPP
#define BCAUT_TESTS_SUPPORT_HPP

// Independent oracles used across the tests. None of them calls the
// library routine it is meant to check.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <bcaut/bcaut.hpp>

namespace oracle {

using bcaut::word;

/// Every word over k letters of length <= max_len.
inline std::vector<word> all_words(std::size_t k, std::size_t max_len) {
  std::vector<word> out{{}};
  std::vector<word> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<word> next;
    for (const auto& w : layer) {
      for (bcaut::letter_id a = 0; a < k; ++a) {
        word v = w;
        v.push_back(a);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// Plain table walk, no library helpers.
inline bool accepts(const bcaut::dfa& d, const word& w) {
  std::size_t q = d.start();
  for (auto a : w) q = d.transitions()[q * d.alphabet_size() + a];
  return d.accepting_flags()[q];
}

/// Set-of-states simulation of an NFA.
inline bool accepts(const bcaut::nfa& n, const word& w) {
  std::vector<bool> cur = n.starts();
  for (auto a : w) {
    std::vector<bool> nxt(n.num_states(), false);
    for (const auto& e : n.edges()) {
      if (e.letter == a && cur[e.from]) nxt[e.to] = true;
    }
    cur = nxt;
  }
  for (std::size_t q = 0; q < n.num_states(); ++q) {
    if (cur[q] && n.accepting_flags()[q]) return true;
  }
  return false;
}

/// Runs a representation by evaluating its circuits bit by bit.
inline bool accepts(const bcaut::representation& r, const word& w) {
  bcaut::bitstring state(r.enc.b_q, false);
  for (auto a : w) {
    bcaut::bitstring in = bcaut::to_bits(r.enc.input_code.at(a), r.enc.b_sigma);
    in.insert(in.end(), state.begin(), state.end());
    state = bcaut::evaluate(r.f, in);
  }
  return bcaut::evaluate(r.g, state).at(0);
}

/// Number of states of the minimal DFA, by table filling over the
/// reachable part.
inline std::size_t minimal_state_count(const bcaut::dfa& d) {
  const std::size_t s = d.num_states();
  const std::size_t k = d.alphabet_size();
  std::vector<bool> reach(s, false);
  std::vector<std::size_t> stack{d.start()};
  reach[d.start()] = true;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k; ++a) {
      auto t = d.transitions()[q * k + a];
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<std::vector<bool>> dist(s, std::vector<bool>(s, false));
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = 0; q < s; ++q) dist[p][q] = d.accepting_flags()[p] != d.accepting_flags()[q];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t p = 0; p < s; ++p) {
      for (std::size_t q = 0; q < s; ++q) {
        if (dist[p][q]) continue;
        for (std::size_t a = 0; a < k; ++a) {
          if (dist[d.transitions()[p * k + a]][d.transitions()[q * k + a]]) {
            dist[p][q] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  std::size_t classes = 0;
  std::vector<bool> done(s, false);
  for (std::size_t p = 0; p < s; ++p) {
    if (!reach[p] || done[p]) continue;
    ++classes;
    for (std::size_t q = p; q < s; ++q) {
      if (reach[q] && !dist[p][q]) done[q] = true;
    }
  }
  return classes;
}

/// Every DFA with s states over k letters and start 0.
inline void for_each_dfa(std::size_t s, std::size_t k, const std::function<void(const bcaut::dfa&)>& f) {
  const std::size_t cells = s * k;
  std::vector<bcaut::state_id> delta(cells, 0);
  for (;;) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<bool> acc(s);
      for (std::size_t q = 0; q < s; ++q) acc[q] = (mask >> q) & 1U;
      f(bcaut::dfa(s, k, delta, 0, acc));
    }
    std::size_t i = 0;
    while (i < cells && ++delta[i] == s) delta[i++] = 0;
    if (i == cells) return;
  }
}

/// Languages (as membership vectors over all words up to max_len) of the
/// DFAs with exactly s states whose minimal DFA has s states.
inline std::size_t count_minimal_languages(std::size_t s, std::size_t k) {
  std::set<std::vector<bool>> langs;
  const auto words = all_words(k, 2 * s);
  for_each_dfa(s, k, [&](const bcaut::dfa& d) {
    if (minimal_state_count(d) != s) return;
    std::vector<bool> sig;
    for (const auto& w : words) sig.push_back(accepts(d, w));
    langs.insert(sig);
  });
  return langs.size();
}

/// Distinct output tuples of all circuits (n inputs, <= c gates, outputs
/// on inputs or gates) by enumerating raw gate sequences.
inline std::size_t count_circuit_functions(std::size_t n, std::size_t m, std::size_t c) {
  const std::uint32_t rows = 1U << n;
  const std::uint32_t full = (1U << rows) - 1;
  std::set<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> wires;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t f = 0;
    for (std::uint32_t r = 0; r < rows; ++r) {
      if ((r >> (n - 1 - i)) & 1U) f |= 1U << r;
    }
    wires.push_back(f);
  }
  std::function<void()> rec = [&]() {
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::vector<std::uint32_t> t;
      for (auto i : idx) t.push_back(wires[i]);
      tuples.insert(t);
      std::size_t o = 0;
      while (o < m && ++idx[o] == wires.size()) idx[o++] = 0;
      if (o == m) break;
    }
    if (wires.size() == n + c) return;
    const std::size_t w = wires.size();
    for (std::size_t a = 0; a < w; ++a) {
      wires.push_back(~wires[a] & full);
      rec();
      wires.pop_back();
      for (std::size_t b = 0; b < w; ++b) {
        wires.push_back(wires[a] & wires[b]);
        rec();
        wires.pop_back();
        wires.push_back(wires[a] | wires[b]);
        rec();
        wires.pop_back();
      }
    }
  };
  rec();
  return tuples.size();
}

/// Minimum number of gates over all circuits computing `targets` exactly
/// (outputs may also be constants or inputs), by raw enumeration up to
/// `max_gates`. Returns max_gates + 1 if none found.
inline std::size_t brute_min_gates(std::size_t n, const std::vector<std::uint32_t>& targets,
                                   std::size_t max_gates) {
  const std::uint32_t rows = 1U << n;
  const std::uint32_t full = (1U << rows) - 1;
  std::vector<std::uint32_t> wires{0, full};
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t f = 0;
    for (std::uint32_t r = 0; r < rows; ++r) {
      if ((r >> (n - 1 - i)) & 1U) f |= 1U << r;
    }
    wires.push_back(f);
  }
  const std::size_t base = wires.size();
  std::function<bool(std::size_t)> rec = [&](std::size_t budget) {
    bool all = true;
    for (auto t : targets) {
      all = all && std::find(wires.begin(), wires.end(), t) != wires.end();
    }
    if (all) return true;
    if (wires.size() - base == budget) return false;
    const std::size_t w = wires.size();
    for (std::size_t a = 2; a < w; ++a) {
      wires.push_back(~wires[a] & full);
      if (rec(budget)) return true;
      wires.pop_back();
      for (std::size_t b = a + 1; b < w; ++b) {
        for (int op = 0; op < 2; ++op) {
          wires.push_back(op == 0 ? (wires[a] & wires[b]) : (wires[a] | wires[b]));
          if (rec(budget)) return true;
          wires.pop_back();
        }
      }
    }
    return false;
  };
  for (std::size_t g = 0; g <= max_gates; ++g) {
    wires.resize(base);
    if (rec(g)) return g;
  }
  return max_gates + 1;
}

/// Applies a permutation to the states of d, keeping its language.
inline bcaut::dfa relabel(const bcaut::dfa& d, const std::vector<bcaut::state_id>& perm) {
  const std::size_t s = d.num_states();
  const std::size_t k = d.alphabet_size();
  std::vector<bcaut::state_id> delta(s * k);
  std::vector<bool> acc(s);
  for (std::size_t q = 0; q < s; ++q) {
    acc[perm[q]] = d.accepting(static_cast<bcaut::state_id>(q));
    for (std::size_t a = 0; a < k; ++a) {
      delta[perm[q] * k + a] = perm[d.next(static_cast<bcaut::state_id>(q), static_cast<bcaut::letter_id>(a))];
    }
  }
  return bcaut::dfa(s, k, delta, perm[d.start()], acc);
}

}  // namespace oracle

#endif
