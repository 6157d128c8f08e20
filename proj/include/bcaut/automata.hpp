#ifndef BCAUT_AUTOMATA_HPP
#define BCAUT_AUTOMATA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace bcaut {

using state_id = std::uint32_t;
using letter_id = std::uint32_t;
using word = std::vector<letter_id>;

/// Complete deterministic automaton with dense state ids 0..s-1 and
/// letters 0..k-1. The transition table is stored row-major by state.
class dfa {
 public:
  dfa() : dfa(1, 1, {0}, 0, {false}) {}

  dfa(std::size_t num_states, std::size_t alphabet_size,
      std::vector<state_id> transitions, state_id start,
      std::vector<bool> accepting)
      : num_states_(num_states),
        alphabet_size_(alphabet_size),
        delta_(std::move(transitions)),
        start_(start),
        accepting_(std::move(accepting)) {
    if (num_states_ == 0 || alphabet_size_ == 0) {
      throw range_error("dfa needs at least one state and one letter");
    }
    if (delta_.size() != num_states_ * alphabet_size_) {
      throw range_error("dfa transition table must have s*k entries");
    }
    for (state_id t : delta_) {
      if (t >= num_states_) {
        throw range_error("dfa transition target out of range");
      }
    }
    if (start_ >= num_states_) {
      throw range_error("dfa start state out of range");
    }
    if (accepting_.size() != num_states_) {
      throw range_error("dfa accepting flags must have s entries");
    }
  }

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  state_id start() const noexcept { return start_; }
  bool accepting(state_id q) const { return accepting_.at(q); }
  const std::vector<bool>& accepting_flags() const noexcept { return accepting_; }
  const std::vector<state_id>& transitions() const noexcept { return delta_; }

  state_id next(state_id q, letter_id a) const {
    if (a >= alphabet_size_) {
      throw range_error("letter " + std::to_string(a) + " out of range");
    }
    return delta_.at(static_cast<std::size_t>(q) * alphabet_size_ + a);
  }

  bool operator==(const dfa&) const = default;

 private:
  std::size_t num_states_;
  std::size_t alphabet_size_;
  std::vector<state_id> delta_;
  state_id start_;
  std::vector<bool> accepting_;
};

struct nfa_edge {
  state_id from;
  letter_id letter;
  state_id to;
  auto operator<=>(const nfa_edge&) const = default;
};

/// Epsilon-free nondeterministic automaton with a set of start states.
/// An empty start set is admitted (it recognizes the empty language); it
/// arises when reversing a DFA without accepting states.
class nfa {
 public:
  nfa(std::size_t num_states, std::size_t alphabet_size,
      std::vector<nfa_edge> edges, std::vector<bool> starts,
      std::vector<bool> accepting)
      : num_states_(num_states),
        alphabet_size_(alphabet_size),
        edges_(std::move(edges)),
        starts_(std::move(starts)),
        accepting_(std::move(accepting)) {
    if (num_states_ == 0 || alphabet_size_ == 0) {
      throw range_error("nfa needs at least one state and one letter");
    }
    if (starts_.size() != num_states_ || accepting_.size() != num_states_) {
      throw range_error("nfa start/accept flags must have n entries");
    }
    for (const auto& e : edges_) {
      if (e.from >= num_states_ || e.to >= num_states_) {
        throw range_error("nfa edge state out of range");
      }
      if (e.letter >= alphabet_size_) {
        throw range_error("nfa edge letter out of range");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw range_error("nfa has duplicate transitions");
    }
  }

  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  /// Number of transitions, t.
  std::size_t transition_count() const noexcept { return edges_.size(); }
  const std::vector<nfa_edge>& edges() const noexcept { return edges_; }
  const std::vector<bool>& starts() const noexcept { return starts_; }
  const std::vector<bool>& accepting_flags() const noexcept { return accepting_; }
  bool accepting(state_id q) const { return accepting_.at(q); }

  std::size_t start_count() const {
    return static_cast<std::size_t>(std::count(starts_.begin(), starts_.end(), true));
  }

 private:
  std::size_t num_states_;
  std::size_t alphabet_size_;
  std::vector<nfa_edge> edges_;
  std::vector<bool> starts_;
  std::vector<bool> accepting_;
};

inline state_id run_from(const dfa& d, state_id q, const word& w) {
  for (letter_id a : w) {
    q = d.next(q, a);
  }
  return q;
}

inline bool run_dfa(const dfa& d, const word& w) {
  return d.accepting(run_from(d, d.start(), w));
}

inline bool run_nfa(const nfa& n, const word& w) {
  for (letter_id a : w) {
    if (a >= n.alphabet_size()) {
      throw range_error("letter " + std::to_string(a) + " out of range");
    }
  }
  std::vector<bool> cur = n.starts();
  for (letter_id a : w) {
    std::vector<bool> nxt(n.num_states(), false);
    for (const auto& e : n.edges()) {
      if (e.letter == a && cur[e.from]) {
        nxt[e.to] = true;
      }
    }
    cur = std::move(nxt);
  }
  for (std::size_t q = 0; q < n.num_states(); ++q) {
    if (cur[q] && n.accepting(static_cast<state_id>(q))) {
      return true;
    }
  }
  return false;
}

/// Renumbers the reachable part of `d` in breadth-first order from the
/// start (letters visited in increasing order). Two DFAs whose reachable
/// parts are isomorphic have equal canonical forms.
inline dfa canonical_form(const dfa& d) {
  const std::size_t k = d.alphabet_size();
  std::vector<std::int64_t> index(d.num_states(), -1);
  std::vector<state_id> order;
  index[d.start()] = 0;
  order.push_back(d.start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (letter_id a = 0; a < k; ++a) {
      state_id t = d.next(order[i], a);
      if (index[t] < 0) {
        index[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<state_id> delta(order.size() * k);
  std::vector<bool> acc(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    acc[i] = d.accepting(order[i]);
    for (letter_id a = 0; a < k; ++a) {
      delta[i * k + a] = static_cast<state_id>(index[d.next(order[i], a)]);
    }
  }
  return dfa(order.size(), k, std::move(delta), 0, std::move(acc));
}

/// Minimal DFA: reachability trim followed by Hopcroft partition
/// refinement. The result is in canonical breadth-first numbering, so the
/// start state is 0 and equal languages give equal objects.
inline dfa minimize_dfa(const dfa& input) {
  const dfa d = canonical_form(input);  // trims unreachable states
  const std::size_t s = d.num_states();
  const std::size_t k = d.alphabet_size();

  // inverse[a][q] = predecessors of q on letter a
  std::vector<std::vector<std::vector<state_id>>> inverse(
      k, std::vector<std::vector<state_id>>(s));
  for (state_id q = 0; q < s; ++q) {
    for (letter_id a = 0; a < k; ++a) {
      inverse[a][d.next(q, a)].push_back(q);
    }
  }

  std::vector<std::vector<state_id>> blocks;
  std::vector<std::size_t> block_of(s);
  {
    std::vector<state_id> acc, rej;
    for (state_id q = 0; q < s; ++q) {
      (d.accepting(q) ? acc : rej).push_back(q);
    }
    for (auto* b : {&acc, &rej}) {
      if (!b->empty()) {
        for (state_id q : *b) {
          block_of[q] = blocks.size();
        }
        blocks.push_back(std::move(*b));
      }
    }
  }

  std::vector<std::vector<bool>> queued;  // queued[block][letter]
  std::deque<std::pair<std::size_t, letter_id>> work;
  auto enqueue = [&](std::size_t b, letter_id a) {
    if (!queued[b][a]) {
      queued[b][a] = true;
      work.emplace_back(b, a);
    }
  };
  queued.assign(blocks.size(), std::vector<bool>(k, false));
  if (blocks.size() == 2) {
    std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (letter_id a = 0; a < k; ++a) {
      enqueue(smaller, a);
    }
  }

  std::vector<bool> marked(s, false);
  std::vector<std::vector<state_id>> hits(s);
  while (!work.empty()) {
    auto [splitter, a] = work.front();
    work.pop_front();
    queued[splitter][a] = false;

    std::vector<std::size_t> touched;
    for (state_id t : blocks[splitter]) {
      for (state_id p : inverse[a][t]) {
        if (!marked[p]) {
          marked[p] = true;
          std::size_t b = block_of[p];
          if (hits[b].empty()) {
            touched.push_back(b);
          }
          hits[b].push_back(p);
        }
      }
    }
    for (std::size_t b : touched) {
      if (hits[b].size() < blocks[b].size()) {
        std::size_t fresh = blocks.size();
        std::vector<state_id> rest;
        for (state_id q : blocks[b]) {
          if (!marked[q]) {
            rest.push_back(q);
          }
        }
        blocks[b] = std::move(rest);
        blocks.push_back(hits[b]);
        queued.emplace_back(k, false);
        for (state_id q : blocks[fresh]) {
          block_of[q] = fresh;
        }
        for (letter_id c = 0; c < k; ++c) {
          if (queued[b][c]) {
            enqueue(fresh, c);
          } else {
            enqueue(blocks[fresh].size() <= blocks[b].size() ? fresh : b, c);
          }
        }
      }
      for (state_id q : hits[b]) {
        marked[q] = false;
      }
      hits[b].clear();
    }
    // marks of blocks that were not split are cleared above as well
  }

  std::vector<state_id> delta(blocks.size() * k);
  std::vector<bool> acc(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    state_id rep = blocks[b].front();
    acc[b] = d.accepting(rep);
    for (letter_id a = 0; a < k; ++a) {
      delta[b * k + a] = static_cast<state_id>(block_of[d.next(rep, a)]);
    }
  }
  return canonical_form(
      dfa(blocks.size(), k, std::move(delta),
          static_cast<state_id>(block_of[d.start()]), std::move(acc)));
}

inline bool equivalent(const dfa& a, const dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw interface_mismatch("equivalence check needs equal alphabets");
  }
  return minimize_dfa(a) == minimize_dfa(b);
}

/// Reachable-subset determinization; the start state is the start set.
inline dfa subset_construct(const nfa& n) {
  const std::size_t k = n.alphabet_size();
  using subset = std::vector<bool>;
  std::vector<std::vector<std::vector<state_id>>> succ(
      n.num_states(), std::vector<std::vector<state_id>>(k));
  for (const auto& e : n.edges()) {
    succ[e.from][e.letter].push_back(e.to);
  }
  std::map<subset, state_id> index;
  std::vector<subset> order;
  index.emplace(n.starts(), 0);
  order.push_back(n.starts());
  std::vector<state_id> delta;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (letter_id a = 0; a < k; ++a) {
      subset next(n.num_states(), false);
      for (std::size_t q = 0; q < n.num_states(); ++q) {
        if (order[i][q]) {
          for (state_id t : succ[q][a]) {
            next[t] = true;
          }
        }
      }
      auto [it, inserted] = index.emplace(next, static_cast<state_id>(order.size()));
      if (inserted) {
        order.push_back(std::move(next));
      }
      delta.push_back(it->second);
    }
  }
  std::vector<bool> acc(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t q = 0; q < n.num_states(); ++q) {
      if (order[i][q] && n.accepting(static_cast<state_id>(q))) {
        acc[i] = true;
        break;
      }
    }
  }
  return dfa(order.size(), k, std::move(delta), 0, std::move(acc));
}

/// Reachable product automaton accepting combine(a accepts, b accepts).
inline dfa product(const dfa& a, const dfa& b,
                   const std::function<bool(bool, bool)>& combine) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw interface_mismatch("product needs equal alphabets");
  }
  const std::size_t k = a.alphabet_size();
  std::map<std::pair<state_id, state_id>, state_id> index;
  std::vector<std::pair<state_id, state_id>> order;
  index.emplace(std::pair{a.start(), b.start()}, 0);
  order.emplace_back(a.start(), b.start());
  std::vector<state_id> delta;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (letter_id c = 0; c < k; ++c) {
      std::pair<state_id, state_id> next{a.next(order[i].first, c),
                                         b.next(order[i].second, c)};
      auto [it, inserted] = index.emplace(next, static_cast<state_id>(order.size()));
      if (inserted) {
        order.push_back(next);
      }
      delta.push_back(it->second);
    }
  }
  std::vector<bool> acc(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    acc[i] = combine(a.accepting(order[i].first), b.accepting(order[i].second));
  }
  return dfa(order.size(), k, std::move(delta), 0, std::move(acc));
}

inline dfa complement_dfa(const dfa& d) {
  std::vector<bool> acc = d.accepting_flags();
  acc.flip();
  return dfa(d.num_states(), d.alphabet_size(), d.transitions(), d.start(),
             std::move(acc));
}

/// Reverses every arrow: starts are the accepting states of `d`, the only
/// accepting state is its start. Exactly k*s transitions.
inline nfa reverse_nfa(const dfa& d) {
  std::vector<nfa_edge> edges;
  edges.reserve(d.num_states() * d.alphabet_size());
  for (state_id q = 0; q < d.num_states(); ++q) {
    for (letter_id a = 0; a < d.alphabet_size(); ++a) {
      edges.push_back({d.next(q, a), a, q});
    }
  }
  std::vector<bool> acc(d.num_states(), false);
  acc[d.start()] = true;
  return nfa(d.num_states(), d.alphabet_size(), std::move(edges),
             d.accepting_flags(), std::move(acc));
}

/// NFA for L(a)L(b). States of `a` come first, then those of `b`. The
/// epsilon moves from accepting states of `a` to the start of `b` are
/// folded into duplicated edges.
inline nfa concat_nfa(const dfa& a, const dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw interface_mismatch("concatenation needs equal alphabets");
  }
  const auto off = static_cast<state_id>(a.num_states());
  const std::size_t n = a.num_states() + b.num_states();
  const state_id b_start = off + b.start();
  std::set<nfa_edge> edges;
  for (state_id q = 0; q < a.num_states(); ++q) {
    for (letter_id c = 0; c < a.alphabet_size(); ++c) {
      state_id t = a.next(q, c);
      edges.insert({q, c, t});
      if (a.accepting(t)) {
        edges.insert({q, c, b_start});
      }
    }
  }
  for (state_id q = 0; q < b.num_states(); ++q) {
    for (letter_id c = 0; c < b.alphabet_size(); ++c) {
      edges.insert({off + q, c, off + b.next(q, c)});
    }
  }
  std::vector<bool> starts(n, false), acc(n, false);
  starts[a.start()] = true;
  if (a.accepting(a.start())) {
    starts[b_start] = true;
  }
  for (state_id q = 0; q < b.num_states(); ++q) {
    acc[off + q] = b.accepting(q);
  }
  return nfa(n, a.alphabet_size(), {edges.begin(), edges.end()},
             std::move(starts), std::move(acc));
}

/// NFA for L(d)*. A fresh accepting start state (index m) carries the
/// empty word; edges reaching an accepting state are duplicated into the
/// original start.
inline nfa star_nfa(const dfa& d) {
  const std::size_t m = d.num_states();
  const auto fresh = static_cast<state_id>(m);
  std::set<nfa_edge> edges;
  auto add_from = [&](state_id src, state_id q) {
    for (letter_id c = 0; c < d.alphabet_size(); ++c) {
      state_id t = d.next(q, c);
      edges.insert({src, c, t});
      if (d.accepting(t)) {
        edges.insert({src, c, d.start()});
      }
    }
  };
  for (state_id q = 0; q < m; ++q) {
    add_from(q, q);
  }
  add_from(fresh, d.start());
  std::vector<bool> starts(m + 1, false), acc = d.accepting_flags();
  starts[fresh] = true;
  acc.push_back(true);
  return nfa(m + 1, d.alphabet_size(), {edges.begin(), edges.end()},
             std::move(starts), std::move(acc));
}

/// True when every state is reachable and no two states are equivalent.
inline bool is_minimal(const dfa& d) {
  return minimize_dfa(d).num_states() == d.num_states();
}

/// Streams one representative (in canonical numbering) of every language
/// whose minimal DFA has exactly `s` states over `k` letters, and returns
/// the count. Refuses when s^(k*s) * 2^s exceeds `budget`.
inline std::uint64_t enumerate_minimal_dfas(
    std::size_t s, std::size_t k, const std::function<void(const dfa&)>& visit,
    double budget = 5e7) {
  if (s == 0 || k == 0) {
    throw range_error("enumeration needs s >= 1 and k >= 1");
  }
  const double required =
      std::pow(static_cast<double>(s), static_cast<double>(k * s)) * std::pow(2.0, s);
  if (required > budget) {
    throw budget_exceeded("minimal DFA enumeration needs " +
                              std::to_string(static_cast<long double>(required)) +
                              " candidate automata",
                          required);
  }
  const std::size_t cells = s * k;
  std::vector<state_id> delta(cells, 0);
  std::uint64_t count = 0;
  for (;;) {
    // Keep only tables already in canonical breadth-first numbering; each
    // reachable shape then appears exactly once.
    bool canonical = true;
    {
      std::size_t next_new = 1;
      for (std::size_t i = 0; i < cells && canonical; ++i) {
        if (i / k >= next_new) {
          canonical = false;  // state i/k not yet discovered
          break;
        }
        if (delta[i] > next_new) {
          canonical = false;
        } else if (delta[i] == next_new) {
          ++next_new;
        }
      }
      if (canonical && next_new != s) {
        canonical = false;
      }
    }
    if (canonical) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        std::vector<bool> acc(s);
        for (std::size_t q = 0; q < s; ++q) {
          acc[q] = ((mask >> q) & 1U) != 0;
        }
        dfa d(s, k, delta, 0, std::move(acc));
        if (is_minimal(d)) {
          ++count;
          if (visit) {
            visit(d);
          }
        }
      }
    }
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++delta[i] < s) {
        break;
      }
      delta[i] = 0;
      if (i == 0) {
        return count;
      }
    }
    if (cells == 0) {
      return count;
    }
  }
}

}  // namespace bcaut

#endif
