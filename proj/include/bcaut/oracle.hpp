#ifndef BCAUT_ORACLE_HPP
#define BCAUT_ORACLE_HPP

// Exhaustive ground truth for tiny instances: minimum circuits, the
// BC-complexity of small DFAs over minimal-width encodings, and SAT by
// enumeration.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "automata.hpp"
#include "circuit.hpp"
#include "cnf.hpp"
#include "encoding.hpp"
#include "synthesis.hpp"

namespace bcaut {

struct search_budget {
  std::size_t max_gates = 16;
  double max_seconds = 60.0;
  std::uint64_t max_visited = 200'000'000;
};

inline constexpr std::size_t kOracleMaxInputs = 4;
inline constexpr std::size_t kOracleMaxOutputs = 3;

/// Result of min_circuit. When `exhausted`, `c` is the best circuit found
/// and the true minimum gate count lies in [lower_gates, c.gate_count()].
struct min_circuit_result {
  circuit c;
  bool exhausted = false;
  std::size_t lower_gates = 0;
  std::uint64_t visited = 0;

  std::size_t upper_gates() const noexcept { return c.gate_count(); }
};

namespace detail {

using fn16 = std::uint32_t;  // truth table over at most 16 rows

inline fn16 input_fn(std::size_t n, std::size_t i) {
  fn16 f = 0;
  for (std::uint32_t r = 0; r < (1U << n); ++r) {
    if ((r >> (n - 1 - i)) & 1U) f |= fn16{1} << r;
  }
  return f;
}

/// Iterative deepening over the gate count. Every function is taken modulo
/// the care rows. A partial circuit is extended only by a gate computing a
/// new non-constant function, and consecutive gates either depend on each
/// other or appear in increasing order of their function; every circuit
/// with distinct gate functions has such an ordering (place the smallest
/// available gate first), so the search stays exhaustive.
class exact_search {
 public:
  exact_search(std::size_t n, fn16 care, std::vector<fn16> targets, const search_budget& b)
      : n_(n), care_(care), budget_(b), start_(std::chrono::steady_clock::now()) {
    for (std::size_t i = 0; i < n; ++i) wires_.push_back(input_fn(n, i) & care_);
    for (fn16 t : targets) {
      t &= care_;
      if (t == 0 || t == care_) continue;
      if (std::find(wires_.begin(), wires_.end(), t) != wires_.end()) continue;
      if (std::find(needed_.begin(), needed_.end(), t) == needed_.end()) needed_.push_back(t);
    }
  }

  std::size_t needed() const noexcept { return needed_.size(); }
  std::uint64_t visited() const noexcept { return visited_; }
  bool out_of_budget() const noexcept { return stopped_; }

  /// Searches for a circuit with at most `gates` gates.
  bool run(std::size_t gates) {
    limit_ = gates;
    gates_.clear();
    uses_.assign(wires_.size(), 0);
    wires_.resize(n_);
    missing_ = needed_.size();
    dangling_ = 0;
    return dfs();
  }

  /// Gates of the last successful run, as (kind, lhs wire, rhs wire).
  const std::vector<std::tuple<gate_kind, std::size_t, std::size_t>>& gates() const {
    return gates_;
  }
  const std::vector<fn16>& wires() const { return wires_; }

 private:
  bool is_needed(fn16 f) const {
    return std::find(needed_.begin(), needed_.end(), f) != needed_.end();
  }

  bool dfs() {
    if (missing_ == 0) return dangling_ == 0;
    const std::size_t r = limit_ - gates_.size();
    if (missing_ > r || dangling_ > r + missing_) return false;
    if (++visited_ % 4096 == 0) check_budget();
    if (stopped_) return false;

    const std::size_t w = wires_.size();
    const bool must_hit = missing_ == r;
    const bool have_last = !gates_.empty();
    const std::size_t last = w - 1;
    const fn16 last_fn = have_last ? wires_[last] : 0;

    auto attempt = [&](gate_kind kind, std::size_t a, std::size_t b, fn16 f) {
      if (f == 0 || f == care_) return false;
      const bool uses_last = have_last && (a == last || b == last);
      if (have_last && !uses_last && f <= last_fn) return false;
      const bool needed = is_needed(f);
      if (must_hit && !needed) return false;
      if (std::find(wires_.begin(), wires_.end(), f) != wires_.end()) return false;
      push(kind, a, b, f, needed);
      if (dfs()) return true;
      pop(a, b, needed);
      return false;
    };

    for (std::size_t a = 0; a < w; ++a) {
      if (attempt(gate_kind::not_gate, a, a, ~wires_[a] & care_)) return true;
      if (stopped_) return false;
    }
    for (std::size_t a = 0; a < w; ++a) {
      for (std::size_t b = a + 1; b < w; ++b) {
        if (attempt(gate_kind::and_gate, a, b, wires_[a] & wires_[b])) return true;
        if (attempt(gate_kind::or_gate, a, b, wires_[a] | wires_[b])) return true;
        if (stopped_) return false;
      }
    }
    return false;
  }

  void use(std::size_t x) {
    if (x >= n_ && uses_[x] == 0 && !is_needed(wires_[x])) --dangling_;
    ++uses_[x];
  }
  void unuse(std::size_t x) {
    --uses_[x];
    if (x >= n_ && uses_[x] == 0 && !is_needed(wires_[x])) ++dangling_;
  }

  void push(gate_kind kind, std::size_t a, std::size_t b, fn16 f, bool needed) {
    use(a);
    if (b != a) use(b);
    gates_.emplace_back(kind, a, b);
    wires_.push_back(f);
    uses_.push_back(0);
    if (needed) {
      --missing_;
    } else {
      ++dangling_;
    }
  }

  void pop(std::size_t a, std::size_t b, bool needed) {
    if (needed) {
      ++missing_;
    } else {
      --dangling_;
    }
    uses_.pop_back();
    wires_.pop_back();
    gates_.pop_back();
    if (b != a) unuse(b);
    unuse(a);
  }

  void check_budget() {
    if (visited_ >= budget_.max_visited) stopped_ = true;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    if (dt.count() >= budget_.max_seconds) stopped_ = true;
  }

  std::size_t n_;
  fn16 care_;
  search_budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<fn16> wires_;
  std::vector<fn16> needed_;
  std::vector<std::tuple<gate_kind, std::size_t, std::size_t>> gates_;
  std::vector<std::size_t> uses_;
  std::size_t limit_ = 0;
  std::size_t missing_ = 0;
  std::size_t dangling_ = 0;
  std::uint64_t visited_ = 0;
  bool stopped_ = false;
};

inline fn16 column_fn(const truth_table& t, std::size_t o) {
  return static_cast<fn16>(t.column(o)[0] & low_mask(t.num_rows()));
}

}  // namespace detail

/// Smallest circuit agreeing with `t` on the rows in `care` (bit r of
/// `care` selects row r). Both cost models are minimized by the gate
/// count: the number of non-constant outputs is fixed by the table.
inline min_circuit_result min_circuit(const truth_table& t, std::uint64_t care,
                                      const search_budget& b = {}) {
  const std::size_t n = t.num_inputs();
  const std::size_t m = t.num_outputs();
  if (n > kOracleMaxInputs || m > kOracleMaxOutputs) {
    throw budget_exceeded("min_circuit is limited to " + std::to_string(kOracleMaxInputs) +
                              " inputs and " + std::to_string(kOracleMaxOutputs) + " outputs",
                          static_cast<double>(std::max(n, m)));
  }
  const auto care_fn = static_cast<detail::fn16>(care & low_mask(t.num_rows()));
  std::vector<detail::fn16> targets;
  for (std::size_t o = 0; o < m; ++o) targets.push_back(detail::column_fn(t, o) & care_fn);

  // upper bound: synthesis with the don't-care rows set to zero, except
  // that outputs which are constant or an input on the care rows take
  // that value everywhere
  truth_table zeroed(n, m);
  const auto full = static_cast<detail::fn16>(low_mask(t.num_rows()));
  for (std::size_t o = 0; o < m; ++o) {
    detail::fn16 col = targets[o];
    if (col == care_fn) col = full;
    for (std::size_t i = 0; i < n; ++i) {
      if (col != 0 && (detail::input_fn(n, i) & care_fn) == col) col = detail::input_fn(n, i);
    }
    zeroed.column(o)[0] = col;
  }
  circuit upper = synthesize_from_table(zeroed);

  detail::exact_search search(n, care_fn, targets, b);
  min_circuit_result res;
  res.lower_gates = search.needed();
  const std::size_t top = std::min(upper.gate_count(), b.max_gates + 1);
  for (std::size_t g = search.needed(); g < top; ++g) {
    const bool found = search.run(g);
    res.visited = search.visited();
    if (search.out_of_budget()) {
      res.c = upper;
      res.exhausted = true;
      res.lower_gates = g;
      return res;
    }
    if (found) {
      circuit c(n);
      for (const auto& [kind, x, y] : search.gates()) {
        auto r = [&](std::size_t w) { return w < n ? ref::input(w) : ref::gate(w - n); };
        c.add_gate(kind, r(x), kind == gate_kind::not_gate ? ref::zero() : r(y));
      }
      for (detail::fn16 target : targets) {
        if (target == 0) {
          c.add_output(ref::zero());
        } else if (target == care_fn) {
          c.add_output(ref::one());
        } else {
          const auto& w = search.wires();
          const auto idx = static_cast<std::size_t>(std::find(w.begin(), w.end(), target) - w.begin());
          c.add_output(idx < n ? ref::input(idx) : ref::gate(idx - n));
        }
      }
      res.c = std::move(c);
      res.lower_gates = g;
      return res;
    }
    res.lower_gates = g + 1;
  }
  res.c = std::move(upper);
  // the search stopped at max_gates before reaching the synthesized size
  res.exhausted = res.lower_gates < res.c.gate_count();
  return res;
}

inline min_circuit_result min_circuit(const truth_table& t, const search_budget& b = {}) {
  return min_circuit(t, low_mask(t.num_rows()), b);
}

/// Memo for min_circuit keyed by (inputs, care rows, output columns).
class min_circuit_cache {
 public:
  const min_circuit_result& get(const truth_table& t, std::uint64_t care, const search_budget& b) {
    std::vector<std::uint64_t> key{t.num_inputs(), care & low_mask(t.num_rows())};
    for (std::size_t o = 0; o < t.num_outputs(); ++o) {
      key.push_back(t.column(o)[0] & care);
    }
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), min_circuit(t, care, b)).first;
    return it->second;
  }
  std::size_t size() const noexcept { return memo_.size(); }

 private:
  std::map<std::vector<std::uint64_t>, min_circuit_result> memo_;
};

/// BC over minimal-width encodings: the start gets the all-zero code, the
/// other states every injective placement into the remaining codes, the
/// letters every bijection onto their codes. Equal to the true minimum
/// only if minimal width is optimal, so it is an upper bound on BC in
/// general. lower < upper means some search ran out of budget.
struct oracle_result {
  std::size_t lower = 0;
  std::size_t upper = 0;
  representation best;
  std::size_t encodings = 0;

  bool exact() const noexcept { return lower == upper; }
};

inline constexpr std::size_t kOracleMaxStates = 4;
inline constexpr std::size_t kOracleMaxLetters = 2;

inline oracle_result bc_oracle(const dfa& d, cost_model cm, const search_budget& b = {},
                               min_circuit_cache* cache = nullptr) {
  const std::size_t s = d.num_states();
  const std::size_t k = d.alphabet_size();
  if (s > kOracleMaxStates || k > kOracleMaxLetters) {
    throw budget_exceeded("bc_oracle is limited to " + std::to_string(kOracleMaxStates) +
                              " states and " + std::to_string(kOracleMaxLetters) + " letters",
                          static_cast<double>(std::max(s, k)));
  }
  min_circuit_cache local;
  min_circuit_cache& memo = cache ? *cache : local;

  const std::size_t b_q = ceil_log2(s);
  const std::size_t b_s = ceil_log2(k);
  const std::uint64_t codes = std::uint64_t{1} << b_q;

  std::vector<state_id> others;
  for (state_id q = 0; q < s; ++q) {
    if (q != d.start()) others.push_back(q);
  }
  // choose codes for `others` among 1..codes-1: iterate permutations of
  // the code list and keep the first |others| entries, skipping repeats
  std::vector<std::uint64_t> pool(codes - 1);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> letters(k);
  std::iota(letters.begin(), letters.end(), 0);

  oracle_result res;
  bool first = true;
  std::vector<std::vector<std::uint64_t>> seen;
  do {
    std::vector<std::uint64_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(others.size()));
    if (std::find(seen.begin(), seen.end(), chosen) != seen.end()) continue;
    seen.push_back(chosen);
    std::vector<std::uint64_t> lperm = letters;
    do {
      encoding e;
      e.b_q = b_q;
      e.b_sigma = b_s;
      e.input_code = lperm;
      e.state_code.assign(s, 0);
      for (std::size_t i = 0; i < others.size(); ++i) e.state_code[others[i]] = chosen[i];
      ++res.encodings;

      std::uint64_t f_care = 0, g_care = 0;
      for (state_id q = 0; q < s; ++q) {
        g_care |= std::uint64_t{1} << e.state_code[q];
        for (letter_id a = 0; a < k; ++a) {
          f_care |= std::uint64_t{1} << transition_input(e, e.input_code[a], e.state_code[q]);
        }
      }
      const auto& fr = memo.get(transition_table(d, e), f_care, b);
      const auto& gr = memo.get(acceptance_table(d, e), g_care, b);
      auto outputs = [&](const circuit& c) {
        return cm == cost_model::gates_plus_outputs ? c.num_outputs() - constant_output_count(c) : 0;
      };
      const std::size_t fixed = outputs(fr.c) + outputs(gr.c) + b_q;
      const std::size_t lo = fr.lower_gates + gr.lower_gates + fixed;
      const std::size_t hi = fr.upper_gates() + gr.upper_gates() + fixed;
      if (first || lo < res.lower) res.lower = lo;
      if (first || hi < res.upper) {
        res.upper = hi;
        res.best.enc = e;
        res.best.cm = cm;
        res.best.f = fr.c;
        res.best.g = gr.c;
      }
      first = false;
    } while (std::next_permutation(lperm.begin(), lperm.end()));
  } while (std::next_permutation(pool.begin(), pool.end()));
  return res;
}

inline constexpr std::size_t kSatVarCap = 24;

/// First satisfying assignment in numeric order (variable i = bit i).
inline std::optional<std::uint64_t> sat_brute(const cnf& c) {
  validate(c);
  if (c.num_vars > kSatVarCap) {
    throw budget_exceeded("sat_brute is limited to " + std::to_string(kSatVarCap) + " variables",
                          static_cast<double>(c.num_vars));
  }
  const std::uint64_t total = std::uint64_t{1} << c.num_vars;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (satisfies(c, a)) return a;
  }
  return std::nullopt;
}

}  // namespace bcaut

#endif
