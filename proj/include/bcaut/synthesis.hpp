#ifndef BCAUT_SYNTHESIS_HPP
#define BCAUT_SYNTHESIS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "automata.hpp"
#include "circuit.hpp"
#include "encoding.hpp"

namespace bcaut {

namespace detail {

/// A slice of a truth-table column: `nbits` rows (a power of two).
struct column_slice {
  std::vector<std::uint64_t> words;
  std::uint64_t nbits;

  bool all(bool v) const {
    if (nbits < 64) {
      const std::uint64_t m = low_mask(nbits);
      return (words[0] & m) == (v ? m : 0);
    }
    for (auto w : words) {
      if (w != (v ? ~std::uint64_t{0} : 0)) return false;
    }
    return true;
  }

  /// Half of the rows: `upper` selects the rows whose leading variable is 1.
  column_slice half(bool upper) const {
    const std::uint64_t h = nbits / 2;
    if (nbits <= 64) {
      std::uint64_t w = words[0];
      if (upper) w >>= h;
      return {{w & low_mask(h)}, h};
    }
    const std::size_t hw = words.size() / 2;
    auto first = words.begin() + (upper ? static_cast<std::ptrdiff_t>(hw) : 0);
    return {std::vector<std::uint64_t>(first, first + static_cast<std::ptrdiff_t>(hw)), h};
  }

  bool operator==(const column_slice&) const = default;
  auto operator<=>(const column_slice& o) const {
    return std::tie(nbits, words) <=> std::tie(o.nbits, o.words);
  }
};

/// Shannon expansion on the variables in input order, memoized on
/// (level, sub-function) so identical cofactors are shared across outputs.
class shannon_builder {
 public:
  explicit shannon_builder(circuit_builder& b) : b_(b) {}

  ref build(std::size_t level, const column_slice& f) {
    if (f.all(false)) return ref::zero();
    if (f.all(true)) return ref::one();
    auto key = std::pair{level, f};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    column_slice lo = f.half(false);
    column_slice hi = f.half(true);
    ref x = b_.input(level);
    ref result;
    if (lo == hi) {
      result = build(level + 1, lo);
    } else {
      ref r1 = build(level + 1, hi);
      ref r0 = build(level + 1, lo);
      result = b_.mux(x, r1, r0);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  circuit_builder& b_;
  std::map<std::pair<std::size_t, column_slice>, ref> memo_;
};

inline std::uint64_t popcount_column(const truth_table& t, std::size_t o) {
  std::uint64_t p = 0;
  for (auto w : t.column(o)) p += static_cast<std::uint64_t>(std::popcount(w));
  return p;
}

inline circuit dnf_circuit(const truth_table& t) {
  const std::size_t n = t.num_inputs();
  circuit_builder b(n);
  std::vector<ref> outs;
  for (std::size_t o = 0; o < t.num_outputs(); ++o) {
    ref acc = ref::zero();
    for (std::uint64_t row = 0; row < t.num_rows(); ++row) {
      if (!t.get(row, o)) continue;
      ref term = ref::one();
      for (std::size_t i = 0; i < n; ++i) {
        bool bit = ((row >> (n - 1 - i)) & 1U) != 0;
        ref lit = bit ? b.input(i) : b.not_(b.input(i));
        term = b.and_(term, lit);
      }
      acc = b.or_(acc, term);
    }
    if (popcount_column(t, o) == t.num_rows()) acc = ref::one();
    outs.push_back(acc);
  }
  for (ref r : outs) b.output(r);
  return sweep(std::move(b).finish());
}

}  // namespace detail

/// Gate count of the textbook sum-of-minterms circuit: per non-constant
/// output with p minterms, p(n-1) ANDs and p-1 ORs; plus n shared NOTs.
inline std::uint64_t trivial_dnf_size(const truth_table& t) {
  const std::uint64_t n = t.num_inputs();
  std::uint64_t total = 0;
  bool any = false;
  for (std::size_t o = 0; o < t.num_outputs(); ++o) {
    std::uint64_t p = detail::popcount_column(t, o);
    if (p == 0 || p == t.num_rows()) continue;
    any = true;
    total += p * (n > 0 ? n - 1 : 0) + (p - 1);
  }
  return any ? total + n : 0;
}

/// Circuit computing exactly `t`. Shannon cofactor expansion with shared
/// sub-circuits; falls back to the sum-of-minterms circuit whenever that
/// one is smaller.
inline circuit synthesize_from_table(const truth_table& t, std::size_t cap = 20) {
  if (t.num_inputs() > cap) {
    throw budget_exceeded("synthesis of " + std::to_string(t.num_inputs()) +
                              " inputs exceeds cap " + std::to_string(cap),
                          static_cast<double>(t.num_inputs()));
  }
  circuit_builder b(t.num_inputs());
  detail::shannon_builder sh(b);
  std::vector<ref> outs;
  for (std::size_t o = 0; o < t.num_outputs(); ++o) {
    outs.push_back(sh.build(0, {t.column(o), t.num_rows()}));
  }
  for (ref r : outs) b.output(r);
  circuit c = sweep(std::move(b).finish());
  if (c.gate_count() > trivial_dnf_size(t)) {
    return detail::dnf_circuit(t);
  }
  return c;
}

/// Transition table under `e`: row (letter code, state code) -> next code.
/// Rows that are not codes of any (letter, state) pair are zero.
inline truth_table transition_table(const dfa& d, const encoding& e) {
  truth_table t(e.b_sigma + e.b_q, e.b_q);
  for (state_id q = 0; q < d.num_states(); ++q) {
    for (letter_id a = 0; a < d.alphabet_size(); ++a) {
      t.set_row_value(transition_input(e, e.input_code[a], e.state_code[q]),
                      e.state_code[d.next(q, a)]);
    }
  }
  return t;
}

inline truth_table acceptance_table(const dfa& d, const encoding& e) {
  truth_table t(e.b_q, 1);
  for (state_id q = 0; q < d.num_states(); ++q) {
    t.set(e.state_code[q], 0, d.accepting(q));
  }
  return t;
}

/// Synthesizes f and g from the encoded tables.
inline representation represent_dfa(const dfa& d, const encoding& e,
                                    cost_model cm = cost_model::gates_plus_outputs) {
  validate(e);
  if (e.alphabet_size() != d.alphabet_size() || e.state_code.size() != d.num_states()) {
    throw interface_mismatch("encoding does not cover the automaton");
  }
  if (e.state_code[d.start()] != 0) {
    throw interface_mismatch("encoding must map the start state to all zeros");
  }
  representation r;
  r.enc = e;
  r.cm = cm;
  r.f = synthesize_from_table(transition_table(d, e));
  r.g = synthesize_from_table(acceptance_table(d, e));
  return r;
}

}  // namespace bcaut

#endif
