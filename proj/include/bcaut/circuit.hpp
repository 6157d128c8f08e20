#ifndef BCAUT_CIRCUIT_HPP
#define BCAUT_CIRCUIT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace bcaut {

/// How circuit size is measured. `gates_plus_outputs` is the canonical
/// measure (gates plus non-constant outputs); `gates_only` counts gates.
enum class cost_model { gates_plus_outputs, gates_only };

inline const char* to_string(cost_model cm) {
  return cm == cost_model::gates_only ? "gates" : "gates-outputs";
}

enum class gate_kind : std::uint8_t { and_gate, or_gate, not_gate };

/// Reference to a wire: a primary input, an earlier gate, or a constant.
struct ref {
  enum class kind : std::uint8_t { input, gate, zero, one };

  kind type = kind::zero;
  std::uint32_t index = 0;

  static constexpr ref input(std::size_t i) {
    return {kind::input, static_cast<std::uint32_t>(i)};
  }
  static constexpr ref gate(std::size_t j) {
    return {kind::gate, static_cast<std::uint32_t>(j)};
  }
  static constexpr ref zero() { return {kind::zero, 0}; }
  static constexpr ref one() { return {kind::one, 0}; }
  static constexpr ref constant(bool v) { return v ? one() : zero(); }

  constexpr bool is_const() const { return type == kind::zero || type == kind::one; }
  constexpr bool is_gate() const { return type == kind::gate; }
  constexpr bool is_input() const { return type == kind::input; }

  auto operator<=>(const ref&) const = default;
};

struct gate {
  gate_kind kind;
  ref lhs;
  ref rhs;  // ref::zero() for NOT
  bool operator==(const gate&) const = default;
};

/// Combinational circuit over the standard base {AND, OR, NOT} with
/// fan-in 2/2/1. Gates are stored in topological order.
class circuit {
 public:
  circuit() = default;
  explicit circuit(std::size_t num_inputs) : num_inputs_(num_inputs) {}

  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::size_t gate_count() const noexcept { return gates_.size(); }
  const std::vector<gate>& gates() const noexcept { return gates_; }
  const std::vector<ref>& outputs() const noexcept { return outputs_; }

  ref add_gate(gate_kind kind, ref lhs, ref rhs = ref::zero()) {
    check(lhs);
    if (kind != gate_kind::not_gate) {
      check(rhs);
    } else {
      rhs = ref::zero();
    }
    gates_.push_back({kind, lhs, rhs});
    return ref::gate(gates_.size() - 1);
  }

  void add_output(ref r) {
    check(r);
    outputs_.push_back(r);
  }

  void set_outputs(std::vector<ref> outs) {
    for (ref r : outs) {
      check(r);
    }
    outputs_ = std::move(outs);
  }

  bool operator==(const circuit&) const = default;

 private:
  void check(ref r) const {
    if (r.is_input() && r.index >= num_inputs_) {
      throw range_error("input ref X" + std::to_string(r.index) + " out of range");
    }
    if (r.is_gate() && r.index >= gates_.size()) {
      throw range_error("gate ref G" + std::to_string(r.index) +
                        " does not precede its use");
    }
  }

  std::size_t num_inputs_ = 0;
  std::vector<gate> gates_;
  std::vector<ref> outputs_;
};

inline std::size_t constant_output_count(const circuit& c) {
  return static_cast<std::size_t>(std::count_if(
      c.outputs().begin(), c.outputs().end(), [](ref r) { return r.is_const(); }));
}

inline std::size_t size(const circuit& c, cost_model cm) {
  std::size_t s = c.gate_count();
  if (cm == cost_model::gates_plus_outputs) {
    s += c.num_outputs() - constant_output_count(c);
  }
  return s;
}

namespace detail {

template <typename Word>
Word gate_value(gate_kind k, Word a, Word b) {
  switch (k) {
    case gate_kind::and_gate:
      return a & b;
    case gate_kind::or_gate:
      return a | b;
    case gate_kind::not_gate:
      return static_cast<Word>(~a);
  }
  return a;
}

/// Word-parallel simulation. `inputs[i]` holds one bit per lane.
inline std::vector<std::uint64_t> simulate(const circuit& c,
                                           std::span<const std::uint64_t> inputs) {
  std::vector<std::uint64_t> val(c.gate_count());
  auto read = [&](ref r) -> std::uint64_t {
    switch (r.type) {
      case ref::kind::input:
        return inputs[r.index];
      case ref::kind::gate:
        return val[r.index];
      case ref::kind::zero:
        return 0;
      case ref::kind::one:
        return ~std::uint64_t{0};
    }
    return 0;
  };
  for (std::size_t j = 0; j < c.gate_count(); ++j) {
    const gate& g = c.gates()[j];
    val[j] = gate_value<std::uint64_t>(g.kind, read(g.lhs), read(g.rhs));
  }
  std::vector<std::uint64_t> out;
  out.reserve(c.num_outputs());
  for (ref r : c.outputs()) {
    out.push_back(read(r));
  }
  return out;
}

}  // namespace detail

/// Evaluates on a bitstring; input position i drives X<i>.
inline bitstring evaluate(const circuit& c, const bitstring& input) {
  if (input.size() != c.num_inputs()) {
    throw interface_mismatch("circuit has " + std::to_string(c.num_inputs()) +
                             " inputs, got " + std::to_string(input.size()) + " bits");
  }
  std::vector<std::uint64_t> in(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    in[i] = input[i] ? 1 : 0;
  }
  auto out = detail::simulate(c, in);
  bitstring result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    result[i] = (out[i] & 1U) != 0;
  }
  return result;
}

/// Same as evaluate() with inputs and outputs packed MSB-first into
/// integers (X0 is the most significant input bit).
inline std::uint64_t evaluate_value(const circuit& c, std::uint64_t input) {
  if (c.num_inputs() > 64 || c.num_outputs() > 64) {
    throw range_error("packed evaluation is limited to 64 bits");
  }
  const std::size_t n = c.num_inputs();
  std::vector<std::uint64_t> in(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i] = (input >> (n - 1 - i)) & 1U;
  }
  auto out = detail::simulate(c, in);
  std::uint64_t v = 0;
  for (auto w : out) {
    v = (v << 1) | (w & 1U);
  }
  return v;
}

/// Complete table of a multi-output function. Row r lists the outputs for
/// the input whose MSB-first value is r.
class truth_table {
 public:
  truth_table() = default;
  truth_table(std::size_t num_inputs, std::size_t num_outputs)
      : n_(num_inputs), m_(num_outputs), words_(word_count(num_inputs)),
        bits_(num_outputs, std::vector<std::uint64_t>(words_, 0)) {
    if (num_inputs > 30) {
      throw range_error("truth table too wide");
    }
  }

  std::size_t num_inputs() const noexcept { return n_; }
  std::size_t num_outputs() const noexcept { return m_; }
  std::uint64_t num_rows() const noexcept { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t row, std::size_t out) const {
    return ((bits_.at(out).at(row >> 6) >> (row & 63)) & 1U) != 0;
  }
  void set(std::uint64_t row, std::size_t out, bool v) {
    auto& w = bits_.at(out).at(row >> 6);
    const std::uint64_t bit = std::uint64_t{1} << (row & 63);
    w = v ? (w | bit) : (w & ~bit);
  }
  /// Output bits of row r packed MSB-first (output 0 is most significant).
  std::uint64_t row_value(std::uint64_t row) const {
    std::uint64_t v = 0;
    for (std::size_t o = 0; o < m_; ++o) {
      v = (v << 1) | (get(row, o) ? 1U : 0U);
    }
    return v;
  }
  void set_row_value(std::uint64_t row, std::uint64_t v) {
    for (std::size_t o = 0; o < m_; ++o) {
      set(row, o, ((v >> (m_ - 1 - o)) & 1U) != 0);
    }
  }
  bitstring row(std::uint64_t r) const { return to_bits(row_value(r), m_); }

  /// Column of output `out`, one bit per row, 64 rows per word.
  const std::vector<std::uint64_t>& column(std::size_t out) const { return bits_.at(out); }
  std::vector<std::uint64_t>& column(std::size_t out) { return bits_.at(out); }

  bool operator==(const truth_table&) const = default;

  static std::size_t word_count(std::size_t n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 1;
  std::vector<std::vector<std::uint64_t>> bits_;
};

/// Bit pattern of input X<i> (of n) over the 64 rows of word w.
inline std::uint64_t input_pattern(std::size_t n, std::size_t i, std::size_t w) {
  static constexpr std::uint64_t masks[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  const std::size_t shift = n - 1 - i;  // bit position within the row index
  std::uint64_t p;
  if (shift < 6) {
    p = masks[shift];
  } else {
    p = ((w >> (shift - 6)) & 1U) ? ~std::uint64_t{0} : 0;
  }
  if (n < 6) {
    p &= low_mask(std::size_t{1} << n);
  }
  return p;
}

inline truth_table truth_table_of(const circuit& c, std::size_t cap = 20) {
  const std::size_t n = c.num_inputs();
  if (n > cap) {
    throw budget_exceeded("truth table of " + std::to_string(n) +
                              " inputs exceeds cap " + std::to_string(cap),
                          static_cast<double>(n));
  }
  truth_table t(n, c.num_outputs());
  const std::size_t words = truth_table::word_count(n);
  std::vector<std::uint64_t> in(n);
  for (std::size_t w = 0; w < words; ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      in[i] = input_pattern(n, i, w);
    }
    auto out = detail::simulate(c, in);
    const std::uint64_t keep = n < 6 ? low_mask(std::size_t{1} << n) : ~std::uint64_t{0};
    for (std::size_t o = 0; o < out.size(); ++o) {
      t.column(o)[w] = out[o] & keep;
    }
  }
  return t;
}

/// Incremental construction with constant folding and structural hashing.
class circuit_builder {
 public:
  explicit circuit_builder(std::size_t num_inputs, bool hashing = true)
      : c_(num_inputs), hashing_(hashing) {}

  std::size_t num_inputs() const noexcept { return c_.num_inputs(); }
  ref input(std::size_t i) const {
    if (i >= c_.num_inputs()) {
      throw range_error("input index out of range");
    }
    return ref::input(i);
  }

  ref not_(ref a) {
    if (a.type == ref::kind::zero) return ref::one();
    if (a.type == ref::kind::one) return ref::zero();
    if (a.is_gate() && c_.gates()[a.index].kind == gate_kind::not_gate) {
      return c_.gates()[a.index].lhs;
    }
    return make(gate_kind::not_gate, a, ref::zero());
  }

  ref and_(ref a, ref b) {
    if (a.type == ref::kind::zero || b.type == ref::kind::zero) return ref::zero();
    if (a.type == ref::kind::one) return b;
    if (b.type == ref::kind::one) return a;
    if (a == b) return a;
    if (complementary(a, b)) return ref::zero();
    return make(gate_kind::and_gate, std::min(a, b), std::max(a, b));
  }

  ref or_(ref a, ref b) {
    if (a.type == ref::kind::one || b.type == ref::kind::one) return ref::one();
    if (a.type == ref::kind::zero) return b;
    if (b.type == ref::kind::zero) return a;
    if (a == b) return a;
    if (complementary(a, b)) return ref::one();
    return make(gate_kind::or_gate, std::min(a, b), std::max(a, b));
  }

  /// (a OR b) AND NOT (a AND b): four gates in the standard base.
  ref xor_(ref a, ref b) {
    if (a.is_const()) return a.type == ref::kind::one ? not_(b) : b;
    if (b.is_const()) return b.type == ref::kind::one ? not_(a) : a;
    if (a == b) return ref::zero();
    if (complementary(a, b)) return ref::one();
    return and_(or_(a, b), not_(and_(a, b)));
  }

  /// sel ? hi : lo
  ref mux(ref sel, ref hi, ref lo) {
    if (sel.type == ref::kind::one) return hi;
    if (sel.type == ref::kind::zero) return lo;
    if (hi == lo) return hi;
    if (hi.type == ref::kind::one && lo.type == ref::kind::zero) return sel;
    if (hi.type == ref::kind::zero && lo.type == ref::kind::one) return not_(sel);
    if (hi.type == ref::kind::one) return or_(sel, lo);
    if (lo.type == ref::kind::one) return or_(not_(sel), hi);
    if (hi.type == ref::kind::zero) return and_(not_(sel), lo);
    if (lo.type == ref::kind::zero) return and_(sel, hi);
    return or_(and_(sel, hi), and_(not_(sel), lo));
  }

  ref and_all(std::span<const ref> xs) {
    ref acc = ref::one();
    for (ref x : xs) acc = and_(acc, x);
    return acc;
  }
  ref or_all(std::span<const ref> xs) {
    ref acc = ref::zero();
    for (ref x : xs) acc = or_(acc, x);
    return acc;
  }

  /// Raw gate, bypassing folding and hashing.
  ref raw(gate_kind kind, ref a, ref b = ref::zero()) { return c_.add_gate(kind, a, b); }

  void output(ref r) { c_.add_output(r); }
  const circuit& peek() const noexcept { return c_; }
  std::size_t gate_count() const noexcept { return c_.gate_count(); }
  circuit finish() && { return std::move(c_); }

 private:
  bool complementary(ref a, ref b) const {
    auto is_not_of = [&](ref x, ref y) {
      return x.is_gate() && c_.gates()[x.index].kind == gate_kind::not_gate &&
             c_.gates()[x.index].lhs == y;
    };
    return is_not_of(a, b) || is_not_of(b, a);
  }

  ref make(gate_kind kind, ref a, ref b) {
    if (!hashing_) {
      return c_.add_gate(kind, a, b);
    }
    auto key = std::tuple{kind, a, b};
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      return it->second;
    }
    ref r = c_.add_gate(kind, a, b);
    cache_.emplace(key, r);
    return r;
  }

  circuit c_;
  bool hashing_;
  std::map<std::tuple<gate_kind, ref, ref>, ref> cache_;
};

/// Instantiates `src` inside `b` with its inputs bound to `inputs`, going
/// through the builder's folding. Returns the refs of src's outputs.
inline std::vector<ref> embed(circuit_builder& b, const circuit& src,
                              std::span<const ref> inputs) {
  if (inputs.size() != src.num_inputs()) {
    throw interface_mismatch("embedding needs one ref per input");
  }
  std::vector<ref> map(src.gate_count());
  auto tr = [&](ref r) -> ref {
    if (r.is_input()) return inputs[r.index];
    if (r.is_gate()) return map[r.index];
    return r;
  };
  for (std::size_t j = 0; j < src.gate_count(); ++j) {
    const gate& g = src.gates()[j];
    switch (g.kind) {
      case gate_kind::and_gate:
        map[j] = b.and_(tr(g.lhs), tr(g.rhs));
        break;
      case gate_kind::or_gate:
        map[j] = b.or_(tr(g.lhs), tr(g.rhs));
        break;
      case gate_kind::not_gate:
        map[j] = b.not_(tr(g.lhs));
        break;
    }
  }
  std::vector<ref> outs;
  for (ref r : src.outputs()) {
    outs.push_back(tr(r));
  }
  return outs;
}

/// Gate-for-gate copy of `src` into `dst`; the gate count grows by exactly
/// src.gate_count().
inline std::vector<ref> copy_into(circuit& dst, const circuit& src,
                                  std::span<const ref> inputs) {
  if (inputs.size() != src.num_inputs()) {
    throw interface_mismatch("copy needs one ref per input");
  }
  std::vector<ref> map(src.gate_count());
  auto tr = [&](ref r) -> ref {
    if (r.is_input()) return inputs[r.index];
    if (r.is_gate()) return map[r.index];
    return r;
  };
  for (std::size_t j = 0; j < src.gate_count(); ++j) {
    const gate& g = src.gates()[j];
    map[j] = dst.add_gate(g.kind, tr(g.lhs), g.kind == gate_kind::not_gate ? ref::zero() : tr(g.rhs));
  }
  std::vector<ref> outs;
  for (ref r : src.outputs()) {
    outs.push_back(tr(r));
  }
  return outs;
}

inline std::vector<ref> input_refs(std::size_t first, std::size_t count) {
  std::vector<ref> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    v.push_back(ref::input(first + i));
  }
  return v;
}

/// Drops gates that do not reach an output and renumbers the rest.
inline circuit sweep(const circuit& c) {
  std::vector<bool> live(c.gate_count(), false);
  for (ref r : c.outputs()) {
    if (r.is_gate()) live[r.index] = true;
  }
  for (std::size_t j = c.gate_count(); j-- > 0;) {
    if (!live[j]) continue;
    const gate& g = c.gates()[j];
    if (g.lhs.is_gate()) live[g.lhs.index] = true;
    if (g.kind != gate_kind::not_gate && g.rhs.is_gate()) live[g.rhs.index] = true;
  }
  circuit out(c.num_inputs());
  std::vector<ref> map(c.gate_count());
  auto tr = [&](ref r) { return r.is_gate() ? map[r.index] : r; };
  for (std::size_t j = 0; j < c.gate_count(); ++j) {
    if (live[j]) {
      const gate& g = c.gates()[j];
      map[j] = out.add_gate(g.kind, tr(g.lhs), tr(g.rhs));
    }
  }
  for (ref r : c.outputs()) {
    out.add_output(tr(r));
  }
  return out;
}

/// Merges a transition circuit f (b_sigma + b_q inputs, b_q outputs) and an
/// acceptance circuit g (b_q inputs, 1 output) into one circuit with
/// b_sigma + b_q inputs and b_q + 1 outputs. g reads the state inputs.
inline circuit merge_fg(const circuit& f, const circuit& g, std::size_t b_q) {
  if (f.num_inputs() < b_q || f.num_outputs() != b_q || g.num_inputs() != b_q ||
      g.num_outputs() != 1) {
    throw interface_mismatch("merge_fg: f must map b_sigma+b_q -> b_q and g b_q -> 1");
  }
  const std::size_t b_sigma = f.num_inputs() - b_q;
  circuit h(b_sigma + b_q);
  auto f_out = copy_into(h, f, input_refs(0, b_sigma + b_q));
  auto g_out = copy_into(h, g, input_refs(b_sigma, b_q));
  f_out.push_back(g_out.front());
  h.set_outputs(std::move(f_out));
  return h;
}

/// Chains `steps` copies of f starting from the all-zero state and feeds
/// the final state to g. Inputs are the letter codes, step by step.
inline circuit unroll(const circuit& f, const circuit& g, std::size_t b_sigma,
                      std::size_t b_q, std::size_t steps) {
  if (f.num_inputs() != b_sigma + b_q || f.num_outputs() != b_q ||
      g.num_inputs() != b_q || g.num_outputs() != 1) {
    throw interface_mismatch("unroll: circuit widths do not match b_sigma/b_q");
  }
  circuit_builder b(steps * b_sigma);
  std::vector<ref> state(b_q, ref::zero());
  for (std::size_t t = 0; t < steps; ++t) {
    std::vector<ref> in = input_refs(t * b_sigma, b_sigma);
    in.insert(in.end(), state.begin(), state.end());
    state = embed(b, f, in);
  }
  b.output(embed(b, g, state).front());
  return sweep(std::move(b).finish());
}

/// Number of distinct functions {0,1}^n -> {0,1}^m computed by circuits
/// with at most `max_gates` gates whose outputs are inputs or gates.
/// Explores sets of computed functions breadth-first; refuses when more
/// than `max_visited` sets would be stored.
inline std::uint64_t enumerate_functions(std::size_t n, std::size_t m,
                                         std::size_t max_gates,
                                         std::uint64_t max_visited = 2'000'000) {
  if (n == 0 || n > 4 || m == 0 || m > 3) {
    throw budget_exceeded("function enumeration supports 1 <= n <= 4, 1 <= m <= 3",
                          static_cast<double>(n));
  }
  using fn = std::uint16_t;
  const std::uint64_t full = low_mask(std::size_t{1} << n);
  std::vector<fn> inputs;
  for (std::size_t i = 0; i < n; ++i) {
    inputs.push_back(static_cast<fn>(input_pattern(n, i, 0)));
  }
  std::sort(inputs.begin(), inputs.end());
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());

  std::set<std::vector<fn>> seen{inputs};
  std::vector<std::vector<fn>> frontier{inputs};
  std::set<std::vector<fn>> tuples;

  auto collect = [&](const std::vector<fn>& set) {
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::vector<fn> t(m);
      for (std::size_t o = 0; o < m; ++o) t[o] = set[idx[o]];
      tuples.insert(std::move(t));
      std::size_t o = m;
      while (o > 0) {
        --o;
        if (++idx[o] < set.size()) break;
        idx[o] = 0;
        if (o == 0) return;
      }
    }
  };
  collect(inputs);

  for (std::size_t level = 0; level < max_gates; ++level) {
    std::vector<std::vector<fn>> next;
    for (const auto& set : frontier) {
      std::vector<fn> produced;
      for (std::size_t i = 0; i < set.size(); ++i) {
        produced.push_back(static_cast<fn>(~set[i] & full));
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          produced.push_back(static_cast<fn>(set[i] & set[j]));
          produced.push_back(static_cast<fn>(set[i] | set[j]));
        }
      }
      for (fn f : produced) {
        if (std::binary_search(set.begin(), set.end(), f)) continue;
        std::vector<fn> grown = set;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), f), f);
        if (seen.insert(grown).second) {
          if (seen.size() > max_visited) {
            throw budget_exceeded("function enumeration exceeded its visit budget",
                                  static_cast<double>(seen.size()));
          }
          collect(grown);
          next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  return tuples.size();
}

}  // namespace bcaut

#endif
