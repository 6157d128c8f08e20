#ifndef BCAUT_ENCODING_HPP
#define BCAUT_ENCODING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "automata.hpp"
#include "bits.hpp"
#include "circuit.hpp"

namespace bcaut {

/// Injective binary codes for letters and states. Codes are stored as
/// MSB-first integers of width b_sigma / b_q. The state table may be empty
/// when only the circuits are known (e.g. a bundle produced by a language
/// operation); such a representation can be extracted but not verified.
struct encoding {
  std::size_t b_sigma = 0;
  std::size_t b_q = 0;
  std::vector<std::uint64_t> input_code;
  std::vector<std::uint64_t> state_code;

  std::size_t alphabet_size() const noexcept { return input_code.size(); }
  bool has_state_codes() const noexcept { return !state_code.empty(); }
  bool operator==(const encoding&) const = default;
};

namespace detail {
inline void check_codes(const std::vector<std::uint64_t>& codes, std::size_t width,
                        const char* what) {
  if (width > 64) {
    throw range_error(std::string(what) + " width exceeds 64 bits");
  }
  std::set<std::uint64_t> seen;
  for (auto c : codes) {
    if ((c & ~low_mask(width)) != 0) {
      throw range_error(std::string(what) + " code does not fit its width");
    }
    if (!seen.insert(c).second) {
      throw range_error(std::string(what) + " encoding is not injective");
    }
  }
}
}  // namespace detail

inline void validate(const encoding& e) {
  detail::check_codes(e.input_code, e.b_sigma, "input");
  detail::check_codes(e.state_code, e.b_q, "state");
  if (e.input_code.empty()) {
    throw range_error("encoding needs at least one letter");
  }
}

/// Letter j and state i get the binary numerals j and i; when the start is
/// not state 0 it trades codes with state 0 so that it is all zeros.
inline encoding minimal_encoding(const dfa& d) {
  encoding e;
  e.b_sigma = ceil_log2(d.alphabet_size());
  e.b_q = ceil_log2(d.num_states());
  for (std::uint64_t a = 0; a < d.alphabet_size(); ++a) {
    e.input_code.push_back(a);
  }
  for (std::uint64_t q = 0; q < d.num_states(); ++q) {
    e.state_code.push_back(q);
  }
  std::swap(e.state_code[0], e.state_code[d.start()]);
  return e;
}

/// Encoding plus transition circuit f (b_sigma + b_q -> b_q) and
/// acceptance circuit g (b_q -> 1).
struct representation {
  encoding enc;
  circuit f;
  circuit g;
  cost_model cm = cost_model::gates_plus_outputs;
};

inline void check_interfaces(const representation& r) {
  validate(r.enc);
  if (r.f.num_inputs() != r.enc.b_sigma + r.enc.b_q || r.f.num_outputs() != r.enc.b_q) {
    throw interface_mismatch("transition circuit must map b_sigma+b_q inputs to b_q outputs");
  }
  if (r.g.num_inputs() != r.enc.b_q || r.g.num_outputs() != 1) {
    throw interface_mismatch("acceptance circuit must map b_q inputs to one output");
  }
}

/// size(f) + size(g) + b_q.
inline std::size_t bc_of_representation(const representation& r, cost_model cm) {
  return size(r.f, cm) + size(r.g, cm) + r.enc.b_q;
}
inline std::size_t bc_of_representation(const representation& r) {
  return bc_of_representation(r, r.cm);
}

/// First point where a representation disagrees with its automaton.
struct violation {
  state_id state = 0;
  std::optional<letter_id> letter;  // empty: acceptance condition failed
  std::string detail;
};

inline std::uint64_t transition_input(const encoding& e, std::uint64_t letter_code,
                                      std::uint64_t state_code) {
  return (letter_code << e.b_q) | state_code;
}

/// Checks both simulation conditions for every (letter, state) pair.
inline std::optional<violation> check_representation(const dfa& d, const representation& r) {
  check_interfaces(r);
  const encoding& e = r.enc;
  if (e.alphabet_size() != d.alphabet_size() || e.state_code.size() != d.num_states()) {
    throw interface_mismatch("encoding does not cover the automaton's states and letters");
  }
  if (e.state_code[d.start()] != 0) {
    return violation{d.start(), std::nullopt, "start state is not encoded as all zeros"};
  }
  for (state_id q = 0; q < d.num_states(); ++q) {
    for (letter_id a = 0; a < d.alphabet_size(); ++a) {
      auto got = evaluate_value(r.f, transition_input(e, e.input_code[a], e.state_code[q]));
      auto want = e.state_code[d.next(q, a)];
      if (got != want) {
        return violation{q, a,
                         "next state code " + code_to_string(got, e.b_q) + ", expected " +
                             code_to_string(want, e.b_q)};
      }
    }
  }
  for (state_id q = 0; q < d.num_states(); ++q) {
    bool acc = evaluate_value(r.g, e.state_code[q]) != 0;
    if (acc != d.accepting(q)) {
      return violation{q, std::nullopt,
                       acc ? "acceptance circuit accepts a rejecting state"
                           : "acceptance circuit rejects an accepting state"};
    }
  }
  return std::nullopt;
}

inline bool verify_representation(const dfa& d, const representation& r) {
  return !check_representation(d, r).has_value();
}

/// Reachable part of the register machine; codes[i] is the register
/// value of extracted state i.
struct extraction {
  dfa automaton;
  std::vector<std::uint64_t> codes;
};

inline extraction extract(const representation& r, std::size_t cap = 20) {
  check_interfaces(r);
  if (r.enc.b_q > cap) {
    throw budget_exceeded("extraction of " + std::to_string(r.enc.b_q) +
                              " state bits exceeds cap " + std::to_string(cap),
                          static_cast<double>(r.enc.b_q));
  }
  const encoding& e = r.enc;
  const std::size_t k = e.alphabet_size();
  std::unordered_map<std::uint64_t, state_id> index{{0, 0}};
  std::vector<std::uint64_t> codes{0};
  std::vector<state_id> delta;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (letter_id a = 0; a < k; ++a) {
      auto nx = evaluate_value(r.f, transition_input(e, e.input_code[a], codes[i]));
      auto [it, inserted] = index.emplace(nx, static_cast<state_id>(codes.size()));
      if (inserted) {
        codes.push_back(nx);
      }
      delta.push_back(it->second);
    }
  }
  std::vector<bool> acc(codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    acc[i] = evaluate_value(r.g, codes[i]) != 0;
  }
  return {dfa(codes.size(), k, std::move(delta), 0, std::move(acc)), std::move(codes)};
}

inline dfa extract_dfa(const representation& r, std::size_t cap = 20) {
  return extract(r, cap).automaton;
}

/// Relabels the register by XOR with `new_zero`, so that register value
/// `new_zero` of `r` becomes the all-zero start. Adds at most one NOT per
/// set bit at each of: f's state inputs, f's outputs, g's inputs.
inline representation normalize_start_zero(const representation& r, const bitstring& new_zero) {
  check_interfaces(r);
  const std::size_t bq = r.enc.b_q;
  const std::size_t bs = r.enc.b_sigma;
  if (new_zero.size() != bq) {
    throw interface_mismatch("start mask must have b_q bits");
  }
  auto reads_input = [](const circuit& c, std::size_t i) {
    for (const gate& g : c.gates()) {
      if (g.lhs == ref::input(i) || (g.kind != gate_kind::not_gate && g.rhs == ref::input(i))) {
        return true;
      }
    }
    for (ref o : c.outputs()) {
      if (o == ref::input(i)) return true;
    }
    return false;
  };
  // new circuit with the given inputs flipped where the mask is set
  auto relabel = [&](const circuit& src, std::size_t offset, bool flip_outputs) {
    circuit out(src.num_inputs());
    std::vector<ref> in = input_refs(0, src.num_inputs());
    for (std::size_t i = 0; i < bq; ++i) {
      if (new_zero[i] && reads_input(src, offset + i)) {
        in[offset + i] = out.add_gate(gate_kind::not_gate, ref::input(offset + i));
      }
    }
    auto outs = copy_into(out, src, in);
    if (flip_outputs) {
      for (std::size_t i = 0; i < bq; ++i) {
        if (!new_zero[i]) continue;
        ref& o = outs[i];
        if (o.is_const()) {
          o = ref::constant(o.type == ref::kind::zero);
        } else {
          o = out.add_gate(gate_kind::not_gate, o);
        }
      }
    }
    out.set_outputs(std::move(outs));
    return out;
  };
  representation res;
  res.cm = r.cm;
  res.enc = r.enc;
  const std::uint64_t mask = to_value(new_zero);
  for (auto& c : res.enc.state_code) {
    c ^= mask;
  }
  res.f = relabel(r.f, bs, true);
  res.g = relabel(r.g, 0, false);
  return res;
}

}  // namespace bcaut

#endif
