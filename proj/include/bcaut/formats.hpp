#ifndef BCAUT_FORMATS_HPP
#define BCAUT_FORMATS_HPP

// Text formats: .dfa, .nfa and .bcirc.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "automata.hpp"
#include "circuit.hpp"
#include "text_io.hpp"

namespace bcaut::io {

inline dfa parse_dfa(std::istream& in) {
  line_reader r(in);
  auto head = r.expect("DFA header");
  if (head[0] != "DFA") r.fail("expected 'DFA <s> <k>'");
  expect_arity(r, head, 3);
  const auto s = parse_uint(r, head[1]);
  const auto k = parse_uint(r, head[2]);
  if (s == 0 || k == 0) r.fail("DFA needs s >= 1 and k >= 1");
  if (s * k > (std::uint64_t{1} << 26)) r.fail("DFA too large");

  auto st = r.expect("START line");
  if (st[0] != "START") r.fail("expected 'START <id>'");
  expect_arity(r, st, 2);
  const auto start = parse_uint(r, st[1]);
  if (start >= s) r.fail("start state out of range");

  auto acc_line = r.expect("ACCEPT line");
  if (acc_line[0] != "ACCEPT") r.fail("expected 'ACCEPT <id>*'");
  std::vector<bool> acc(s, false);
  for (std::size_t i = 1; i < acc_line.size(); ++i) {
    auto q = parse_uint(r, acc_line[i]);
    if (q >= s) r.fail("accepting state out of range");
    if (acc[q]) r.fail("accepting state listed twice");
    acc[q] = true;
  }

  std::vector<state_id> delta(s * k, 0);
  std::vector<bool> seen(s * k, false);
  std::size_t count = 0;
  while (auto t = r.next()) {
    if ((*t)[0] != "T") r.fail("expected 'T <state> <letter> <next>'");
    expect_arity(r, *t, 4);
    auto q = parse_uint(r, (*t)[1]);
    auto a = parse_uint(r, (*t)[2]);
    auto nx = parse_uint(r, (*t)[3]);
    if (q >= s || nx >= s) r.fail("state out of range");
    if (a >= k) r.fail("letter out of range");
    if (seen[q * k + a]) r.fail("duplicate transition");
    seen[q * k + a] = true;
    delta[q * k + a] = static_cast<state_id>(nx);
    ++count;
  }
  if (count != s * k) {
    r.fail("expected " + std::to_string(s * k) + " transitions, found " +
           std::to_string(count));
  }
  return dfa(s, k, std::move(delta), static_cast<state_id>(start), std::move(acc));
}

inline std::string write_dfa(const dfa& d) {
  std::ostringstream out;
  out << "DFA " << d.num_states() << ' ' << d.alphabet_size() << '\n';
  out << "START " << d.start() << '\n';
  out << "ACCEPT";
  for (state_id q = 0; q < d.num_states(); ++q) {
    if (d.accepting(q)) out << ' ' << q;
  }
  out << '\n';
  for (state_id q = 0; q < d.num_states(); ++q) {
    for (letter_id a = 0; a < d.alphabet_size(); ++a) {
      out << "T " << q << ' ' << a << ' ' << d.next(q, a) << '\n';
    }
  }
  return out.str();
}

inline nfa parse_nfa(std::istream& in) {
  line_reader r(in);
  auto head = r.expect("NFA header");
  if (head[0] != "NFA") r.fail("expected 'NFA <n> <k>'");
  expect_arity(r, head, 3);
  const auto n = parse_uint(r, head[1]);
  const auto k = parse_uint(r, head[2]);
  if (n == 0 || k == 0) r.fail("NFA needs n >= 1 and k >= 1");
  if (n * k > (std::uint64_t{1} << 26)) r.fail("NFA too large");

  auto read_set = [&](const char* tag, bool nonempty) {
    auto t = r.expect(tag);
    if (t[0] != tag) r.fail(std::string("expected '") + tag + "' line");
    if (nonempty && t.size() < 2) r.fail(std::string(tag) + " needs at least one state");
    std::vector<bool> flags(n, false);
    for (std::size_t i = 1; i < t.size(); ++i) {
      auto q = parse_uint(r, t[i]);
      if (q >= n) r.fail("state out of range");
      if (flags[q]) r.fail("state listed twice");
      flags[q] = true;
    }
    return flags;
  };
  auto starts = read_set("STARTS", true);
  auto acc = read_set("ACCEPT", false);

  std::set<nfa_edge> edges;
  while (auto t = r.next()) {
    if ((*t)[0] != "T") r.fail("expected 'T <state> <letter> <next>'");
    expect_arity(r, *t, 4);
    const auto& lt = (*t)[2];
    if (lt == "eps" || lt == "e" || lt == "-" || lt == "\u03b5") {
      r.fail("epsilon transitions are not supported");
    }
    auto q = parse_uint(r, (*t)[1]);
    auto a = parse_uint(r, lt);
    auto nx = parse_uint(r, (*t)[3]);
    if (q >= n || nx >= n) r.fail("state out of range");
    if (a >= k) r.fail("letter out of range");
    if (!edges.insert({static_cast<state_id>(q), static_cast<letter_id>(a),
                       static_cast<state_id>(nx)})
             .second) {
      r.fail("duplicate transition");
    }
  }
  return nfa(n, k, {edges.begin(), edges.end()}, std::move(starts), std::move(acc));
}

inline std::string write_nfa(const nfa& a) {
  std::ostringstream out;
  out << "NFA " << a.num_states() << ' ' << a.alphabet_size() << '\n';
  out << "STARTS";
  for (state_id q = 0; q < a.num_states(); ++q) {
    if (a.starts()[q]) out << ' ' << q;
  }
  out << "\nACCEPT";
  for (state_id q = 0; q < a.num_states(); ++q) {
    if (a.accepting(q)) out << ' ' << q;
  }
  out << '\n';
  for (const auto& e : a.edges()) {
    out << "T " << e.from << ' ' << e.letter << ' ' << e.to << '\n';
  }
  return out.str();
}

inline std::string ref_name(ref r) {
  switch (r.type) {
    case ref::kind::input:
      return "X" + std::to_string(r.index);
    case ref::kind::gate:
      return "G" + std::to_string(r.index);
    case ref::kind::zero:
      return "ZERO";
    case ref::kind::one:
      return "ONE";
  }
  return "?";
}

inline ref parse_ref(const line_reader& r, const std::string& tok) {
  if (tok == "ZERO") return ref::zero();
  if (tok == "ONE") return ref::one();
  if (tok.size() >= 2 && (tok[0] == 'X' || tok[0] == 'G')) {
    auto idx = parse_uint(r, std::string_view(tok).substr(1));
    return tok[0] == 'X' ? ref::input(idx) : ref::gate(idx);
  }
  r.fail("bad wire reference '" + tok + "'");
}

/// Reads one circuit block, from its CIRCUIT header through OUTPUTS.
inline circuit parse_circuit(line_reader& r) {
  auto head = r.expect("CIRCUIT header");
  if (head[0] != "CIRCUIT") r.fail("expected 'CIRCUIT <inputs> <outputs>'");
  expect_arity(r, head, 3);
  const auto n = parse_uint(r, head[1]);
  const auto m = parse_uint(r, head[2]);
  if (n > 4096 || m > 4096) r.fail("circuit interface too wide");
  circuit c(n);
  for (;;) {
    auto t = r.expect("gate or OUTPUTS line");
    if (t[0] == "OUTPUTS") {
      if (t.size() - 1 != m) {
        r.fail("OUTPUTS lists " + std::to_string(t.size() - 1) + " refs, header says " +
               std::to_string(m));
      }
      std::vector<ref> outs;
      for (std::size_t i = 1; i < t.size(); ++i) {
        outs.push_back(parse_ref(r, t[i]));
      }
      try {
        c.set_outputs(std::move(outs));
      } catch (const range_error& e) {
        r.fail(e.what());
      }
      return c;
    }
    if (t.size() < 4 || t[1] != "=" || t[0].size() < 2 || t[0][0] != 'G') {
      r.fail("expected 'G<j> = AND|OR|NOT <ref>...'");
    }
    auto j = parse_uint(r, std::string_view(t[0]).substr(1));
    if (j != c.gate_count()) {
      r.fail("gate indices must be consecutive from 0; expected G" +
             std::to_string(c.gate_count()));
    }
    gate_kind kind;
    if (t[2] == "AND") {
      kind = gate_kind::and_gate;
    } else if (t[2] == "OR") {
      kind = gate_kind::or_gate;
    } else if (t[2] == "NOT") {
      kind = gate_kind::not_gate;
    } else {
      r.fail("unknown gate type '" + t[2] + "'");
    }
    const std::size_t arity = kind == gate_kind::not_gate ? 1 : 2;
    if (t.size() != 3 + arity) {
      r.fail(t[2] + " takes " + std::to_string(arity) + " operand(s)");
    }
    ref a = parse_ref(r, t[3]);
    ref b = arity == 2 ? parse_ref(r, t[4]) : ref::zero();
    try {
      c.add_gate(kind, a, b);
    } catch (const range_error& e) {
      r.fail(e.what());
    }
  }
}

inline circuit parse_circuit(std::istream& in) {
  line_reader r(in);
  circuit c = parse_circuit(r);
  if (r.next()) r.fail("trailing content after OUTPUTS");
  return c;
}

inline std::string write_circuit(const circuit& c) {
  std::ostringstream out;
  out << "CIRCUIT " << c.num_inputs() << ' ' << c.num_outputs() << '\n';
  for (std::size_t j = 0; j < c.gate_count(); ++j) {
    const gate& g = c.gates()[j];
    out << 'G' << j << " = ";
    switch (g.kind) {
      case gate_kind::and_gate:
        out << "AND " << ref_name(g.lhs) << ' ' << ref_name(g.rhs);
        break;
      case gate_kind::or_gate:
        out << "OR " << ref_name(g.lhs) << ' ' << ref_name(g.rhs);
        break;
      case gate_kind::not_gate:
        out << "NOT " << ref_name(g.lhs);
        break;
    }
    out << '\n';
  }
  out << "OUTPUTS";
  for (ref r : c.outputs()) {
    out << ' ' << ref_name(r);
  }
  out << '\n';
  return out.str();
}

template <typename T, typename Parse>
T parse_string(const std::string& text, Parse parse) {
  std::istringstream in(text);
  return parse(in);
}

}  // namespace bcaut::io

#endif
