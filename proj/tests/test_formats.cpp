#include <catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace bcaut;

namespace {

template <typename F>
std::size_t error_line(F&& parse, const std::string& text) {
  std::istringstream in(text);
  try {
    parse(in);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}

dfa parse_dfa_text(const std::string& s) {
  std::istringstream in(s);
  return io::parse_dfa(in);
}

}  // namespace

TEST_CASE("dfa text round trip", "[formats]") {
  const std::string l2 =
      "# second from the end\n"
      "DFA 4 2\n"
      "START 0\n"
      "ACCEPT 1 3\n"
      "T 0 0 0\nT 0 1 2\nT 1 0 0\nT 1 1 2\n"
      "T 2 0 1\nT 2 1 3\nT 3 0 1\nT 3 1 3\n";
  const dfa d = parse_dfa_text(l2);
  CHECK(d == nth_from_end_dfa(2));
  CHECK(io::write_dfa(d) == l2.substr(l2.find('\n') + 1));

  rng_type rng(1);
  for (int i = 0; i < 50; ++i) {
    const dfa r = random_dfa(1 + rng() % 9, 1 + rng() % 4, rng);
    CHECK(parse_dfa_text(io::write_dfa(r)) == r);
  }
  CHECK(parse_dfa_text("DFA 1 1\nSTART 0\nACCEPT\nT 0 0 0\n").num_states() == 1);
}

TEST_CASE("dfa parse errors carry line numbers", "[formats]") {
  auto p = [](std::istream& in) { return io::parse_dfa(in); };
  CHECK(error_line(p, "NFA 1 1\n") == 1);
  CHECK(error_line(p, "DFA 2 1\nSTART 2\n") == 2);
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT 5\n") == 3);
  // duplicate entry
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 1\n\nT 0 0 0\n") == 6);
  // missing entry is reported at end of input
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 1\n") == 4);
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 1\nT 1 1 0\n") == 5);
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 x\n") == 4);
  CHECK(error_line(p, "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 1 1\n") == 4);
  CHECK_THROWS_AS(parse_dfa_text(""), parse_error);
}

TEST_CASE("nfa text round trip and errors", "[formats]") {
  const std::string text = "NFA 2 2\nSTARTS 0\nACCEPT 1\nT 0 0 0\nT 0 1 0\nT 0 1 1\n";
  std::istringstream in(text);
  const nfa n = io::parse_nfa(in);
  CHECK(n.transition_count() == 3);
  CHECK(io::write_nfa(n) == text);

  rng_type rng(2);
  for (int i = 0; i < 30; ++i) {
    const nfa r = random_nfa(1 + rng() % 6, 1 + rng() % 3, 0.3, false, rng);
    std::istringstream rin(io::write_nfa(r));
    const nfa back = io::parse_nfa(rin);
    CHECK(back.edges() == r.edges());
    CHECK(back.starts() == r.starts());
    CHECK(back.accepting_flags() == r.accepting_flags());
  }

  auto p = [](std::istream& s) { return io::parse_nfa(s); };
  CHECK(error_line(p, "NFA 2 1\nSTARTS\n") == 2);
  CHECK(error_line(p, "NFA 2 1\nSTARTS 0\nACCEPT\nT 0 0 1\nT 0 0 1\n") == 5);
  CHECK(error_line(p, "NFA 2 1\nSTARTS 0\nACCEPT\nT 0 eps 1\n") == 4);
  std::istringstream eps("NFA 2 1\nSTARTS 0\nACCEPT\nT 0 eps 1\n");
  try {
    io::parse_nfa(eps);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("epsilon") != std::string::npos);
  }
}

TEST_CASE("circuit text round trip and errors", "[formats]") {
  const std::string text = "CIRCUIT 2 2\nG0 = AND X0 X1\nG1 = NOT G0\nOUTPUTS G1 ZERO\n";
  std::istringstream in(text);
  const circuit c = io::parse_circuit(in);
  CHECK(c.gate_count() == 2);
  CHECK(evaluate(c, {true, true}) == bitstring{false, false});
  CHECK(io::write_circuit(c) == text);

  auto p = [](std::istream& s) { return io::parse_circuit(s); };
  CHECK(error_line(p, "CIRCUIT 1 1\nG1 = NOT X0\nOUTPUTS G1\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 1\nG0 = NOT G0\nOUTPUTS G0\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 1\nG0 = XOR X0 X0\nOUTPUTS G0\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 1\nG0 = AND X0\nOUTPUTS G0\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 1\nG0 = NOT X1\nOUTPUTS G0\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 2\nOUTPUTS X0\n") == 2);
  CHECK(error_line(p, "CIRCUIT 1 1\nOUTPUTS X0\nG0 = NOT X0\n") == 3);
}

TEST_CASE("bundle round trip", "[formats]") {
  rng_type rng(4);
  for (int i = 0; i < 30; ++i) {
    const dfa d = random_dfa(1 + rng() % 7, 1 + rng() % 3, rng);
    const representation r = represent_dfa(d, minimal_encoding(d));
    std::istringstream in(io::write_bundle(r));
    const representation back = io::parse_bundle(in);
    CHECK(back.enc == r.enc);
    CHECK(io::write_circuit(back.f) == io::write_circuit(r.f));
    CHECK(io::write_circuit(back.g) == io::write_circuit(r.g));
    CHECK(verify_representation(d, back));
  }
  // zero-width codes
  const dfa one(1, 1, {0}, 0, {true});
  const std::string s = io::write_bundle(represent_dfa(one, minimal_encoding(one)));
  CHECK(s.find("INPUTCODE 0 -") != std::string::npos);
  std::istringstream in(s);
  CHECK(io::parse_bundle(in).enc.b_q == 0);
}

TEST_CASE("bundle parse errors", "[formats]") {
  auto p = [](std::istream& s) { return io::parse_bundle(s); };
  const std::string ok =
      "BCREP 1 1 2 2\nINPUTCODE 0 0\nINPUTCODE 1 1\nSTATECODE 0 0\nSTATECODE 1 1\n"
      "TRANSITION\nCIRCUIT 2 1\nOUTPUTS X0\nACCEPT\nCIRCUIT 1 1\nOUTPUTS X0\n";
  std::istringstream in(ok);
  const representation r = io::parse_bundle(in);
  CHECK(r.enc.state_code.size() == 2);
  CHECK(error_line(p, "BCREP 1 1 2 2\nINPUTCODE 0 00\n") == 2);
  CHECK(error_line(p, "BCREP 1 1 2 2\nINPUTCODE 0 0\nINPUTCODE 0 1\n") == 3);
  CHECK(error_line(p, "BCREP 1 1 2 2\nINPUTCODE 0 0\nINPUTCODE 1 0\nTRANSITION\n"
                      "CIRCUIT 2 1\nOUTPUTS X0\nACCEPT\nCIRCUIT 1 1\nOUTPUTS X0\n") == 9);
  // transition circuit with the wrong width
  CHECK(error_line(p, "BCREP 1 1 2 0\nINPUTCODE 0 0\nINPUTCODE 1 1\nTRANSITION\n"
                      "CIRCUIT 1 1\nOUTPUTS X0\nACCEPT\nCIRCUIT 1 1\nOUTPUTS X0\n") == 9);
  CHECK(error_line(p, "BCREP 1 1 2 0\nINPUTCODE 0 0\nINPUTCODE 1 1\nTRANSITION\n"
                      "CIRCUIT 2 1\nOUTPUTS X0\nCIRCUIT 1 1\n") == 7);
}

TEST_CASE("dimacs", "[formats]") {
  const std::string text =
      "c example\n"
      "p cnf 3 2\n"
      "1 -2\n0\n"
      "2 3 0\n";
  std::istringstream in(text);
  const cnf c = io::parse_dimacs(in);
  CHECK(c.num_vars == 3);
  REQUIRE(c.clauses.size() == 2);
  CHECK(c.clauses[0].size() == 2);
  CHECK(c.clauses[0][1].var == 1);
  CHECK(c.clauses[0][1].negated);
  std::istringstream again(io::write_dimacs(c));
  CHECK(io::write_dimacs(io::parse_dimacs(again)) == io::write_dimacs(c));

  auto p = [](std::istream& s) { return io::parse_dimacs(s); };
  CHECK(error_line(p, "1 2 0\n") == 1);
  CHECK(error_line(p, "p cnf 2 1\n1 3 0\n") == 2);
  CHECK(error_line(p, "p cnf 2 2\n1 2 0\n") == 2);
  CHECK(error_line(p, "p cnf 2 1\n1 x 0\n") == 2);
  CHECK(error_line(p, "p cnf 2 1\n1 2\n") == 2);
  CHECK(error_line(p, "p dnf 2 1\n") == 1);
}
