#ifndef BCAUT_BUNDLE_HPP
#define BCAUT_BUNDLE_HPP

// Representation bundle format (.bcrep).

#include <sstream>
#include <string>
#include <vector>

#include "encoding.hpp"
#include "formats.hpp"

namespace bcaut::io {

inline representation parse_bundle(std::istream& in) {
  line_reader r(in);
  auto head = r.expect("BCREP header");
  if (head[0] != "BCREP") r.fail("expected 'BCREP <b_Sigma> <b_Q> <k> <s>'");
  expect_arity(r, head, 5);
  representation rep;
  encoding& e = rep.enc;
  e.b_sigma = parse_uint(r, head[1]);
  e.b_q = parse_uint(r, head[2]);
  const auto k = parse_uint(r, head[3]);
  const auto s = parse_uint(r, head[4]);
  if (e.b_sigma > 64 || e.b_q > 64) r.fail("code widths above 64 bits are not supported");
  if (k == 0 || k > (std::uint64_t{1} << 20)) r.fail("alphabet size out of range");
  if (s > (std::uint64_t{1} << 24)) r.fail("state count out of range");

  std::vector<bool> have_in(k, false);
  std::vector<bool> have_state(s, false);
  e.input_code.assign(k, 0);
  e.state_code.assign(s, 0);
  std::size_t n_in = 0, n_state = 0;
  for (;;) {
    auto t = r.expect("TRANSITION block");
    if (t[0] == "TRANSITION") {
      expect_arity(r, t, 1);
      break;
    }
    const bool is_input = t[0] == "INPUTCODE";
    if (!is_input && t[0] != "STATECODE") r.fail("unexpected '" + t[0] + "' line");
    expect_arity(r, t, 3);
    auto id = parse_uint(r, t[1]);
    auto& have = is_input ? have_in : have_state;
    if (id >= have.size()) r.fail(std::string(is_input ? "letter" : "state") + " id out of range");
    if (have[id]) r.fail("code listed twice");
    have[id] = true;
    auto code = parse_code(r, t[2], is_input ? e.b_sigma : e.b_q);
    (is_input ? e.input_code : e.state_code)[id] = code;
    ++(is_input ? n_in : n_state);
  }
  if (n_in != k) r.fail("expected " + std::to_string(k) + " INPUTCODE lines");
  if (n_state != 0 && n_state != s) r.fail("STATECODE lines must cover all " + std::to_string(s) + " states");
  if (n_state == 0) e.state_code.clear();
  rep.f = parse_circuit(r);
  auto acc = r.expect("ACCEPT block");
  if (acc[0] != "ACCEPT" || acc.size() != 1) r.fail("expected 'ACCEPT'");
  rep.g = parse_circuit(r);
  if (r.next()) r.fail("trailing content after acceptance circuit");
  try {
    check_interfaces(rep);
  } catch (const error& ex) {
    r.fail(ex.what());
  }
  return rep;
}

inline std::string write_bundle(const representation& rep) {
  const encoding& e = rep.enc;
  std::ostringstream out;
  out << "BCREP " << e.b_sigma << ' ' << e.b_q << ' ' << e.alphabet_size() << ' '
      << e.state_code.size() << '\n';
  for (std::size_t a = 0; a < e.input_code.size(); ++a) {
    out << "INPUTCODE " << a << ' ' << code_to_string(e.input_code[a], e.b_sigma) << '\n';
  }
  for (std::size_t q = 0; q < e.state_code.size(); ++q) {
    out << "STATECODE " << q << ' ' << code_to_string(e.state_code[q], e.b_q) << '\n';
  }
  out << "TRANSITION\n" << write_circuit(rep.f) << "ACCEPT\n" << write_circuit(rep.g);
  return out.str();
}

}  // namespace bcaut::io

#endif
