#ifndef BCAUT_CNF_HPP
#define BCAUT_CNF_HPP

// CNF formulas, DIMACS text, and the counter representation whose
// language is non-empty exactly when the formula is satisfiable.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "encoding.hpp"
#include "gadgets.hpp"
#include "text_io.hpp"

namespace bcaut {

struct literal {
  std::uint32_t var = 0;
  bool negated = false;
  bool operator==(const literal&) const = default;
};

struct cnf {
  std::size_t num_vars = 0;
  std::vector<std::vector<literal>> clauses;
  bool operator==(const cnf&) const = default;
};

inline void validate(const cnf& c) {
  for (const auto& cl : c.clauses) {
    if (cl.empty()) throw range_error("empty clause");
    for (const auto& l : cl) {
      if (l.var >= c.num_vars) throw range_error("variable index out of range");
    }
  }
}

/// Variable i is bit i (from the least significant end) of `assignment`.
inline bool satisfies(const cnf& c, std::uint64_t assignment) {
  for (const auto& cl : c.clauses) {
    bool sat = false;
    for (const auto& l : cl) {
      if ((((assignment >> l.var) & 1U) != 0) != l.negated) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace io {

/// `p cnf <vars> <clauses>`, then signed 1-based literals, each clause
/// terminated by 0. Lines starting with `c` are comments.
inline cnf parse_dimacs(std::istream& in) {
  cnf out;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<literal> current;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      if (have_header) throw parse_error(lineno, "duplicate problem line");
      std::string fmt;
      long long v = -1, cl = -1;
      if (!(ls >> fmt >> v >> cl) || fmt != "cnf" || v < 0 || cl < 0) {
        throw parse_error(lineno, "expected 'p cnf <vars> <clauses>'");
      }
      if (ls >> tok) throw parse_error(lineno, "trailing tokens on problem line");
      out.num_vars = static_cast<std::size_t>(v);
      declared = static_cast<std::size_t>(cl);
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error(lineno, "clause before 'p cnf' line");
    do {
      char* end = nullptr;
      const long long x = std::strtoll(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') {
        throw parse_error(lineno, "expected an integer literal, got '" + tok + "'");
      }
      if (x == 0) {
        if (current.empty()) throw parse_error(lineno, "empty clause");
        out.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::uint64_t>(x < 0 ? -x : x);
      if (var > out.num_vars) {
        throw parse_error(lineno, "variable " + std::to_string(var) + " exceeds declared count");
      }
      current.push_back({static_cast<std::uint32_t>(var - 1), x < 0});
    } while (ls >> tok);
  }
  if (!have_header) throw parse_error(lineno, "missing 'p cnf' line");
  if (!current.empty()) throw parse_error(lineno, "last clause is not terminated by 0");
  if (out.clauses.size() != declared) {
    throw parse_error(lineno, "declared " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(out.clauses.size()));
  }
  return out;
}

inline std::string write_dimacs(const cnf& c) {
  std::ostringstream out;
  out << "p cnf " << c.num_vars << ' ' << c.clauses.size() << '\n';
  for (const auto& cl : c.clauses) {
    for (const auto& l : cl) out << (l.negated ? "-" : "") << (l.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace io

inline constexpr std::size_t kCnfVarCap = 20;

/// One letter, b_q = num_vars. F counts 0, 1, 2, ... through every
/// assignment; G evaluates the formula on the register, variable i being
/// the register's i-th least significant bit.
inline representation cnf_to_representation(const cnf& c,
                                            cost_model cm = cost_model::gates_plus_outputs) {
  validate(c);
  const std::size_t n = c.num_vars;
  if (n > kCnfVarCap) {
    throw budget_exceeded("cnf with " + std::to_string(n) + " variables exceeds cap " +
                              std::to_string(kCnfVarCap),
                          static_cast<double>(n));
  }
  representation r;
  r.cm = cm;
  r.enc.b_sigma = 0;
  r.enc.b_q = n;
  r.enc.input_code = {0};
  r.f = n == 0 ? circuit(0) : gadgets::gadget_increment(n);

  circuit_builder gb(n);
  std::vector<ref> clause_refs;
  for (const auto& cl : c.clauses) {
    std::vector<ref> lits;
    for (const auto& l : cl) {
      ref x = gb.input(n - 1 - l.var);
      lits.push_back(l.negated ? gb.not_(x) : x);
    }
    clause_refs.push_back(gb.or_all(lits));
  }
  gb.output(gb.and_all(clause_refs));
  r.g = sweep(std::move(gb).finish());
  return r;
}

}  // namespace bcaut

#endif
