#ifndef BCAUT_BOUNDS_HPP
#define BCAUT_BOUNDS_HPP

// Closed-form counting and size bounds, evaluated exactly.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bits.hpp"
#include "error.hpp"

namespace bcaut {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

/// Fractional bits kept by log2_rational.
inline constexpr unsigned kLogFractionBits = 64;

/// Binary logarithm of x >= 1 truncated to kLogFractionBits fractional
/// bits; exact for powers of two.
inline big_rational log2_rational(std::uint64_t x) {
  if (x == 0) throw range_error("log2 of zero");
  const unsigned e = static_cast<unsigned>(std::bit_width(x)) - 1;
  // y = x / 2^e in [1, 2), held with `prec` fractional bits
  constexpr unsigned prec = 2 * kLogFractionBits;
  big_int y = big_int(x) << (prec - e);
  const big_int two = big_int(2) << prec;
  big_int frac = 0;
  for (unsigned i = 0; i < kLogFractionBits; ++i) {
    y = (y * y) >> prec;
    frac <<= 1;
    if (y >= two) {
      frac |= 1;
      y >>= 1;
    }
  }
  big_int num = (big_int(e) << kLogFractionBits) + frac;
  return big_rational(num, big_int(1) << kLogFractionBits);
}

/// Exact value of a finite double.
inline big_rational to_rational(double v) {
  if (!std::isfinite(v)) throw range_error("non-finite value");
  int exp = 0;
  const double mant = std::frexp(v, &exp);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  big_rational r{big_int(scaled)};
  exp -= 53;
  if (exp >= 0) return r * big_rational(big_int(1) << exp);
  return r / big_rational(big_int(1) << -exp);
}

/// Decimal rendering rounded to `digits` places, trailing zeros removed.
inline std::string to_decimal(const big_rational& v, unsigned digits = 6) {
  big_int scale = boost::multiprecision::pow(big_int(10), digits);
  big_rational shifted = v * big_rational(scale);
  const bool neg = shifted < 0;
  if (neg) shifted = -shifted;
  big_int q = boost::multiprecision::numerator(shifted) / boost::multiprecision::denominator(shifted);
  big_rational rem = shifted - big_rational(q);
  if (rem * 2 >= 1) ++q;
  std::string s = q.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return (neg && s != "0" ? "-" : "") + s;
}

/// 2^s * s^((k-1)s): lower bound on the number of languages whose minimal
/// DFA has exactly s states over k letters.
inline big_int bound_min_dfa_count(std::uint64_t s, std::uint64_t k) {
  if (s < 3) throw range_error("bound_min_dfa_count needs s >= 3");
  if (k == 0) throw range_error("alphabet must be non-empty");
  return (big_int(1) << s) * boost::multiprecision::pow(big_int(s), static_cast<unsigned>((k - 1) * s));
}

/// 9^(C+n) * (C+n)^(C+m): upper bound on the number of distinct m-output
/// functions of n inputs computed by circuits with C gates.
inline big_int bound_circuit_count(std::uint64_t n, std::uint64_t m, std::uint64_t c) {
  const auto base = static_cast<unsigned>(c + n);
  return boost::multiprecision::pow(big_int(9), base) *
         boost::multiprecision::pow(big_int(c + n), static_cast<unsigned>(c + m));
}

inline std::uint64_t bc_lower_bound(std::uint64_t s) {
  if (s < 2) throw range_error("bc_lower_bound needs s >= 2");
  return ceil_log2(s);
}

/// (k-1)s for k >= 2; s / log s for k = 1 (a guide value, not a bound).
inline big_rational bc_upper_bound(std::uint64_t s, std::uint64_t k) {
  if (s < 2) throw range_error("bc_upper_bound needs s >= 2");
  if (k == 0) throw range_error("alphabet must be non-empty");
  if (k == 1) return big_rational(big_int(s)) / log2_rational(s);
  return big_rational(big_int((k - 1) * s));
}

inline big_rational shannon_threshold(std::uint64_t s, std::uint64_t k, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw range_error("eps must lie in (0, 1)");
  if (s < 3) throw range_error("shannon_threshold needs s >= 3");
  return (big_rational(1) - to_rational(eps)) * bc_upper_bound(s, k);
}

inline std::uint64_t log_term(std::uint64_t k) { return k * ceil_log2(k); }

/// t + (k+1)n + k ceil(log k)
inline std::uint64_t bound_nfa_circuit(std::uint64_t n, std::uint64_t t, std::uint64_t k) {
  return t + (k + 1) * n + log_term(k);
}

/// kn^2 + (k+1)n + k ceil(log k)
inline std::uint64_t bound_nfa_circuit_dense(std::uint64_t n, std::uint64_t k) {
  return bound_nfa_circuit(n, k * n * n, k);
}

// Size bounds for the language operations. `a`, `b` are the complexities
// of the operands; the 3m / 3n terms pay for moving the start to zero.

inline std::uint64_t bound_union(std::uint64_t a, std::uint64_t b) { return a + b + 1; }
inline std::uint64_t bound_complement(std::uint64_t a) { return a + 1; }

inline std::uint64_t bound_reverse(std::uint64_t m, std::uint64_t k) {
  return (2 * k + 1) * m + log_term(k) + 3 * m;
}

inline std::uint64_t bound_concat(std::uint64_t a, std::uint64_t n, std::uint64_t k) {
  return a + (2 * k + 1) * n + log_term(k) + 3 * n;
}

inline std::uint64_t bound_star(std::uint64_t m, std::uint64_t k) {
  return k * (m + 1) * (m + 1) + (k + 1) * (m + 1) + log_term(k);
}

struct bound_report {
  std::string name;
  std::string params;
  std::string value;
};

struct bound_params {
  std::uint64_t s = 3;
  std::uint64_t k = 2;
  std::uint64_t n = 3;  // inputs / NFA states
  std::uint64_t m = 1;  // outputs
  std::uint64_t c = 3;  // gates
  std::uint64_t t = 6;  // NFA transitions
  std::vector<double> eps{0.1, 0.3, 0.5};
};

inline std::vector<bound_report> bound_table(const bound_params& p) {
  auto kv = [](std::initializer_list<std::pair<const char*, std::string>> xs) {
    std::string out;
    for (const auto& [k, v] : xs) {
      if (!out.empty()) out += ',';
      out += std::string(k) + '=' + v;
    }
    return out;
  };
  auto str = [](std::uint64_t v) { return std::to_string(v); };
  std::vector<bound_report> rows;
  const std::string sk = kv({{"s", str(p.s)}, {"k", str(p.k)}});
  if (p.s >= 3) rows.push_back({"min_dfa_count", sk, bound_min_dfa_count(p.s, p.k).str()});
  rows.push_back({"circuit_count", kv({{"n", str(p.n)}, {"m", str(p.m)}, {"C", str(p.c)}}),
                  bound_circuit_count(p.n, p.m, p.c).str()});
  if (p.s >= 2) {
    rows.push_back({"bc_lower", kv({{"s", str(p.s)}}), str(bc_lower_bound(p.s))});
    rows.push_back({p.k == 1 ? "bc_upper_guide" : "bc_upper", sk, to_decimal(bc_upper_bound(p.s, p.k))});
  }
  if (p.s >= 3) {
    for (double e : p.eps) {
      std::ostringstream es;
      es << e;
      rows.push_back({"shannon_threshold", kv({{"s", str(p.s)}, {"k", str(p.k)}, {"eps", es.str()}}),
                      to_decimal(shannon_threshold(p.s, p.k, e))});
    }
  }
  rows.push_back({"nfa_circuit", kv({{"n", str(p.n)}, {"t", str(p.t)}, {"k", str(p.k)}}),
                  str(bound_nfa_circuit(p.n, p.t, p.k))});
  rows.push_back({"nfa_circuit_dense", kv({{"n", str(p.n)}, {"k", str(p.k)}}),
                  str(bound_nfa_circuit_dense(p.n, p.k))});
  return rows;
}

}  // namespace bcaut

#endif
