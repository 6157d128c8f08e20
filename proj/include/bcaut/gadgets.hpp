#ifndef BCAUT_GADGETS_HPP
#define BCAUT_GADGETS_HPP

// Arithmetic on b-bit unsigned words held as MSB-first wire vectors.
//
// Gate budgets (checked by the tests): increment, subtract_const and
// range_check use at most kLinearAlpha * b gates; mod_check uses at most
// kModAlpha * b * b gates.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "circuit.hpp"

namespace bcaut::gadgets {

inline constexpr std::size_t kLinearAlpha = 6;
inline constexpr std::size_t kModAlpha = 16;
inline constexpr std::size_t kMaxWidth = 20;

using wires = std::vector<ref>;

inline void check_width(std::size_t b) {
  if (b == 0 || b > kMaxWidth) {
    throw range_error("gadget width must be in 1.." + std::to_string(kMaxWidth));
  }
}

inline void check_fits(std::uint64_t c, std::size_t b, const char* what) {
  if (b < 64 && c >> b) {
    throw range_error(std::string(what) + " " + std::to_string(c) + " does not fit in " +
                      std::to_string(b) + " bits");
  }
}

/// q + c mod 2^b, ripple carry from the least significant wire.
inline wires add_const(circuit_builder& bld, const wires& q, std::uint64_t c) {
  const std::size_t b = q.size();
  wires out(b);
  ref carry = ref::zero();
  for (std::size_t i = b; i-- > 0;) {
    const bool cbit = ((c >> (b - 1 - i)) & 1U) != 0;
    ref x = bld.xor_(q[i], carry);
    out[i] = cbit ? bld.not_(x) : x;
    if (i > 0) {
      carry = cbit ? bld.or_(q[i], carry) : bld.and_(q[i], carry);
    }
  }
  return out;
}

inline wires increment(circuit_builder& bld, const wires& q) { return add_const(bld, q, 1); }

inline wires subtract_const(circuit_builder& bld, const wires& q, std::uint64_t c) {
  const std::uint64_t mod_mask = low_mask(q.size());
  return add_const(bld, q, (~c + 1) & mod_mask);
}

/// q >= c
inline ref ge_const(circuit_builder& bld, const wires& q, std::uint64_t c) {
  const std::size_t b = q.size();
  if (b < 64 && c >> b) return ref::zero();
  ref g = ref::one();
  for (std::size_t i = b; i-- > 0;) {
    const bool cbit = ((c >> (b - 1 - i)) & 1U) != 0;
    g = cbit ? bld.and_(q[i], g) : bld.or_(q[i], g);
  }
  return g;
}

/// q <= c
inline ref le_const(circuit_builder& bld, const wires& q, std::uint64_t c) {
  const std::size_t b = q.size();
  if (b < 64 && c >> b) return ref::one();
  ref l = ref::one();
  for (std::size_t i = b; i-- > 0;) {
    const bool cbit = ((c >> (b - 1 - i)) & 1U) != 0;
    ref nq = bld.not_(q[i]);
    l = cbit ? bld.or_(nq, l) : bld.and_(nq, l);
  }
  return l;
}

inline ref eq_const(circuit_builder& bld, const wires& q, std::uint64_t c) {
  const std::size_t b = q.size();
  if (b < 64 && c >> b) return ref::zero();
  ref e = ref::one();
  for (std::size_t i = 0; i < b; ++i) {
    const bool cbit = ((c >> (b - 1 - i)) & 1U) != 0;
    e = bld.and_(e, cbit ? q[i] : bld.not_(q[i]));
  }
  return e;
}

inline ref in_range(circuit_builder& bld, const wires& q, std::uint64_t lo, std::uint64_t hi) {
  return bld.and_(ge_const(bld, q, lo), le_const(bld, q, hi));
}

/// q mod m as a word of width bit_width(m-1). Horner reduction over the
/// bits of q: r <- (2r + bit) mod m, one conditional subtraction per bit.
inline wires mod_const(circuit_builder& bld, const wires& q, std::uint64_t m) {
  if (m == 0) throw range_error("modulus must be positive");
  if (m == 1) return {};
  const auto w = static_cast<std::size_t>(std::bit_width(m - 1));
  if (std::has_single_bit(m)) {
    if (q.size() <= w) {
      wires r(w - q.size(), ref::zero());
      r.insert(r.end(), q.begin(), q.end());
      return r;
    }
    return wires(q.end() - static_cast<std::ptrdiff_t>(w), q.end());
  }
  wires r(w, ref::zero());
  for (ref bit : q) {
    wires t = r;  // (w+1)-bit value 2r + bit
    t.push_back(bit);
    ref over = ge_const(bld, t, m);
    wires reduced = subtract_const(bld, t, m);
    wires next(w);
    for (std::size_t i = 0; i < w; ++i) {
      next[i] = bld.mux(over, reduced[i + 1], t[i + 1]);
    }
    r = std::move(next);
  }
  return r;
}

inline ref mod_equals(circuit_builder& bld, const wires& q, std::uint64_t residue,
                      std::uint64_t m) {
  if (residue >= m) throw range_error("residue must be below the modulus");
  return eq_const(bld, mod_const(bld, q, m), residue);
}

namespace detail {
template <typename Body>
circuit standalone(std::size_t inputs, Body body) {
  circuit_builder bld(inputs);
  wires q = input_refs(0, inputs);
  for (ref r : body(bld, q)) bld.output(r);
  return sweep(std::move(bld).finish());
}
}  // namespace detail

/// b -> b: q + 1 mod 2^b.
inline circuit gadget_increment(std::size_t b) {
  check_width(b);
  return detail::standalone(b, [](circuit_builder& bld, const wires& q) { return increment(bld, q); });
}

/// b -> b: q - c mod 2^b.
inline circuit gadget_subtract_const(std::size_t b, std::uint64_t c) {
  check_width(b);
  check_fits(c, b, "constant");
  return detail::standalone(
      b, [c](circuit_builder& bld, const wires& q) { return subtract_const(bld, q, c); });
}

/// b -> 1: lo <= q <= hi.
inline circuit gadget_range_check(std::size_t b, std::uint64_t lo, std::uint64_t hi) {
  check_width(b);
  check_fits(lo, b, "lower bound");
  check_fits(hi, b, "upper bound");
  if (lo > hi) throw range_error("empty range");
  return detail::standalone(b, [=](circuit_builder& bld, const wires& q) {
    return wires{in_range(bld, q, lo, hi)};
  });
}

/// b -> 1: q mod modulus == residue.
inline circuit gadget_mod_check(std::size_t b, std::uint64_t residue, std::uint64_t modulus) {
  check_width(b);
  if (modulus == 0 || residue >= modulus) throw range_error("need 0 <= residue < modulus");
  check_fits(modulus - 1, b + 1, "modulus");
  return detail::standalone(b, [=](circuit_builder& bld, const wires& q) {
    return wires{mod_equals(bld, q, residue, modulus)};
  });
}

}  // namespace bcaut::gadgets

#endif
