#include <catch_amalgamated.hpp>

#include <numeric>

#include "support.hpp"

using namespace bcaut;

namespace {

truth_table table_from_columns(std::size_t n, const std::vector<std::uint32_t>& cols) {
  truth_table t(n, cols.size());
  for (std::uint64_t r = 0; r < t.num_rows(); ++r) {
    for (std::size_t o = 0; o < cols.size(); ++o) t.set(r, o, (cols[o] >> r) & 1U);
  }
  return t;
}

std::uint32_t input_column(std::size_t n, std::size_t i) {
  std::uint32_t f = 0;
  for (std::uint32_t r = 0; r < (1U << n); ++r) {
    if ((r >> (n - 1 - i)) & 1U) f |= 1U << r;
  }
  return f;
}

}  // namespace

TEST_CASE("min_circuit small examples", "[oracle]") {
  const std::uint32_t x0 = input_column(2, 0);
  const std::uint32_t x1 = input_column(2, 1);

  const auto id = min_circuit(table_from_columns(2, {x0}));
  CHECK(id.c.gate_count() == 0);
  CHECK_FALSE(id.exhausted);

  const auto x = min_circuit(table_from_columns(2, {x0 ^ x1}));
  CHECK(x.c.gate_count() == 4);
  CHECK(x.lower_gates == 4);
  CHECK(truth_table_of(x.c) == table_from_columns(2, {x0 ^ x1}));

  const auto pair = min_circuit(table_from_columns(1, {input_column(1, 0), ~input_column(1, 0) & 3U}));
  CHECK(pair.c.gate_count() == 1);

  // constants cost nothing
  const auto k = min_circuit(table_from_columns(2, {0U, 15U}));
  CHECK(k.c.gate_count() == 0);
  CHECK(k.c.outputs() == std::vector<ref>{ref::zero(), ref::one()});
}

TEST_CASE("min_circuit agrees with raw enumeration", "[oracle]") {
  // every single-output function of two inputs
  for (std::uint32_t f = 0; f < 16; ++f) {
    const auto r = min_circuit(table_from_columns(2, {f}));
    CHECK(r.c.gate_count() == oracle::brute_min_gates(2, {f}, 6));
    CHECK(truth_table_of(r.c) == table_from_columns(2, {f}));
  }
  // pairs of two-input functions, a sample
  rng_type rng(41);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t a = rng() & 15U, b = rng() & 15U;
    const auto r = min_circuit(table_from_columns(2, {a, b}));
    CHECK(r.c.gate_count() == oracle::brute_min_gates(2, {a, b}, 7));
  }
  // three inputs: when the brute force finds one within 4 gates the
  // counts must match, otherwise the search must need more
  for (int i = 0; i < 25; ++i) {
    const std::uint32_t f = rng() & 0xffU;
    const auto r = min_circuit(table_from_columns(3, {f}));
    const std::size_t brute = oracle::brute_min_gates(3, {f}, 4);
    if (brute <= 4) {
      CHECK(r.c.gate_count() == brute);
    } else {
      CHECK(r.lower_gates >= 5);
    }
    CHECK(truth_table_of(r.c) == table_from_columns(3, {f}));
  }
}

TEST_CASE("min_circuit never exceeds synthesis", "[oracle]") {
  rng_type rng(43);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = 1 + rng() % 2;
    truth_table t(n, m);
    for (std::uint64_t r = 0; r < t.num_rows(); ++r) t.set_row_value(r, rng() & low_mask(m));
    const auto res = min_circuit(t);
    CHECK(res.upper_gates() <= synthesize_from_table(t).gate_count());
    CHECK(res.lower_gates <= res.upper_gates());
    CHECK(truth_table_of(res.c) == t);
  }
}

TEST_CASE("min_circuit with don't-care rows", "[oracle]") {
  // XOR on rows 0..2 only: OR works
  const std::uint32_t x0 = input_column(2, 0);
  const std::uint32_t x1 = input_column(2, 1);
  const truth_table t = table_from_columns(2, {x0 ^ x1});
  const auto r = min_circuit(t, 0b0111);
  CHECK(r.c.gate_count() == 1);
  const truth_table got = truth_table_of(r.c);
  for (std::uint64_t row = 0; row < 3; ++row) CHECK(got.get(row, 0) == t.get(row, 0));
  // rows 1 and 2 are both one
  CHECK(min_circuit(t, 0b0110).c.gate_count() == 0);

  // care on a single row: a constant
  CHECK(min_circuit(t, 0b0010).c.gate_count() == 0);
}

TEST_CASE("min_circuit budgets", "[oracle]") {
  CHECK_THROWS_AS(min_circuit(truth_table(5, 1)), budget_exceeded);
  CHECK_THROWS_AS(min_circuit(truth_table(2, 4)), budget_exceeded);

  search_budget tight;
  tight.max_gates = 2;
  const std::uint32_t x0 = input_column(2, 0);
  const std::uint32_t x1 = input_column(2, 1);
  const auto r = min_circuit(table_from_columns(2, {x0 ^ x1}), tight);
  CHECK(r.exhausted);
  CHECK(r.lower_gates <= 4);
  CHECK(r.upper_gates() >= 4);
  CHECK(truth_table_of(r.c) == table_from_columns(2, {x0 ^ x1}));
}

TEST_CASE("bc_oracle examples", "[oracle]") {
  const dfa never(1, 1, {0}, 0, {false});
  const auto rn = bc_oracle(never, cost_model::gates_plus_outputs);
  CHECK(rn.exact());
  CHECK(rn.upper == 0);

  // parity over one letter: NOT for F, identity for G
  const dfa parity(2, 1, {1, 0}, 0, {false, true});
  const auto rg = bc_oracle(parity, cost_model::gates_only);
  CHECK(rg.exact());
  CHECK(rg.upper == 2);
  const auto ro = bc_oracle(parity, cost_model::gates_plus_outputs);
  CHECK(ro.upper == 4);
  CHECK(verify_representation(parity, ro.best));

  const auto r2 = bc_oracle(nth_from_end_dfa(2), cost_model::gates_only);
  CHECK(r2.exact());
  CHECK(r2.upper == 2);

  CHECK_THROWS_AS(bc_oracle(nth_from_end_dfa(3), cost_model::gates_only), budget_exceeded);
  CHECK_THROWS_AS(bc_oracle(dfa(2, 3, {0, 0, 0, 1, 1, 1}, 0, {false, true}), cost_model::gates_only),
                  budget_exceeded);
}

TEST_CASE("bc_oracle on random small dfas", "[oracle]") {
  rng_type rng(47);
  min_circuit_cache cache;
  for (int i = 0; i < 20; ++i) {
    const dfa d = random_dfa(1 + rng() % 3, 1 + rng() % 2, rng);
    for (auto cm : {cost_model::gates_only, cost_model::gates_plus_outputs}) {
      const auto r = bc_oracle(d, cm, {}, &cache);
      CHECK(r.lower <= r.upper);
      CHECK(verify_representation(d, r.best));
      CHECK(bc_of_representation(r.best, cm) == r.upper);
      // never worse than the plain synthesis at the same width
      CHECK(r.upper <= bc_of_representation(represent_dfa(d, minimal_encoding(d), cm), cm));
      if (d.num_states() >= 2) CHECK(r.upper >= bc_lower_bound(d.num_states()));

      // the state names do not matter
      std::vector<state_id> perm(d.num_states());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto rp = bc_oracle(oracle::relabel(d, perm), cm, {}, &cache);
      CHECK(rp.upper == r.upper);
      CHECK(rp.lower == r.lower);
    }
  }
}

TEST_CASE("sat_brute", "[oracle]") {
  cnf contra;
  contra.num_vars = 1;
  contra.clauses = {{literal{0, false}}, {literal{0, true}}};
  CHECK_FALSE(sat_brute(contra).has_value());

  cnf unit;
  unit.num_vars = 1;
  unit.clauses = {{literal{0, false}}};
  CHECK(sat_brute(unit) == std::optional<std::uint64_t>{1});

  cnf free;
  free.num_vars = 3;
  CHECK(sat_brute(free) == std::optional<std::uint64_t>{0});

  cnf big;
  big.num_vars = 25;
  CHECK_THROWS_AS(sat_brute(big), budget_exceeded);
}
