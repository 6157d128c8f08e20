#ifndef BCAUT_EXPERIMENT_HPP
#define BCAUT_EXPERIMENT_HPP

// Sampling experiment: how the measured BC of minimal DFAs compares with
// (1 - eps) times the upper bound.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "automata.hpp"
#include "bounds.hpp"
#include "formats.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "synthesis.hpp"
#include "tadpole.hpp"

namespace bcaut {

/// 64-bit FNV-1a of the canonical form's text.
inline std::uint64_t dfa_id(const dfa& d) {
  const std::string text = io::write_dfa(canonical_form(d));
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct experiment_record {
  std::size_t s = 0;
  std::size_t k = 0;
  std::uint64_t id = 0;
  std::size_t lower = 0;
  std::size_t synth = 0;
  std::optional<std::size_t> theorem3;
  std::optional<std::size_t> oracle;
  bool oracle_exact = true;
  cost_model cm = cost_model::gates_plus_outputs;

  /// Best measured value: the oracle when present, else synthesis.
  std::size_t measured() const { return oracle ? *oracle : synth; }
};

/// Smallest theorem3_representation over the letters whose graph is a
/// union of tadpoles.
inline std::optional<std::size_t> best_theorem3_bc(const dfa& d, cost_model cm) {
  std::optional<std::size_t> best;
  for (letter_id a = 0; a < d.alphabet_size(); ++a) {
    try {
      const std::size_t bc = bc_of_representation(theorem3_representation(d, a, cm), cm);
      if (!best || bc < *best) best = bc;
    } catch (const not_tadpole&) {
    }
  }
  return best;
}

inline experiment_record measure(const dfa& d, cost_model cm, bool with_oracle,
                                 const search_budget& b, min_circuit_cache* cache) {
  experiment_record rec;
  rec.s = d.num_states();
  rec.k = d.alphabet_size();
  rec.id = dfa_id(d);
  rec.cm = cm;
  rec.lower = ceil_log2(rec.s);
  rec.synth = bc_of_representation(represent_dfa(d, minimal_encoding(d), cm), cm);
  rec.theorem3 = best_theorem3_bc(d, cm);
  if (with_oracle) {
    oracle_result o = bc_oracle(d, cm, b, cache);
    rec.oracle = o.upper;
    rec.oracle_exact = o.exact();
  }
  return rec;
}

struct experiment_config {
  std::size_t s = 3;
  std::size_t k = 2;
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  cost_model cm = cost_model::gates_plus_outputs;
  search_budget budget;
};

inline constexpr std::size_t kExhaustiveMaxStates = 3;
inline constexpr std::size_t kSampleMaxStates = 8;

inline std::vector<experiment_record> run_shannon_experiment(const experiment_config& cfg) {
  std::vector<experiment_record> out;
  min_circuit_cache cache;
  if (cfg.exhaustive) {
    if (cfg.s > kExhaustiveMaxStates || cfg.k > kOracleMaxLetters) {
      throw budget_exceeded("exhaustive mode is limited to s <= 3 and k <= 2",
                            static_cast<double>(cfg.s));
    }
    enumerate_minimal_dfas(cfg.s, cfg.k, [&](const dfa& d) {
      out.push_back(measure(d, cfg.cm, true, cfg.budget, &cache));
    });
  } else {
    if (cfg.s > kSampleMaxStates) {
      throw budget_exceeded("sample mode is limited to s <= 8", static_cast<double>(cfg.s));
    }
    rng_type rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      out.push_back(measure(random_minimal_dfa(cfg.s, cfg.k, rng), cfg.cm, false, cfg.budget, nullptr));
    }
  }
  return out;
}

inline std::string hex_id(std::uint64_t id) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(id));
  return buf;
}

inline std::string experiment_csv(const experiment_config& cfg,
                                  const std::vector<experiment_record>& recs) {
  std::ostringstream out;
  out << "# experiment=shannon s=" << cfg.s << " k=" << cfg.k
      << " mode=" << (cfg.exhaustive ? "exhaustive" : "sample")
      << " samples=" << cfg.samples << " seed=" << cfg.seed << " cost_model=" << to_string(cfg.cm)
      << " budget_gates=" << cfg.budget.max_gates << " budget_seconds=" << cfg.budget.max_seconds
      << " budget_visited=" << cfg.budget.max_visited << '\n';
  out << "s,k,dfa_id,lower,synth,theorem3,oracle,cost_model\n";
  for (const auto& r : recs) {
    out << r.s << ',' << r.k << ',' << hex_id(r.id) << ',' << r.lower << ',' << r.synth << ',';
    if (r.theorem3) out << *r.theorem3;
    out << ',';
    if (r.oracle) out << *r.oracle;
    out << ',' << to_string(r.cm) << '\n';
  }
  return out.str();
}

/// Fraction of records whose measured BC is below shannon_threshold.
inline double fraction_below(const std::vector<experiment_record>& recs, std::size_t s,
                             std::size_t k, double eps) {
  if (recs.empty()) return 0.0;
  const big_rational c = shannon_threshold(s, k, eps);
  std::size_t below = 0;
  for (const auto& r : recs) {
    if (big_rational(big_int(r.measured())) < c) ++below;
  }
  return static_cast<double>(below) / static_cast<double>(recs.size());
}

/// lower <= oracle <= synth for every record that has an oracle value.
inline bool sandwich_holds(const std::vector<experiment_record>& recs) {
  for (const auto& r : recs) {
    if (r.oracle && (r.lower > *r.oracle || *r.oracle > r.synth)) return false;
  }
  return true;
}

}  // namespace bcaut

#endif
