#ifndef BCAUT_CLI_HPP
#define BCAUT_CLI_HPP

// Command-line front end. run_cli() does everything main() does, against
// caller-supplied streams, so the commands can be tested in-process.
//
// Exit codes: 0 success, 1 semantic failure, 2 input error.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bounds.hpp"
#include "bundle.hpp"
#include "cnf.hpp"
#include "encoding.hpp"
#include "experiment.hpp"
#include "formats.hpp"
#include "language_ops.hpp"
#include "nfa_circuit.hpp"
#include "oracle.hpp"
#include "synthesis.hpp"
#include "tadpole.hpp"

namespace bcaut::cli {

inline constexpr int kOk = 0;
inline constexpr int kSemantic = 1;
inline constexpr int kInput = 2;

/// Error that carries its exit code and a ready-to-print message.
struct failure {
  int code;
  std::string message;
};

namespace detail {

template <typename T, typename Parse>
T load(const std::string& path, Parse parse) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  std::istringstream in(text);
  try {
    return parse(in);
  } catch (const parse_error& e) {
    throw failure{kInput, path + ": " + e.what()};
  } catch (const error& e) {
    throw failure{kInput, path + ": " + e.what()};
  }
}

inline dfa load_dfa(const std::string& p) {
  return load<dfa>(p, [](std::istream& in) { return io::parse_dfa(in); });
}
inline nfa load_nfa(const std::string& p) {
  return load<nfa>(p, [](std::istream& in) { return io::parse_nfa(in); });
}
inline representation load_bundle(const std::string& p, cost_model cm) {
  auto r = load<representation>(p, [](std::istream& in) { return io::parse_bundle(in); });
  r.cm = cm;
  return r;
}
inline cnf load_cnf(const std::string& p) {
  return load<cnf>(p, [](std::istream& in) { return io::parse_dimacs(in); });
}

inline cost_model parse_cost_model(const std::string& s) {
  if (s == "gates") return cost_model::gates_only;
  if (s == "gates-outputs") return cost_model::gates_plus_outputs;
  throw failure{kInput, "unknown cost model '" + s + "' (use gates or gates-outputs)"};
}

inline void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty()) {
    out << content;
  } else {
    try {
      io::write_file(path, content);
    } catch (const error& e) {
      throw failure{kInput, e.what()};
    }
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct options {
  std::string cost_name = "gates-outputs";
  std::size_t budget_gates = search_budget{}.max_gates;
  double budget_seconds = search_budget{}.max_seconds;
  std::uint64_t budget_visited = search_budget{}.max_visited;
  std::uint64_t seed = 1;

  bcaut::cost_model cm() const { return parse_cost_model(cost_name); }
  search_budget budget() const { return {budget_gates, budget_seconds, budget_visited}; }
};

inline int cmd_verify(const std::string& dfa_path, const std::string& rep_path,
                      const options& opt, std::ostream& out) {
  const dfa d = load_dfa(dfa_path);
  const representation r = load_bundle(rep_path, opt.cm());
  if (!r.enc.has_state_codes()) {
    throw failure{kInput, rep_path + ": bundle has no STATECODE lines; nothing to verify against"};
  }
  std::optional<violation> v;
  try {
    v = check_representation(d, r);
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  if (!v) {
    out << "OK\n";
    return kOk;
  }
  out << "FAIL state " << v->state;
  if (v->letter) out << " letter " << *v->letter;
  out << ": " << v->detail << '\n';
  return kSemantic;
}

inline int report(std::ostream& out, const std::string& op, std::size_t bc,
                  std::optional<std::uint64_t> bound) {
  out << op << ' ' << bc << ' ';
  if (bound) {
    out << *bound << ' ' << yes_no(bc <= *bound) << '\n';
    return bc <= *bound ? kOk : kSemantic;
  }
  out << "- -\n";
  return kOk;
}

inline std::size_t bc_gates(const representation& r) {
  return bc_of_representation(r, cost_model::gates_only);
}

inline int cmd_transform(const std::string& op, const std::vector<std::string>& in,
                         const std::string& out_path, std::size_t steps, letter_id letter,
                         const options& opt, std::ostream& out) {
  const cost_model cm = opt.cm();
  auto arity = [&](std::size_t n) {
    if (in.size() != n) {
      throw failure{kInput, "transform " + op + " expects " + std::to_string(n) + " input file(s)"};
    }
  };
  try {
    if (op == "union" || op == "intersect") {
      arity(2);
      auto a = load_bundle(in[0], cm);
      auto b = load_bundle(in[1], cm);
      auto r = op == "union" ? op_union(a, b) : op_intersect(a, b);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_of_representation(r, cm),
                    bound_union(bc_of_representation(a, cm), bc_of_representation(b, cm)));
    }
    if (op == "complement") {
      arity(1);
      auto a = load_bundle(in[0], cm);
      auto r = op_complement(a);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_of_representation(r, cm), bound_complement(bc_of_representation(a, cm)));
    }
    // the remaining bounds are stated for the gate count
    if (op == "reverse") {
      arity(1);
      auto d = load_dfa(in[0]);
      auto r = op_reverse(d, cm);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_gates(r), bound_reverse(d.num_states(), d.alphabet_size()));
    }
    if (op == "star") {
      arity(1);
      auto d = load_dfa(in[0]);
      auto r = op_star(d, cm);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_gates(r), bound_star(d.num_states(), d.alphabet_size()));
    }
    if (op == "concat") {
      arity(2);
      auto a = load_bundle(in[0], cm);
      auto d = load_dfa(in[1]);
      auto r = op_concat(a, d);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_gates(r), bound_concat(bc_gates(a), d.num_states(), d.alphabet_size()));
    }
    if (op == "determinize") {
      arity(1);
      auto n = load_nfa(in[0]);
      auto r = nfa_to_circuit(n, cm);
      emit(out, out_path, io::write_bundle(r));
      std::uint64_t bound = bound_nfa_circuit(n.num_states(), n.transition_count(), n.alphabet_size());
      if (n.start_count() > 1) bound += 3 * n.num_states();
      return report(out, op, bc_gates(r), bound);
    }
    if (op == "minimize") {
      arity(1);
      auto m = minimize_dfa(load_dfa(in[0]));
      emit(out, out_path, io::write_dfa(m));
      return report(out, op, m.num_states(), std::nullopt);
    }
    if (op == "represent") {
      arity(1);
      auto d = load_dfa(in[0]);
      auto r = represent_dfa(d, minimal_encoding(d), cm);
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_of_representation(r, cm), std::nullopt);
    }
    if (op == "theorem3") {
      arity(1);
      auto d = load_dfa(in[0]);
      representation r;
      try {
        r = theorem3_representation(d, letter, cm);
      } catch (const not_tadpole& e) {
        throw failure{kSemantic, std::string("not a union of tadpoles: ") + e.what()};
      }
      emit(out, out_path, io::write_bundle(r));
      return report(out, op, bc_of_representation(r, cm), std::nullopt);
    }
    if (op == "cnf2rep") {
      arity(1);
      auto c = load_cnf(in[0]);
      auto r = cnf_to_representation(c, cm);
      emit(out, out_path, io::write_bundle(r));
      const dfa lang = minimize_dfa(extract_dfa(r));
      const bool nonempty = lang.num_states() > 1 || lang.accepting(lang.start());
      const int code = report(out, op, bc_of_representation(r, cm), std::nullopt);
      out << "nonempty " << yes_no(nonempty) << '\n';
      return code;
    }
    if (op == "unroll") {
      arity(1);
      auto r = load_bundle(in[0], cm);
      auto c = unroll(r.f, r.g, r.enc.b_sigma, r.enc.b_q, steps);
      emit(out, out_path, io::write_circuit(c));
      return report(out, op, size(c, cm), std::nullopt);
    }
    if (op == "merge") {
      arity(1);
      auto r = load_bundle(in[0], cm);
      auto c = merge_fg(r.f, r.g, r.enc.b_q);
      emit(out, out_path, io::write_circuit(c));
      return report(out, op, size(c, cm), std::nullopt);
    }
  } catch (const failure&) {
    throw;
  } catch (const error& e) {
    throw failure{kInput, op + ": " + e.what()};
  }
  throw failure{kInput, "unknown transform '" + op + "'"};
}

inline int cmd_oracle(const std::string& path, const std::string& out_path, const options& opt,
                      std::ostream& out) {
  const dfa d = load_dfa(path);
  oracle_result o;
  try {
    o = bc_oracle(d, opt.cm(), opt.budget());
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  // minimal-width encodings only, so this bounds BC from above
  if (o.exact()) {
    out << "bc_minwidth " << o.upper << '\n';
  } else {
    out << "bc_minwidth between " << o.lower << " and " << o.upper << " (budget exhausted)\n";
  }
  out << "note minimum over " << o.encodings
      << " minimal-width encodings; an upper bound on BC over all encodings\n";
  if (!out_path.empty()) emit(out, out_path, io::write_bundle(o.best));
  return kOk;
}

inline int cmd_enumerate(const std::string& what, std::size_t s, std::size_t k, std::size_t n,
                         std::size_t m, std::size_t gates, std::ostream& out) {
  try {
    if (what == "dfas") {
      const auto count = enumerate_minimal_dfas(s, k, [](const dfa&) {});
      out << "minimal_dfas s=" << s << " k=" << k << ' ' << count;
      if (s >= 3) {
        const auto bound = bound_min_dfa_count(s, k);
        out << " bound " << bound << " meets_bound " << yes_no(big_int(count) >= bound);
      }
      out << '\n';
      return kOk;
    }
    if (what == "functions") {
      const auto count = enumerate_functions(n, m, gates);
      const auto bound = bound_circuit_count(n, m, gates);
      out << "functions n=" << n << " m=" << m << " C=" << gates << ' ' << count << " bound "
          << bound << " within_bound " << yes_no(big_int(count) <= bound) << '\n';
      return kOk;
    }
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  throw failure{kInput, "enumerate expects 'dfas' or 'functions'"};
}

inline int cmd_experiment(const std::string& name, std::size_t s, std::size_t k, bool exhaustive,
                          std::size_t samples, const std::string& out_path, const options& opt,
                          std::ostream& out) {
  if (name != "shannon") throw failure{kInput, "unknown experiment '" + name + "'"};
  if (exhaustive == (samples > 0)) {
    throw failure{kInput, "choose exactly one of --exhaustive and --sample N"};
  }
  experiment_config cfg;
  cfg.s = s;
  cfg.k = k;
  cfg.exhaustive = exhaustive;
  cfg.samples = samples;
  cfg.seed = opt.seed;
  cfg.cm = opt.cm();
  cfg.budget = opt.budget();
  std::vector<experiment_record> recs;
  try {
    recs = run_shannon_experiment(cfg);
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  emit(out, out_path, experiment_csv(cfg, recs));
  out << "population " << recs.size();
  bool ok = sandwich_holds(recs);
  if (exhaustive && s >= 3) {
    const auto bound = bound_min_dfa_count(s, k);
    out << " bound " << bound << " meets_bound " << yes_no(big_int(recs.size()) >= bound);
    ok = ok && big_int(recs.size()) >= bound;
  }
  out << " sandwich " << yes_no(sandwich_holds(recs)) << '\n';
  if (s >= 3) {
    out << "below_threshold";
    for (double eps : {0.1, 0.3, 0.5}) {
      out << " eps=" << eps << ':' << std::fixed << std::setprecision(4)
          << fraction_below(recs, s, k, eps) << std::defaultfloat;
    }
    out << '\n';
  }
  return ok ? kOk : kSemantic;
}

inline int cmd_bounds(const bound_params& p, std::ostream& out) {
  try {
    out << "name\tparams\tvalue\n";
    for (const auto& row : bound_table(p)) {
      out << row.name << '\t' << row.params << '\t' << row.value << '\n';
    }
  } catch (const error& e) {
    throw failure{kInput, e.what()};
  }
  return kOk;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean-circuit representations of finite automata", "bcaut"};
  app.require_subcommand(1);
  detail::options opt;
  app.add_option("--cost-model", opt.cost_name, "gates | gates-outputs")
      ->check(CLI::IsMember({"gates", "gates-outputs"}));
  app.add_option("--budget-gates", opt.budget_gates, "largest gate count the oracle tries");
  app.add_option("--budget-seconds", opt.budget_seconds, "time limit per circuit search");
  app.add_option("--budget-visited", opt.budget_visited, "node limit per circuit search");
  app.add_option("--seed", opt.seed, "random seed");

  std::string a1, a2, op, out_path, what, name;
  std::vector<std::string> inputs;
  std::size_t steps = 1, s = 3, k = 2, n = 2, m = 1, gates = 2, samples = 0;
  letter_id letter = 0;
  bool exhaustive = false;
  bound_params bp;

  auto* verify = app.add_subcommand("verify", "check a .bcrep bundle against a .dfa");
  verify->add_option("dfa", a1)->required();
  verify->add_option("bundle", a2)->required();

  auto* transform = app.add_subcommand("transform", "build a representation or circuit");
  transform->add_option("op", op,
                        "union intersect complement reverse concat star determinize minimize "
                        "represent theorem3 cnf2rep unroll merge")
      ->required();
  transform->add_option("inputs", inputs)->required();
  transform->add_option("-o,--out", out_path, "output file (stdout if omitted)");
  transform->add_option("--steps", steps, "unroll length");
  transform->add_option("--letter", letter, "letter for theorem3");

  auto* bounds = app.add_subcommand("bounds", "print closed-form bounds as TSV");
  bounds->add_option("--s", bp.s);
  bounds->add_option("--k", bp.k);
  bounds->add_option("--n", bp.n);
  bounds->add_option("--m", bp.m);
  bounds->add_option("--C", bp.c);
  bounds->add_option("--t", bp.t);
  bounds->add_option("--eps", bp.eps)->expected(1, 16);

  auto* oracle = app.add_subcommand("oracle", "exact BC over minimal-width encodings");
  oracle->add_option("dfa", a1)->required();
  oracle->add_option("-o,--out", out_path, "write the best representation");

  auto* enumerate = app.add_subcommand("enumerate", "count minimal DFAs or circuit functions");
  enumerate->add_option("what", what, "dfas | functions")->required();
  enumerate->add_option("--s", s);
  enumerate->add_option("--k", k);
  enumerate->add_option("--n", n);
  enumerate->add_option("--m", m);
  enumerate->add_option("--C", gates);

  auto* experiment = app.add_subcommand("experiment", "sampling experiments");
  experiment->add_option("name", name, "shannon")->required();
  experiment->add_option("--s", s);
  experiment->add_option("--k", k);
  experiment->add_flag("--exhaustive", exhaustive);
  experiment->add_option("--sample", samples);
  experiment->add_option("-o,--out", out_path, "CSV path (stdout if omitted)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*verify) return detail::cmd_verify(a1, a2, opt, out);
    if (*transform) return detail::cmd_transform(op, inputs, out_path, steps, letter, opt, out);
    if (*bounds) return detail::cmd_bounds(bp, out);
    if (*oracle) return detail::cmd_oracle(a1, out_path, opt, out);
    if (*enumerate) return detail::cmd_enumerate(what, s, k, n, m, gates, out);
    if (*experiment) {
      return detail::cmd_experiment(name, s, k, exhaustive, samples, out_path, opt, out);
    }
  } catch (const failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  }
  return kInput;
}

}  // namespace bcaut::cli

#endif
