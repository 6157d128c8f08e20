#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <bcaut/cli.hpp>

#include "support.hpp"

using namespace bcaut;
namespace fs = std::filesystem;

namespace {

struct result {
  int code;
  std::string out;
  std::string err;
};

result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(BCAUT_SAMPLES_DIR) + "/" + name; }

// scratch directory removed at scope exit
struct scratch {
  fs::path dir;
  scratch() {
    dir = fs::temp_directory_path() / ("bcaut_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::vector<std::string> fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> f;
  for (std::string w; in >> w;) f.push_back(w);
  return f;
}

}  // namespace

TEST_CASE("cli verify", "[cli]") {
  const auto ok = run({"verify", sample("l2.dfa"), sample("l2.bcrep")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "OK\n");

  scratch tmp;
  // G reads the wrong state bit
  std::string text = io::read_file(sample("l2.bcrep"));
  const auto at = text.rfind("OUTPUTS X1");
  REQUIRE(at != std::string::npos);
  text.replace(at, 10, "OUTPUTS X0");
  const auto bad = run({"verify", sample("l2.dfa"), tmp.write("bad.bcrep", text)});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("FAIL state ", 0) == 0);

  const auto missing = run({"verify", sample("l2.dfa"), tmp.path("nope.bcrep")});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: ", 0) == 0);

  const auto broken = run({"verify", tmp.write("x.dfa", "DFA 2 1\nSTART 0\nACCEPT\nT 0 0 x\n"),
                           sample("l2.bcrep")});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("line 4") != std::string::npos);

  // width mismatch between bundle and automaton is an input error
  const auto wrong = run({"verify", sample("parity.dfa"), sample("l2.bcrep")});
  CHECK(wrong.code == 2);

  CHECK(run({}).code == 2);
  CHECK(run({"verify", sample("l2.dfa")}).code == 2);
  CHECK(run({"--cost-model", "fast", "verify", sample("l2.dfa"), sample("l2.bcrep")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli transform writes checkable bundles", "[cli]") {
  scratch tmp;
  const dfa l2 = nth_from_end_dfa(2);

  const auto rep = run({"transform", "represent", sample("l2.dfa"), "-o", tmp.path("r.bcrep")});
  CHECK(rep.code == 0);
  CHECK(fields(rep.out) == std::vector<std::string>{"represent", fields(rep.out).at(1), "-", "-"});
  CHECK(run({"verify", sample("l2.dfa"), tmp.path("r.bcrep")}).code == 0);

  // complement of L_2 against an independently built automaton
  const auto comp = run({"transform", "complement", sample("l2.bcrep"), "-o", tmp.path("c.bcrep")});
  CHECK(comp.code == 0);
  const auto cf = fields(comp.out);
  REQUIRE(cf.size() == 4);
  CHECK(cf[0] == "complement");
  CHECK(cf[3] == "yes");
  std::vector<bool> flipped(4);
  for (state_id q = 0; q < 4; ++q) flipped[q] = !l2.accepting(q);
  const dfa not_l2(4, 2, l2.transitions(), 0, flipped);
  const std::string not_path = tmp.write("not_l2.dfa", io::write_dfa(not_l2));
  CHECK(run({"verify", not_path, tmp.path("c.bcrep")}).code == 0);

  const auto uni = run({"transform", "union", sample("l2.bcrep"), tmp.path("c.bcrep")});
  CHECK(uni.code == 0);
  CHECK(fields(uni.out.substr(uni.out.rfind("union "))).at(3) == "yes");

  const auto inter = run({"transform", "intersect", sample("l2.bcrep"), sample("l2.bcrep"), "-o",
                          tmp.path("i.bcrep")});
  CHECK(inter.code == 0);
  {
    // product bundles carry no state codes; compare languages instead
    std::ifstream in(tmp.path("i.bcrep"));
    CHECK(equivalent(extract_dfa(io::parse_bundle(in)), l2));
    CHECK(run({"verify", sample("l2.dfa"), tmp.path("i.bcrep")}).code == 2);
  }

  for (const std::string op : {"reverse", "star"}) {
    const auto r = run({"transform", op, sample("l2.dfa"), "-o", tmp.path(op + ".bcrep")});
    CHECK(r.code == 0);
    const auto f = fields(r.out);
    REQUIRE(f.size() == 4);
    CHECK(std::stoull(f[1]) <= std::stoull(f[2]));
    std::ifstream in(tmp.path(op + ".bcrep"));
    const dfa got = extract_dfa(io::parse_bundle(in));
    const dfa want = op == "reverse" ? subset_construct(reverse_nfa(l2)) : subset_construct(star_nfa(l2));
    CHECK(equivalent(got, want));
  }

  const auto cat = run({"transform", "concat", sample("l2.bcrep"), sample("l2.dfa")});
  CHECK(cat.code == 0);

  const auto det = run({"transform", "determinize", sample("ends11.nfa"), "-o", tmp.path("d.bcrep")});
  CHECK(det.code == 0);
  // t + (k+1)n + k log k = 4 + 9 + 2
  CHECK(fields(det.out).at(2) == "15");
  {
    std::ifstream in(tmp.path("d.bcrep"));
    const dfa got = extract_dfa(io::parse_bundle(in));
    std::istringstream nin(io::read_file(sample("ends11.nfa")));
    CHECK(equivalent(got, subset_construct(io::parse_nfa(nin))));
  }

  const auto mini = run({"transform", "minimize", sample("l2.dfa")});
  CHECK(mini.code == 0);
  CHECK(mini.out.find("minimize 4 - -") != std::string::npos);

  CHECK(run({"transform", "unroll", sample("l2.bcrep"), "--steps", "3"}).code == 0);
  CHECK(run({"transform", "merge", sample("l2.bcrep")}).code == 0);

  const auto t3 = run({"transform", "theorem3", sample("counter8.dfa"), "-o", tmp.path("t3.bcrep")});
  CHECK(t3.code == 0);
  CHECK(run({"verify", sample("counter8.dfa"), tmp.path("t3.bcrep")}).code == 0);
  CHECK(run({"transform", "theorem3", sample("l2.dfa")}).code == 1);

  CHECK(run({"transform", "union", sample("l2.bcrep")}).code == 2);
  CHECK(run({"transform", "explode", sample("l2.dfa")}).code == 2);
}

TEST_CASE("cli cnf reduction", "[cli]") {
  const auto sat = run({"transform", "cnf2rep", sample("sat.cnf")});
  CHECK(sat.code == 0);
  CHECK(sat.out.find("nonempty yes\n") != std::string::npos);

  const auto unsat = run({"transform", "cnf2rep", sample("unsat.cnf")});
  CHECK(unsat.code == 0);
  CHECK(unsat.out.find("nonempty no\n") != std::string::npos);

  // agrees with brute force on the files
  for (const auto* f : {"sat.cnf", "unsat.cnf"}) {
    std::istringstream in(io::read_file(sample(f)));
    const bool s = sat_brute(io::parse_dimacs(in)).has_value();
    CHECK(run({"transform", "cnf2rep", sample(f)}).out.find(s ? "nonempty yes" : "nonempty no") !=
          std::string::npos);
  }
}

TEST_CASE("cli bounds", "[cli]") {
  const auto b = run({"bounds", "--s", "1024", "--k", "1"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("name\tparams\tvalue\n", 0) == 0);
  CHECK(b.out.find("\t102.4\n") != std::string::npos);
  std::istringstream in(b.out);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), '\t') == 2);
  }
  // rows whose parameters are out of range are left out
  const auto small = run({"bounds", "--s", "1"});
  CHECK(small.code == 0);
  CHECK(small.out.find("bc_lower") == std::string::npos);
  CHECK(small.out.find("nfa_circuit\t") != std::string::npos);
  CHECK(run({"bounds", "--s", "x"}).code == 2);
}

TEST_CASE("cli oracle and enumerate", "[cli]") {
  scratch tmp;
  const auto o = run({"--cost-model", "gates", "oracle", sample("parity.dfa"), "-o", tmp.path("p.bcrep")});
  CHECK(o.code == 0);
  CHECK(o.out.rfind("bc_minwidth 2\n", 0) == 0);
  CHECK(run({"verify", sample("parity.dfa"), tmp.path("p.bcrep")}).code == 0);
  CHECK(run({"oracle", sample("counter8.dfa")}).code == 2);

  const auto d = run({"enumerate", "dfas", "--s", "3", "--k", "1"});
  CHECK(d.code == 0);
  CHECK(d.out.find("bound 8 meets_bound yes") != std::string::npos);
  const auto f = run({"enumerate", "functions", "--n", "1", "--m", "1", "--C", "0"});
  CHECK(f.code == 0);
  CHECK(f.out.find("bound 9 within_bound yes") != std::string::npos);
  CHECK(run({"enumerate", "lattices"}).code == 2);
}

TEST_CASE("cli experiment csv is reproducible", "[cli]") {
  scratch tmp;
  const std::vector<std::string> base{"--seed", "7", "experiment", "shannon", "--s", "3", "--k", "1",
                                      "--sample", "20", "-o"};
  auto a = base;
  a.push_back(tmp.path("a.csv"));
  auto b = base;
  b.push_back(tmp.path("b.csv"));
  const auto ra = run(a);
  const auto rb = run(b);
  CHECK(ra.code == 0);
  CHECK(rb.code == 0);
  CHECK(ra.out.find("sandwich yes") != std::string::npos);
  const std::string ca = io::read_file(tmp.path("a.csv"));
  CHECK(ca == io::read_file(tmp.path("b.csv")));
  CHECK(ca.find("s,k,dfa_id,lower,synth,theorem3,oracle,cost_model\n") != std::string::npos);
  // 2 header lines plus one per record
  CHECK(std::count(ca.begin(), ca.end(), '\n') == 22);

  CHECK(run({"experiment", "shannon", "--s", "3"}).code == 2);
  CHECK(run({"experiment", "shannon", "--exhaustive", "--sample", "3"}).code == 2);
  CHECK(run({"experiment", "other", "--exhaustive"}).code == 2);
}
