// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  argv[1] is the path to the command-line binary (used by the
// determinism criterion); argv[2] optionally selects a single criterion.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgeideal/betti.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/ideal.hpp"
#include "edgeideal/polarize.hpp"
#include "edgeideal/splitting.hpp"
#include "edgeideal/sweep.hpp"
#include "edgeideal/textio.hpp"

using namespace edgeideal;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;  // set from argv[1]

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_ms(double ms) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << ms << " ms";
  return os.str();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// ---- shared sweeps for the star/forest/cycle criteria and the split audit --

struct TimedSweep {
  SweepResult result;
  double elapsed_ms = 0;
};

TimedSweep timed_sweep(const SweepOptions& opts) {
  Clock::time_point t0 = Clock::now();
  TimedSweep out;
  out.result = run_sweep(opts);
  out.elapsed_ms = ms_since(t0);
  return out;
}

struct SweepBundle {
  TimedSweep star, forest, cycle;
};

const SweepBundle& sweeps() {
  static const SweepBundle bundle = [] {
    SweepBundle b;
    SweepOptions star;
    star.family = SweepFamily::Star;
    star.n_min = 3;
    star.n_max = 6;
    star.weights = {2, 3, 4};
    star.certify = true;
    b.star = timed_sweep(star);
    SweepOptions forest;
    forest.family = SweepFamily::Forest;
    forest.max_edges = 6;
    forest.weights = {2, 3};
    forest.certify = true;
    b.forest = timed_sweep(forest);
    SweepOptions cycle;
    cycle.family = SweepFamily::Cycle;
    cycle.n_min = 3;
    cycle.n_max = 6;
    cycle.weights = {2, 3};
    cycle.certify = true;
    b.cycle = timed_sweep(cycle);
    return b;
  }();
  return bundle;
}

Outcome check_sweep(const TimedSweep& ts, long long expected_instances,
                    double budget_ms, const std::string& label) {
  const SweepResult& r = ts.result;
  if (r.instances != expected_instances) {
    return fail(label + ": expected " + std::to_string(expected_instances) +
                " instances, saw " + std::to_string(r.instances));
  }
  if (r.hypothesis_instances != 0) {
    return fail(label + ": " + std::to_string(r.hypothesis_instances) +
                " instances fell outside the theorem hypotheses");
  }
  if (r.mismatches != 0 || !r.ok(false)) {
    std::string first = r.counterexamples.empty() ? "" : r.counterexamples.front();
    return fail(label + ": " + std::to_string(r.mismatches) + " mismatches, " +
                std::to_string(r.certificate_failures) + " certificate failures, " +
                std::to_string(r.split_failures) + " split failures; first: " + first);
  }
  if (r.certificates != r.instances) {
    return fail(label + ": only " + std::to_string(r.certificates) + " of " +
                std::to_string(r.instances) + " instances were certified");
  }
  if (ts.elapsed_ms >= budget_ms) {
    return fail(label + ": took " + fmt_ms(ts.elapsed_ms) + ", budget " +
                fmt_ms(budget_ms));
  }
  return pass(label + ": " + std::to_string(r.instances) +
              " instances, 0 mismatches, " + fmt_ms(ts.elapsed_ms));
}

// Visits every weight tuple in {2,3}^k via a bitmask; k <= 20.
template <typename Fn>
void for_each_23_tuple(int k, Fn&& fn) {
  std::vector<long long> tuple(k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    for (int i = 0; i < k; ++i) tuple[i] = (mask >> i & 1u) ? 3 : 2;
    fn(tuple);
  }
}

// ---- criteria ---------------------------------------------------------------

Outcome criterion_1() {
  Clock::time_point t0 = Clock::now();
  auto vs = VarSet::make({"x1", "x2", "x3", "x4", "x5"});
  MonomialIdeal a = parse_ideal("(x1^2*x2^3, x2^4*x3, x3*x4^2, x4^2*x5)", vs);
  std::string got_a = to_string(polarize(a).ideal);
  std::string want_a =
      "(x4_1*x4_2*x5_1, x3_1*x4_1*x4_2, x2_1*x2_2*x2_3*x2_4*x3_1, "
      "x1_1*x1_2*x2_1*x2_2*x2_3)";
  MonomialIdeal b = parse_ideal("(x1*x2^3, x2*x3, x3*x4^2, x4*x5^5)", vs);
  std::string got_b = to_string(polarize(b).ideal);
  std::string want_b =
      "(x2_1*x3_1, x3_1*x4_1*x4_2, x1_1*x2_1*x2_2*x2_3, "
      "x4_1*x5_1*x5_2*x5_3*x5_4*x5_5)";
  double ms = ms_since(t0);
  if (got_a != want_a) return fail("first golden polarization differs: " + got_a);
  if (got_b != want_b) return fail("second golden polarization differs: " + got_b);
  if (ms >= 1000.0) return fail("took " + fmt_ms(ms) + ", budget 1000 ms");
  return pass("both golden polarizations match byte for byte, " + fmt_ms(ms));
}

Outcome criterion_2() {
  // 3 orientations, n = 3..6, non-source weights over {2,3,4}:
  // per n the out- and mixed-star contribute 3^(n-1) tuples, the in-star 3.
  long long expected = 0;
  for (int n = 3; n <= 6; ++n) {
    long long t = 1;
    for (int i = 1; i < n; ++i) t *= 3;
    expected += 2 * t + 3;
  }
  return check_sweep(sweeps().star, expected, 60 * 1000.0,
                     "stars n=3..6 weights {2,3,4}");
}

Outcome criterion_3() {
  Outcome sweep_outcome = check_sweep(sweeps().forest, 10006, 600 * 1000.0,
                                      "forests <=6 edges weights {2,3}");
  if (!sweep_outcome.pass) return sweep_outcome;
  // Every single-tree instance must report depth exactly 2 straight from the
  // oracle (one component: depth = components + 1).
  Clock::time_point t0 = Clock::now();
  long long trees_checked = 0;
  for (int e = 1; e <= 6; ++e) {
    for (const auto& shape : rooted_trees(e + 1)) {
      bool bad = false;
      std::string bad_detail;
      for_each_23_tuple(e, [&](const std::vector<long long>& w) {
        if (bad) return;
        WeightedOrientedGraph g = forest_graph({shape}, w);
        BettiTable table = betti_table(edge_ideal(g).ideal);
        ++trees_checked;
        if (table.depth() != 2 || table.pd() + table.depth() != g.vertex_count()) {
          bad = true;
          bad_detail = "tree with " + std::to_string(e) +
                       " edges: oracle depth " + std::to_string(table.depth());
        }
      });
      if (bad) return fail(bad_detail);
    }
  }
  return pass(sweep_outcome.detail + "; all " + std::to_string(trees_checked) +
              " single-tree instances have oracle depth 2 (" + fmt_ms(ms_since(t0)) +
              " extra)");
}

Outcome criterion_4() {
  Outcome sweep_outcome = check_sweep(sweeps().cycle, 8 + 16 + 32 + 64,
                                      300 * 1000.0, "cycles n=3..6 weights {2,3}");
  if (!sweep_outcome.pass) return sweep_outcome;
  // Depth is 1 for every instance, straight from the oracle.
  long long checked = 0;
  std::string bad;
  for (int n = 3; n <= 6 && bad.empty(); ++n) {
    for_each_23_tuple(n, [&](const std::vector<long long>& w) {
      if (!bad.empty()) return;
      BettiTable table = betti_table(edge_ideal(make_cycle(w)).ideal);
      ++checked;
      if (table.depth() != 1) {
        bad = "cycle n=" + std::to_string(n) + ": oracle depth " +
              std::to_string(table.depth());
      }
    });
  }
  if (!bad.empty()) return fail(bad);
  return pass(sweep_outcome.detail + "; all " + std::to_string(checked) +
              " instances have oracle depth 1");
}

Outcome criterion_5() {
  std::mt19937_64 rng(20260825);
  for (int trial = 0; trial < 200; ++trial) {
    MonomialIdeal I = random_ideal(rng);
    BettiTable plain = betti_table(I);
    BettiTable polar = betti_table(polarize(I).ideal);
    if (plain.entries != polar.entries) {
      return fail("trial " + std::to_string(trial) + ": tables differ for " +
                  to_string(I));
    }
  }
  return pass("200 random ideals: Betti tables identical entrywise after polarization");
}

Outcome criterion_6() {
  const SweepBundle& b = sweeps();
  long long splits = b.star.result.split_nodes_checked +
                     b.forest.result.split_nodes_checked +
                     b.cycle.result.split_nodes_checked;
  long long failures = b.star.result.split_failures +
                       b.forest.result.split_failures +
                       b.cycle.result.split_failures;
  long long cert_failures = b.star.result.certificate_failures +
                            b.forest.result.certificate_failures +
                            b.cycle.result.certificate_failures;
  if (splits == 0) return fail("no split nodes were generated");
  if (failures != 0 || cert_failures != 0) {
    return fail(std::to_string(failures) + " split-identity failures, " +
                std::to_string(cert_failures) + " certificate failures");
  }
  return pass("graded splitting identity verified at all " +
              std::to_string(splits) + " split nodes of the three sweeps");
}

Outcome criterion_7() {
  // Disjoint pairs: embed two draws in a shared ambient on separate blocks.
  std::mt19937_64 rng(101);
  RandomIdealOptions small;
  small.max_vars = 3;
  small.max_gens = 4;
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal A = random_ideal(rng, small);
    MonomialIdeal B = random_ideal(rng, small);
    const int a = A.nvars();
    const int b = B.nvars();
    std::vector<std::string> names;
    for (int i = 0; i < a; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < b; ++i) names.push_back("y" + std::to_string(i + 1));
    auto ambient = VarSet::make(std::move(names));
    std::vector<Monomial> ga, gb;
    for (const auto& g : A.generators()) {
      std::vector<int> e = g.exponents();
      e.resize(a + b, 0);
      ga.emplace_back(std::move(e));
    }
    for (const auto& g : B.generators()) {
      std::vector<int> e(a, 0);
      e.insert(e.end(), g.exponents().begin(), g.exponents().end());
      gb.emplace_back(std::move(e));
    }
    MonomialIdeal IA(ambient, std::move(ga));
    MonomialIdeal IB(ambient, std::move(gb));
    BettiTable ta = betti_table(IA);
    BettiTable tb = betti_table(IB);
    BettiTable tsum = betti_table(sum_ideal(IA, IB));
    BettiTable tprod = betti_table(product_ideal(IA, IB));
    std::string label = "disjoint trial " + std::to_string(trial) + " (" +
                        to_string(IA) + " + " + to_string(IB) + ")";
    if (tsum.pd() != ta.pd() + tb.pd() + 1) {
      return fail(label + ": pd of the sum is " + std::to_string(tsum.pd()) +
                  ", expected " + std::to_string(ta.pd() + tb.pd() + 1));
    }
    if (tsum.reg() != ta.reg() + tb.reg() - 1) {
      return fail(label + ": reg of the sum is " + std::to_string(tsum.reg()) +
                  ", expected " + std::to_string(ta.reg() + tb.reg() - 1));
    }
    if (tprod.reg() != ta.reg() + tb.reg()) {
      return fail(label + ": reg of the product is " + std::to_string(tprod.reg()) +
                  ", expected " + std::to_string(ta.reg() + tb.reg()));
    }
  }
  // Coprime scaling: multiply by a monomial on fresh variables.
  std::mt19937_64 rng2(202);
  for (int trial = 0; trial < 100; ++trial) {
    MonomialIdeal I0 = random_ideal(rng2);
    const int a = I0.nvars();
    const int k = 1 + static_cast<int>(rng2() % 2);
    std::vector<std::string> names;
    for (int i = 0; i < a; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) names.push_back("u" + std::to_string(i + 1));
    auto ambient = VarSet::make(std::move(names));
    std::vector<Monomial> gens;
    for (const auto& g : I0.generators()) {
      std::vector<int> e = g.exponents();
      e.resize(a + k, 0);
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal I(ambient, std::move(gens));
    std::vector<int> ue(a + k, 0);
    for (int i = 0; i < k; ++i) ue[a + i] = 1 + static_cast<int>(rng2() % 3);
    Monomial u(std::move(ue));
    BettiTable before = betti_table(I);
    BettiTable after = betti_table(scale_ideal(u, I));
    std::string label = "coprime trial " + std::to_string(trial);
    if (after.pd() != before.pd()) {
      return fail(label + ": pd changed from " + std::to_string(before.pd()) +
                  " to " + std::to_string(after.pd()));
    }
    if (after.reg() != before.reg() + u.degree()) {
      return fail(label + ": reg is " + std::to_string(after.reg()) +
                  ", expected " + std::to_string(before.reg() + u.degree()));
    }
  }
  return pass("all five identities hold on 100 disjoint pairs and 100 scalings");
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command, const fs::path& out_file) {
  std::string full = command + " > \"" + out_file.string() + "\" 2> /dev/null";
  int status = std::system(full.c_str());
  CommandResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

Outcome criterion_8() {
  if (g_cli_path.empty()) {
    return fail("command-line binary path not supplied as argv[1]");
  }
  fs::path dir =
      fs::temp_directory_path() / ("edgeideal-acceptance-" + std::to_string(getpid()));
  fs::create_directories(dir);
  fs::path graph_file = dir / "cycle4.txt";
  {
    std::ofstream out(graph_file);
    out << "w(x1)=2\nw(x2)=2\nw(x3)=2\nw(x4)=2\n"
        << "x1 -> x2\nx2 -> x3\nx3 -> x4\nx4 -> x1\n";
  }
  std::string base = "\"" + g_cli_path + "\" certificate \"" +
                     graph_file.string() + "\"";
  CommandResult t1 = run_command(base, dir / "text1");
  CommandResult t2 = run_command(base, dir / "text2");
  CommandResult j1 = run_command(base + " --output json", dir / "json1");
  CommandResult j2 = run_command(base + " --output json", dir / "json2");
  fs::remove_all(dir);
  if (t1.exit_code != 0 || t2.exit_code != 0 || j1.exit_code != 0 ||
      j2.exit_code != 0) {
    return fail("certificate runs exited with " + std::to_string(t1.exit_code) +
                "/" + std::to_string(t2.exit_code) + "/" +
                std::to_string(j1.exit_code) + "/" + std::to_string(j2.exit_code));
  }
  if (t1.output.empty() || t1.output != t2.output) {
    return fail("text outputs of consecutive runs differ");
  }
  if (j1.output.empty() || j1.output != j2.output) {
    return fail("JSON outputs of consecutive runs differ");
  }
  nlohmann::json parsed = nlohmann::json::parse(j1.output);
  long long spine = parsed.value("spine_splits", -1LL);
  if (spine != 3) {
    return fail("spine has " + std::to_string(spine) + " split nodes, expected 3");
  }
  return pass("byte-identical text and JSON across runs; spine of 3 split nodes");
}

Outcome criterion_9() {
  BettiTable table = betti_table(edge_ideal(make_cycle({2, 2, 2})).ideal);
  std::map<std::pair<long long, long long>, long long> expected{
      {{0, 3}, 3}, {{1, 5}, 3}, {{2, 6}, 1}};
  if (table.entries != expected) {
    std::ostringstream os;
    os << "triangle table differs:";
    for (const auto& [key, value] : table.entries) {
      os << " (" << key.first << "," << key.second << "):" << value;
    }
    return fail(os.str());
  }
  if (table.pd() != 2 || table.reg() != 4 || table.depth() != 1) {
    return fail("triangle invariants differ: pd " + std::to_string(table.pd()) +
                " reg " + std::to_string(table.reg()) + " depth " +
                std::to_string(table.depth()));
  }
  return pass("triangle table is {(0,3):3, (1,5):3, (2,6):1}; pd 2, reg 4, depth 1");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  int only = 0;
  if (argc > 2) only = std::atoi(argv[2]);

  struct Entry {
    int id;
    const char* title;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "golden polarizations", criterion_1},
      {2, "star formulas vs oracle", criterion_2},
      {3, "forest formulas vs oracle", criterion_3},
      {4, "cycle formulas vs oracle", criterion_4},
      {5, "polarization invariance of Betti tables", criterion_5},
      {6, "splitting identity at every split node", criterion_6},
      {7, "disjoint-sum and coprime-scaling laws", criterion_7},
      {8, "certificate determinism and spine", criterion_8},
      {9, "triangle Betti table", criterion_9},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    if (only != 0 && entry.id != only) continue;
    Outcome outcome;
    try {
      outcome = entry.fn();
    } catch (const std::exception& e) {
      outcome = fail(std::string("unexpected exception: ") + e.what());
    }
    if (!outcome.pass) ++failures;
    std::cout << "criterion " << entry.id << ": "
              << (outcome.pass ? "PASS" : "FAIL") << " - " << entry.title << ": "
              << outcome.detail << std::endl;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  return 0;
}
