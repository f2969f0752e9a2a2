// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zxconn/analyzer.hpp"
#include "zxconn/depth.hpp"
#include "zxconn/errors.hpp"
#include "zxconn/partition_bound.hpp"
#include "zxconn/rng.hpp"
#include "zxconn/simulator.hpp"
#include "zxconn/zx.hpp"

using namespace zxconn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%s criterion %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const std::string& id, const std::string& detail) {
  std::printf("INFO criterion %s: %s\n", id.c_str(), detail.c_str());
  std::fflush(stdout);
}

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[1024];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const std::vector<Edge> kTwoComponentNine{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                          {5, 6}, {6, 7}, {7, 8}, {3, 8}, {4, 7}};

// ---------------------------------------------------------------------------

void criterion_1() {
  const auto start = Clock::now();
  const std::map<std::size_t, int> expected{{10, 100}, {9, 765}, {8, 1960}, {7, 1925}, {6, 600}, {5, 25}};
  bool counts_ok = true;
  for (const auto& [d, v] : expected) counts_ok &= n_d(5, 10, d) == v;
  const auto bound = mean_depth_upper_bound(5, 10);
  bool histogram_ok = bound.per_depth.size() == expected.size();
  for (const auto& [d, v] : expected) histogram_ok &= bound.per_depth.count(d) && bound.per_depth.at(d) == v;
  const BigRational oracle_mean = oracle::enumerate_mean_depth(5, 10);
  const bool rational_ok = bound.mean_exact == oracle_mean;
  const double elapsed = seconds_since(start);
  std::ostringstream mean;
  mean << bound.mean_exact;
  report("1", counts_ok && histogram_ok && rational_ok && elapsed < 1.0,
         fmt("N_d(5,10,5..10) = 25,600,1925,1960,765,100 exact=%s; mean bound %s = enumeration oracle %s; %.3fs",
             counts_ok && histogram_ok ? "yes" : "no", mean.str().c_str(),
             rational_ok ? "yes" : "no", elapsed));
  info("1", fmt("quoted worked-example mean 8.14 is not reproduced: exact value is %s = %.6f",
                mean.str().c_str(), bound.mean));
}

void criterion_2() {
  const auto start = Clock::now();
  // Expected table, rows λ = 0..7, columns n' = 1..13.
  const int table[8][13] = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91},
      {0, 0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715, 1001},
      {0, 0, 0, 0, 1, 7, 28, 84, 210, 462, 924, 1716, 3003},
      {0, 0, 0, 0, 0, 0, 1, 9, 45, 165, 495, 1287, 3003},
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 11, 66, 286, 1001},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 13, 91},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
  };
  const auto t = row_count_table(13);
  int mismatches = 0;
  if (t.entries.size() != 8) mismatches = 999;
  for (std::size_t lam = 0; lam < 8 && lam < t.entries.size(); ++lam)
    for (std::size_t c = 0; c < 13; ++c) mismatches += t.entries[lam][c] != table[lam][c];
  bool sums_ok = t.column_sums.size() == 13;
  for (std::size_t c = 0; c < t.column_sums.size(); ++c) sums_ok &= t.column_sums[c] == (BigInt(1) << (c + 1));
  const double elapsed = seconds_since(start);
  report("2", mismatches == 0 && sums_ok && elapsed < 1.0,
         fmt("row-count table n'<=13: %d of 104 entries differ; column sums = 2^n' %s; %.3fs", mismatches,
             sums_ok ? "yes" : "no", elapsed));
}

void criterion_3() {
  const auto start = Clock::now();
  // Expected p_k(n) table, n = 1..12 (rows), k = 1..12 (columns).
  const int table[12][12] = {
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},   {1, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {1, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0},   {1, 3, 3, 2, 1, 1, 0, 0, 0, 0, 0, 0},
      {1, 3, 4, 3, 2, 1, 1, 0, 0, 0, 0, 0},   {1, 4, 5, 5, 3, 2, 1, 1, 0, 0, 0, 0},
      {1, 4, 7, 6, 5, 3, 2, 1, 1, 0, 0, 0},   {1, 5, 8, 9, 7, 5, 3, 2, 1, 1, 0, 0},
      {1, 5, 10, 11, 10, 7, 5, 3, 2, 1, 1, 0}, {1, 6, 12, 15, 13, 11, 7, 5, 3, 2, 1, 1},
  };
  int mismatches = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t k = 1; k <= 12; ++k) mismatches += partitions_into_k(n, k) != table[n - 1][k - 1];
  const double elapsed = seconds_since(start);
  report("3", mismatches == 0 && elapsed < 1.0,
         fmt("partition-count table n<=12: %d of 144 entries differ; %.3fs", mismatches, elapsed));
}

void criterion_4() {
  const auto start = Clock::now();
  const Graph graph(9, kTwoComponentNine);
  const SpiderCircuit circuit = compile_graph_to_circuit(graph);
  const QuantumState state = run_circuit(circuit);
  const std::set<std::string> listed{"000000000", "000111111", "111000000", "111111111"};
  std::set<std::string> support;
  double max_weight_error = 0.0;
  for (std::uint64_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w = std::norm(state.amplitudes[i]);
    const std::string bits = basis_label(i, 9);
    if (listed.count(bits)) {
      max_weight_error = std::max(max_weight_error, std::abs(w - 0.25));
      support.insert(bits);
    } else {
      max_weight_error = std::max(max_weight_error, w);
    }
  }
  const bool law_ok = support == listed && max_weight_error <= 1e-10;

  const int seeds = 10000;
  int detected = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const QuantumState s = run_circuit(circuit);
    const auto rec = sample_measurements(s, 2, mix_seed(4, seed));
    detected += decide_connected(rec).verdict == Verdict::kDisconnected;
  }
  const double rate = detected / static_cast<double>(seeds);
  const double elapsed = seconds_since(start);
  report("4", law_ok && rate >= 0.735 && rate <= 0.765 && elapsed < 30.0,
         fmt("two-component 9-node graph: support = 4 listed strings %s, max |p-1/4| %.2e; "
             "M=2 detection rate %.4f over %d seeds (target [0.735, 0.765]); %.2fs",
             support == listed ? "yes" : "no", max_weight_error, rate, seeds, elapsed));
}

void criterion_5() {
  const auto start = Clock::now();
  double max_survival_error = 0.0;
  double max_state_error = 0.0;
  std::size_t graphs = 0;
  std::size_t with_loops = 0;
  std::size_t with_duplicates = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      const std::uint64_t seed = mix_seed(500 + n, t);
      Rng rng(seed);
      const std::size_t m = rng.below(2 * n + 3);
      const Graph g = generate_random_multigraph(n, m, seed, true);
      const auto sorted = g.sorted_edge_multiset();
      with_loops += g.proper_edge_count() != g.edge_count();
      with_duplicates += std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      const QuantumState s = run_circuit(compile_graph_to_circuit(g));
      const std::size_t k = oracle::closure_component_count(n, g.edges());
      const double exact = std::ldexp(1.0, static_cast<int>(k) - static_cast<int>(n));
      max_survival_error = std::max(max_survival_error, std::abs(s.survival_probability - exact));
      max_state_error = std::max(max_state_error, max_deviation_up_to_phase(s, expected_final_state(g)));
      ++graphs;
    }
  }
  report("5", max_survival_error <= 1e-12 && max_state_error <= 1e-10,
         fmt("%zu random multigraphs n=2..7 (%zu with loops, %zu with duplicates): max |survival - 2^k/2^n| "
             "%.2e (tol 1e-12), max state deviation %.2e (tol 1e-10); %.2fs",
             graphs, with_loops, with_duplicates, max_survival_error, max_state_error, seconds_since(start)));
  const auto connected7 = survival_report(generate_complete(7));
  info("5", fmt("connected n=7: exact survival %.6f vs quoted decay estimate 1/(2^n-2) = %.6f", connected7.survival,
                *connected7.quoted_decay_estimate));
}

void criterion_6() {
  const auto start = Clock::now();
  std::size_t graphs = 0;
  std::size_t branches = 0;
  double max_dev = 0.0;
  double worst_survival_gap = 0.0;
  bool every_graph_has_branch = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::for_each_multiset(oracle::all_pairs(n, true), 6, [&](const std::vector<Edge>& edges) {
      const Graph g(n, edges);
      const SpiderCircuit c = compile_graph_to_circuit(g);
      const QuantumState reference = run_circuit(c);
      const std::size_t gates = c.gates.size();
      std::size_t possible = 0;
      std::vector<int> outcome(gates, 0);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gates); ++mask) {
        for (std::size_t i = 0; i < gates; ++i) outcome[i] = static_cast<int>((mask >> i) & 1U);
        const auto run = run_circuit_ancilla_branch(c, outcome);
        if (!run) continue;
        ++possible;
        max_dev = std::max(max_dev, max_deviation_up_to_phase(run->state, reference));
        worst_survival_gap = std::max(worst_survival_gap, std::abs(run->state.survival_probability - 1.0));
      }
      every_graph_has_branch &= possible > 0;
      branches += possible;
      ++graphs;
    });
  }
  report("6", every_graph_has_branch && max_dev <= 1e-10 && worst_survival_gap == 0.0,
         fmt("all %zu edge multisets (loops included) with n<=5, m<=6; %zu nonzero-probability ancilla branches: "
             "max deviation from projector state %.2e (tol 1e-10), survival 1 on every branch %s; %.2fs",
             graphs, branches, max_dev, worst_survival_gap == 0.0 ? "yes" : "no", seconds_since(start)));
}

void criterion_7() {
  const auto start = Clock::now();
  std::size_t graphs = 0;
  std::size_t orderings = 0;
  double max_dev = 0.0;
  double max_survival_diff = 0.0;
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::for_each_multiset(oracle::all_pairs(n, true), 5, [&](const std::vector<Edge>& sorted_edges) {
      std::vector<Edge> edges = sorted_edges;
      const QuantumState reference = run_circuit(compile_graph_to_circuit(Graph(n, edges)));
      do {
        const QuantumState s = run_circuit(compile_graph_to_circuit(Graph(n, edges)));
        max_dev = std::max(max_dev, max_deviation_up_to_phase(s, reference));
        max_survival_diff = std::max(max_survival_diff, std::abs(s.survival_probability - reference.survival_probability));
        ++orderings;
      } while (std::next_permutation(edges.begin(), edges.end()));
      ++graphs;
    });
  }
  const ComplexMatrix p = spider_matrix(2, 0.0);
  const bool idempotent = (p * p) == p;
  report("7", max_dev <= 1e-10 && max_survival_diff <= 1e-15 && idempotent,
         fmt("%zu edge multisets n<=5, m<=5, %zu distinct orderings: max state deviation %.2e, max survival "
             "difference %.2e; two-leg P*P == P exactly %s; %.2fs",
             graphs, orderings, max_dev, max_survival_diff, idempotent ? "yes" : "no", seconds_since(start)));
}

void criterion_8() {
  const auto start = Clock::now();
  bool all_valid = true;
  std::size_t schedules = 0;
  auto check = [&](const Graph& g, const DepthSchedule& s) {
    const auto b = depth_bounds(g.node_count(), g.proper_edge_count());
    all_valid &= is_valid_schedule(g, s) && b.best <= s.depth && s.depth <= b.worst;
    ++schedules;
  };

  bool star_ok = true;
  for (std::size_t m = 1; m <= 60; ++m) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= m; ++i) edges.push_back({0, i});
    const Graph g(m + 1, edges);
    const auto s = asap_schedule(g);
    star_ok &= s.depth == m;
    check(g, s);
  }

  bool brick_ok = true;
  for (std::size_t n = 2; n <= 60; n += 2) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; i += 2) edges.push_back({i, i + 1});
    const Graph g(n, edges);
    const auto s = asap_schedule(g);
    brick_ok &= s.depth == depth_bounds(n, edges.size()).best;
    check(g, s);
  }

  bool sorted_ok = true;
  std::size_t sorted_worst_ratio_n = 0;
  double sorted_worst_ratio = 0.0;
  for (std::size_t n = 2; n <= 60; ++n) {
    const Graph g = generate_complete(n);
    const auto s = asap_schedule(g);
    sorted_ok &= s.depth <= 2 * n;
    const double ratio = static_cast<double>(s.depth) / static_cast<double>(n);
    if (ratio > sorted_worst_ratio) {
      sorted_worst_ratio = ratio;
      sorted_worst_ratio_n = n;
    }
    check(g, s);
  }

  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const Graph g = generate_random_multigraph(2 + seed % 12, seed % 40, seed, true);
    check(g, asap_schedule(g));
    check(g, asap_schedule(g, LayerPolicy::kAfterLastUse));
  }

  const auto k1000_start = Clock::now();
  DepthExperiment ex;
  ex.n = 1000;
  ex.model = FixedGraphModel{generate_complete(1000)};
  ex.trials = 24;
  ex.seed = 8;
  const auto r = monte_carlo_depth(ex);
  const double k1000_time = seconds_since(k1000_start);
  {
    const Graph shuffled = shuffle_edges(generate_complete(1000), mix_seed(mix_seed(8, 0), 1));
    check(shuffled, asap_schedule(shuffled));
  }
  const bool k1000_ok = r.mean_depth < 4000.0 && k1000_time < 60.0;

  report("8", star_ok && brick_ok && sorted_ok && k1000_ok && all_valid,
         fmt("star depth = m (m<=60) %s; single brick layer depth = ceil(m/n) (n<=60) %s; sorted K_n depth <= 2n "
             "(n<=60) %s, worst depth/n %.3f at n=%zu; shuffled K1000 mean depth %.1f +- %.1f over %zu trials "
             "(< 4000, %.1fs); %zu schedules valid and within [ceil(m'/n), m'] %s; %.2fs",
             star_ok ? "yes" : "no", brick_ok ? "yes" : "no", sorted_ok ? "yes" : "no", sorted_worst_ratio,
             sorted_worst_ratio_n, r.mean_depth, r.std_error, r.trials, k1000_time, schedules,
             all_valid ? "yes" : "no", seconds_since(start)));

  ex.policy = LayerPolicy::kAfterLastUse;
  ex.trials = 8;
  const auto no_backfill = monte_carlo_depth(ex);
  info("8", fmt("no-backfill layering: shuffled K1000 mean depth %.1f over %zu trials; sorted K60 depth %zu; "
                "fit 2m/(1+n/2)^0.88 at K1000 = %.1f",
                no_backfill.mean_depth, no_backfill.trials, sorted_complete_depth(60, LayerPolicy::kAfterLastUse),
                lower_bound_fit(1000, 499500)));
}

void criterion_9() {
  const auto start = Clock::now();
  const std::size_t trials = 20000;
  std::size_t cells = 0;
  std::size_t violations = 0;
  std::size_t no_backfill_violations = 0;
  double tightest_margin = 1e300;
  std::string tightest;
  std::string no_backfill_example;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) {
      const double bound = mean_depth_upper_bound(n, m).mean;
      DepthExperiment ex;
      ex.n = n;
      if (m <= n * (n - 1) / 2) {
        ex.model = FixedEdgeCountModel{m};
      } else {
        ex.model = MultigraphModel{m};
      }
      ex.trials = trials;
      ex.seed = mix_seed(9, n * 100 + m);
      const auto r = monte_carlo_depth(ex);
      if (r.mean_depth > bound + 3 * r.std_error) ++violations;
      // Closest approach in units of sigma; zero-variance cells sit exactly on the bound.
      if (r.std_error > 0) {
        const double z = (bound - r.mean_depth) / r.std_error;
        if (z < tightest_margin) {
          tightest_margin = z;
          tightest = fmt("n=%zu m=%zu mean %.4f vs bound %.4f (%.1f sigma below)", n, m, r.mean_depth, bound, z);
        }
      }
      ex.policy = LayerPolicy::kAfterLastUse;
      const auto nb = monte_carlo_depth(ex);
      if (nb.mean_depth > bound + 3 * nb.std_error) {
        if (no_backfill_violations == 0)
          no_backfill_example = fmt("n=%zu m=%zu mean %.4f > bound %.4f", n, m, nb.mean_depth, bound);
        ++no_backfill_violations;
      }
      ++cells;
    }
  }
  report("9", violations == 0,
         fmt("%zu (n, m) cells, n=2..6, m=1..8, %zu trials each: %zu with mean > bound + 3 sigma; tightest %s; %.2fs",
             cells, trials, violations, tightest.c_str(), seconds_since(start)));
  info("9", fmt("no-backfill layering exceeds the bound in %zu cells%s%s", no_backfill_violations,
                no_backfill_violations ? ", e.g. " : "", no_backfill_example.c_str()));
}

void criterion_10() {
  const auto start = Clock::now();
  const std::size_t max_shots = 40;
  struct Cached {
    QuantumState state;
    RecoveryAnalysis analysis;
  };
  std::map<std::vector<std::size_t>, Cached> by_partition;
  std::size_t graphs = 0;
  double worst_at_2k = 1.0;
  std::string worst_at_2k_where;
  bool monotone = true;
  double worst_final = 1.0;
  bool never_splits = true;
  double max_merge_identity_error = 0.0;
  std::size_t partitions_with_merges = 0;
  double state_cache_dev = 0.0;

  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& edges : oracle::simple_graphs(n, 15)) {
      const Graph g(n, edges);
      const auto truth = bfs_components(g);
      const QuantumState state = run_circuit(compile_graph_to_circuit(g));
      auto it = by_partition.find(truth.assignment);
      if (it == by_partition.end()) {
        Cached c{state, analyze_component_recovery(state, truth, max_shots)};
        it = by_partition.emplace(truth.assignment, std::move(c)).first;
        const auto& a = it->second.analysis;
        const std::size_t k = truth.component_count();
        const double p2k = a.probability_exact[2 * k - 1];
        if (p2k < worst_at_2k) {
          worst_at_2k = p2k;
          worst_at_2k_where = fmt("n=%zu k=%zu", n, k);
        }
        for (std::size_t m = 1; m < max_shots; ++m)
          monotone &= a.probability_exact[m] >= a.probability_exact[m - 1] - 1e-15;
        worst_final = std::min(worst_final, a.probability_exact.back());
        never_splits &= a.never_splits_components;
        bool merges = false;
        for (std::size_t m = 0; m < max_shots; ++m) {
          max_merge_identity_error =
              std::max(max_merge_identity_error, std::abs(a.probability_merged[m] - (1 - a.probability_exact[m])));
          merges |= a.probability_merged[m] > 0;
        }
        partitions_with_merges += merges;
      } else {
        state_cache_dev = std::max(state_cache_dev, max_deviation_up_to_phase(state, it->second.state));
      }
      ++graphs;
    }
  }
  const double elapsed = seconds_since(start);
  report("10a", worst_at_2k >= 0.75 && state_cache_dev <= 1e-10,
         fmt("%zu graphs n<=6 (%zu distinct partitions, exact outcome distribution): min P(recovered = BFS) at "
             "M=2k is %.6f at %s (need >= 3/4); %.2fs",
             graphs, by_partition.size(), worst_at_2k, worst_at_2k_where.c_str(), elapsed));
  report("10b", monotone && worst_final >= 1 - 1e-9,
         fmt("P(recovered = BFS) nondecreasing in M %s; min at M=%zu is 1 - %.2e", monotone ? "yes" : "no",
             max_shots, 1 - worst_final));
  report("10c", never_splits,
         fmt("no reachable outcome sequence splits a true component: %s", never_splits ? "yes" : "no"));
  report("10d", partitions_with_merges == 0,
         fmt("no reachable outcome sequence merges nodes of different true components: %zu of %zu partitions "
             "have merging outcomes with positive probability (merge probability equals 1 - P(recovery) to %.1e)",
             partitions_with_merges, by_partition.size(), max_merge_identity_error));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"1", criterion_1}, {"2", criterion_2}, {"3", criterion_3}, {"4", criterion_4}, {"5", criterion_5},
      {"6", criterion_6}, {"7", criterion_7}, {"8", criterion_8}, {"9", criterion_9}, {"10", criterion_10},
  };
  for (const auto& [id, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%s: %d failing line(s)\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
  return failures ? 1 : 0;
}
