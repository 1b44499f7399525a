#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "p3cay/cayley.hpp"
#include "p3cay/graph.hpp"
#include "p3cay/group.hpp"
#include "p3cay/kernels.hpp"
#include "p3cay/perm.hpp"

// Times each kernel's serial and OpenMP versions on the graphs the suite
// actually builds, and cross-checks that both versions agree. Exits nonzero
// on any disagreement, so this doubles as a consistency tool.

namespace {

/// Average milliseconds per call; repeats until the total passes 200 ms or
/// reps run out, so the fast kernels get a stable denominator.
double time_ms(const std::function<void()>& f, int max_reps = 50) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  int reps = 0;
  while (reps < max_reps) {
    f();
    ++reps;
    const double total =
        std::chrono::duration<double, std::milli>(clock::now() - start).count();
    if (total > 200.0 && reps >= 3) break;
  }
  const double total = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return total / reps;
}

struct Row {
  std::string workload;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  bool match = false;
};

void print_rows(int p, const std::vector<Row>& rows) {
  std::printf("p = %d\n", p);
  std::printf("  %-34s %12s %12s %9s %7s\n", "workload", "serial ms", "parallel ms", "speedup",
              "match");
  for (const Row& r : rows) {
    std::printf("  %-34s %12.2f %12.2f %9.2f %7s\n", r.workload.c_str(), r.serial_ms,
                r.parallel_ms, r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.match ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> primes;
  for (int i = 1; i < argc; ++i) primes.push_back(std::atoi(argv[i]));
  if (primes.empty()) primes = {5, 7};

  bool all_match = true;
  for (int p : primes) {
    const p3cay::GroupParams params = p3cay::make_group_params(p);
    const p3cay::CayleyContext ctx = p3cay::build_cayley(params);
    const p3cay::Graph& g = ctx.gamma;
    const std::vector<p3cay::Permutation>& gens = ctx.normalizer.generators();
    std::vector<Row> rows;

    {
      Row r{"distance_matrix"};
      std::vector<int> out_s;
      std::vector<int> out_p;
      r.serial_ms = time_ms([&] { out_s = p3cay::kernels::serial::distance_matrix(g); });
      r.parallel_ms = time_ms([&] { out_p = p3cay::kernels::par::distance_matrix(g); });
      r.match = out_s == out_p;
      rows.push_back(r);
    }

    {
      Row r{"tuple_orbits (2-arcs, normalizer)"};
      const std::vector<int> arcs = p3cay::s_arcs(g, 2);
      p3cay::kernels::TupleOrbits out_s;
      p3cay::kernels::TupleOrbits out_p;
      r.serial_ms = time_ms([&] { out_s = p3cay::kernels::serial::tuple_orbits(arcs, 3, gens); });
      r.parallel_ms = time_ms([&] { out_p = p3cay::kernels::par::tuple_orbits(arcs, 3, gens); });
      r.match = out_s.orbits == out_p.orbits && out_s.orbit_of == out_p.orbit_of;
      rows.push_back(r);
    }

    {
      Row r{"first_broken_edge (all generators)"};
      std::vector<int> out_s;
      std::vector<int> out_p;
      r.serial_ms = time_ms([&] {
        out_s.clear();
        for (const auto& q : gens) out_s.push_back(p3cay::kernels::serial::first_broken_edge(g, q));
      });
      r.parallel_ms = time_ms([&] {
        out_p.clear();
        for (const auto& q : gens) out_p.push_back(p3cay::kernels::par::first_broken_edge(g, q));
      });
      r.match = out_s == out_p;
      rows.push_back(r);
    }

    {
      Row r{"generate_group (normalizer)"};
      std::vector<p3cay::Permutation> out_s;
      std::vector<p3cay::Permutation> out_p;
      const std::size_t bound = p3cay::closure_bound();
      r.serial_ms = time_ms(
          [&] { out_s = p3cay::kernels::serial::generate_group(gens, bound); }, 3);
      r.parallel_ms =
          time_ms([&] { out_p = p3cay::kernels::par::generate_group(gens, bound); }, 3);
      r.match = out_s == out_p;
      rows.push_back(r);
    }

    print_rows(p, rows);
    for (const Row& r : rows) all_match = all_match && r.match;
  }

  if (!all_match) {
    std::fprintf(stderr, "serial and parallel kernels disagree\n");
    return 1;
  }
  return 0;
}
