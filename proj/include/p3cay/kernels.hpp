#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "p3cay/graph.hpp"
#include "p3cay/perm.hpp"

// The loops that dominate the heavier computations, each in two versions:
// a serial reference and an OpenMP one. The pair must produce identical
// results; tests compare them and tools/bench_kernels.cpp times them.
// Dispatch is a process-wide runtime switch.

namespace p3cay::kernels {

/// Parallel dispatch defaults to on when built with OpenMP, off otherwise.
bool parallel_enabled();
void set_parallel(bool on);

/// All-sources BFS. Row v holds distances_from(g, v); -1 for unreachable.
std::vector<int> distance_matrix(const Graph& g);

/// Orbits of encoded tuples under the generators. Tuples are flat, stride
/// arity; each coordinate is a point the permutations act on. The tuple set
/// must be closed under every generator (NotInvariant with the first failing
/// tuple otherwise). Orbits hold item indices, sorted; orbit list is ordered
/// by smallest item index.
struct TupleOrbits {
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;
};
TupleOrbits tuple_orbits(std::span<const int> flat, int arity,
                         const std::vector<Permutation>& gens);

/// Index of the first edge of g (in edge_list order) that perm fails to map
/// to an edge; -1 when perm is an automorphism.
int first_broken_edge(const Graph& g, const Permutation& perm);

/// Right-multiplication closure of the generators from the identity.
/// Insertion order (hence output order) is frontier-major and deterministic,
/// identical between the serial and parallel versions. Not sorted.
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound);

namespace serial {
std::vector<int> distance_matrix(const Graph& g);
TupleOrbits tuple_orbits(std::span<const int> flat, int arity, const std::vector<Permutation>& gens);
int first_broken_edge(const Graph& g, const Permutation& perm);
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound);
}  // namespace serial

namespace par {
std::vector<int> distance_matrix(const Graph& g);
TupleOrbits tuple_orbits(std::span<const int> flat, int arity, const std::vector<Permutation>& gens);
int first_broken_edge(const Graph& g, const Permutation& perm);
std::vector<Permutation> generate_group(const std::vector<Permutation>& gens, std::size_t bound);
}  // namespace par

}  // namespace p3cay::kernels
