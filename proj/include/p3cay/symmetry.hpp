#pragma once

#include <string>

#include <json.hpp>

#include "p3cay/cayley.hpp"
#include "p3cay/graph.hpp"
#include "p3cay/perm.hpp"

namespace p3cay {

/// Outcome of one verified property. expected/actual are small JSON values;
/// witness carries a concrete counterexample or certificate when one exists.
struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json actual;
  nlohmann::ordered_json witness;
};

/// Orbits of the natural action on {0..degree-1}: sorted, listed by minimum.
std::vector<std::vector<int>> point_orbits(const PermGroup& group);

/// Action of a vertex permutation on edge_list(g) indices.
/// Throws NotGraphAutomorphism when some edge image is not an edge.
Permutation edge_action(const Graph& g, const Permutation& vertex_perm);

/// The same action for a whole group, presented by its generator images.
PermGroup edge_action_group(const Graph& g, const PermGroup& group);

// Every check below verifies first that the group's generators preserve
// adjacency (NotAutomorphismGroup otherwise). Arc based checks support
// s <= 3, the range the tuple kernels encode.

/// Transitive on vertices and on the ordered pairs at distance i, 1 <= i <= t.
/// Requires 1 <= t <= diameter (OutOfRange) and g connected.
CheckResult check_t_distance_transitive(const Graph& g, const PermGroup& group, int t);

/// check_t_distance_transitive at t = diameter.
CheckResult check_distance_transitive(const Graph& g, const PermGroup& group);

/// Transitive on s-arcs. Throws NoSArcs when the graph has none.
CheckResult check_s_arc_transitive(const Graph& g, const PermGroup& group, int s);

/// Sharply transitive on s-arcs: transitive and |group| = #s-arcs.
CheckResult check_s_arc_regular(const Graph& g, const PermGroup& group, int s);

/// Edge-transitive, regular, but not vertex-transitive.
CheckResult check_semisymmetric(const Graph& g, const PermGroup& group);

/// aut must be the full automorphism group of ctx.gamma. Passes when the
/// translations are normal in aut and aut is exactly the normalizer built
/// with the context (same order, vertex-transitive, identity-vertex
/// stabilizer equal to the connection-set-preserving actions).
CheckResult check_normal_cayley(const CayleyContext& ctx, const PermGroup& aut);

}  // namespace p3cay
