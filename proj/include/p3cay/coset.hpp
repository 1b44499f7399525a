#pragma once

#include <utility>
#include <vector>

#include "p3cay/cayley.hpp"
#include "p3cay/graph.hpp"
#include "p3cay/group.hpp"
#include "p3cay/symmetry.hpp"

namespace p3cay {

/// One vertex of the coset graph: a right coset of <a> (family 0) or of <b>
/// (family 1), named by its minimal-index representative.
struct CosetVertex {
  int family = 0;
  GroupElement rep;
  friend auto operator<=>(const CosetVertex&, const CosetVertex&) = default;
};

/// Bipartite coset graph: all <a>-cosets, then all <b>-cosets, each family
/// sorted by representative index; cosets adjacent when they intersect.
/// Labels are "A:i.j.k" / "B:i.j.k" from the representative.
struct CosetGraph {
  GroupParams params;
  Graph graph;
  std::vector<CosetVertex> verts;
  /// Members of each coset, as gamma vertex indices, sorted.
  std::vector<std::vector<int>> members;

  int index_of(const CosetVertex& cv) const;  // OutOfRange if absent
};

CosetGraph build_coset_graph(const GroupParams& params);

/// Matches the clique graph of ctx.gamma with the coset graph: every maximal
/// clique must be the member set of exactly one coset. The check fails (or
/// NotCliquePreserving is thrown for structural mismatches) otherwise.
struct CliqueCosetIdentification {
  CliqueGraphResult cliques;
  CosetGraph cosets;
  /// clique index -> coset vertex index.
  std::vector<int> clique_to_coset;
  CheckResult check;
};
CliqueCosetIdentification identify_clique_and_coset_graphs(const CayleyContext& ctx);

/// The line graph of sigma against gamma: edge (A-coset, B-coset) maps to the
/// unique gamma vertex in both cosets, and this bijection must carry line
/// graph adjacency to gamma adjacency exactly. Throws NotIsomorphism on any
/// violation.
struct LineGraphIsomorphism {
  /// sigma edge index (edge_list order) -> gamma vertex.
  std::vector<int> edge_to_vertex;
  CheckResult check;
};
LineGraphIsomorphism line_graph_isomorphism(const CayleyContext& ctx, const CosetGraph& sigma);

/// Action induced on sigma's vertices by a gamma automorphism, through the
/// member sets: a coset's image must again be a coset (NotCliquePreserving
/// otherwise).
Permutation induced_action_on_sigma(const CosetGraph& sigma, const Permutation& gamma_perm);

/// Generator-wise image of a gamma automorphism group on sigma.
PermGroup induced_group_on_sigma(const CosetGraph& sigma, const PermGroup& group);

}  // namespace p3cay
