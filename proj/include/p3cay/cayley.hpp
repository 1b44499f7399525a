#pragma once

#include <vector>

#include "p3cay/graph.hpp"
#include "p3cay/group.hpp"
#include "p3cay/perm.hpp"

namespace p3cay {

/// The Cayley graph of the order-p^3 group over the connection set, together
/// with the permutation groups that act on it. Vertex v carries the element
/// from_index(v); vertices g, h are adjacent exactly when h g^-1 lies in the
/// connection set. Construction verifies:
///   - translations: order p^3, regular on the vertices
///   - aut_gs: the connection-set-preserving automorphisms acting on
///     vertices, order 2(p-1)^2, every member fixing vertex 0
///   - normalizer = <translations, aut_gs>, order 2 p^3 (p-1)^2, with
///     translations normal in it and meeting aut_gs trivially
struct CayleyContext {
  GroupParams params;
  Graph gamma;
  PermGroup translations;
  PermGroup aut_gs;
  PermGroup normalizer;
  std::vector<GroupAutomorphism> aut_gs_maps;
};

/// Just the labelled graph, no group machinery.
Graph build_cayley_graph(const GroupParams& params);

CayleyContext build_cayley(const GroupParams& params);

/// x -> x g as a vertex permutation.
Permutation right_translation(const GroupElement& g, const GroupParams& params);

/// phi as a vertex permutation of gamma. Throws NotGraphAutomorphism when the
/// induced map does not preserve adjacency (i.e. phi does not fix the
/// connection set).
Permutation automorphism_vertex_action(const GroupAutomorphism& phi, const CayleyContext& ctx);

/// Elements at the given distance from the identity vertex, sorted by index.
/// Throws OutOfRange when distance exceeds the eccentricity of the identity.
std::vector<GroupElement> sphere_elements(const CayleyContext& ctx, int distance);

}  // namespace p3cay
