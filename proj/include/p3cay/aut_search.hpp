#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "p3cay/graph.hpp"
#include "p3cay/perm.hpp"

namespace p3cay {

/// Ordered partition of the vertex set into color cells.
struct ColoredPartition {
  std::vector<std::vector<int>> cells;

  static ColoredPartition unit(int n);
  bool discrete() const;
  /// Throws BadPartition unless the cells partition {0..n-1}.
  void validate(int n) const;
};

/// Coarsest equitable refinement of start: within every cell, all vertices
/// have the same number of neighbors in every cell. Fragments of a split cell
/// are ordered by that neighbor count, so the refinement commutes with graph
/// automorphisms cell by cell.
ColoredPartition refine(const Graph& g, const ColoredPartition& start);

inline constexpr std::size_t kDefaultAutSearchBound = 1000;

/// Full automorphism group, by individualization-refinement backtracking over
/// a stabilizer chain. The returned group carries the exact order computed
/// from the chain; its element list is only enumerated if asked for later.
/// Throws BoundExceeded when the graph has more than vertex_bound vertices.
PermGroup automorphism_group(const Graph& g, std::size_t vertex_bound = kDefaultAutSearchBound);

/// Stabilizer of v inside automorphism_group(g).
PermGroup vertex_stabilizer_in_aut(const Graph& g, int v,
                                   std::size_t vertex_bound = kDefaultAutSearchBound);

}  // namespace p3cay
