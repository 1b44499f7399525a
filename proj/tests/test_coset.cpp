#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "p3cay/coset.hpp"

using namespace p3cay;

TEST_CASE("coset graph structure at p = 3") {
  const CosetGraph sigma = build_coset_graph(make_group_params(3));
  CHECK(sigma.graph.n == 18);
  CHECK(sigma.graph.edge_count() == 27);
  CHECK(sigma.graph.regular_valency() == 3);
  CHECK(girth(sigma.graph) == 6);

  // Families form the two sides of the bipartition, A first.
  const auto side = bipartite_side(sigma.graph);
  REQUIRE(side.has_value());
  CHECK(*side == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  for (int v = 0; v < 18; ++v) CHECK(sigma.verts[v].family == (v < 9 ? 0 : 1));

  // Each coset has p members and the identity lies in the first of each family.
  CHECK(sigma.graph.labels[0] == "A:0.0.0");
  CHECK(sigma.graph.labels[9] == "B:0.0.0");
  for (int v = 0; v < 18; ++v) {
    CHECK(sigma.members[v].size() == 3);
    CHECK(std::is_sorted(sigma.members[v].begin(), sigma.members[v].end()));
    CHECK(sigma.index_of(sigma.verts[v]) == v);
  }
  CHECK(sigma.members[0] == std::vector<int>{to_index({0, 0, 0}, sigma.params),
                                             to_index({1, 0, 0}, sigma.params),
                                             to_index({2, 0, 0}, sigma.params)});
  // a is not the minimal representative of its own coset <a>.
  CHECK_THROWS_AS(sigma.index_of(CosetVertex{0, {1, 0, 0}}), OutOfRange);

  // Adjacent cosets meet in exactly one vertex, as the edge rule demands.
  for (const auto& [u, v] : sigma.graph.edge_list()) {
    std::vector<int> common;
    std::set_intersection(sigma.members[u].begin(), sigma.members[u].end(),
                          sigma.members[v].begin(), sigma.members[v].end(),
                          std::back_inserter(common));
    CHECK(common.size() == 1);
  }
}

TEST_CASE("maximal cliques are the cosets") {
  for (int p : {3, 5}) {
    const CayleyContext ctx = build_cayley(make_group_params(p));
    const CliqueCosetIdentification id = identify_clique_and_coset_graphs(ctx);
    CHECK(id.check.pass);
    CHECK(id.cliques.cliques.size() == static_cast<std::size_t>(2 * p * p));
    CHECK(id.cosets.graph.n == 2 * p * p);

    // clique_to_coset is a bijection matching member sets.
    std::set<int> image(id.clique_to_coset.begin(), id.clique_to_coset.end());
    CHECK(image.size() == id.clique_to_coset.size());
    for (std::size_t c = 0; c < id.cliques.cliques.size(); ++c) {
      CHECK(id.cliques.cliques[c] == id.cosets.members[id.clique_to_coset[c]]);
    }
  }
}

TEST_CASE("line graph of sigma is gamma") {
  const CayleyContext ctx = build_cayley(make_group_params(3));
  const CosetGraph sigma = build_coset_graph(ctx.params);
  const LineGraphIsomorphism iso = line_graph_isomorphism(ctx, sigma);
  CHECK(iso.check.pass);
  REQUIRE(iso.edge_to_vertex.size() == 27);

  std::vector<int> image = iso.edge_to_vertex;
  std::sort(image.begin(), image.end());
  for (int v = 0; v < 27; ++v) CHECK(image[v] == v);

  // Spot check the structure transport on one pair of sigma edges.
  const auto edges = sigma.graph.edge_list();
  const LineGraphResult lg = line_graph(sigma.graph);
  for (int e = 0; e < 27; ++e) {
    for (int f = e + 1; f < 27; ++f) {
      const bool lg_adj = lg.graph.has_edge(e, f);
      const bool gamma_adj = ctx.gamma.has_edge(iso.edge_to_vertex[e], iso.edge_to_vertex[f]);
      CHECK(lg_adj == gamma_adj);
    }
  }
}

TEST_CASE("induced action on sigma") {
  const CayleyContext ctx = build_cayley(make_group_params(3));
  const CosetGraph sigma = build_coset_graph(ctx.params);

  // Right translation by a fixes the coset <a> and preserves families.
  const Permutation ra = right_translation({1, 0, 0}, ctx.params);
  const Permutation ia = induced_action_on_sigma(sigma, ra);
  CHECK(ia(0) == 0);
  for (int v = 0; v < 18; ++v) CHECK((ia(v) < 9) == (v < 9));

  // The a/b swap exchanges the families.
  const GroupAutomorphism swap =
      GroupAutomorphism::from_images({0, 1, 0}, {1, 0, 0}, ctx.params);
  const Permutation isw = induced_action_on_sigma(sigma, automorphism_vertex_action(swap, ctx));
  for (int v = 0; v < 9; ++v) CHECK(isw(v) >= 9);

  // A transposition of gamma vertices shreds cosets.
  std::vector<int> img(27);
  for (int v = 0; v < 27; ++v) img[v] = v;
  std::swap(img[1], img[5]);
  CHECK_THROWS_AS(induced_action_on_sigma(sigma, Permutation(img)), NotCliquePreserving);

  const PermGroup it = induced_group_on_sigma(sigma, ctx.translations);
  CHECK(it.order() == 27);
  CHECK(it.degree() == 18);
}
