#include "p3cay/cayley.hpp"

#include <algorithm>
#include <string>

#include "p3cay/kernels.hpp"

namespace p3cay {

namespace {

std::string element_label(const GroupElement& g) {
  return std::to_string(g.i) + "." + std::to_string(g.j) + "." + std::to_string(g.k);
}

}  // namespace

Permutation right_translation(const GroupElement& g, const GroupParams& params) {
  const int n = params.p * params.p * params.p;
  std::vector<int> img(n);
  for (int v = 0; v < n; ++v) {
    img[v] = to_index(multiply(from_index(v, params), g, params), params);
  }
  return Permutation(std::move(img));
}

Graph build_cayley_graph(const GroupParams& params) {
  const int p = params.p;
  const int n = p * p * p;
  const std::vector<GroupElement> s = connection_set(params);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * s.size() / 2);
  for (int v = 0; v < n; ++v) {
    GroupElement g = from_index(v, params);
    for (const GroupElement& x : s) {
      int w = to_index(multiply(x, g, params), params);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  Graph gamma = Graph::from_edges(n, edges);
  gamma.labels.reserve(n);
  for (int v = 0; v < n; ++v) gamma.labels.push_back(element_label(from_index(v, params)));
  internal_check(gamma.regular_valency() == 2 * (p - 1), "cayley graph is not 2(p-1)-valent");
  return gamma;
}

CayleyContext build_cayley(const GroupParams& params) {
  const int p = params.p;
  const int n = p * p * p;
  const std::vector<GroupElement> s = connection_set(params);

  CayleyContext ctx{params, build_cayley_graph(params), PermGroup::trivial(n),
                    PermGroup::trivial(n), PermGroup::trivial(n), {}};

  ctx.translations = PermGroup::generated_by(
      {right_translation(GroupElement{1, 0, 0}, params),
       right_translation(GroupElement{0, 1, 0}, params)});
  internal_check(ctx.translations.order() == static_cast<std::uint64_t>(n),
                 "translation group order is not p^3");
  internal_check(action_regularity(ctx.translations, s_arcs(ctx.gamma, 0)) ==
                     ActionRegularity::regular,
                 "translations do not act regularly on the vertices");

  ctx.aut_gs_maps = aut_preserving_connection_set(params);
  std::vector<Permutation> aut_perms;
  aut_perms.reserve(ctx.aut_gs_maps.size());
  for (const GroupAutomorphism& phi : ctx.aut_gs_maps) {
    aut_perms.push_back(automorphism_vertex_action(phi, ctx));
  }
  const std::size_t expected_aut = 2u * (p - 1) * (p - 1);
  internal_check(ctx.aut_gs_maps.size() == expected_aut,
                 "expected 2(p-1)^2 connection-set-preserving automorphisms");
  for (const Permutation& q : aut_perms) {
    internal_check(q(0) == 0, "automorphism action moves the identity vertex");
  }
  ctx.aut_gs = PermGroup::from_elements(aut_perms);
  internal_check(ctx.aut_gs.order() == expected_aut,
                 "automorphism vertex actions are not pairwise distinct");

  std::vector<Permutation> ngens = ctx.translations.generators();
  for (const Permutation& q : ctx.aut_gs.generators()) ngens.push_back(q);
  ctx.normalizer = PermGroup::generated_by(std::move(ngens));
  internal_check(ctx.normalizer.order() == static_cast<std::uint64_t>(n) * expected_aut,
                 "normalizer order is not 2 p^3 (p-1)^2");
  internal_check(is_normal(ctx.translations, ctx.normalizer),
                 "translations are not normal in the normalizer");

  // The two factors meet trivially: every automorphism action fixes vertex 0
  // and the only translation fixing 0 is the identity.
  for (const Permutation& q : ctx.aut_gs.elements()) {
    if (!q.is_identity()) {
      internal_check(!ctx.translations.contains(q),
                     "translations meet the automorphism actions nontrivially");
    }
  }
  return ctx;
}

Permutation automorphism_vertex_action(const GroupAutomorphism& phi, const CayleyContext& ctx) {
  Permutation action(phi.index_table(ctx.params));
  int broken = kernels::first_broken_edge(ctx.gamma, action);
  if (broken >= 0) {
    throw NotGraphAutomorphism("group automorphism breaks graph edge " + std::to_string(broken));
  }
  return action;
}

std::vector<GroupElement> sphere_elements(const CayleyContext& ctx, int distance) {
  const std::vector<std::vector<int>> spheres = distance_partition(ctx.gamma, 0);
  if (distance < 0 || distance >= static_cast<int>(spheres.size())) {
    throw OutOfRange("no sphere at distance " + std::to_string(distance));
  }
  std::vector<GroupElement> out;
  out.reserve(spheres[distance].size());
  for (int v : spheres[distance]) out.push_back(from_index(v, ctx.params));
  return out;
}

}  // namespace p3cay
