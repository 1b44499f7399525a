#include "p3cay/coset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace p3cay {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string family_label(int family, const GroupElement& rep) {
  return std::string(family == 0 ? "A:" : "B:") + std::to_string(rep.i) + "." +
         std::to_string(rep.j) + "." + std::to_string(rep.k);
}

// Right cosets of the cyclic subgroup generated by gen, each as a sorted
// vector of element indices, listed by minimal member.
std::vector<std::vector<int>> right_cosets(const GroupElement& gen, const GroupParams& params) {
  const int n = params.p * params.p * params.p;
  std::vector<char> claimed(n, 0);
  std::vector<std::vector<int>> cosets;
  for (int v = 0; v < n; ++v) {
    if (claimed[v]) continue;
    GroupElement g = from_index(v, params);
    std::vector<int> members;
    GroupElement x = g;
    for (int m = 0; m < params.p; ++m) {
      int idx = to_index(x, params);
      members.push_back(idx);
      claimed[idx] = 1;
      x = multiply(gen, x, params);
    }
    std::sort(members.begin(), members.end());
    cosets.push_back(std::move(members));
  }
  return cosets;
}

}  // namespace

int CosetGraph::index_of(const CosetVertex& cv) const {
  auto it = std::lower_bound(verts.begin(), verts.end(), cv);
  if (it == verts.end() || *it != cv) throw OutOfRange("no such coset vertex");
  return static_cast<int>(it - verts.begin());
}

CosetGraph build_coset_graph(const GroupParams& params) {
  const int p = params.p;
  CosetGraph cg;
  cg.params = params;

  for (int family = 0; family < 2; ++family) {
    const GroupElement gen = family == 0 ? GroupElement{1, 0, 0} : GroupElement{0, 1, 0};
    std::vector<std::vector<int>> cosets = right_cosets(gen, params);
    internal_check(cosets.size() == static_cast<std::size_t>(p) * p,
                   "expected p^2 cosets per family");
    for (std::vector<int>& members : cosets) {
      cg.verts.push_back(CosetVertex{family, from_index(members.front(), params)});
      cg.members.push_back(std::move(members));
    }
  }
  internal_check(std::is_sorted(cg.verts.begin(), cg.verts.end()),
                 "coset vertices not sorted by family and representative");

  // Each element lies in one coset per family; that membership pair is the
  // edge set. Crossing pairs never share two elements, so no duplicates.
  const int n = p * p * p;
  std::vector<int> a_coset_of(n, -1);
  std::vector<int> b_coset_of(n, -1);
  for (std::size_t cv = 0; cv < cg.members.size(); ++cv) {
    for (int v : cg.members[cv]) {
      (cg.verts[cv].family == 0 ? a_coset_of : b_coset_of)[v] = static_cast<int>(cv);
    }
  }
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    internal_check(a_coset_of[v] >= 0 && b_coset_of[v] >= 0, "element missing from a family");
    internal_check(!edges.contains({a_coset_of[v], b_coset_of[v]}),
                   "two cosets intersect in more than one element");
    edges.insert({a_coset_of[v], b_coset_of[v]});
  }
  cg.graph = Graph::from_edges(static_cast<int>(cg.verts.size()), {edges.begin(), edges.end()});
  internal_check(cg.graph.edge_count() == n, "coset graph edge count is not p^3");

  cg.graph.labels.reserve(cg.verts.size());
  for (const CosetVertex& cv : cg.verts) {
    cg.graph.labels.push_back(family_label(cv.family, cv.rep));
  }
  return cg;
}

CliqueCosetIdentification identify_clique_and_coset_graphs(const CayleyContext& ctx) {
  const int p = ctx.params.p;
  CliqueCosetIdentification id{clique_graph(ctx.gamma), build_coset_graph(ctx.params), {}, {}};

  std::map<std::vector<int>, int> coset_of_members;
  for (std::size_t cv = 0; cv < id.cosets.members.size(); ++cv) {
    coset_of_members[id.cosets.members[cv]] = static_cast<int>(cv);
  }

  bool sizes_ok = true;
  std::vector<char> hit(id.cosets.verts.size(), 0);
  id.clique_to_coset.reserve(id.cliques.cliques.size());
  for (const std::vector<int>& clique : id.cliques.cliques) {
    if (static_cast<int>(clique.size()) != p) sizes_ok = false;
    auto it = coset_of_members.find(clique);
    if (it == coset_of_members.end()) {
      throw NotCliquePreserving("a maximal clique is not a coset of <a> or <b>");
    }
    internal_check(!hit[it->second], "two cliques map to one coset");
    hit[it->second] = 1;
    id.clique_to_coset.push_back(it->second);
  }
  const bool bijective = id.cliques.cliques.size() == id.cosets.verts.size();

  bool adjacency_ok = true;
  const int nc = static_cast<int>(id.cliques.cliques.size());
  for (int c1 = 0; c1 < nc && adjacency_ok; ++c1) {
    for (int c2 = c1 + 1; c2 < nc; ++c2) {
      if (id.cliques.graph.has_edge(c1, c2) !=
          id.cosets.graph.has_edge(id.clique_to_coset[c1], id.clique_to_coset[c2])) {
        adjacency_ok = false;
        break;
      }
    }
  }

  std::vector<int> per_vertex(ctx.gamma.n, 0);
  for (const std::vector<int>& clique : id.cliques.cliques) {
    for (int v : clique) ++per_vertex[v];
  }
  const bool two_each = std::all_of(per_vertex.begin(), per_vertex.end(),
                                    [](int c) { return c == 2; });

  id.check.name = "clique_coset_identification";
  id.check.expected = ordered_json{{"clique_count", 2 * p * p},
                                   {"clique_size", p},
                                   {"cliques_per_vertex", 2},
                                   {"bijective", true},
                                   {"adjacency_preserved", true}};
  id.check.actual = ordered_json{{"clique_count", id.cliques.cliques.size()},
                                 {"clique_sizes_uniform", sizes_ok},
                                 {"cliques_per_vertex_all_two", two_each},
                                 {"bijective", bijective},
                                 {"adjacency_preserved", adjacency_ok}};
  id.check.pass = sizes_ok && two_each && bijective && adjacency_ok &&
                  id.cliques.cliques.size() == static_cast<std::size_t>(2) * p * p;
  return id;
}

LineGraphIsomorphism line_graph_isomorphism(const CayleyContext& ctx, const CosetGraph& sigma) {
  LineGraphIsomorphism iso;
  const LineGraphResult lg = line_graph(sigma.graph);
  const int n = ctx.gamma.n;
  if (static_cast<int>(lg.edges.size()) != n) {
    throw NotIsomorphism("line graph order differs from the Cayley graph order");
  }

  std::vector<char> used(n, 0);
  iso.edge_to_vertex.reserve(lg.edges.size());
  for (const auto& [x, y] : lg.edges) {
    std::vector<int> common;
    std::set_intersection(sigma.members[x].begin(), sigma.members[x].end(),
                          sigma.members[y].begin(), sigma.members[y].end(),
                          std::back_inserter(common));
    if (common.size() != 1) {
      throw NotIsomorphism("adjacent cosets do not intersect in exactly one element");
    }
    if (used[common[0]]) throw NotIsomorphism("two edges map to one element");
    used[common[0]] = 1;
    iso.edge_to_vertex.push_back(common[0]);
  }

  bool adjacency_ok = true;
  ordered_json witness;
  for (int e1 = 0; e1 < n && adjacency_ok; ++e1) {
    for (int e2 = e1 + 1; e2 < n; ++e2) {
      if (lg.graph.has_edge(e1, e2) !=
          ctx.gamma.has_edge(iso.edge_to_vertex[e1], iso.edge_to_vertex[e2])) {
        adjacency_ok = false;
        witness = ordered_json{{"line_vertices", {e1, e2}},
                               {"gamma_vertices", {iso.edge_to_vertex[e1], iso.edge_to_vertex[e2]}}};
        break;
      }
    }
  }

  iso.check.name = "line_graph_isomorphism";
  iso.check.expected = ordered_json{{"bijective", true}, {"adjacency_preserved", true}};
  iso.check.actual = ordered_json{{"edge_count", lg.edges.size()},
                                  {"bijective", true},
                                  {"adjacency_preserved", adjacency_ok}};
  iso.check.witness = witness;
  iso.check.pass = adjacency_ok;
  return iso;
}

Permutation induced_action_on_sigma(const CosetGraph& sigma, const Permutation& gamma_perm) {
  std::map<std::vector<int>, int> index_of_members;
  for (std::size_t cv = 0; cv < sigma.members.size(); ++cv) {
    index_of_members[sigma.members[cv]] = static_cast<int>(cv);
  }
  std::vector<int> img(sigma.verts.size());
  std::vector<int> image_members;
  for (std::size_t cv = 0; cv < sigma.members.size(); ++cv) {
    image_members.clear();
    for (int v : sigma.members[cv]) image_members.push_back(gamma_perm(v));
    std::sort(image_members.begin(), image_members.end());
    auto it = index_of_members.find(image_members);
    if (it == index_of_members.end()) {
      throw NotCliquePreserving("permutation maps a coset outside the coset family");
    }
    img[cv] = it->second;
  }
  return Permutation(std::move(img));
}

PermGroup induced_group_on_sigma(const CosetGraph& sigma, const PermGroup& group) {
  std::vector<Permutation> gens;
  gens.reserve(group.generators().size());
  for (const Permutation& q : group.generators()) {
    gens.push_back(induced_action_on_sigma(sigma, q));
  }
  return PermGroup::generated_by(std::move(gens));
}

}  // namespace p3cay
