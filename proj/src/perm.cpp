#include "p3cay/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "p3cay/kernels.hpp"

namespace p3cay {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) throw OutOfRange("image vector is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int x = 0; x < degree; ++x) img[x] = x;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw OutOfRange("composing permutations of different degrees");
  std::vector<int> img(f.degree());
  for (int x = 0; x < f.degree(); ++x) img[x] = g(f(x));
  return Permutation(std::move(img));
}

std::size_t closure_bound() {
  static const std::size_t bound = [] {
    if (const char* env = std::getenv("P3CAY_CLOSURE_BOUND")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return bound;
}

PermGroup PermGroup::generated_by(std::vector<Permutation> gens, std::size_t bound) {
  if (gens.empty()) throw OutOfRange("a permutation group needs at least one generator");
  PermGroup g;
  g.degree_ = gens[0].degree();
  for (const Permutation& p : gens) {
    if (p.degree() != g.degree_) throw OutOfRange("generators have mixed degrees");
  }
  g.gens_ = std::move(gens);
  g.bound_ = bound == 0 ? closure_bound() : bound;
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw OutOfRange("a permutation group cannot be empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  PermGroup g;
  g.degree_ = elements[0].degree();
  const Permutation id = Permutation::identity(g.degree_);
  internal_check(std::binary_search(elements.begin(), elements.end(), id),
                 "element set lacks the identity");

  // Greedy generator extraction: absorb one element at a time, re-closing.
  std::vector<Permutation> gens;
  std::vector<Permutation> closed{id};
  for (const Permutation& e : elements) {
    if (std::binary_search(closed.begin(), closed.end(), e)) continue;
    gens.push_back(e);
    closed = kernels::generate_group(gens, elements.size());
    std::sort(closed.begin(), closed.end());
  }
  internal_check(closed == elements, "element set is not closed under composition");

  g.gens_ = gens.empty() ? std::vector<Permutation>{id} : std::move(gens);
  g.bound_ = elements.size();
  g.elements_ = std::move(elements);
  g.order_ = g.elements_->size();
  return g;
}

PermGroup PermGroup::from_generators_with_order(std::vector<Permutation> gens, std::uint64_t order,
                                                std::size_t bound) {
  PermGroup g = generated_by(std::move(gens), bound);
  g.order_ = order;
  return g;
}

PermGroup PermGroup::trivial(int degree) {
  return from_elements({Permutation::identity(degree)});
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) {
    std::vector<Permutation> elems = kernels::generate_group(gens_, bound_);
    std::sort(elems.begin(), elems.end());
    if (order_) {
      internal_check(elems.size() == *order_,
                     "enumerated group order disagrees with the declared order");
    }
    order_ = elems.size();
    elements_ = std::move(elems);
  }
  return *elements_;
}

std::uint64_t PermGroup::order() const {
  if (order_) return *order_;
  return elements().size();
}

bool PermGroup::contains(const Permutation& g) const {
  const auto& elems = elements();
  return std::binary_search(elems.begin(), elems.end(), g);
}

std::vector<int> orbit(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree()) throw OutOfRange("orbit point out of range");
  std::vector<char> seen(group.degree(), 0);
  seen[point] = 1;
  std::vector<int> frontier{point};
  std::vector<int> out{point};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (const Permutation& g : group.generators()) {
        int y = g(x);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<int, int>>> orbits_on_ordered_pairs(
    const PermGroup& group, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<int> flat;
  flat.reserve(sorted.size() * 2);
  for (const auto& [u, v] : sorted) {
    if (u < 0 || u >= group.degree() || v < 0 || v >= group.degree()) {
      throw OutOfRange("pair coordinate out of range");
    }
    flat.push_back(u);
    flat.push_back(v);
  }
  kernels::TupleOrbits to = kernels::tuple_orbits(flat, 2, group.generators());

  std::vector<std::vector<std::pair<int, int>>> orbits;
  orbits.reserve(to.orbits.size());
  for (const auto& items : to.orbits) {
    std::vector<std::pair<int, int>> o;
    o.reserve(items.size());
    for (int i : items) o.push_back(sorted[i]);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

PermGroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || point >= group.degree()) throw OutOfRange("stabilizer point out of range");
  std::vector<Permutation> fixed;
  for (const Permutation& g : group.elements()) {
    if (g(point) == point) fixed.push_back(g);
  }
  return PermGroup::from_elements(std::move(fixed));
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) throw NotSubgroup("subgroup acts on a different point set");
  for (const Permutation& h : sub.elements()) {
    if (!group.contains(h)) throw NotSubgroup("claimed subgroup has an element outside the group");
  }
  // h^g in sub for sub-generators h and group-generators g forces sub^g = sub
  // for every g (finite order), hence normality in the whole group.
  for (const Permutation& g : group.generators()) {
    const Permutation ginv = g.inverse();
    for (const Permutation& h : sub.generators()) {
      if (!sub.contains(compose(compose(ginv, h), g))) return false;
    }
  }
  return true;
}

ActionRegularity action_regularity(const PermGroup& group, const std::vector<int>& points) {
  if (points.empty()) throw OutOfRange("regularity test needs a non-empty point set");
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Permutation& g : group.generators()) {
    for (int x : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), g(x))) {
        throw NotInvariant("point set is not invariant under the group");
      }
    }
  }

  const bool transitive = orbit(group, sorted[0]).size() == sorted.size();
  bool free = true;
  for (const Permutation& g : group.elements()) {
    if (g.is_identity()) continue;
    for (int x : sorted) {
      if (g(x) == x) {
        free = false;
        break;
      }
    }
    if (!free) break;
  }
  if (transitive && free) return ActionRegularity::regular;
  if (free) return ActionRegularity::semiregular_only;
  if (transitive) return ActionRegularity::transitive_only;
  return ActionRegularity::neither;
}

}  // namespace p3cay
