#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "p3cay/errors.hpp"

namespace p3cay {

/// Bijection of {0..degree-1}, stored as its image vector.
class Permutation {
 public:
  /// Validates that images is a bijection; throws OutOfRange otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Left-to-right composition: compose(f, g) applies f first, then g.
Permutation compose(const Permutation& f, const Permutation& g);

/// Element bound for group closures. Default 10^6; the environment variable
/// P3CAY_CLOSURE_BOUND overrides it.
std::size_t closure_bound();

/// Permutation group held as generators plus, when required, the full
/// sorted element list. The element list is grown on first use; operations
/// that only need generators never pay for it.
class PermGroup {
 public:
  /// Throws BoundExceeded when the closure passes the bound (0 = closure_bound()).
  static PermGroup generated_by(std::vector<Permutation> gens, std::size_t bound = 0);

  /// Wraps an already closed element set; throws InternalInvariant when the
  /// set is not closed. A reduced generating set is extracted.
  static PermGroup from_elements(std::vector<Permutation> elements);

  /// Generators plus an order established elsewhere. The order is trusted
  /// until the first full enumeration, which verifies it.
  static PermGroup from_generators_with_order(std::vector<Permutation> gens, std::uint64_t order,
                                              std::size_t bound = 0);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// All elements, sorted lexicographically by image vector. First call runs
  /// the closure.
  const std::vector<Permutation>& elements() const;

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::size_t bound_ = 0;
  mutable std::optional<std::vector<Permutation>> elements_;
  mutable std::optional<std::uint64_t> order_;
};

/// Orbit of point under the group, sorted ascending.
std::vector<int> orbit(const PermGroup& group, int point);

/// Orbits of the induced action on the given ordered pairs. Every pair's image
/// under every generator must stay inside the given set (NotInvariant otherwise).
/// Orbits are sorted internally and listed by their minimal pair.
std::vector<std::vector<std::pair<int, int>>> orbits_on_ordered_pairs(
    const PermGroup& group, const std::vector<std::pair<int, int>>& pairs);

/// Subgroup fixing the point. Enumerates the group.
PermGroup stabilizer(const PermGroup& group, int point);

/// Whether sub is normal in group. Conjugates sub's generators by group's
/// generators, which settles the question for the full groups. Throws
/// NotSubgroup when sub is not contained in group.
bool is_normal(const PermGroup& sub, const PermGroup& group);

enum class ActionRegularity { regular, semiregular_only, transitive_only, neither };

/// Classifies the action restricted to the given points (which must be
/// invariant, NotInvariant otherwise): transitive and free, free only,
/// transitive only, or neither. Enumerates the group.
ActionRegularity action_regularity(const PermGroup& group, const std::vector<int>& points);

}  // namespace p3cay
