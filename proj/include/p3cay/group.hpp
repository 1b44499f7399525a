#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "p3cay/errors.hpp"

namespace p3cay {

// The group under study is the extraspecial group of order p^3 and exponent p,
// presented as < a, b, c | a^p = b^p = c^p = 1, [a,b] = c, [c,a] = [c,b] = 1 >.
// Every element has the normal form a^i b^j c^k; see docs/normal-form.md for
// the multiplication rule this fixes.

/// Family parameters: an odd prime p and a generator t of (Z/pZ)^*.
struct GroupParams {
  int p = 3;
  int t = 2;
  friend auto operator<=>(const GroupParams&, const GroupParams&) = default;
};

bool is_odd_prime(int n);
bool is_primitive_root(int t, int p);
int smallest_primitive_root(int p);

/// Picks the smallest primitive root mod p. Throws ConfigError unless p is an odd prime.
GroupParams make_group_params(int p);
/// Uses the given primitive root. Throws ConfigError if t is not one mod p.
GroupParams make_group_params(int p, int t);

/// Element in normal form a^i b^j c^k with 0 <= i, j, k < p.
struct GroupElement {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kIdentity{0, 0, 0};

/// Dense index i*p^2 + j*p + k; the vertex numbering used by every graph built here.
int to_index(const GroupElement& g, const GroupParams& params);
GroupElement from_index(int v, const GroupParams& params);

GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const GroupParams& params);
GroupElement inverse(const GroupElement& g, const GroupParams& params);
/// g^-1 h^-1 g h
GroupElement commutator(const GroupElement& g, const GroupElement& h, const GroupParams& params);
/// g^e for e >= 0.
GroupElement power(const GroupElement& g, int e, const GroupParams& params);

/// All p^3 elements in index order.
std::vector<GroupElement> all_elements(const GroupParams& params);

/// The connection set S = { a^i, b^i | 1 <= i <= p-1 }, sorted by index.
/// Inverse-closed, identity-free, and it generates the whole group.
std::vector<GroupElement> connection_set(const GroupParams& params);

/// Closure of gens under multiplication, sorted by index.
/// Throws BoundExceeded if the closure grows past bound.
std::vector<GroupElement> generated_subgroup(const std::vector<GroupElement>& gens,
                                             const GroupParams& params,
                                             std::size_t bound = 1u << 20);

/// An automorphism of the group, stored by the images of a and b alone.
/// The image of c is forced: it must be the commutator of those two images.
/// Construction verifies that the images really define a bijective homomorphism,
/// so a held value is always a genuine automorphism.
class GroupAutomorphism {
 public:
  static GroupAutomorphism identity(const GroupParams& params);

  /// Throws InternalInvariant if the images do not define an automorphism.
  static GroupAutomorphism from_images(const GroupElement& img_a, const GroupElement& img_b,
                                       const GroupParams& params);

  /// Same validation as from_images, but rejection is a value, not an error.
  static std::optional<GroupAutomorphism> try_from_images(const GroupElement& img_a,
                                                          const GroupElement& img_b,
                                                          const GroupParams& params);

  const GroupElement& image_a() const { return img_a_; }
  const GroupElement& image_b() const { return img_b_; }
  const GroupElement& image_c() const { return img_c_; }

  /// Image of a^i b^j c^k, i.e. image_a^i image_b^j image_c^k.
  GroupElement apply(const GroupElement& g, const GroupParams& params) const;

  /// Dense form: entry v is the index of the image of the element with index v.
  std::vector<int> index_table(const GroupParams& params) const;

  /// True when the image of every member lands back inside the set.
  bool preserves(const std::vector<GroupElement>& set, const GroupParams& params) const;

  friend auto operator<=>(const GroupAutomorphism&, const GroupAutomorphism&) = default;

 private:
  GroupAutomorphism(GroupElement a, GroupElement b, GroupElement c)
      : img_a_(a), img_b_(b), img_c_(c) {}

  GroupElement img_a_;
  GroupElement img_b_;
  GroupElement img_c_;
};

/// apply(first) then apply(second).
GroupAutomorphism compose(const GroupAutomorphism& first, const GroupAutomorphism& second,
                          const GroupParams& params);
GroupAutomorphism inverse(const GroupAutomorphism& phi, const GroupParams& params);

/// The three maps that generate the connection-set-preserving automorphisms.
struct CanonicalAutomorphisms {
  GroupAutomorphism scale_a;  // a -> a^t, b -> b
  GroupAutomorphism scale_b;  // a -> a,   b -> b^t
  GroupAutomorphism swap_ab;  // a -> b,   b -> a
};
CanonicalAutomorphisms canonical_automorphisms(const GroupParams& params);

/// Exhaustive search over generator images in S x S for automorphisms with
/// S^phi = S. Sorted by (image of a, image of b). The result is checked to be
/// closed under composition; InternalInvariant otherwise.
std::vector<GroupAutomorphism> aut_preserving_connection_set(const GroupParams& params);

/// The p+1 subgroups of order p^2: first <b, c>, then <a b^i, c> for 0 <= i < p.
/// Each is returned sorted by index and verified closed under multiplication.
std::vector<std::vector<GroupElement>> order_p2_subgroups(const GroupParams& params);

}  // namespace p3cay
