// Finite group kernel: dense multiplication-table groups with element
// indices, subgroups, normality, quotients, products and homomorphisms.
//
// Canonical representation is the full multiplication table; every
// downstream algorithm in this library is exhaustive at desk scale and
// wants O(1) products. The identity is always index 0 and element
// enumeration order is fixed by the construction (breadth-first closure
// order for permutation groups, pair-lexicographic for products,
// least-representative order for quotients), so all outputs are
// deterministic.

#ifndef NESTSEP_GROUP_HPP_
#define NESTSEP_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nestsep/errors.hpp"

namespace nestsep {

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

// Order caps are configuration, not constants; these are the defaults.
inline constexpr std::size_t kDefaultClosureCap = 20000;
inline constexpr std::size_t kDefaultNormalEnumCap = 256;

class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;

  // Builds a group from a full multiplication table (table[a][b] = a*b).
  // Validates the axioms: identity at index 0, two-sided inverses,
  // associativity (full scan for order <= 64, 1e5 sampled triples above),
  // and that `gens` generate everything. Empty `gens` means "compute a
  // small generating set greedily".
  static GroupRef from_table(const std::vector<std::vector<int>>& table,
                             std::vector<int> gens = {},
                             std::vector<std::string> labels = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int h, int g) const {  // [h,g] = h g h^-1 g^-1
    return mul(mul(h, g), mul(inv(h), inv(g)));
  }
  int power(int g, long long e) const;

  const std::vector<int>& generators() const { return gens_; }
  const std::string& label(int g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;
  int element_order(int g) const;

  // Index of the element with the given label, or nullopt.
  std::optional<int> find_label(const std::string& label) const;

 private:
  friend GroupRef make_group_unchecked(std::vector<std::uint16_t> mul, std::vector<int> gens,
                                       std::vector<std::string> labels);
  FiniteGroup() = default;

  int order_ = 1;
  std::vector<std::uint16_t> mul_;  // row-major order_ x order_
  std::vector<std::uint16_t> inv_;
  std::vector<int> gens_;
  std::vector<std::string> labels_;
};

struct Subgroup {
  GroupRef parent;
  std::vector<int> members;  // sorted ascending; always contains 0
  bool normal = false;       // verified by conjugation closure when set

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

struct Homomorphism {
  GroupRef source;
  GroupRef target;
  std::vector<int> image;  // size |source|

  int operator()(int h) const { return image[h]; }
};

struct QuotientMap {
  GroupRef source;
  Subgroup kernel;
  GroupRef target;
  std::vector<int> projection;  // size |source|

  int operator()(int g) const { return projection[g]; }
};

// --- constructions ---------------------------------------------------------

// Breadth-first closure of permutation generators on points 0..degree-1.
// Element order is the BFS enumeration order from the identity; throws
// ClosureBudgetExceeded if the order would exceed `closure_cap`.
GroupRef group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 std::size_t closure_cap = kDefaultClosureCap);

GroupRef cyclic_group(int n);                 // labels "0".."n-1"
GroupRef symmetric_group(int n, std::size_t closure_cap = kDefaultClosureCap);
GroupRef dihedral_group(int n);               // symmetries of the n-gon, order 2n
GroupRef trivial_group();

// Semidirect product N x| H. `action` has one entry per element of H, each a
// permutation of N's indices that is an automorphism of N; h -> action[h]
// must itself be a homomorphism into Aut(N) (validated, error
// ActionNotHomomorphic with witness). The trivial action yields the direct
// product. Element (n,h) has index n + |N|*h.
GroupRef semidirect_product(const GroupRef& n, const GroupRef& h,
                            const std::vector<std::vector<int>>& action);
GroupRef direct_product(const GroupRef& a, const GroupRef& b);

// --- homomorphisms ---------------------------------------------------------

// Validates multiplicativity over all pairs; throws NotAHomomorphism with a
// witness pair on failure.
Homomorphism make_homomorphism(GroupRef source, GroupRef target, std::vector<int> image);

// Extends generator images along a spanning tree of `source` and validates
// the full multiplication table. `gen_images[i]` is the image of
// source->generators()[i].
Homomorphism hom_from_generator_images(const GroupRef& source, const GroupRef& target,
                                       const std::vector<int>& gen_images);

Homomorphism identity_endomorphism(const GroupRef& g);
Homomorphism trivial_homomorphism(const GroupRef& source, const GroupRef& target);
Homomorphism inversion_endomorphism(const GroupRef& g);  // x -> x^-1; abelian only
Homomorphism inner_automorphism(const GroupRef& g, int conjugator);
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
bool is_bijective(const Homomorphism& f);
std::vector<int> kernel_members(const Homomorphism& f);
std::vector<int> image_members(const Homomorphism& f);

// --- subgroups -------------------------------------------------------------

Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& seeds);
Subgroup normal_closure(const GroupRef& g, const std::vector<int>& seeds);
Subgroup center(const GroupRef& g);
bool is_subgroup_members(const FiniteGroup& g, const std::vector<int>& members);
bool is_normal_members(const FiniteGroup& g, const std::vector<int>& members);

// Complete list of normal subgroups, sorted by (size, members); includes the
// trivial and full subgroups. Throws OrderCapExceeded above `order_cap`.
std::vector<Subgroup> all_normal_subgroups(const GroupRef& g,
                                           std::size_t order_cap = kDefaultNormalEnumCap);

// Complete subgroup list (desk scale; used by the nest-datum enumerators).
std::vector<Subgroup> all_subgroups(const GroupRef& g, std::size_t order_cap = 64);

// Coset quotient G/N. Cosets are ordered by least member, so the identity
// coset has index 0 and the projection is deterministic. Throws NotNormal.
QuotientMap quotient(const GroupRef& g, const Subgroup& n);

// Least-index coset representatives of N in G, identity first.
std::vector<int> left_transversal(const GroupRef& g, const Subgroup& n);

// A subgroup repackaged as a group of its own, with index maps both ways.
struct SubgroupGroup {
  GroupRef group;
  std::vector<int> to_parent;    // sub index -> parent index
  std::vector<int> from_parent;  // parent index -> sub index, -1 outside
};
SubgroupGroup subgroup_as_group(const GroupRef& g, const Subgroup& s);

// S/K for K normal in S <= G, with canonical coset sections into G
// (identity coset represented by the identity, least index otherwise).
struct SubgroupQuotient {
  SubgroupGroup sub;             // S as a group
  GroupRef quo;                  // S/K
  std::vector<int> coset_of;     // parent index -> quo index, -1 outside S
  std::vector<int> section;      // quo index -> parent index (canonical rep)
};
SubgroupQuotient subgroup_quotient(const GroupRef& g, const Subgroup& s, const Subgroup& k);

// --- enumeration -----------------------------------------------------------

// All homomorphisms source -> target by generator-image backtracking.
// Throws OrderCapExceeded if the assignment space |target|^#gens exceeds
// `candidate_cap`.
std::vector<Homomorphism> all_homomorphisms(const GroupRef& source, const GroupRef& target,
                                            std::size_t candidate_cap = 1000000);

std::vector<Homomorphism> all_isomorphisms(const GroupRef& a, const GroupRef& b);
std::vector<Homomorphism> all_automorphisms(const GroupRef& g);

// The sampling policy for "all hom pairs" style sweeps: the full Hom set
// when the backtracking space is at most `exhaustive_cap`, otherwise a
// seeded random sample of `sample_size` homomorphisms.
std::vector<Homomorphism> homomorphism_policy_set(const GroupRef& source, const GroupRef& target,
                                                  std::size_t exhaustive_cap = 10000,
                                                  std::size_t sample_size = 100,
                                                  std::uint64_t seed = 0x5eed);

// Small generating set found greedily (used for derived groups).
std::vector<int> greedy_generators(const FiniteGroup& g);

// Structural helpers for "isomorphic up to invariants" test comparisons.
std::vector<int> element_order_census(const FiniteGroup& g);  // census[k] = #elements of order k
bool same_table(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace nestsep

#endif  // NESTSEP_GROUP_HPP_
