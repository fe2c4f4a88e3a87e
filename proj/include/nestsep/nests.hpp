// Pre-nest / nest calculus.
//
// A pre-nest is a nonempty subset of G x G that contains (a c^-1, d^-1 b)
// whenever it contains (a,b) and (c,d); its nest is the image under
// coordinatewise multiplication. Every pre-nest decomposes over a datum
// (S1, K1, S2, K2, theta) with K_i normal in S_i and theta an isomorphism
// S1/K1 -> S2/K2: the pairs are exactly (a c, t b) with a in K1, b in K2,
// c a coset representative and t a representative of theta applied to the
// inverse coset. Both directions of that correspondence are implemented,
// along with the translation between pre-nests and identity classes of
// twisted-conjugacy homomorphism pairs.
//
// Sections always represent the identity coset by the identity and other
// cosets by their least element, which makes datum recovery deterministic
// and the round trips exact rather than up-to-choice.

#ifndef NESTSEP_NESTS_HPP_
#define NESTSEP_NESTS_HPP_

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nestsep/group.hpp"
#include "nestsep/twisted.hpp"

namespace nestsep {

using ElementPair = std::pair<int, int>;

struct PreNest {
  GroupRef parent;
  std::vector<ElementPair> pairs;  // sorted unique

  bool contains(const ElementPair& p) const;
};

struct PrenestViolation {
  ElementPair ab, cd;  // (a c^-1, d^-1 b) is missing
};
struct PrenestCheck {
  bool ok;
  std::optional<PrenestViolation> witness;
};

// Closure check; throws EmptySet on an empty pair set.
PrenestCheck is_prenest(const GroupRef& g, const std::vector<ElementPair>& pairs);

// Least pre-nest containing `seeds` (fixpoint iteration inside G x G).
PreNest prenest_closure(const GroupRef& g, std::vector<ElementPair> seeds);

// { a*b : (a,b) in P }, sorted; always contains the identity.
std::vector<int> nest_of(const PreNest& p);

struct NestDatum {
  GroupRef parent;
  Subgroup s1, k1, s2, k2;        // K_i <= S_i <= parent, K_i normal in S_i
  Homomorphism theta;             // S1/K1 -> S2/K2 between quotient table groups
  std::vector<int> section1;      // quotient index -> representative in parent
  std::vector<int> section2;
};

// Full invariant check; throws DatumInvalid describing the first failure.
void validate_nest_datum(const NestDatum& d);

// Builds a datum from member (or generator) sets and an explicit coset map
// for theta, with canonical sections.
NestDatum build_nest_datum(const GroupRef& g, const std::vector<int>& s1_members,
                           const std::vector<int>& k1_members, const std::vector<int>& s2_members,
                           const std::vector<int>& k2_members,
                           const std::vector<ElementPair>& theta_pairs);

// { (a c, t b) : a in K1, b in K2, c in section1, t = section2 rep of
// theta(c^-1 K1) }; the result is validated with is_prenest.
PreNest prenest_from_datum(const NestDatum& d);

// Recovery: S1 and S2 are the coordinate projections, K1 = {a : (a,1) in P},
// K2 = {b : (1,b) in P}, theta(x K1) = y^-1 K2 for any (x,y) in P, sections
// canonical. prenest_from_datum(datum_from_prenest(P)) == P exactly.
// Throws NotAPreNest if P fails the closure check.
NestDatum datum_from_prenest(const PreNest& p);

// { (psi(h), phi(h)^-1) : h in H }; its nest is [1]_{phi,psi}.
PreNest prenest_from_hom_pair(const TwistedPair& pair);

// The converse construction: from a pre-nest P build the datum, take
// D = { (c, theta(c)) } inside S1/K1 x S2/K2, let H be the preimage of D in
// S1 x S2 as a table group, and return the coordinate projections psi, phi
// into G. Then [1]_{phi,psi} = nest_of(P).
struct InducedHomPair {
  GroupRef H;                             // preimage of D, as its own table group
  std::vector<ElementPair> h_elements;    // H index -> (element of S1, element of S2)
  Homomorphism psi;                       // first-coordinate projection H -> G
  Homomorphism phi;                       // second-coordinate projection H -> G
};
InducedHomPair hom_pair_from_nest(const GroupRef& g, const PreNest& p);

// The classical nest examples. Each result passes is_prenest; the nests are
// H, H K, { [h,g] : h in G } and { h phi(h)^-1 : h in G } respectively.
PreNest standard_prenest_subgroup(const GroupRef& g, const Subgroup& h);
PreNest standard_prenest_double_coset(const GroupRef& g, const Subgroup& h, const Subgroup& k);
PreNest standard_prenest_commutators(const GroupRef& g, int fixed);
PreNest standard_prenest_aut_displacement(const GroupRef& g, const Homomorphism& phi);

// Componentwise image along a quotient map (the pre-nest property is
// preserved: nests are closed under taking quotients), and the preimage in
// the other direction. nest_of(pullback(Pbar)) = q^-1(nest_of(Pbar)) and
// q(nest_of(P)) = nest_of(pushforward(P)).
PreNest pushforward_prenest(const PreNest& p, const QuotientMap& q);
PreNest pullback_prenest(const PreNest& pbar, const QuotientMap& q);

// Exhaustive datum enumeration: all subgroup pairs (S1,K1), (S2,K2) with
// isomorphic quotients, all isomorphisms theta, canonical sections.
void for_each_nest_datum(const GroupRef& g, const std::function<void(const NestDatum&)>& fn);

}  // namespace nestsep

#endif  // NESTSEP_NESTS_HPP_
