// (phi,psi)-twisted conjugacy engine over finite table groups.
//
// Two elements g1, g2 of G are twisted conjugate under a pair of
// homomorphisms phi, psi: H -> G when g1 = psi(h) g2 phi(h)^-1 for some
// h in H. Classes are exact orbit enumerations; witnesses are found in
// H's enumeration order and verified before being returned.

#ifndef NESTSEP_TWISTED_HPP_
#define NESTSEP_TWISTED_HPP_

#include <optional>
#include <vector>

#include "nestsep/group.hpp"

namespace nestsep {

struct TwistedPair {
  Homomorphism phi;
  Homomorphism psi;

  const GroupRef& H() const { return phi.source; }
  const GroupRef& G() const { return phi.target; }
};

// Validates that phi and psi share source and target.
TwistedPair make_twisted_pair(Homomorphism phi, Homomorphism psi);

struct TwistedClass {
  int base;
  std::vector<int> members;  // sorted ascending

  bool contains(int g) const;
};

// The class of g: { psi(h) g phi(h)^-1 : h in H }, enumerated over all of H.
TwistedClass twisted_class(const TwistedPair& pair, int g);

// Some h with g1 = psi(h) g2 phi(h)^-1, or nullopt. First witness in H's
// enumeration order.
std::optional<int> are_twisted_conjugate(const TwistedPair& pair, int g1, int g2);

struct ClassPartition {
  std::vector<TwistedClass> classes;  // ordered by least base
  std::vector<int> class_of;          // element -> position in `classes`

  std::size_t count() const { return classes.size(); }
};
ClassPartition class_partition(const TwistedPair& pair);

// The reduction behind "one class comparison = one identity-class test":
// [g]_{phi,psi} = [k]_{phi,psi} iff g k^-1 lies in [1]_{iota_k phi, psi}.
// Returns the shifted pair (iota_k phi, psi) together with g k^-1.
struct ShiftedInstance {
  TwistedPair pair;
  int element;
};
ShiftedInstance shift_to_identity(const TwistedPair& pair, int g, int k);

// Decomposition of [g]_psi over a transversal of a psi-invariant normal
// subgroup N: with g_i = x_i g psi(x_i)^-1 and psi_i the restriction of
// iota_{g_i} psi to N, [g]_psi is the disjoint-from-nothing union of the
// translated identity classes [1]_{psi_i} g_i computed inside N.
struct DecompositionTerm {
  int rep;                          // x_i
  int translate;                    // g_i
  Homomorphism twist;               // psi_i as an endomorphism of N's own group
  std::vector<int> identity_class;  // [1]_{psi_i} as parent indices, sorted
};
struct FiniteExtensionDecomposition {
  SubgroupGroup n_group;
  std::vector<DecompositionTerm> terms;

  // union of identity_class * translate over all terms, sorted
  std::vector<int> union_members(const FiniteGroup& g) const;
};
FiniteExtensionDecomposition finite_extension_decomposition(const GroupRef& g, const Subgroup& n,
                                                            const Homomorphism& psi, int base,
                                                            const std::vector<int>& reps);

// Coin(phi,psi) = { h : phi(h) = psi(h) }, verified to be a subgroup.
Subgroup coincidence_subgroup(const TwistedPair& pair);

// The derivation attached to a normal subgroup N of G: its domain is
// Coin(phibar, psibar) for the induced maps into G/N, d(h) = psi(h)^-1 phi(h)
// lands in N, satisfies d(h1 h2) = (psi(h2)^-1 d(h1) psi(h2)) d(h2), and its
// image is exactly N intersect [1]_{phi,psi}. All three facts are verified.
struct CoincidenceDerivation {
  Subgroup domain;          // <= H
  std::vector<int> values;  // d(h) for h in domain.members, aligned
  std::vector<int> image;   // sorted unique
};
CoincidenceDerivation coincidence_derivation(const GroupRef& g, const Subgroup& n,
                                             const TwistedPair& pair);

// D = C intersect [1]_{phi,psi} for central C, returned as a verified
// subgroup. Throws NotCentral with a witness if C is not central.
Subgroup central_class_intersection(const GroupRef& g, const Subgroup& c, const TwistedPair& pair);

}  // namespace nestsep

#endif  // NESTSEP_TWISTED_HPP_
