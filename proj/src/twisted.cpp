#include "nestsep/twisted.hpp"

#include <algorithm>

namespace nestsep {

TwistedPair make_twisted_pair(Homomorphism phi, Homomorphism psi) {
  if (phi.source.get() != psi.source.get() || phi.target.get() != psi.target.get())
    fail("ParentMismatch", "phi and psi must share source and target");
  return TwistedPair{std::move(phi), std::move(psi)};
}

bool TwistedClass::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

TwistedClass twisted_class(const TwistedPair& pair, int g) {
  const FiniteGroup& G = *pair.G();
  const FiniteGroup& H = *pair.H();
  std::vector<char> in(G.order(), 0);
  for (int h = 0; h < H.order(); ++h)
    in[G.mul(G.mul(pair.psi(h), g), G.inv(pair.phi(h)))] = 1;
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x)
    if (in[x]) members.push_back(x);
  return TwistedClass{g, std::move(members)};
}

std::optional<int> are_twisted_conjugate(const TwistedPair& pair, int g1, int g2) {
  const FiniteGroup& G = *pair.G();
  const FiniteGroup& H = *pair.H();
  for (int h = 0; h < H.order(); ++h) {
    // evaluating the defining equation is the verification
    if (G.mul(G.mul(pair.psi(h), g2), G.inv(pair.phi(h))) == g1) return h;
  }
  return std::nullopt;
}

ClassPartition class_partition(const TwistedPair& pair) {
  const FiniteGroup& G = *pair.G();
  ClassPartition out;
  out.class_of.assign(G.order(), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (out.class_of[g] >= 0) continue;
    auto cls = twisted_class(pair, g);
    int id = static_cast<int>(out.classes.size());
    for (int m : cls.members) out.class_of[m] = id;
    out.classes.push_back(std::move(cls));
  }
  return out;
}

ShiftedInstance shift_to_identity(const TwistedPair& pair, int g, int k) {
  const FiniteGroup& G = *pair.G();
  auto shifted_phi = compose(inner_automorphism(pair.G(), k), pair.phi);
  return ShiftedInstance{TwistedPair{std::move(shifted_phi), pair.psi}, G.mul(g, G.inv(k))};
}

FiniteExtensionDecomposition finite_extension_decomposition(const GroupRef& g, const Subgroup& n,
                                                            const Homomorphism& psi, int base,
                                                            const std::vector<int>& reps) {
  const FiniteGroup& G = *g;
  if (n.parent.get() != g.get()) fail("ParentMismatch", "subgroup belongs to another group");
  if (!is_normal_members(G, n.members)) fail("NotNormal", "N must be normal");
  if (psi.source.get() != g.get() || psi.target.get() != g.get() || !is_bijective(psi))
    fail("InvalidArgs", "psi must be an automorphism of G");
  for (int m : n.members)
    if (!n.contains(psi(m))) fail("NotInvariant", "psi does not preserve N (moves " + G.label(m) + ")");

  // reps must hit every coset of N exactly once
  if (static_cast<int>(reps.size()) * n.size() != G.order())
    fail("NotATransversal", "wrong number of representatives");
  {
    std::vector<char> seen(G.order(), 0);
    for (int r : reps)
      for (int m : n.members) {
        int x = G.mul(r, m);
        if (seen[x]) fail("NotATransversal", "cosets overlap at " + G.label(x));
        seen[x] = 1;
      }
  }

  FiniteExtensionDecomposition out;
  out.n_group = subgroup_as_group(g, n);
  const GroupRef& N = out.n_group.group;
  for (int x : reps) {
    DecompositionTerm term;
    term.rep = x;
    term.translate = G.mul(G.mul(x, base), G.inv(psi(x)));
    // psi_i = iota_{g_i} psi restricted to N, expressed inside N's own group
    std::vector<int> image(N->order());
    for (int i = 0; i < N->order(); ++i) {
      int y = G.conj(term.translate, psi(out.n_group.to_parent[i]));
      int yi = out.n_group.from_parent[y];
      if (yi < 0) fail("NotInvariant", "iota_{g_i} psi does not preserve N");
      image[i] = yi;
    }
    term.twist = make_homomorphism(N, N, std::move(image));
    // [1]_{psi_i} = { m psi_i(m)^-1 : m in N } mapped back to parent indices
    std::vector<char> in(G.order(), 0);
    for (int i = 0; i < N->order(); ++i)
      in[out.n_group.to_parent[N->mul(i, N->inv(term.twist(i)))]] = 1;
    for (int v = 0; v < G.order(); ++v)
      if (in[v]) term.identity_class.push_back(v);
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::vector<int> FiniteExtensionDecomposition::union_members(const FiniteGroup& g) const {
  std::vector<char> in(g.order(), 0);
  for (const auto& term : terms)
    for (int c : term.identity_class) in[g.mul(c, term.translate)] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

Subgroup coincidence_subgroup(const TwistedPair& pair) {
  const FiniteGroup& H = *pair.H();
  std::vector<int> members;
  for (int h = 0; h < H.order(); ++h)
    if (pair.phi(h) == pair.psi(h)) members.push_back(h);
  if (!is_subgroup_members(H, members))
    fail("InvalidArgs", "coincidence set failed subgroup verification");
  return Subgroup{pair.H(), std::move(members), is_normal_members(H, members)};
}

CoincidenceDerivation coincidence_derivation(const GroupRef& g, const Subgroup& n,
                                             const TwistedPair& pair) {
  const FiniteGroup& G = *g;
  const FiniteGroup& H = *pair.H();
  if (pair.G().get() != g.get()) fail("ParentMismatch", "pair does not target G");
  if (n.parent.get() != g.get() || !is_normal_members(G, n.members))
    fail("NotNormal", "N must be a normal subgroup of G");
  auto q = quotient(g, n);
  auto phibar = compose(Homomorphism{g, q.target, q.projection}, pair.phi);
  auto psibar = compose(Homomorphism{g, q.target, q.projection}, pair.psi);

  CoincidenceDerivation out;
  out.domain = coincidence_subgroup(make_twisted_pair(phibar, psibar));
  out.values.reserve(out.domain.members.size());
  for (int h : out.domain.members) {
    int d = G.mul(G.inv(pair.psi(h)), pair.phi(h));
    if (!n.contains(d)) fail("InvalidArgs", "derivation value escapes N");
    out.values.push_back(d);
  }
  // derivation identity d(h1 h2) = (psi(h2)^-1 d(h1) psi(h2)) d(h2), where the
  // domain acts on N through h -> iota_{psi(h)^-1}
  const auto& dom = out.domain.members;
  std::vector<int> pos(H.order(), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) {
      int h12 = H.mul(dom[i], dom[j]);
      int expected = G.mul(G.conj(G.inv(pair.psi(dom[j])), out.values[i]), out.values[j]);
      if (pos[h12] < 0 || out.values[pos[h12]] != expected)
        fail("InvalidArgs", "derivation identity failed at (" + H.label(dom[i]) + ", " +
                                H.label(dom[j]) + ")");
    }
  std::vector<int> image(out.values);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  out.image = std::move(image);
  return out;
}

Subgroup central_class_intersection(const GroupRef& g, const Subgroup& c,
                                    const TwistedPair& pair) {
  const FiniteGroup& G = *g;
  if (c.parent.get() != g.get()) fail("ParentMismatch", "subgroup belongs to another group");
  for (int x : c.members)
    for (int y = 0; y < G.order(); ++y)
      if (G.mul(x, y) != G.mul(y, x))
        fail("NotCentral", "witness: " + G.label(x) + " does not commute with " + G.label(y));
  auto cls = twisted_class(pair, FiniteGroup::kIdentity);
  std::vector<int> members;
  for (int x : c.members)
    if (cls.contains(x)) members.push_back(x);
  if (!is_subgroup_members(G, members))
    fail("InvalidArgs", "central intersection failed subgroup verification");
  return Subgroup{g, std::move(members), is_normal_members(G, members)};
}

}  // namespace nestsep
