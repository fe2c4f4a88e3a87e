#include "nestsep/nests.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nestsep {

namespace {

std::vector<ElementPair> sorted_unique(std::vector<ElementPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

ElementPair prenest_step(const FiniteGroup& g, const ElementPair& ab, const ElementPair& cd) {
  return {g.mul(ab.first, g.inv(cd.first)), g.mul(g.inv(cd.second), ab.second)};
}

}  // namespace

bool PreNest::contains(const ElementPair& p) const {
  return std::binary_search(pairs.begin(), pairs.end(), p);
}

PrenestCheck is_prenest(const GroupRef& g, const std::vector<ElementPair>& pairs) {
  if (pairs.empty()) fail("EmptySet", "a pre-nest must be nonempty");
  std::set<ElementPair> in(pairs.begin(), pairs.end());
  for (const auto& ab : in)
    for (const auto& cd : in)
      if (!in.count(prenest_step(*g, ab, cd)))
        return PrenestCheck{false, PrenestViolation{ab, cd}};
  return PrenestCheck{true, std::nullopt};
}

PreNest prenest_closure(const GroupRef& g, std::vector<ElementPair> seeds) {
  if (seeds.empty()) fail("EmptySet", "closure needs at least one seed pair");
  std::set<ElementPair> in;
  std::vector<ElementPair> work;
  for (auto& p : seeds)
    if (in.insert(p).second) work.push_back(p);
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto p = work[i];
    for (std::size_t j = 0; j <= i; ++j) {
      auto q = work[j];
      for (const auto& r : {prenest_step(*g, p, q), prenest_step(*g, q, p)})
        if (in.insert(r).second) work.push_back(r);
    }
  }
  return PreNest{g, std::vector<ElementPair>(in.begin(), in.end())};
}

std::vector<int> nest_of(const PreNest& p) {
  std::vector<char> in(p.parent->order(), 0);
  for (const auto& [a, b] : p.pairs) in[p.parent->mul(a, b)] = 1;
  std::vector<int> out;
  for (int x = 0; x < p.parent->order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

// --- data ------------------------------------------------------------------

namespace {

// Coset index of x in S/K under a canonical section: the j with
// section[j]^-1 x in K. Returns -1 when x is outside S.
int coset_index(const FiniteGroup& g, const std::vector<int>& section, const Subgroup& k, int x) {
  for (std::size_t j = 0; j < section.size(); ++j)
    if (k.contains(g.mul(g.inv(section[j]), x))) return static_cast<int>(j);
  return -1;
}

}  // namespace

void validate_nest_datum(const NestDatum& d) {
  const FiniteGroup& G = *d.parent;
  auto check_side = [&](const Subgroup& s, const Subgroup& k, const GroupRef& quo,
                        const std::vector<int>& section, const char* side) {
    std::string tag(side);
    if (s.parent.get() != d.parent.get() || k.parent.get() != d.parent.get())
      fail("DatumInvalid", "side " + tag + ": subgroup parents mismatch");
    if (!is_subgroup_members(G, s.members)) fail("DatumInvalid", "S" + tag + " is not a subgroup");
    if (!is_subgroup_members(G, k.members)) fail("DatumInvalid", "K" + tag + " is not a subgroup");
    for (int m : k.members)
      if (!s.contains(m)) fail("DatumInvalid", "K" + tag + " is not contained in S" + tag);
    for (int x : s.members)
      for (int m : k.members)
        if (!k.contains(G.conj(x, m))) fail("DatumInvalid", "K" + tag + " not normal in S" + tag);
    if (static_cast<int>(section.size()) * k.size() != s.size())
      fail("DatumInvalid", "section " + tag + " has wrong size");
    if (section.empty() || section[0] != FiniteGroup::kIdentity)
      fail("DatumInvalid", "identity coset must be represented by the identity");
    if (static_cast<int>(section.size()) != quo->order())
      fail("DatumInvalid", "section " + tag + " does not match the quotient order");
    std::vector<char> seen(quo->order(), 0);
    for (std::size_t j = 0; j < section.size(); ++j) {
      if (!s.contains(section[j])) fail("DatumInvalid", "section rep outside S" + tag);
      for (std::size_t l = 0; l < j; ++l)
        if (k.contains(G.mul(G.inv(section[l]), section[j])))
          fail("DatumInvalid", "section " + tag + " picks one coset twice");
    }
  };
  check_side(d.s1, d.k1, d.theta.source, d.section1, "1");
  check_side(d.s2, d.k2, d.theta.target, d.section2, "2");
  if (!is_bijective(d.theta)) fail("DatumInvalid", "theta is not bijective");
  make_homomorphism(d.theta.source, d.theta.target, d.theta.image);  // revalidate
}

namespace {

NestDatum assemble_datum(const GroupRef& g, Subgroup s1, Subgroup k1, Subgroup s2, Subgroup k2,
                         const SubgroupQuotient& q1, const SubgroupQuotient& q2,
                         Homomorphism theta) {
  NestDatum d;
  d.parent = g;
  d.s1 = std::move(s1);
  d.k1 = std::move(k1);
  d.s2 = std::move(s2);
  d.k2 = std::move(k2);
  d.theta = std::move(theta);
  d.section1 = q1.section;
  d.section2 = q2.section;
  return d;
}

}  // namespace

NestDatum build_nest_datum(const GroupRef& g, const std::vector<int>& s1_members,
                           const std::vector<int>& k1_members, const std::vector<int>& s2_members,
                           const std::vector<int>& k2_members,
                           const std::vector<ElementPair>& theta_pairs) {
  auto s1 = subgroup_generated(g, s1_members);
  auto k1 = subgroup_generated(g, k1_members);
  auto s2 = subgroup_generated(g, s2_members);
  auto k2 = subgroup_generated(g, k2_members);
  auto q1 = subgroup_quotient(g, s1, k1);
  auto q2 = subgroup_quotient(g, s2, k2);
  if (q1.quo->order() != q2.quo->order())
    fail("DatumInvalid", "factor groups have different orders");
  std::vector<int> image(q1.quo->order(), -1);
  for (const auto& [x, y] : theta_pairs) {
    int cx = q1.coset_of[x], cy = q2.coset_of[y];
    if (cx < 0 || cy < 0) fail("DatumInvalid", "theta pair outside S1/S2");
    if (image[cx] >= 0 && image[cx] != cy) fail("DatumInvalid", "theta maps one coset twice");
    image[cx] = cy;
  }
  for (int v : image)
    if (v < 0) fail("DatumInvalid", "theta does not cover every coset");
  Homomorphism theta;
  try {
    theta = make_homomorphism(q1.quo, q2.quo, image);
  } catch (const Error& e) {
    fail("DatumInvalid", std::string("theta: ") + e.what());
  }
  if (!is_bijective(theta)) fail("DatumInvalid", "theta is not bijective");
  auto d = assemble_datum(g, s1, k1, s2, k2, q1, q2, std::move(theta));
  validate_nest_datum(d);
  return d;
}

PreNest prenest_from_datum(const NestDatum& d) {
  validate_nest_datum(d);
  const FiniteGroup& G = *d.parent;
  const FiniteGroup& quo1 = *d.theta.source;
  std::vector<ElementPair> pairs;
  pairs.reserve(d.k1.members.size() * d.section1.size() * d.k2.members.size());
  for (int j = 0; j < quo1.order(); ++j) {
    int c = d.section1[j];
    int t = d.section2[d.theta(quo1.inv(j))];
    for (int a : d.k1.members)
      for (int b : d.k2.members) pairs.emplace_back(G.mul(a, c), G.mul(t, b));
  }
  PreNest p{d.parent, sorted_unique(std::move(pairs))};
  auto check = is_prenest(d.parent, p.pairs);
  if (!check.ok) fail("DatumInvalid", "datum does not generate a pre-nest");
  return p;
}

NestDatum datum_from_prenest(const PreNest& p) {
  auto check = is_prenest(p.parent, p.pairs);
  if (!check.ok) {
    const auto& w = *check.witness;
    fail("NotAPreNest", "pairs (" + p.parent->label(w.ab.first) + "," +
                            p.parent->label(w.ab.second) + ") and (" +
                            p.parent->label(w.cd.first) + "," + p.parent->label(w.cd.second) +
                            ") violate closure");
  }
  const FiniteGroup& G = *p.parent;
  std::vector<int> s1m, s2m, k1m, k2m;
  for (const auto& [a, b] : p.pairs) {
    s1m.push_back(a);
    s2m.push_back(b);
    if (b == FiniteGroup::kIdentity) k1m.push_back(a);
    if (a == FiniteGroup::kIdentity) k2m.push_back(b);
  }
  for (auto* v : {&s1m, &s2m, &k1m, &k2m}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  for (const auto* v : {&s1m, &s2m, &k1m, &k2m})
    if (!is_subgroup_members(G, *v))
      fail("NotAPreNest", "projection or fiber is not a subgroup");

  Subgroup s1{p.parent, s1m, is_normal_members(G, s1m)};
  Subgroup k1{p.parent, k1m, is_normal_members(G, k1m)};
  Subgroup s2{p.parent, s2m, is_normal_members(G, s2m)};
  Subgroup k2{p.parent, k2m, is_normal_members(G, k2m)};
  auto q1 = subgroup_quotient(p.parent, s1, k1);
  auto q2 = subgroup_quotient(p.parent, s2, k2);

  // theta(x K1) = y^-1 K2 for any (x,y) in P
  std::vector<int> image(q1.quo->order(), -1);
  for (const auto& [x, y] : p.pairs) {
    int cx = q1.coset_of[x];
    int cy = q2.coset_of[G.inv(y)];
    if (cx < 0 || cy < 0) fail("NotAPreNest", "pair escapes the recovered projections");
    if (image[cx] >= 0 && image[cx] != cy)
      fail("NotAPreNest", "recovered theta is not well defined");
    image[cx] = cy;
  }
  for (int v : image)
    if (v < 0) fail("NotAPreNest", "recovered theta misses a coset");
  Homomorphism theta;
  try {
    theta = make_homomorphism(q1.quo, q2.quo, image);
  } catch (const Error& e) {
    fail("NotAPreNest", std::string("recovered theta: ") + e.what());
  }
  if (!is_bijective(theta)) fail("NotAPreNest", "recovered theta is not bijective");
  return assemble_datum(p.parent, std::move(s1), std::move(k1), std::move(s2), std::move(k2), q1,
                        q2, std::move(theta));
}

PreNest prenest_from_hom_pair(const TwistedPair& pair) {
  const FiniteGroup& G = *pair.G();
  const FiniteGroup& H = *pair.H();
  std::vector<ElementPair> pairs;
  pairs.reserve(H.order());
  for (int h = 0; h < H.order(); ++h) pairs.emplace_back(pair.psi(h), G.inv(pair.phi(h)));
  PreNest p{pair.G(), sorted_unique(std::move(pairs))};
  auto check = is_prenest(pair.G(), p.pairs);
  if (!check.ok) fail("InvalidArgs", "hom-pair set failed the pre-nest check");
  return p;
}

InducedHomPair hom_pair_from_nest(const GroupRef& g, const PreNest& p) {
  auto d = datum_from_prenest(p);
  const FiniteGroup& G = *g;
  if (p.parent.get() != g.get()) fail("ParentMismatch", "pre-nest lives in another group");
  auto q1 = subgroup_quotient(g, d.s1, d.k1);
  auto q2 = subgroup_quotient(g, d.s2, d.k2);

  // H = preimage in S1 x S2 of D = { (c, theta(c)) }
  std::vector<ElementPair> elems;
  for (int x : d.s1.members)
    for (int y : d.s2.members)
      if (d.theta(q1.coset_of[x]) == q2.coset_of[y]) elems.emplace_back(x, y);
  std::sort(elems.begin(), elems.end());  // (identity, identity) lands at index 0

  std::map<ElementPair, int> index_of;
  for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ElementPair prod{G.mul(elems[i].first, elems[j].first),
                       G.mul(elems[i].second, elems[j].second)};
      auto it = index_of.find(prod);
      if (it == index_of.end()) fail("NotAPreNest", "preimage of D is not closed");
      table[i][j] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& [x, y] : elems) labels.push_back("(" + G.label(x) + "," + G.label(y) + ")");
  auto H = FiniteGroup::from_table(table, {}, labels);

  std::vector<int> psi_img(n), phi_img(n);
  for (int i = 0; i < n; ++i) {
    psi_img[i] = elems[i].first;
    phi_img[i] = elems[i].second;
  }
  InducedHomPair out;
  out.H = H;
  out.h_elements = std::move(elems);
  out.psi = make_homomorphism(H, g, std::move(psi_img));
  out.phi = make_homomorphism(H, g, std::move(phi_img));
  return out;
}

// --- standard examples -----------------------------------------------------

PreNest standard_prenest_subgroup(const GroupRef& g, const Subgroup& h) {
  std::vector<ElementPair> pairs;
  for (int m : h.members) pairs.emplace_back(m, FiniteGroup::kIdentity);
  PreNest p{g, sorted_unique(std::move(pairs))};
  if (!is_prenest(g, p.pairs).ok) fail("InvalidArgs", "subgroup pre-nest failed validation");
  return p;
}

PreNest standard_prenest_double_coset(const GroupRef& g, const Subgroup& h, const Subgroup& k) {
  std::vector<ElementPair> pairs;
  for (int a : h.members)
    for (int b : k.members) pairs.emplace_back(a, b);
  PreNest p{g, sorted_unique(std::move(pairs))};
  if (!is_prenest(g, p.pairs).ok) fail("InvalidArgs", "double-coset pre-nest failed validation");
  return p;
}

PreNest standard_prenest_commutators(const GroupRef& g, int fixed) {
  if (fixed < 0 || fixed >= g->order()) fail("InvalidArgs", "element index out of range");
  // { [h,g] } = [1]_{iota_g, id}
  return prenest_from_hom_pair(
      make_twisted_pair(inner_automorphism(g, fixed), identity_endomorphism(g)));
}

PreNest standard_prenest_aut_displacement(const GroupRef& g, const Homomorphism& phi) {
  if (phi.source.get() != g.get() || phi.target.get() != g.get() || !is_bijective(phi))
    fail("InvalidArgs", "expected an automorphism of G");
  return prenest_from_hom_pair(make_twisted_pair(phi, identity_endomorphism(g)));
}

// --- quotient closure ------------------------------------------------------

PreNest pushforward_prenest(const PreNest& p, const QuotientMap& q) {
  if (p.parent.get() != q.source.get()) fail("ParentMismatch", "pre-nest is not over q's source");
  std::vector<ElementPair> pairs;
  pairs.reserve(p.pairs.size());
  for (const auto& [a, b] : p.pairs) pairs.emplace_back(q(a), q(b));
  PreNest out{q.target, sorted_unique(std::move(pairs))};
  if (!is_prenest(q.target, out.pairs).ok)
    fail("InvalidArgs", "pushforward failed the pre-nest check");
  return out;
}

PreNest pullback_prenest(const PreNest& pbar, const QuotientMap& q) {
  if (pbar.parent.get() != q.target.get())
    fail("ParentMismatch", "pre-nest is not over q's target");
  std::vector<ElementPair> pairs;
  const int n = q.source->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (pbar.contains({q(a), q(b)})) pairs.emplace_back(a, b);
  PreNest out{q.source, std::move(pairs)};  // already lexicographically sorted
  if (!is_prenest(q.source, out.pairs).ok)
    fail("InvalidArgs", "pullback failed the pre-nest check");
  return out;
}

// --- enumeration -----------------------------------------------------------

void for_each_nest_datum(const GroupRef& g, const std::function<void(const NestDatum&)>& fn) {
  auto subs = all_subgroups(g);
  // (S, K normal in S) pairs with their quotient packages
  struct Side {
    Subgroup s, k;
    SubgroupQuotient q;
    std::string quo_key;  // flattened quotient table, for iso-set reuse
  };
  auto table_key = [](const FiniteGroup& q) {
    std::string key;
    for (int a = 0; a < q.order(); ++a)
      for (int b = 0; b < q.order(); ++b) key += std::to_string(q.mul(a, b)) + ",";
    return key;
  };
  std::vector<Side> sides;
  for (const auto& s : subs) {
    for (const auto& k : subs) {
      if (!std::includes(s.members.begin(), s.members.end(), k.members.begin(), k.members.end()))
        continue;
      bool normal_in_s = true;
      for (std::size_t xi = 0; xi < s.members.size() && normal_in_s; ++xi)
        for (int m : k.members)
          if (!k.contains(g->conj(s.members[xi], m))) {
            normal_in_s = false;
            break;
          }
      if (!normal_in_s) continue;
      auto q = subgroup_quotient(g, s, k);
      auto key = table_key(*q.quo);
      sides.push_back(Side{s, k, std::move(q), std::move(key)});
    }
  }
  // isomorphism image vectors depend only on the two quotient tables
  std::map<std::pair<std::string, std::string>, std::vector<std::vector<int>>> iso_cache;
  for (const auto& lhs : sides)
    for (const auto& rhs : sides) {
      if (lhs.q.quo->order() != rhs.q.quo->order()) continue;
      auto cache_key = std::make_pair(lhs.quo_key, rhs.quo_key);
      auto it = iso_cache.find(cache_key);
      if (it == iso_cache.end()) {
        std::vector<std::vector<int>> images;
        for (auto& iso : all_isomorphisms(lhs.q.quo, rhs.q.quo)) images.push_back(iso.image);
        it = iso_cache.emplace(std::move(cache_key), std::move(images)).first;
      }
      for (const auto& image : it->second) {
        Homomorphism theta{lhs.q.quo, rhs.q.quo, image};
        fn(assemble_datum(g, lhs.s, lhs.k, rhs.s, rhs.k, lhs.q, rhs.q, std::move(theta)));
      }
    }
}

}  // namespace nestsep
