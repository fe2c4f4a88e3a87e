#include "nestsep/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nestsep {

namespace {

std::string default_label(int i) { return "e" + std::to_string(i); }

// Associativity: full scan up to order 64, 1e5 seeded random triples above.
void check_associativity(const FiniteGroup& g) {
  const int n = g.order();
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            fail("TableInvalid", "associativity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    return;
  }
  std::mt19937_64 rng(0x5ca1ab1e ^ static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < 100000; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      fail("TableInvalid", "associativity fails at sampled (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
  }
}

void check_generates(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  seen[FiniteGroup::kIdentity] = 1;
  std::queue<int> todo;
  todo.push(FiniteGroup::kIdentity);
  int count = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int s : g.generators()) {
      int y = g.mul(x, s);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        todo.push(y);
      }
    }
  }
  if (count != n) fail("TableInvalid", "declared generators do not generate the group");
}

}  // namespace

GroupRef make_group_unchecked(std::vector<std::uint16_t> mul, std::vector<int> gens,
                              std::vector<std::string> labels) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const std::size_t n2 = mul.size();
  int n = static_cast<int>(labels.size());
  if (static_cast<std::size_t>(n) * n != n2) fail("TableInvalid", "label/table size mismatch");
  g->order_ = n;
  g->mul_ = std::move(mul);
  g->labels_ = std::move(labels);
  // identity must be index 0
  for (int a = 0; a < n; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a)
      fail("TableInvalid", "index 0 is not a two-sided identity");
  // two-sided inverses
  g->inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (g->mul(a, b) == 0) {
        found = b;
        break;
      }
    if (found < 0 || g->mul(found, a) != 0)
      fail("TableInvalid", "no two-sided inverse for element " + std::to_string(a));
    g->inv_[a] = static_cast<std::uint16_t>(found);
  }
  check_associativity(*g);
  if (gens.empty()) gens = greedy_generators(*g);
  for (int s : gens)
    if (s < 0 || s >= n) fail("TableInvalid", "generator index out of range");
  g->gens_ = std::move(gens);
  check_generates(*g);
  return g;
}

GroupRef FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::vector<int> gens,
                                 std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0 || n > 65535) fail("TableInvalid", "order must be between 1 and 65535");
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) fail("TableInvalid", "table is not square");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) fail("TableInvalid", "table entry out of range");
      mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(v);
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  }
  if (static_cast<int>(labels.size()) != n) fail("TableInvalid", "label count mismatch");
  return make_group_unchecked(std::move(mul), std::move(gens), std::move(labels));
}

int FiniteGroup::power(int g, long long e) const {
  int base = e >= 0 ? g : inv(g);
  unsigned long long k = e >= 0 ? static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(-(e + 1)) + 1;
  int acc = kIdentity;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int x = g, k = 1;
  while (x != kIdentity) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::find_label(const std::string& label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

// --- permutation closure ---------------------------------------------------

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(i) = a(b(i))
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupRef group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                                 std::size_t closure_cap) {
  if (degree <= 0) fail("InvalidArgs", "degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) fail("InvalidArgs", "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[v]) fail("InvalidArgs", "generator is not a bijection");
      hit[v] = 1;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index_of;
  elems.push_back(identity);
  index_of[identity] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (const auto& s : generators) {
      auto y = compose_perm(elems[x], s);
      if (index_of.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > closure_cap)
          fail("ClosureBudgetExceeded",
               "closure exceeds cap " + std::to_string(closure_cap));
        todo.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint16_t>(index_of.at(compose_perm(elems[a], elems[b])));

  std::vector<int> gens;
  for (const auto& s : generators) gens.push_back(index_of.at(s));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());  // drop identity

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_label(p));
  return make_group_unchecked(std::move(mul), std::move(gens), std::move(labels));
}

GroupRef cyclic_group(int n) {
  if (n <= 0) fail("InvalidArgs", "order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<int> gens = n > 1 ? std::vector<int>{1} : std::vector<int>{};
  return FiniteGroup::from_table(table, gens, labels);
}

GroupRef symmetric_group(int n, std::size_t closure_cap) {
  if (n <= 0) fail("InvalidArgs", "n must be positive");
  if (n == 1) return trivial_group();
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return group_from_permutations(n, {transposition, cycle}, closure_cap);
}

GroupRef dihedral_group(int n) {
  if (n < 3) fail("InvalidArgs", "dihedral group needs n >= 3");
  std::vector<int> rotation(n), reflection(n);
  for (int i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return group_from_permutations(n, {rotation, reflection});
}

GroupRef trivial_group() { return FiniteGroup::from_table({{0}}, {}, {"()"}); }

GroupRef semidirect_product(const GroupRef& n, const GroupRef& h,
                            const std::vector<std::vector<int>>& action) {
  const int nn = n->order(), nh = h->order();
  if (static_cast<int>(action.size()) != nh)
    fail("InvalidArgs", "action must have one automorphism per element of H");
  for (const auto& a : action) {
    if (static_cast<int>(a.size()) != nn) fail("InvalidArgs", "automorphism has wrong size");
    make_homomorphism(n, n, a);  // throws NotAHomomorphism on bad entries
    std::vector<char> hit(nn, 0);
    for (int v : a) {
      if (hit[v]) fail("InvalidArgs", "action map is not bijective");
      hit[v] = 1;
    }
  }
  // h -> action[h] must be a homomorphism into Aut(N)
  for (int a = 0; a < nh; ++a)
    for (int b = 0; b < nh; ++b) {
      const auto& composed = action[h->mul(a, b)];
      for (int x = 0; x < nn; ++x)
        if (composed[x] != action[a][action[b][x]])
          fail("ActionNotHomomorphic",
               "action(" + h->label(a) + "*" + h->label(b) + ") != action(" + h->label(a) +
                   ")∘action(" + h->label(b) + ") at " + n->label(x));
    }

  const int total = nn * nh;
  if (total > 65535) fail("ClosureBudgetExceeded", "product order exceeds table limit");
  auto idx = [nn](int a, int b) { return a + nn * b; };
  std::vector<std::uint16_t> mul(static_cast<std::size_t>(total) * total);
  for (int n1 = 0; n1 < nn; ++n1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int n2 = 0; n2 < nn; ++n2)
        for (int h2 = 0; h2 < nh; ++h2) {
          int rn = n->mul(n1, action[h1][n2]);
          int rh = h->mul(h1, h2);
          mul[static_cast<std::size_t>(idx(n1, h1)) * total + idx(n2, h2)] =
              static_cast<std::uint16_t>(idx(rn, rh));
        }

  std::vector<int> gens;
  for (int s : n->generators()) gens.push_back(idx(s, 0));
  for (int s : h->generators()) gens.push_back(idx(0, s));

  std::vector<std::string> labels(total);
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nh; ++b)
      labels[static_cast<std::size_t>(idx(a, b))] = "(" + n->label(a) + "," + h->label(b) + ")";
  return make_group_unchecked(std::move(mul), std::move(gens), std::move(labels));
}

GroupRef direct_product(const GroupRef& a, const GroupRef& b) {
  std::vector<int> identity(a->order());
  std::iota(identity.begin(), identity.end(), 0);
  return semidirect_product(a, b, std::vector<std::vector<int>>(b->order(), identity));
}

// --- homomorphisms ---------------------------------------------------------

Homomorphism make_homomorphism(GroupRef source, GroupRef target, std::vector<int> image) {
  const int n = source->order();
  if (static_cast<int>(image.size()) != n) fail("NotAHomomorphism", "image map has wrong size");
  for (int v : image)
    if (v < 0 || v >= target->order()) fail("NotAHomomorphism", "image entry out of range");
  if (image[FiniteGroup::kIdentity] != FiniteGroup::kIdentity)
    fail("NotAHomomorphism", "identity is not mapped to the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[source->mul(a, b)] != target->mul(image[a], image[b]))
        fail("NotAHomomorphism", "witness pair (" + source->label(a) + ", " + source->label(b) +
                                     "): image(a*b) != image(a)*image(b)");
  return Homomorphism{std::move(source), std::move(target), std::move(image)};
}

namespace {

// Spanning tree of `g` over its generators: tree[x] = (parent, gen position),
// in BFS order from the identity.
struct SpanningTree {
  std::vector<int> order;  // BFS visit order, starts at identity
  std::vector<int> parent;
  std::vector<int> via_gen;
};

SpanningTree spanning_tree(const FiniteGroup& g) {
  const int n = g.order();
  SpanningTree t;
  t.parent.assign(n, -1);
  t.via_gen.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  t.order.push_back(0);
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        t.parent[y] = x;
        t.via_gen[y] = static_cast<int>(i);
        t.order.push_back(y);
        todo.push(y);
      }
    }
  }
  return t;
}

// Extends generator images along a spanning tree; returns the full map
// without validating it.
std::vector<int> extend_gen_images(const FiniteGroup& src, const FiniteGroup& dst,
                                   const SpanningTree& tree, const std::vector<int>& gen_images) {
  std::vector<int> image(src.order(), -1);
  image[0] = 0;
  for (int x : tree.order) {
    if (x == 0) continue;
    image[x] = dst.mul(image[tree.parent[x]], gen_images[tree.via_gen[x]]);
  }
  return image;
}

bool is_multiplicative(const FiniteGroup& src, const FiniteGroup& dst,
                       const std::vector<int>& image) {
  const int n = src.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (image[src.mul(a, b)] != dst.mul(image[a], image[b])) return false;
  return true;
}

}  // namespace

Homomorphism hom_from_generator_images(const GroupRef& source, const GroupRef& target,
                                       const std::vector<int>& gen_images) {
  if (gen_images.size() != source->generators().size())
    fail("NotAHomomorphism", "need exactly one image per generator");
  auto tree = spanning_tree(*source);
  auto image = extend_gen_images(*source, *target, tree, gen_images);
  return make_homomorphism(source, target, std::move(image));
}

Homomorphism identity_endomorphism(const GroupRef& g) {
  std::vector<int> image(g->order());
  std::iota(image.begin(), image.end(), 0);
  return Homomorphism{g, g, std::move(image)};
}

Homomorphism trivial_homomorphism(const GroupRef& source, const GroupRef& target) {
  return Homomorphism{source, target, std::vector<int>(source->order(), 0)};
}

Homomorphism inversion_endomorphism(const GroupRef& g) {
  std::vector<int> image(g->order());
  for (int x = 0; x < g->order(); ++x) image[x] = g->inv(x);
  return make_homomorphism(g, g, std::move(image));  // fails unless abelian
}

Homomorphism inner_automorphism(const GroupRef& g, int conjugator) {
  std::vector<int> image(g->order());
  for (int x = 0; x < g->order(); ++x) image[x] = g->conj(conjugator, x);
  return Homomorphism{g, g, std::move(image)};
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (inner.target.get() != outer.source.get())
    fail("ParentMismatch", "composition endpoints do not match");
  std::vector<int> image(inner.source->order());
  for (int x = 0; x < inner.source->order(); ++x) image[x] = outer.image[inner.image[x]];
  return Homomorphism{inner.source, outer.target, std::move(image)};
}

bool is_bijective(const Homomorphism& f) {
  if (f.source->order() != f.target->order()) return false;
  std::vector<char> hit(f.target->order(), 0);
  for (int v : f.image) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::vector<int> kernel_members(const Homomorphism& f) {
  std::vector<int> ker;
  for (int x = 0; x < f.source->order(); ++x)
    if (f.image[x] == FiniteGroup::kIdentity) ker.push_back(x);
  return ker;
}

std::vector<int> image_members(const Homomorphism& f) {
  std::vector<int> img(f.image);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

// --- subgroups -------------------------------------------------------------

namespace {

std::vector<int> closure_under_mul(const FiniteGroup& g, std::vector<int> seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = 1;
  std::queue<int> todo;
  todo.push(FiniteGroup::kIdentity);
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      todo.push(s);
    }
  // multiply frontier elements by every known member on both sides
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < members.size(); ++i) {
      int m = members[i];
      for (int y : {g.mul(x, m), g.mul(m, x)}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          todo.push(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

bool is_subgroup_members(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) in[m] = 1;
  if (!in[FiniteGroup::kIdentity]) return false;
  for (int a : members) {
    if (!in[g.inv(a)]) return false;
    for (int b : members)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal_members(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) in[m] = 1;
  for (int x = 0; x < g.order(); ++x)
    for (int m : members)
      if (!in[g.conj(x, m)]) return false;
  return true;
}

Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& seeds) {
  for (int s : seeds)
    if (s < 0 || s >= g->order()) fail("InvalidArgs", "seed index out of range");
  auto members = closure_under_mul(*g, seeds);
  bool normal = is_normal_members(*g, members);
  return Subgroup{g, std::move(members), normal};
}

Subgroup normal_closure(const GroupRef& g, const std::vector<int>& seeds) {
  for (int s : seeds)
    if (s < 0 || s >= g->order()) fail("InvalidArgs", "seed index out of range");
  std::vector<char> in(g->order(), 0);
  in[FiniteGroup::kIdentity] = 1;
  std::vector<int> members{FiniteGroup::kIdentity};
  std::queue<int> todo;
  for (int s : seeds)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      todo.push(s);
    }
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int c = 0; c < g->order(); ++c) {
      int y = g->conj(c, x);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        todo.push(y);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int y : {g->mul(x, members[i]), g->mul(members[i], x)}) {
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
          todo.push(y);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{g, std::move(members), true};
}

Subgroup center(const GroupRef& g) {
  std::vector<int> members;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) members.push_back(x);
  }
  return Subgroup{g, std::move(members), true};
}

namespace {

// BFS over the lattice: every (normal) subgroup arises by repeatedly
// adjoining one element (one conjugacy class) to a smaller one.
std::vector<Subgroup> subgroup_lattice(const GroupRef& g, bool normal_only) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  auto insert = [&](std::vector<int> members) {
    if (seen.insert(members).second) work.push_back(std::move(members));
  };
  insert({FiniteGroup::kIdentity});
  for (std::size_t i = 0; i < work.size(); ++i) {
    auto current = work[i];  // copy: work may reallocate
    std::vector<char> in(g->order(), 0);
    for (int m : current) in[m] = 1;
    for (int x = 0; x < g->order(); ++x) {
      if (in[x]) continue;
      auto seeds = current;
      seeds.push_back(x);
      auto bigger =
          normal_only ? normal_closure(g, seeds).members : closure_under_mul(*g, seeds);
      insert(std::move(bigger));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& members : seen)
    out.push_back(Subgroup{g, members, is_normal_members(*g, members)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace

std::vector<Subgroup> all_normal_subgroups(const GroupRef& g, std::size_t order_cap) {
  if (static_cast<std::size_t>(g->order()) > order_cap)
    fail("OrderCapExceeded", "order " + std::to_string(g->order()) + " exceeds cap " +
                                 std::to_string(order_cap));
  return subgroup_lattice(g, /*normal_only=*/true);
}

std::vector<Subgroup> all_subgroups(const GroupRef& g, std::size_t order_cap) {
  if (static_cast<std::size_t>(g->order()) > order_cap)
    fail("OrderCapExceeded", "order " + std::to_string(g->order()) + " exceeds cap " +
                                 std::to_string(order_cap));
  return subgroup_lattice(g, /*normal_only=*/false);
}

QuotientMap quotient(const GroupRef& g, const Subgroup& n) {
  if (n.parent.get() != g.get()) fail("ParentMismatch", "subgroup belongs to another group");
  if (!is_subgroup_members(*g, n.members) || !is_normal_members(*g, n.members))
    fail("NotNormal", "kernel is not a normal subgroup");

  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;  // coset index -> least representative
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.members) coset_of[g->mul(x, m)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g->mul(reps[a], reps[b])];

  std::vector<std::string> labels;
  labels.reserve(q);
  for (int r : reps) labels.push_back("[" + g->label(r) + "]");

  std::vector<int> gens;
  for (int s : g->generators()) {
    int v = coset_of[s];
    if (v != 0 && std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
  }
  auto target = FiniteGroup::from_table(table, gens, labels);
  Subgroup kernel = n;
  kernel.normal = true;
  return QuotientMap{g, std::move(kernel), std::move(target), std::move(coset_of)};
}

std::vector<int> left_transversal(const GroupRef& g, const Subgroup& n) {
  std::vector<int> coset_of(g->order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    reps.push_back(x);
    for (int m : n.members) coset_of[g->mul(x, m)] = static_cast<int>(reps.size()) - 1;
  }
  return reps;
}

SubgroupGroup subgroup_as_group(const GroupRef& g, const Subgroup& s) {
  if (s.parent.get() != g.get()) fail("ParentMismatch", "subgroup belongs to another group");
  const int k = s.size();
  std::vector<int> from_parent(g->order(), -1);
  for (int i = 0; i < k; ++i) from_parent[s.members[i]] = i;
  if (s.members.empty() || s.members[0] != FiniteGroup::kIdentity)
    fail("InvalidArgs", "subgroup must contain the identity");
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      int v = from_parent[g->mul(s.members[a], s.members[b])];
      if (v < 0) fail("InvalidArgs", "member set is not closed under multiplication");
      table[a][b] = v;
    }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (int m : s.members) labels.push_back(g->label(m));
  auto sub = FiniteGroup::from_table(table, {}, labels);
  return SubgroupGroup{std::move(sub), s.members, std::move(from_parent)};
}

SubgroupQuotient subgroup_quotient(const GroupRef& g, const Subgroup& s, const Subgroup& k) {
  auto sub = subgroup_as_group(g, s);
  std::vector<int> k_in_sub;
  for (int m : k.members) {
    int v = sub.from_parent[m];
    if (v < 0) fail("InvalidArgs", "K is not contained in S");
    k_in_sub.push_back(v);
  }
  std::sort(k_in_sub.begin(), k_in_sub.end());
  Subgroup kern{sub.group, k_in_sub, is_normal_members(*sub.group, k_in_sub)};
  if (!kern.normal) fail("NotNormal", "K is not normal in S");
  auto qm = quotient(sub.group, kern);

  SubgroupQuotient out;
  out.coset_of.assign(g->order(), -1);
  for (int i = 0; i < sub.group->order(); ++i) out.coset_of[sub.to_parent[i]] = qm.projection[i];
  out.section.assign(qm.target->order(), -1);
  for (int x = 0; x < g->order(); ++x) {
    int c = out.coset_of[x];
    if (c >= 0 && out.section[c] < 0) out.section[c] = x;  // least index wins
  }
  out.sub = std::move(sub);
  out.quo = qm.target;
  return out;
}

// --- enumeration -----------------------------------------------------------

std::vector<Homomorphism> all_homomorphisms(const GroupRef& source, const GroupRef& target,
                                            std::size_t candidate_cap) {
  const auto& gens = source->generators();
  if (gens.empty())
    return {trivial_homomorphism(source, target)};
  double space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) space *= target->order();
  if (space > static_cast<double>(candidate_cap))
    fail("OrderCapExceeded", "generator-image space too large to enumerate");

  auto tree = spanning_tree(*source);
  // order-divisibility prefilter per generator
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int go = source->element_order(gens[i]);
    for (int v = 0; v < target->order(); ++v)
      if (go % target->element_order(v) == 0) candidates[i].push_back(v);
  }

  std::vector<Homomorphism> out;
  std::vector<int> pick(gens.size(), 0);
  std::vector<int> assignment(gens.size());
  const std::size_t k = gens.size();
  std::size_t depth = 0;
  while (true) {
    if (depth == k) {
      auto image = extend_gen_images(*source, *target, tree, assignment);
      if (is_multiplicative(*source, *target, image))
        out.push_back(Homomorphism{source, target, std::move(image)});
      --depth;
      while (true) {
        ++pick[depth];
        if (pick[depth] < static_cast<int>(candidates[depth].size())) break;
        pick[depth] = 0;
        if (depth == 0) return out;
        --depth;
      }
    }
    assignment[depth] = candidates[depth][pick[depth]];
    ++depth;
  }
}

std::vector<Homomorphism> all_isomorphisms(const GroupRef& a, const GroupRef& b) {
  if (a->order() != b->order()) return {};
  auto homs = all_homomorphisms(a, b);
  std::vector<Homomorphism> out;
  for (auto& f : homs)
    if (is_bijective(f)) out.push_back(std::move(f));
  return out;
}

std::vector<Homomorphism> all_automorphisms(const GroupRef& g) { return all_isomorphisms(g, g); }

std::vector<Homomorphism> homomorphism_policy_set(const GroupRef& source, const GroupRef& target,
                                                  std::size_t exhaustive_cap,
                                                  std::size_t sample_size, std::uint64_t seed) {
  const auto& gens = source->generators();
  double space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) space *= target->order();
  if (space <= static_cast<double>(exhaustive_cap)) return all_homomorphisms(source, target);

  // seeded rejection sample of generator-image assignments
  auto tree = spanning_tree(*source);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, target->order() - 1);
  std::vector<Homomorphism> out;
  std::set<std::vector<int>> seen;
  std::size_t attempts = 0;
  const std::size_t max_attempts = sample_size * 20000;
  while (out.size() < sample_size && attempts < max_attempts) {
    ++attempts;
    std::vector<int> assignment(gens.size());
    for (auto& v : assignment) v = pick(rng);
    auto image = extend_gen_images(*source, *target, tree, assignment);
    if (!is_multiplicative(*source, *target, image)) continue;
    if (seen.insert(image).second)
      out.push_back(Homomorphism{source, target, std::move(image)});
  }
  return out;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in(g.order(), 0);
  std::vector<int> closed{FiniteGroup::kIdentity};
  in[0] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    // grow the closure with x adjoined
    std::queue<int> todo;
    todo.push(x);
    in[x] = 1;
    closed.push_back(x);
    while (!todo.empty()) {
      int y = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < closed.size(); ++i) {
        for (int z : {g.mul(y, closed[i]), g.mul(closed[i], y)}) {
          if (!in[z]) {
            in[z] = 1;
            closed.push_back(z);
            todo.push(z);
          }
        }
      }
    }
  }
  return gens;
}

std::vector<int> element_order_census(const FiniteGroup& g) {
  std::vector<int> census(g.order() + 1, 0);
  for (int x = 0; x < g.order(); ++x) ++census[g.element_order(x)];
  return census;
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

}  // namespace nestsep
