#include "hopfkit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfkit {

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << (n > 9 ? " " : "");
      out << (j + 1);
      first = false;
      j = perm[j];
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : std::string("e");
}

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  // (f*g)(x) = f(g(x))
  std::vector<int> r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
  return r;
}

}  // namespace

void FiniteGroup::finish_tables() {
  const int n = static_cast<int>(names_.size());
  require(n >= 1, errc::group_axiom_violation, "group must be nonempty");
  // Latin square: each row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      Elt r = mult_[static_cast<std::size_t>(a) * n + b];
      Elt c = mult_[static_cast<std::size_t>(b) * n + a];
      require(r < n && c < n, errc::group_axiom_violation, "multiplication table entry out of range");
      require(!row[r], errc::group_axiom_violation, "row of multiplication table is not a permutation");
      require(!col[c], errc::group_axiom_violation, "column of multiplication table is not a permutation");
      row[r] = col[c] = true;
    }
  }
  // Two-sided identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mult_[static_cast<std::size_t>(e) * n + x] == x && mult_[static_cast<std::size_t>(x) * n + e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  require(id >= 0, errc::group_axiom_violation, "no identity element");
  identity_ = static_cast<Elt>(id);
  // Associativity: exhaustive at small orders, deterministic sample above.
  auto check = [&](int a, int b, int c) {
    Elt ab = mult_[static_cast<std::size_t>(a) * n + b];
    Elt bc = mult_[static_cast<std::size_t>(b) * n + c];
    require(mult_[static_cast<std::size_t>(ab) * n + c] == mult_[static_cast<std::size_t>(a) * n + bc],
            errc::group_axiom_violation, "multiplication is not associative");
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    SplitMix64 rng(0x9e3779b97f4a7c15ull);
    for (int i = 0; i < 10000; ++i)
      check(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
  }
  // Inverses.
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b) {
      if (mult_[static_cast<std::size_t>(a) * n + b] == identity_ &&
          mult_[static_cast<std::size_t>(b) * n + a] == identity_) {
        found = b;
        break;
      }
    }
    require(found >= 0, errc::group_axiom_violation, "element without two-sided inverse");
    inv_[a] = static_cast<Elt>(found);
  }
}

FiniteGroup FiniteGroup::from_mult_table(const std::vector<std::vector<int>>& table,
                                         std::vector<std::string> names) {
  FiniteGroup g;
  const int n = static_cast<int>(table.size());
  require(n >= 1 && n < 65536, errc::group_axiom_violation, "unsupported group order");
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    require(static_cast<int>(table[a].size()) == n, errc::group_axiom_violation,
            "multiplication table is not square");
    for (int b = 0; b < n; ++b) {
      require(table[a][b] >= 0 && table[a][b] < n, errc::group_axiom_violation,
              "multiplication table entry out of range");
      g.mult_[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>(table[a][b]);
    }
  }
  if (names.empty()) {
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  }
  require(static_cast<int>(names.size()) == n, errc::group_axiom_violation,
          "element_names length does not match order");
  g.names_ = std::move(names);
  g.finish_tables();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<std::vector<int>>& generators) {
  require(degree >= 1, errc::group_axiom_violation, "degree must be positive");
  for (const auto& p : generators) {
    require(static_cast<int>(p.size()) == degree, errc::group_axiom_violation,
            "permutation length does not match degree");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      require(v >= 0 && v < degree && !seen[v], errc::group_axiom_violation, "not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose_perm(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(next);
        require(elems.size() < 65536, errc::resource_limit, "permutation closure too large");
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.mult_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mult_[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>(index.at(compose_perm(elems[a], elems[b])));
  g.names_.reserve(n);
  for (const auto& p : elems) g.names_.push_back(cycle_notation(p));
  g.finish_tables();
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  auto g = from_mult_table({{0}}, {"e"});
  g.set_name("1");
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  require(n >= 1, errc::group_axiom_violation, "cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  auto g = from_mult_table(t, names);
  g.set_name("Z" + std::to_string(n));
  return g;
}

FiniteGroup FiniteGroup::symmetric(int n) {
  require(n >= 1 && n <= 5, errc::resource_limit, "symmetric group degree out of range");
  if (n == 1) return trivial();
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  auto g = from_permutations(n, {transposition, cycle});
  g.set_name("S" + std::to_string(n));
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  require(n >= 3, errc::group_axiom_violation, "dihedral parameter must be >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  auto g = from_permutations(n, {rot, refl});
  g.set_name("D" + std::to_string(n));
  return g;
}

FiniteGroup FiniteGroup::alternating(int n) {
  require(n >= 3 && n <= 5, errc::resource_limit, "alternating group degree out of range");
  std::vector<int> c3(n), gen2(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1; c3[1] = 2; c3[2] = 0;
  std::iota(gen2.begin(), gen2.end(), 0);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) gen2[i] = (i + 1) % n;  // odd full cycle is even
  } else {
    gen2[1] = 2; gen2[2] = 3; gen2[3] = 1;  // (234)
  }
  auto g = from_permutations(n, {c3, gen2});
  g.set_name("A" + std::to_string(n));
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order(), m = h.order();
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  std::vector<std::string> names(n * m);
  auto enc = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      names[enc(a, b)] = "(" + g.name_of(static_cast<Elt>(a)) + "," + h.name_of(static_cast<Elt>(b)) + ")";
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          t[enc(a, b)][enc(c, d)] = enc(g.mul(static_cast<Elt>(a), static_cast<Elt>(c)),
                                        h.mul(static_cast<Elt>(b), static_cast<Elt>(d)));
    }
  auto r = from_mult_table(t, names);
  r.set_name(g.name() + "x" + h.name());
  return r;
}

Elt FiniteGroup::power(Elt a, long long k) const {
  Elt base = a;
  if (k < 0) {
    base = inv(a);
    k = -k;
  }
  Elt acc = identity_;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elt a) const {
  int k = 1;
  Elt x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(static_cast<Elt>(a), static_cast<Elt>(b)) != mul(static_cast<Elt>(b), static_cast<Elt>(a)))
        return false;
  return true;
}

GroupHom::GroupHom(FiniteGroup src, FiniteGroup tgt, std::vector<Elt> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  require(static_cast<int>(images.size()) == source.order(), errc::group_axiom_violation,
          "homomorphism image table has wrong length");
  for (Elt v : images)
    require(v < target.order(), errc::group_axiom_violation, "homomorphism image out of range");
  require(images[source.identity()] == target.identity(), errc::group_axiom_violation,
          "homomorphism does not preserve the identity");
  const int n = source.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(images[source.mul(static_cast<Elt>(a), static_cast<Elt>(b))] ==
                  target.mul(images[a], images[b]),
              errc::group_axiom_violation, "image table is not multiplicative");
}

std::pair<FiniteGroup, std::vector<Elt>> subgroup(const FiniteGroup& g, const std::vector<Elt>& generators) {
  std::set<Elt> closure{g.identity()};
  std::vector<Elt> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elt s : generators) {
      for (Elt next : {g.mul(queue[head], s), g.mul(queue[head], g.inv(s))}) {
        if (closure.insert(next).second) queue.push_back(next);
      }
    }
  }
  std::vector<Elt> embed(closure.begin(), closure.end());
  std::unordered_map<Elt, Elt> back;
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elt>(i);
  const int n = static_cast<int>(embed.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = g.name_of(embed[a]);
    for (int b = 0; b < n; ++b) t[a][b] = back.at(g.mul(embed[a], embed[b]));
  }
  return {FiniteGroup::from_mult_table(t, names), embed};
}

Elt commutator_product(const FiniteGroup& g, const SurfaceTuple& t) {
  require(t.size() % 2 == 0, errc::input_error, "surface tuple must have even length");
  for (Elt e : t) require(e < g.order(), errc::input_error, "surface tuple entry out of range");
  Elt acc = g.identity();
  for (std::size_t i = 0; i + 1 < t.size(); i += 2) {
    Elt a = t[i], b = t[i + 1];
    Elt c = g.mul(g.mul(g.inv(b), a), g.mul(b, g.inv(a)));  // [b^-1, a]
    acc = g.mul(c, acc);                                    // later handles multiply on the left
  }
  return acc;
}

Presentation surface_presentation(int genus) {
  require(genus >= 0, errc::input_error, "genus must be nonnegative");
  Presentation p;
  p.generators = 2 * genus;
  if (genus > 0) {
    std::vector<int> relator;
    for (int i = genus; i >= 1; --i) {
      int a = 2 * i - 1;  // letter for a_i (1-based)
      int b = 2 * i;      // letter for b_i
      relator.push_back(-b);
      relator.push_back(a);
      relator.push_back(b);
      relator.push_back(-a);
    }
    p.relators.push_back(std::move(relator));
  }
  return p;
}

Presentation free_presentation(int generators) {
  Presentation p;
  p.generators = generators;
  return p;
}

Elt evaluate_word(const FiniteGroup& g, const std::vector<int>& word, const std::vector<Elt>& images) {
  Elt acc = g.identity();
  for (int letter : word) {
    require(letter != 0, errc::input_error, "zero letter in word");
    int idx = std::abs(letter) - 1;
    require(idx < static_cast<int>(images.size()), errc::input_error, "word letter out of range");
    Elt v = letter > 0 ? images[idx] : g.inv(images[idx]);
    acc = g.mul(acc, v);
  }
  return acc;
}

namespace {

struct HomSearch {
  const Presentation& p;
  const FiniteGroup& g;
  // relators grouped by the largest generator index they mention
  std::vector<std::vector<const std::vector<int>*>> by_depth;

  HomSearch(const Presentation& pres, const FiniteGroup& grp) : p(pres), g(grp) {
    by_depth.assign(std::max(1, p.generators), {});
    for (const auto& r : p.relators) {
      int maxg = -1;
      for (int letter : r) maxg = std::max(maxg, std::abs(letter) - 1);
      require(maxg < p.generators, errc::input_error, "relator mentions unknown generator");
      if (maxg < 0) {
        require(r.empty(), errc::internal_invariant, "bad relator");
        continue;
      }
      by_depth[maxg].push_back(&r);
    }
  }

  void extend(std::vector<Elt>& partial, int depth, std::vector<std::vector<Elt>>& out) const {
    if (depth == p.generators) {
      out.push_back(partial);
      return;
    }
    for (int img = 0; img < g.order(); ++img) {
      partial.push_back(static_cast<Elt>(img));
      bool ok = true;
      for (const auto* r : by_depth[depth]) {
        if (evaluate_word(g, *r, partial) != g.identity()) {
          ok = false;
          break;
        }
      }
      if (ok) extend(partial, depth + 1, out);
      partial.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<Elt>> enumerate_homs(const Presentation& p, const FiniteGroup& g) {
  HomSearch search(p, g);
  std::vector<std::vector<Elt>> out;
  if (p.generators == 0) {
    out.push_back({});
    return out;
  }
  std::vector<Elt> partial;
  partial.reserve(p.generators);
  search.extend(partial, 0, out);
  return out;
}

std::vector<std::vector<Elt>> enumerate_homs_parallel(const Presentation& p, const FiniteGroup& g) {
  if (p.generators == 0) return enumerate_homs(p, g);
  HomSearch search(p, g);
  const int n = g.order();
  // partition two levels deep when possible for better load balance
  const int depth = p.generators >= 2 ? 2 : 1;
  const int tasks = depth == 2 ? n * n : n;
  std::vector<std::vector<std::vector<Elt>>> buckets(tasks);
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < tasks; ++task) {
    std::vector<Elt> partial;
    partial.reserve(p.generators);
    partial.push_back(static_cast<Elt>(depth == 2 ? task / n : task));
    if (depth == 2) partial.push_back(static_cast<Elt>(task % n));
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      for (const auto* r : search.by_depth[d]) {
        if (evaluate_word(g, *r, partial) != g.identity()) {
          ok = false;
          break;
        }
      }
    if (ok) search.extend(partial, depth, buckets[task]);
  }
  std::vector<std::vector<Elt>> out;
  std::size_t total = 0;
  for (const auto& b : buckets) total += b.size();
  out.reserve(total);
  for (auto& b : buckets)
    for (auto& t : b) out.push_back(std::move(t));
  return out;
}

std::vector<SurfaceTuple> enumerate_surface_reps(const FiniteGroup& g, int genus) {
  return enumerate_homs(surface_presentation(genus), g);
}

std::vector<SurfaceTuple> enumerate_surface_reps_parallel(const FiniteGroup& g, int genus) {
  return enumerate_homs_parallel(surface_presentation(genus), g);
}

ConjugationOrbits conjugation_orbits(const std::vector<SurfaceTuple>& tuples, const FiniteGroup& g) {
  ConjugationOrbits result;
  std::unordered_map<SurfaceTuple, int, TupleHash> index;
  index.reserve(tuples.size() * 2);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (Elt e : tuples[i]) require(e < g.order(), errc::input_error, "tuple entry out of range");
    require(index.emplace(tuples[i], static_cast<int>(i)).second, errc::input_error,
            "duplicate tuple in orbit input");
  }
  std::vector<bool> done(tuples.size(), false);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (done[i]) continue;
    std::set<SurfaceTuple> orbit;
    for (int h = 0; h < g.order(); ++h) {
      SurfaceTuple conj(tuples[i].size());
      for (std::size_t k = 0; k < tuples[i].size(); ++k)
        conj[k] = g.conj(static_cast<Elt>(h), tuples[i][k]);
      auto it = index.find(conj);
      require(it != index.end(), errc::input_error, "orbit input is not closed under conjugation");
      orbit.insert(std::move(conj));
    }
    for (const auto& t : orbit) done[index.at(t)] = true;
    result.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(result.orbits.begin(), result.orbits.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t oi = 0; oi < result.orbits.size(); ++oi)
    for (const auto& t : result.orbits[oi]) result.orbit_of[t] = static_cast<int>(oi);
  return result;
}

std::vector<Elt> generating_set(const FiniteGroup& g) {
  std::vector<Elt> gens;
  std::vector<bool> in_closure(g.order(), false);
  auto close = [&]() {
    std::fill(in_closure.begin(), in_closure.end(), false);
    in_closure[g.identity()] = true;
    std::vector<Elt> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Elt s : gens) {
        Elt next = g.mul(queue[head], s);
        if (!in_closure[next]) {
          in_closure[next] = true;
          queue.push_back(next);
        }
      }
  };
  close();
  for (int x = 0; x < g.order(); ++x) {
    if (!in_closure[x]) {
      gens.push_back(static_cast<Elt>(x));
      close();
    }
  }
  return gens;
}

namespace {

// Expresses every element as a product of generators via BFS, as a word of
// generator indices.
std::vector<std::vector<int>> words_over_generators(const FiniteGroup& g, const std::vector<Elt>& gens) {
  std::vector<std::vector<int>> word(g.order());
  std::vector<bool> seen(g.order(), false);
  seen[g.identity()] = true;
  std::vector<Elt> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elt x = queue[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Elt next = g.mul(x, gens[gi]);
      if (!seen[next]) {
        seen[next] = true;
        word[next] = word[x];
        word[next].push_back(static_cast<int>(gi));
        queue.push_back(next);
      }
    }
  }
  return word;
}

bool try_iso(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elt>& gens,
             const std::vector<std::vector<int>>& words, std::vector<Elt>& images, std::size_t depth) {
  if (depth == gens.size()) {
    std::vector<Elt> full(g.order());
    std::vector<bool> hit(h.order(), false);
    for (int x = 0; x < g.order(); ++x) {
      Elt v = h.identity();
      for (int gi : words[x]) v = h.mul(v, images[gi]);
      full[x] = v;
    }
    for (Elt v : full) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (full[g.mul(static_cast<Elt>(a), static_cast<Elt>(b))] != h.mul(full[a], full[b])) return false;
    return true;
  }
  int want = g.element_order(gens[depth]);
  for (int cand = 0; cand < h.order(); ++cand) {
    if (h.element_order(static_cast<Elt>(cand)) != want) continue;
    images[depth] = static_cast<Elt>(cand);
    if (try_iso(g, h, gens, words, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

bool group_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  std::multiset<int> og, oh;
  for (int x = 0; x < g.order(); ++x) og.insert(g.element_order(static_cast<Elt>(x)));
  for (int x = 0; x < h.order(); ++x) oh.insert(h.element_order(static_cast<Elt>(x)));
  if (og != oh) return false;
  auto gens = generating_set(g);
  if (gens.empty()) return true;  // trivial group
  auto words = words_over_generators(g, gens);
  std::vector<Elt> images(gens.size(), 0);
  return try_iso(g, h, gens, words, images, 0);
}

}  // namespace hopfkit
