#include "hopfkit/xmod.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hopfkit {

namespace {

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

}  // namespace

CrossedModule CrossedModule::validate(FiniteGroup b, FiniteGroup a, std::vector<Elt> action,
                                      std::vector<Elt> boundary) {
  CrossedModule x;
  x.b_ = std::move(b);
  x.a_ = std::move(a);
  x.action_ = std::move(action);
  x.boundary_ = std::move(boundary);
  const int nb = x.b_.order(), na = x.a_.order();
  require(static_cast<int>(x.action_.size()) == nb * na, errc::peiffer_violation,
          "action table has wrong shape");
  require(static_cast<int>(x.boundary_.size()) == na, errc::peiffer_violation,
          "boundary table has wrong length");
  for (Elt v : x.action_) require(v < na, errc::peiffer_violation, "action value out of range");
  for (Elt v : x.boundary_) require(v < nb, errc::peiffer_violation, "boundary value out of range");

  for (int a0 = 0; a0 < na; ++a0)
    require(x.act(x.b_.identity(), static_cast<Elt>(a0)) == a0, errc::peiffer_violation,
            "action violates identity axiom: e |> a != a");
  for (int b0 = 0; b0 < nb; ++b0)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a0 = 0; a0 < na; ++a0)
        require(x.act(x.b_.mul(static_cast<Elt>(b0), static_cast<Elt>(b1)), static_cast<Elt>(a0)) ==
                    x.act(static_cast<Elt>(b0), x.act(static_cast<Elt>(b1), static_cast<Elt>(a0))),
                errc::peiffer_violation,
                "action violates composition axiom: (bb') |> a != b |> (b' |> a)");
  for (int b0 = 0; b0 < nb; ++b0)
    for (int a0 = 0; a0 < na; ++a0)
      for (int a1 = 0; a1 < na; ++a1)
        require(x.act(static_cast<Elt>(b0), x.a_.mul(static_cast<Elt>(a0), static_cast<Elt>(a1))) ==
                    x.a_.mul(x.act(static_cast<Elt>(b0), static_cast<Elt>(a0)),
                             x.act(static_cast<Elt>(b0), static_cast<Elt>(a1))),
                errc::peiffer_violation,
                "action is not by automorphisms: b |> (aa') != (b|>a)(b|>a')");
  {
    GroupHom check(x.a_, x.b_, x.boundary_);  // throws if not a homomorphism
    (void)check;
  }
  for (int b0 = 0; b0 < nb; ++b0)
    for (int a0 = 0; a0 < na; ++a0) {
      if (x.boundary(x.act(static_cast<Elt>(b0), static_cast<Elt>(a0))) ==
          x.b_.conj(static_cast<Elt>(b0), x.boundary(static_cast<Elt>(a0))))
        continue;
      std::ostringstream what;
      what << "Peiffer identity 1 fails at (b=" << x.b_.name_of(static_cast<Elt>(b0))
           << ", a=" << x.a_.name_of(static_cast<Elt>(a0)) << "): d(b|>a) != b d(a) b^-1";
      fail(errc::peiffer_violation, what.str());
    }
  for (int a0 = 0; a0 < na; ++a0)
    for (int a1 = 0; a1 < na; ++a1) {
      if (x.act(x.boundary(static_cast<Elt>(a0)), static_cast<Elt>(a1)) ==
          x.a_.conj(static_cast<Elt>(a0), static_cast<Elt>(a1)))
        continue;
      std::ostringstream what;
      what << "Peiffer identity 2 fails at (a=" << x.a_.name_of(static_cast<Elt>(a0))
           << ", a'=" << x.a_.name_of(static_cast<Elt>(a1)) << "): d(a)|>a' != a a' a^-1";
      fail(errc::peiffer_violation, what.str());
    }
  return x;
}

CrossedModule CrossedModule::normal_subgroup(const FiniteGroup& g,
                                             const std::vector<Elt>& subgroup_gens) {
  auto [a, embed] = subgroup(g, subgroup_gens);
  std::unordered_map<Elt, Elt> back;
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elt>(i);
  std::vector<Elt> action(static_cast<std::size_t>(g.order()) * a.order());
  for (int b0 = 0; b0 < g.order(); ++b0)
    for (int a0 = 0; a0 < a.order(); ++a0) {
      Elt image = g.conj(static_cast<Elt>(b0), embed[a0]);
      auto it = back.find(image);
      require(it != back.end(), errc::input_error, "subgroup is not normal");
      action[static_cast<std::size_t>(b0) * a.order() + a0] = it->second;
    }
  return validate(g, a, std::move(action), embed);
}

CrossedModule CrossedModule::trivial_boundary(const FiniteGroup& b, const FiniteGroup& a,
                                              std::vector<Elt> action) {
  std::vector<Elt> boundary(a.order(), b.identity());
  return validate(b, a, std::move(action), std::move(boundary));
}

CrossedModule CrossedModule::boundary_isomorphism(const FiniteGroup& b) {
  const int n = b.order();
  std::vector<Elt> action(static_cast<std::size_t>(n) * n);
  std::vector<Elt> boundary(n);
  for (int x = 0; x < n; ++x) {
    boundary[x] = static_cast<Elt>(x);
    for (int y = 0; y < n; ++y)
      action[static_cast<std::size_t>(x) * n + y] = b.conj(static_cast<Elt>(x), static_cast<Elt>(y));
  }
  return validate(b, b, std::move(action), std::move(boundary));
}

CrossedModule CrossedModule::automorphism_module(const FiniteGroup& a) {
  const int n = a.order();
  auto gens = generating_set(a);
  auto words = words_over_generators(a, gens);
  std::vector<std::vector<Elt>> autos;
  std::vector<Elt> images(gens.size());
  auto materialize = [&]() {
    std::vector<Elt> full(n);
    for (int x = 0; x < n; ++x) {
      Elt v = a.identity();
      for (int gi : words[x]) v = a.mul(v, images[gi]);
      full[x] = v;
    }
    std::vector<bool> hit(n, false);
    for (Elt v : full) {
      if (hit[v]) return;
      hit[v] = true;
    }
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (full[a.mul(static_cast<Elt>(p), static_cast<Elt>(q))] != a.mul(full[p], full[q])) return;
    autos.push_back(full);
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      materialize();
      return;
    }
    int want = a.element_order(gens[depth]);
    for (int cand = 0; cand < n; ++cand) {
      if (a.element_order(static_cast<Elt>(cand)) != want) continue;
      images[depth] = static_cast<Elt>(cand);
      self(self, depth + 1);
    }
  };
  if (gens.empty())
    autos.push_back(std::vector<Elt>(n, a.identity()));
  else
    rec(rec, 0);
  std::sort(autos.begin(), autos.end());
  const int m = static_cast<int>(autos.size());
  std::map<std::vector<Elt>, int> index;
  for (int i = 0; i < m; ++i) index[autos[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Elt> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = autos[i][autos[j][x]];
      table[i][j] = index.at(comp);
    }
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = "aut" + std::to_string(i);
  auto aut_group = FiniteGroup::from_mult_table(table, names);
  aut_group.set_name("Aut(" + (a.name().empty() ? "A" : a.name()) + ")");
  std::vector<Elt> action(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int x = 0; x < n; ++x) action[static_cast<std::size_t>(i) * n + x] = autos[i][x];
  std::vector<Elt> boundary(n);
  for (int x = 0; x < n; ++x) {
    std::vector<Elt> conj(n);
    for (int y = 0; y < n; ++y) conj[y] = a.conj(static_cast<Elt>(x), static_cast<Elt>(y));
    boundary[x] = static_cast<Elt>(index.at(conj));
  }
  return validate(aut_group, a, std::move(action), std::move(boundary));
}

bool CrossedModule::action_is_trivial() const {
  for (int b0 = 0; b0 < b_.order(); ++b0)
    for (int a0 = 0; a0 < a_.order(); ++a0)
      if (act(static_cast<Elt>(b0), static_cast<Elt>(a0)) != a0) return false;
  return true;
}

SemidirectProduct semidirect_product(const CrossedModule& x) {
  const int na = x.A().order(), nb = x.B().order();
  const int n = na * nb;
  require(n < 65536, errc::resource_limit, "semidirect product too large");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  auto enc = [nb](int a, int b) { return a * nb + b; };
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      names[enc(a1, b1)] =
          "(" + x.A().name_of(static_cast<Elt>(a1)) + "," + x.B().name_of(static_cast<Elt>(b1)) + ")";
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2) {
          Elt a_res =
              x.A().mul(static_cast<Elt>(a1), x.act(static_cast<Elt>(b1), static_cast<Elt>(a2)));
          Elt b_res = x.B().mul(static_cast<Elt>(b1), static_cast<Elt>(b2));
          table[enc(a1, b1)][enc(a2, b2)] = enc(a_res, b_res);
        }
    }
  SemidirectProduct s;
  s.group = FiniteGroup::from_mult_table(table, names);
  s.group.set_name((x.A().name().empty() ? "A" : x.A().name()) + ":" +
                   (x.B().name().empty() ? "B" : x.B().name()));
  s.nb = nb;
  return s;
}

GroupObjectInCat to_group_object(const CrossedModule& x) {
  auto s = semidirect_product(x);
  const int na = x.A().order(), nb = x.B().order();
  std::vector<std::string> objects(nb);
  for (int b0 = 0; b0 < nb; ++b0) objects[b0] = x.B().name_of(static_cast<Elt>(b0));
  std::vector<MorphismRec> morphisms(na * nb);
  std::vector<int> identities(nb, -1);
  for (int a0 = 0; a0 < na; ++a0)
    for (int b0 = 0; b0 < nb; ++b0) {
      int id = s.encode(static_cast<Elt>(a0), static_cast<Elt>(b0));
      morphisms[id].src = b0;
      morphisms[id].tgt = x.B().mul(x.boundary(static_cast<Elt>(a0)), static_cast<Elt>(b0));
      morphisms[id].label = s.group.name_of(static_cast<Elt>(id));
      if (a0 == x.A().identity()) identities[b0] = id;
    }
  std::map<std::pair<int, int>, int> compose;
  for (int f = 0; f < na * nb; ++f)
    for (int g = 0; g < na * nb; ++g) {
      if (morphisms[f].tgt != morphisms[g].src) continue;
      Elt a_res = x.A().mul(s.a_part(static_cast<Elt>(g)), s.a_part(static_cast<Elt>(f)));
      compose[{g, f}] = s.encode(a_res, s.b_part(static_cast<Elt>(f)));
    }
  GroupObjectInCat obj;
  obj.category = FiniteGroupoid(std::move(objects), std::move(morphisms), std::move(identities),
                                std::move(compose));
  obj.object_group = x.B();
  obj.morphism_group = s.group;
  return obj;
}

CrossedModule from_group_object(const GroupObjectInCat& h) {
  const FiniteGroup& b = h.object_group;
  const FiniteGroup& mor = h.morphism_group;
  require(h.category.num_objects() == b.order(), errc::input_error,
          "object group does not match the category");
  require(h.category.num_morphisms() == mor.order(), errc::input_error,
          "morphism group does not match the category");
  // A is the group of morphisms starting at the unit object, with the target
  // object as boundary and conjugation by identity morphisms as the action.
  std::vector<int> a_morphs;
  for (int m = 0; m < mor.order(); ++m)
    if (h.category.src(m) == b.identity()) a_morphs.push_back(m);
  std::vector<int> pos(mor.order(), -1);
  for (std::size_t i = 0; i < a_morphs.size(); ++i) pos[a_morphs[i]] = static_cast<int>(i);
  const int na = static_cast<int>(a_morphs.size());
  std::vector<std::vector<int>> table(na, std::vector<int>(na));
  std::vector<std::string> names(na);
  for (int i = 0; i < na; ++i) {
    names[i] = h.category.morphisms()[a_morphs[i]].label;
    for (int j = 0; j < na; ++j) {
      int prod = mor.mul(static_cast<Elt>(a_morphs[i]), static_cast<Elt>(a_morphs[j]));
      require(pos[prod] >= 0, errc::input_error, "morphisms from the unit are not closed");
      table[i][j] = pos[prod];
    }
  }
  auto a = FiniteGroup::from_mult_table(table, names);
  std::vector<Elt> boundary(na);
  for (int i = 0; i < na; ++i) boundary[i] = static_cast<Elt>(h.category.tgt(a_morphs[i]));
  std::vector<Elt> action(static_cast<std::size_t>(b.order()) * na);
  for (int b0 = 0; b0 < b.order(); ++b0) {
    Elt unit_b = static_cast<Elt>(h.category.identity_at(b0));
    for (int i = 0; i < na; ++i) {
      int image = mor.mul(mor.mul(unit_b, static_cast<Elt>(a_morphs[i])), mor.inv(unit_b));
      require(pos[image] >= 0, errc::input_error, "conjugation leaves the unit star");
      action[static_cast<std::size_t>(b0) * na + i] = static_cast<Elt>(pos[image]);
    }
  }
  return CrossedModule::validate(b, std::move(a), std::move(action), std::move(boundary));
}

NerveLevel::NerveLevel(const CrossedModule& x, int n) : x_(&x), n_(n) {
  require(n >= 0, errc::input_error, "nerve level must be nonnegative");
  size_ = x.B().order();
  for (int i = 0; i < n; ++i) {
    size_ *= x.A().order();
    require(size_ <= (1ll << 40), errc::resource_limit, "nerve level too large");
  }
}

std::vector<Elt> NerveLevel::decode(long long idx) const {
  std::vector<Elt> t(n_ + 1);
  t[n_] = static_cast<Elt>(idx % x_->B().order());
  idx /= x_->B().order();
  for (int i = n_ - 1; i >= 0; --i) {
    t[i] = static_cast<Elt>(idx % x_->A().order());
    idx /= x_->A().order();
  }
  return t;
}

long long NerveLevel::encode(const std::vector<Elt>& tuple) const {
  require(static_cast<int>(tuple.size()) == n_ + 1, errc::input_error, "bad nerve tuple length");
  long long idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * x_->A().order() + tuple[i];
  return idx * x_->B().order() + tuple[n_];
}

long long NerveLevel::identity_index() const {
  std::vector<Elt> t(n_ + 1, x_->A().identity());
  t[n_] = x_->B().identity();
  return encode(t);
}

long long NerveLevel::mul(long long lhs, long long rhs) const {
  auto l = decode(lhs), r = decode(rhs);
  const auto& a = x_->A();
  const auto& b = x_->B();
  std::vector<Elt> out(n_ + 1);
  Elt prefix = a.identity();  // a_{i-1} ... a_1
  for (int i = 0; i < n_; ++i) {
    Elt twist = b.mul(x_->boundary(prefix), l[n_]);
    out[i] = a.mul(l[i], x_->act(twist, r[i]));
    prefix = a.mul(l[i], prefix);
  }
  out[n_] = b.mul(l[n_], r[n_]);
  return encode(out);
}

long long NerveLevel::inverse(long long v) const {
  require(size_ <= (1 << 20), errc::resource_limit, "inverse scan too large");
  long long e = identity_index();
  for (long long w = 0; w < size_; ++w)
    if (mul(v, w) == e && mul(w, v) == e) return w;
  fail(errc::internal_invariant, "nerve element without inverse");
}

long long NerveLevel::face(int i, long long v) const {
  require(n_ >= 1 && i >= 0 && i <= n_, errc::input_error, "face index out of range");
  auto t = decode(v);
  std::vector<Elt> out;
  if (i == 0) {
    out.assign(t.begin() + 1, t.end());
    out[n_ - 1] = x_->B().mul(x_->boundary(t[0]), t[n_]);
  } else if (i == n_) {
    out.assign(t.begin(), t.end());
    out.erase(out.begin() + (n_ - 1));
  } else {
    out.assign(t.begin(), t.end());
    out[i - 1] = x_->A().mul(t[i], t[i - 1]);
    out.erase(out.begin() + i);
  }
  return NerveLevel(*x_, n_ - 1).encode(out);
}

long long NerveLevel::degeneracy(int i, long long v) const {
  require(i >= 0 && i <= n_, errc::input_error, "degeneracy index out of range");
  auto t = decode(v);
  std::vector<Elt> out(t.begin(), t.end());
  out.insert(out.begin() + i, x_->A().identity());
  return NerveLevel(*x_, n_ + 1).encode(out);
}

FiniteGroup NerveLevel::as_group() const {
  require(size_ <= 4096, errc::resource_limit, "nerve level too large to materialize");
  const int n = static_cast<int>(size_);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    auto t = decode(i);
    std::ostringstream name;
    name << "(";
    for (int k = 0; k < n_; ++k) name << x_->A().name_of(t[k]) << ",";
    name << x_->B().name_of(t[n_]) << ")";
    names[i] = name.str();
    for (int j = 0; j < n; ++j) table[i][j] = static_cast<int>(mul(i, j));
  }
  return FiniteGroup::from_mult_table(table, names);
}

GroupHom nerve_face_hom(const CrossedModule& x, int n, int i) {
  NerveLevel src(x, n), dst(x, n - 1);
  std::vector<Elt> images(src.size());
  for (long long v = 0; v < src.size(); ++v) images[v] = static_cast<Elt>(src.face(i, v));
  return GroupHom(src.as_group(), dst.as_group(), std::move(images));
}

GroupHom nerve_degeneracy_hom(const CrossedModule& x, int n, int i) {
  NerveLevel src(x, n), dst(x, n + 1);
  std::vector<Elt> images(src.size());
  for (long long v = 0; v < src.size(); ++v) images[v] = static_cast<Elt>(src.degeneracy(i, v));
  return GroupHom(src.as_group(), dst.as_group(), std::move(images));
}

}  // namespace hopfkit
