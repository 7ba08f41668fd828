#include "hopfkit/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfkit {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_labels,
                               std::vector<MorphismRec> morphisms, std::vector<int> identities,
                               std::map<std::pair<int, int>, int> compose)
    : object_labels_(std::move(object_labels)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      compose_(std::move(compose)) {
  validate();
}

void FiniteGroupoid::validate() const {
  const int nm = static_cast<int>(morphisms_.size());
  require(static_cast<int>(identities_.size()) == num_objects(), errc::internal_invariant,
          "identity table does not match objects");
  for (const auto& m : morphisms_)
    require(m.src >= 0 && m.src < num_objects() && m.tgt >= 0 && m.tgt < num_objects(),
            errc::internal_invariant, "morphism endpoint out of range");
  for (int o = 0; o < num_objects(); ++o) {
    int id = identities_[o];
    require(id >= 0 && id < nm && morphisms_[id].src == o && morphisms_[id].tgt == o,
            errc::internal_invariant, "identity morphism has wrong endpoints");
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      auto it = compose_.find({g, f});
      if (morphisms_[f].tgt != morphisms_[g].src) {
        require(it == compose_.end(), errc::internal_invariant,
                "composite defined for non-composable pair");
        continue;
      }
      require(it != compose_.end(), errc::internal_invariant, "missing composite");
      int gf = it->second;
      require(gf >= 0 && gf < nm, errc::internal_invariant, "composite out of range");
      require(morphisms_[gf].src == morphisms_[f].src && morphisms_[gf].tgt == morphisms_[g].tgt,
              errc::internal_invariant, "composite has wrong endpoints");
    }
  // unit laws
  for (int f = 0; f < nm; ++f) {
    require(compose(identities_[morphisms_[f].tgt], f) == f, errc::internal_invariant,
            "left unit law fails");
    require(compose(f, identities_[morphisms_[f].src]) == f, errc::internal_invariant,
            "right unit law fails");
  }
  // associativity
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (!composable(g, f)) continue;
      for (int h = 0; h < nm; ++h) {
        if (!composable(h, g)) continue;
        require(compose(h, compose(g, f)) == compose(compose(h, g), f), errc::internal_invariant,
                "composition is not associative");
      }
    }
  // every morphism has a two-sided inverse
  for (int f = 0; f < nm; ++f) (void)inverse(f);
}

int FiniteGroupoid::compose(int g, int f) const {
  auto it = compose_.find({g, f});
  require(it != compose_.end(), errc::input_error, "morphisms are not composable");
  return it->second;
}

int FiniteGroupoid::inverse(int m) const {
  for (int g = 0; g < static_cast<int>(morphisms_.size()); ++g) {
    if (morphisms_[g].src != morphisms_[m].tgt || morphisms_[g].tgt != morphisms_[m].src) continue;
    if (compose(g, m) == identities_[morphisms_[m].src] &&
        compose(m, g) == identities_[morphisms_[m].tgt])
      return g;
  }
  fail(errc::internal_invariant, "morphism without inverse");
}

std::vector<int> FiniteGroupoid::hom_set(int from, int to) const {
  std::vector<int> out;
  for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m)
    if (morphisms_[m].src == from && morphisms_[m].tgt == to) out.push_back(m);
  return out;
}

std::pair<FiniteGroup, std::vector<int>> FiniteGroupoid::vertex_group(int object) const {
  auto autos = hom_set(object, object);
  const int n = static_cast<int>(autos.size());
  std::vector<int> pos(morphisms_.size(), -1);
  for (int i = 0; i < n; ++i) pos[autos[i]] = i;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = pos[compose(autos[i], autos[j])];
  std::vector<std::string> names;
  names.reserve(n);
  for (int m : autos) names.push_back(morphisms_[m].label);
  return {FiniteGroup::from_mult_table(table, names), autos};
}

std::vector<int> FiniteGroupoid::components() const {
  std::vector<int> parent(num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : morphisms_) {
    int a = find(m.src), b = find(m.tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(num_objects(), -1);
  int next = 0;
  for (int o = 0; o < num_objects(); ++o) {
    int r = find(o);
    if (comp[r] < 0) comp[r] = next++;
    comp[o] = comp[r];
  }
  return comp;
}

GroupoidFingerprint FiniteGroupoid::fingerprint() const {
  GroupoidFingerprint fp;
  fp.objects = num_objects();
  fp.morphisms = num_morphisms();
  auto comp = components();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  for (int c = 0; c < ncomp; ++c) {
    int count = 0, witness = -1;
    for (int o = 0; o < num_objects(); ++o)
      if (comp[o] == c) {
        ++count;
        if (witness < 0) witness = o;
      }
    fp.components.emplace_back(count, static_cast<long long>(hom_set(witness, witness).size()));
  }
  std::sort(fp.components.begin(), fp.components.end());
  return fp;
}

std::string FiniteGroupoid::to_dot() const {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (int o = 0; o < num_objects(); ++o)
    out << "  o" << o << " [label=\"" << object_labels_[o] << "\"];\n";
  for (int m = 0; m < static_cast<int>(morphisms_.size()); ++m) {
    bool is_identity = false;
    for (int id : identities_) is_identity |= id == m;
    if (is_identity) continue;
    out << "  o" << morphisms_[m].src << " -> o" << morphisms_[m].tgt << " [label=\""
        << morphisms_[m].label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

IsoResult groupoid_isomorphic(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  if (a.fingerprint() != b.fingerprint()) return IsoResult::no;
  if (a.num_morphisms() > 10000 || b.num_morphisms() > 10000) return IsoResult::fingerprint_equal;
  // A finite connected groupoid is determined up to isomorphism by its object
  // count and vertex group, so components are matched by size and vertex
  // groups compared exactly.
  auto comp_a = a.components();
  auto comp_b = b.components();
  int na = comp_a.empty() ? 0 : *std::max_element(comp_a.begin(), comp_a.end()) + 1;
  int nb = comp_b.empty() ? 0 : *std::max_element(comp_b.begin(), comp_b.end()) + 1;
  if (na != nb) return IsoResult::no;
  struct Part {
    int objects;
    FiniteGroup vertex;
    bool used = false;
  };
  auto split = [](const FiniteGroupoid& g, const std::vector<int>& comp, int ncomp) {
    std::vector<Part> parts;
    for (int c = 0; c < ncomp; ++c) {
      int count = 0, witness = -1;
      for (int o = 0; o < g.num_objects(); ++o)
        if (comp[o] == c) {
          ++count;
          if (witness < 0) witness = o;
        }
      parts.push_back(Part{count, g.vertex_group(witness).first, false});
    }
    return parts;
  };
  auto pa = split(a, comp_a, na);
  auto pb = split(b, comp_b, nb);
  for (auto& x : pa) {
    bool matched = false;
    for (auto& y : pb) {
      if (y.used || y.objects != x.objects || y.vertex.order() != x.vertex.order()) continue;
      if (group_isomorphic(x.vertex, y.vertex)) {
        y.used = true;
        matched = true;
        break;
      }
    }
    if (!matched) return IsoResult::no;
  }
  return IsoResult::isomorphic;
}

}  // namespace hopfkit
