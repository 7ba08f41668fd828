#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfkit/common.hpp"
#include "hopfkit/group.hpp"

namespace hopfkit {

struct MorphismRec {
  int src = 0;
  int tgt = 0;
  std::string label;
};

struct GroupoidFingerprint {
  int objects = 0;
  long long morphisms = 0;
  // per connected component: (object count, automorphism group order), sorted
  std::vector<std::pair<int, long long>> components;

  friend bool operator==(const GroupoidFingerprint&, const GroupoidFingerprint&) = default;
};

enum class IsoResult { no, isomorphic, fingerprint_equal };

/// Finite groupoid with explicit objects, morphisms and composition table.
/// Composition compose(g, f) is defined exactly when tgt(f) == src(g).
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  FiniteGroupoid(std::vector<std::string> object_labels, std::vector<MorphismRec> morphisms,
                 std::vector<int> identities, std::map<std::pair<int, int>, int> compose);

  int num_objects() const { return static_cast<int>(object_labels_.size()); }
  long long num_morphisms() const { return static_cast<long long>(morphisms_.size()); }
  const std::vector<std::string>& object_labels() const { return object_labels_; }
  const std::vector<MorphismRec>& morphisms() const { return morphisms_; }
  int identity_at(int object) const { return identities_[object]; }
  int src(int m) const { return morphisms_[m].src; }
  int tgt(int m) const { return morphisms_[m].tgt; }

  bool composable(int g, int f) const { return tgt(f) == src(g); }
  int compose(int g, int f) const;
  int inverse(int m) const;

  std::vector<int> hom_set(int from, int to) const;
  /// Automorphisms of `object` as a finite group, plus the morphism ids in
  /// table order.
  std::pair<FiniteGroup, std::vector<int>> vertex_group(int object) const;
  /// object -> component id, numbered by smallest object.
  std::vector<int> components() const;

  GroupoidFingerprint fingerprint() const;

  std::string to_dot() const;

 private:
  std::vector<std::string> object_labels_;
  std::vector<MorphismRec> morphisms_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> compose_;

  void validate() const;
};

/// Exact isomorphism when the morphism count stays small (components matched
/// by size, vertex groups compared by backtracking); falls back to the
/// fingerprint comparison above 10^4 morphisms.
IsoResult groupoid_isomorphic(const FiniteGroupoid& a, const FiniteGroupoid& b);

}  // namespace hopfkit
