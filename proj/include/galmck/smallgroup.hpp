#pragma once

#include <functional>
#include <map>
#include <vector>

#include "galmck/cyclo.hpp"

namespace galmck::smallgroup {

using Elem = std::vector<long>;

struct GroupOps {
  std::function<Elem(const Elem&, const Elem&)> mult;
  std::function<Elem(const Elem&)> inv;
  Elem id;
};

// A finite group materialized by closure from generators. Elements are
// indexed in discovery order; index 0 is the identity.
class ExplicitGroup {
 public:
  ExplicitGroup(GroupOps ops, const std::vector<Elem>& generators,
                size_t bound = 2000000);

  int order() const { return (int)elems_.size(); }
  const Elem& element(int i) const { return elems_[i]; }
  int index_of(const Elem& e) const;
  int mult(int a, int b) const;
  int inv(int a) const;
  const std::vector<int>& generators() const { return gen_idx_; }

  long element_order(int i) const;
  long exponent() const;

  // conjugacy classes, ordered by (size, least element index)
  int num_classes() const { ensure_classes(); return (int)class_rep_.size(); }
  int class_of(int elt) const { ensure_classes(); return class_of_[elt]; }
  int class_rep(int c) const { ensure_classes(); return class_rep_[c]; }
  long class_size(int c) const { ensure_classes(); return class_size_[c]; }
  int inverse_class(int c) const;
  int power_class(int c, long j) const;  // class of rep(c)^j

  // closure of the given element indices as a sorted element list
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
  // a small generating set of a closed subgroup (greedy)
  std::vector<int> small_generating_set(const std::vector<int>& sub) const;
  // derived subgroup of the subgroup generated by `sub` (a closed subgroup)
  std::vector<int> derived_subgroup(const std::vector<int>& sub) const;
  bool is_abelian_subgroup(const std::vector<int>& sub) const;

  // linear characters of the subgroup `sub` (which must be closed); each is
  // a value vector parallel to `sub`
  std::vector<std::vector<cyclo::Cyclotomic>> linear_characters(
      const std::vector<int>& sub) const;

  // cyclic decomposition of a closed abelian subgroup: (generator, order)
  std::vector<std::pair<int, long>> abelian_decomposition(
      const std::vector<int>& sub) const;

 private:
  void ensure_classes() const;
  GroupOps ops_;
  std::vector<Elem> elems_;
  std::map<Elem, int> index_;
  std::vector<int> gen_idx_;
  mutable std::vector<int> class_of_, class_rep_;
  mutable std::vector<long> class_size_;
  mutable std::map<std::pair<int, long>, int> power_cache_;
};

}  // namespace galmck::smallgroup
