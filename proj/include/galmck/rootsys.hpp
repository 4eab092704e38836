#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "galmck/intmat.hpp"

namespace galmck::rootsys {

// Root system of one of the supported types with its Weyl group enumerated as
// permutations of the root list. Immutable after build().
class RootSystem {
 public:
  static const RootSystem& get(const std::string& label);  // cached
  static std::unique_ptr<RootSystem> build(const std::string& label);

  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  int num_roots() const { return (int)roots_.size(); }
  int num_pos() const { return num_pos_; }

  // roots in the simple-root basis; positives first (index < num_pos)
  const std::vector<long>& root(int i) const { return roots_[i]; }
  const std::vector<long>& root_euclid(int i) const { return euclid_[i]; }
  int root_index(const std::vector<long>& simple_coords) const;
  int negative(int i) const { return neg_[i]; }
  bool is_positive(int i) const { return i < num_pos_; }
  long height(int i) const { return height_[i]; }
  long norm2(int i) const { return norm2_[i]; }  // scaled (alpha, alpha)
  // Cartan pairing <root j, coroot i> for simple i
  long cartan(int i, int j) const { return cartan_[i][j]; }

  // expansion of the coroot of root i in simple coroots
  const std::vector<long>& coroot_coords(int i) const { return coroot_[i]; }

  // --- Weyl group ---
  int weyl_order() const { return (int)perm_.size(); }
  int identity() const { return 0; }
  int simple_reflection(int s) const { return gen_elt_[s]; }
  int reflection(int root) const;  // s_gamma as an element index
  int mult(int a, int b) const;    // product as functions: (ab)(x) = a(b(x))
  int inverse(int a) const { return inv_[a]; }
  int length(int a) const { return len_[a]; }
  const std::vector<uint8_t>& word(int a) const { return word_[a]; }
  int act_root(int a, int r) const { return perm_[a][r]; }
  int w0() const { return w0_; }
  bool longest_is_central() const;
  // matrix of w on the coroot lattice in the simple-coroot basis
  intmat::Mat coroot_matrix(int w) const;
  // all reduced words of an element (small ranks; testing aid)
  std::vector<std::vector<uint8_t>> all_reduced_words(int w) const;

  // sign of the Chevalley structure constant N_{alpha,beta} (extraspecial
  // pair convention); alpha + beta must be a root
  int structure_sign(int alpha, int beta) const;
  // full constant N_{alpha,beta} = sign * (p+1)
  long structure_constant(int alpha, int beta) const;
  // p = max{ k : beta - k*alpha is a root }
  long chain_p(int alpha, int beta) const;

  // classify the subsystem with the given simple roots; returns component
  // labels like {"A1","B2"} ordered canonically
  std::vector<std::string> classify_components(const std::vector<int>& simples) const;
  // partition a simple system into connected components (indices into input)
  std::vector<std::vector<int>> component_partition(const std::vector<int>& simples) const;

 private:
  RootSystem() = default;
  void construct(const std::string& label);
  void enumerate_weyl();
  void compute_structure_constants();

  std::string label_;
  char family_ = 0;
  int rank_ = 0;
  int num_pos_ = 0;
  std::vector<std::vector<long>> roots_;   // simple-root basis
  std::vector<std::vector<long>> euclid_;  // scaled euclidean coords
  std::vector<long> norm2_, height_;
  std::vector<int> neg_;
  intmat::Mat cartan_;
  std::vector<std::vector<long>> coroot_;
  std::map<std::vector<long>, int> index_;

  std::vector<std::vector<int16_t>> perm_;
  std::vector<std::vector<uint8_t>> word_;
  std::vector<int> len_;
  std::vector<int> inv_;
  std::vector<std::vector<int32_t>> rmult_;  // element x generator
  std::vector<int> gen_elt_;
  std::vector<int> refl_of_root_;
  int w0_ = 0;

  std::map<std::pair<int, int>, long> nconst_;  // positive special pairs
};

}  // namespace galmck::rootsys
