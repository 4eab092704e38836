#pragma once

#include "galmck/intmat.hpp"
#include "galmck/rootsys.hpp"
#include "galmck/smallgroup.hpp"

namespace galmck::chevnorm {

using rootsys::RootSystem;

// element of H = <h_alpha(-1)>: F2 coordinates in the simple-coroot basis
struct HElt {
  std::vector<int> bits;
  bool operator==(const HElt& o) const { return bits == o.bits; }
};

// element of the extended Weyl group V in canonical form h * w-hat, where
// w-hat is the product of n_{alpha_i}(-1) along the canonical reduced word
struct ExtWeylElt {
  HElt h;
  int w;
  bool operator==(const ExtWeylElt& o) const { return h == o.h && w == o.w; }
  bool operator<(const ExtWeylElt& o) const {
    return std::tie(h.bits, w) < std::tie(o.h.bits, o.w);
  }
};

// arithmetic in V = <n_alpha(+-1)>
class ExtWeylGroup {
 public:
  explicit ExtWeylGroup(const RootSystem& rs);
  const RootSystem& root_system() const { return rs_; }

  ExtWeylElt one() const;
  // n_{alpha_s}(-1) for a simple root s
  ExtWeylElt gen(int s) const;
  // h_gamma(-1) for any root index
  HElt h_root(int gamma) const;
  // canonical representative of the pair n_gamma(+-1) for any root
  ExtWeylElt n_root(int gamma) const;
  ExtWeylElt mult(const ExtWeylElt& a, const ExtWeylElt& b) const;
  ExtWeylElt inverse(const ExtWeylElt& a) const;
  HElt h_mult(const HElt& a, const HElt& b) const;
  HElt w_act_h(int w, const HElt& h) const;  // conjugation w h w^{-1}
  // H-part of the cocycle: w1hat * w2hat = embed(c) * (w1 w2)hat
  HElt cocycle(int w1, int w2) const;
  long order() const;  // |V| = 2^rank * |W| for the abstract double cover

  // V as an explicit group (elements encoded as bits..., w)
  smallgroup::Elem encode(const ExtWeylElt& v) const;
  ExtWeylElt decode(const smallgroup::Elem& e) const;
  smallgroup::GroupOps group_ops() const;
  std::vector<smallgroup::Elem> generator_elems() const;

 private:
  const RootSystem& rs_;
  std::vector<intmat::Mat> genmat_;  // coroot-lattice matrices of generators
  mutable std::vector<intmat::Mat> wmat_;  // memo per Weyl element
  const intmat::Mat& weyl_mat(int w) const;
};

// torus description: invariant factors of Y/AY for A = q M - I
struct TorusDesc {
  const RootSystem* rs;
  long q = 0;
  bool twisted = false;
  std::vector<long> invariants;  // d_1 | d_2 | ... (positive)
  intmat::Mat U, V, Uinv;        // U A V = D
  long order() const;
  // matrices of the Weyl action on element coords (Uhat) and character
  // exponents (K^T), per Weyl group element, memoized
  const intmat::Mat& elt_mat(int w) const { return elt_mat_[w]; }
  const intmat::Mat& chr_mat(int w) const { return chr_mat_[w]; }
  std::vector<intmat::Mat> elt_mat_, chr_mat_;
};

struct TorusElt {
  std::vector<long> c;
  bool operator==(const TorusElt& o) const { return c == o.c; }
};

TorusDesc build_torus(const RootSystem& rs, long q, bool twisted);

TorusElt torus_identity(const TorusDesc& d);
TorusElt torus_mult(const TorusDesc& d, const TorusElt& a, const TorusElt& b);
TorusElt torus_inv(const TorusDesc& d, const TorusElt& a);
TorusElt torus_weyl_act(const TorusDesc& d, int w, const TorusElt& a);
// image of an H-element inside T (q odd; zero for q even)
TorusElt embed_H(const TorusDesc& d, const HElt& h);

// elements of Z(G)^F as torus elements
std::vector<TorusElt> center_elements(const TorusDesc& d);

// N = T V with T hat-transversal form (t, w); the H-ambiguity is absorbed
// into the torus coordinate
class Normalizer {
 public:
  Normalizer(const RootSystem& rs, long q, bool twisted, size_t bound = 1000000);

  const RootSystem& root_system() const { return *desc_.rs; }
  const TorusDesc& torus() const { return desc_; }
  const ExtWeylGroup& extweyl() const { return V_; }
  long q() const { return desc_.q; }

  long order() const { return tsize_ * wsize_; }
  long torus_order() const { return tsize_; }

  // element indexing: idx = t_index * |W| + w
  long t_index(const TorusElt& t) const;
  TorusElt t_of_index(long i) const;
  long index(const TorusElt& t, int w) const { return t_index(t) * wsize_ + w; }
  std::pair<TorusElt, int> element(long idx) const;
  long mult(long a, long b) const;
  long inv(long a) const;
  long identity() const { return 0; }
  // image of a V-element in N
  long v_image(const ExtWeylElt& v) const;
  long element_order(long a) const;

  // conjugacy classes (memoized union-find over the whole group)
  int num_classes() const;
  int class_of(long idx) const;
  long class_rep(int c) const;
  long class_size(int c) const;
  long exponent() const;

 private:
  void ensure_classes() const;
  TorusDesc desc_;
  ExtWeylGroup V_;
  long tsize_;
  int wsize_;
  std::vector<long> radix_;
  mutable std::vector<int32_t> class_of_;
  mutable std::vector<long> class_rep_, class_size_;
  mutable long exponent_ = 0;
};

}  // namespace galmck::chevnorm
