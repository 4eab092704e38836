#pragma once

#include "galmck/relweyl.hpp"

namespace galmck::extmap {

using charkit::Cyclotomic;
using chevnorm::ExtWeylElt;
using chevnorm::ExtWeylGroup;
using chevnorm::TorusDesc;
using relweyl::RelWeylData;
using relweyl::TorusChar;
using rootsys::RootSystem;
using smallgroup::ExplicitGroup;

// bits of a character of H: bit i = 1 means delta(h_{alpha_i}(-1)) = -1
using HChar = std::vector<int>;

// The V-equivariant extension map Lambda_0 with respect to H < V, built by
// the three-step recipe: a distinguished extension on orbit representatives
// (trivial on the admissible n_alpha(-1)), then spread over each orbit by
// conjugation. Everything here depends only on the root system.
class ExtensionMap {
 public:
  explicit ExtensionMap(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  const ExtWeylGroup& extweyl() const { return V_; }
  const ExplicitGroup& vgroup() const { return *vgrp_; }

  // R(delta): positive roots gamma with s_gamma stabilizing delta and
  // delta(h_gamma(-1)) = 1
  std::vector<int> r_delta(const HChar& delta) const;
  // sorted element list of the stabilizer V_delta in the v-group
  const std::vector<int>& vdelta(const HChar& delta) const;
  // step-1/2 output: value of Lambda_0(delta) at a V-element of V_delta
  Cyclotomic lambda0_value(const HChar& delta, const ExtWeylElt& v) const;
  // the same by v-group element index
  Cyclotomic lambda0_value_idx(const HChar& delta, int vidx) const;

  HChar act_on_delta(int w, const HChar& delta) const;  // delta^{w-hat}
  Cyclotomic delta_value(const HChar& delta, const chevnorm::HElt& h) const;

  const std::vector<HChar>& orbit_reps() const { return reps_; }

  // verification helpers
  bool is_v_equivariant() const;   // Lambda_0(delta)^x = Lambda_0(delta^x) for all x
  bool values_galois_fixed(const HChar& delta) const;

 private:
  void build();
  const RootSystem& rs_;
  ExtWeylGroup V_;
  std::unique_ptr<ExplicitGroup> vgrp_;
  std::vector<HChar> reps_;
  std::map<HChar, std::vector<int>> vdelta_;        // sorted v-group indices
  std::map<HChar, std::vector<Cyclotomic>> values_;  // parallel to vdelta_
};

// cached per root-system label
const ExtensionMap& extension_map(const RootSystem& rs);

// the lifted extension Lambda(lambda) on N_lambda = T V_lambda
struct LiftedExtension {
  const ExtensionMap* base;
  const TorusDesc* torus;
  TorusChar lambda;
  HChar delta;
  // value at the normalizer element t * w-hat with w in W(lambda)
  Cyclotomic value(const chevnorm::TorusElt& t, int w) const;
};

LiftedExtension lift_to_N(const ExtensionMap& base, const TorusDesc& d,
                          const TorusChar& lambda);

// the correction character delta_{lambda,sigma} on W(lambda):
// Lambda(lambda)^sigma = delta_{lambda,sigma} Lambda(lambda^sigma)
std::map<int, Cyclotomic> delta_sigma(const ExtensionMap& base, const TorusDesc& d,
                                      const TorusChar& lambda, const RelWeylData& rel,
                                      const cyclo::GaloisElt& sigma);

struct ElementCReport {
  bool factor_values_ok = false;   // lambda(h_{e_i - e_{n/2+i}}(-1)) = (-1)^{(q-1)/2}
  bool lambda_c2_is_one = false;   // Lambda(c)^2 = 1
  bool lambda_c_pm1 = false;       // Lambda(c) in {+-1}
  Cyclotomic lambda_c;
};

// the explicit element c of type B_n (n = 4 at runtime), q odd
ElementCReport element_c_check(long n, long q);

}  // namespace galmck::extmap
