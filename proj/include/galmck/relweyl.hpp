#pragma once

#include <memory>

#include "galmck/charkit.hpp"
#include "galmck/chevnorm.hpp"

namespace galmck::relweyl {

using charkit::CharTable;
using chevnorm::TorusDesc;
using chevnorm::TorusElt;
using cyclo::Cyclotomic;
using rootsys::RootSystem;
using smallgroup::ExplicitGroup;

// linear character of T (or T1) as an exponent vector against the invariant
// factors: lambda(generator_i) = zeta_{d_i}^{m_i}
struct TorusChar {
  std::vector<long> exps;
  bool operator==(const TorusChar& o) const { return exps == o.exps; }
  bool operator<(const TorusChar& o) const { return exps < o.exps; }
};

Cyclotomic eval_char(const TorusDesc& d, const TorusChar& lam, const TorusElt& t);
long char_order(const TorusDesc& d, const TorusChar& lam);
// lambda^{w-hat}(t) = lambda(w-hat t w-hat^{-1})
TorusChar w_act(const TorusDesc& d, int w, const TorusChar& lam);
TorusChar char_power(const TorusDesc& d, const TorusChar& lam, long u);
TorusChar char_mult(const TorusDesc& d, const TorusChar& a, const TorusChar& b);
// restriction of lambda to H (q odd): a character of H given by values on the
// h_{alpha_i}(-1) basis, packed as bits of -1 values
std::vector<int> restrict_to_H(const TorusDesc& d, const TorusChar& lam);

// the triple W(lambda) = R(lambda) x| C(lambda)
struct RelWeylData {
  std::vector<int> Wlambda;      // sorted element indices in W
  std::vector<int> Rlambda;
  std::vector<int> Clambda;
  std::vector<int> PhiLambda;    // root indices (positive and negative)
  std::vector<int> DeltaLambda;  // simple system, positive root indices
  std::vector<std::string> components;  // labels of Delta_lambda components
};

std::vector<int> stabilizer_W(const TorusDesc& d, const TorusChar& lam);
RelWeylData rel_weyl_data(const TorusDesc& d, const TorusChar& lam);

// decomposition w = w_r w_c with w_r in R(lambda), w_c in C(lambda)
std::pair<int, int> rc_decompose(const RootSystem& rs, const RelWeylData& rel, int w);

// one Harish-Chandra parameter: orbit data plus a choice of eta
struct ParamOrbit {
  TorusChar lambda;  // canonical (lex-least) orbit representative
  long orbit_size = 0;
  RelWeylData rel;
  std::shared_ptr<ExplicitGroup> wgroup;  // W(lambda), elements encoded {w}
  std::shared_ptr<CharTable> table;       // Irr(W(lambda))
  std::vector<int> eta_lprime;            // indices with ell'-degree
};

struct HCParam {
  int orbit;  // index into the orbit list
  int eta;    // index into the orbit's character table
};

struct ParamSet {
  const RootSystem* rs = nullptr;
  long q = 0, ell = 0;
  bool twisted = false;
  std::vector<ParamOrbit> orbits;
  std::vector<HCParam> params;
};

// W(lambda) as an explicit group with elements {w}
ExplicitGroup wlambda_group(const RootSystem& rs, const std::vector<int>& elems);

// all W-orbit representatives on Irr(T) with the ell'-index filter, plus the
// ell'-degree etas of each W(lambda)
ParamSet enumerate_params(const RootSystem& rs, long q, long ell, bool twisted,
                          const TorusDesc& d);

// orbits only (no ell filter); used by oracles and the sp pairing
std::vector<TorusChar> orbit_representatives(const TorusDesc& d);
long orbit_size(const TorusDesc& d, const TorusChar& lam);
TorusChar canonical_rep(const TorusDesc& d, const TorusChar& lam);

// Galois actions on lambda
TorusChar galois_on_lambda(const TorusDesc& d, long unit, const TorusChar& lam);
// the parameter-level action via the ell/ell'-decomposition of the label
TorusChar semisimple_label_action(const TorusDesc& d, long ell, long r, long b,
                                  const TorusChar& lam);

}  // namespace galmck::relweyl
