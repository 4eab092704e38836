#include "galmck/extmap.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace galmck::extmap {

using chevnorm::HElt;
using numth::mod;

namespace {

// canonical key of a root-of-unity value for deterministic tie-breaks
std::pair<long, long> root_key(const Cyclotomic& v) {
  long o, e;
  if (!v.as_root_of_unity(o, e)) throw Error("linear character value is not a root of unity");
  return {o, e};
}

}  // namespace

ExtensionMap::ExtensionMap(const RootSystem& rs) : rs_(rs), V_(rs) {
  vgrp_ = std::make_unique<ExplicitGroup>(V_.group_ops(), V_.generator_elems());
  build();
}

HChar ExtensionMap::act_on_delta(int w, const HChar& delta) const {
  // delta^{w-hat}(h) = delta(w h w^{-1}); as a bit functional this is
  // delta composed with the mod-2 coroot matrix of w
  const auto m = rs_.coroot_matrix(w);
  HChar out(delta.size(), 0);
  // out_j = sum_i delta_i m[i][j] mod 2
  for (size_t j = 0; j < delta.size(); ++j) {
    long acc = 0;
    for (size_t i = 0; i < delta.size(); ++i) acc += delta[i] * m[i][j];
    out[j] = (int)mod(acc, 2);
  }
  return out;
}

Cyclotomic ExtensionMap::delta_value(const HChar& delta, const HElt& h) const {
  long acc = 0;
  for (size_t i = 0; i < delta.size(); ++i) acc += delta[i] * h.bits[i];
  return Cyclotomic(acc % 2 ? -1 : 1);
}

std::vector<int> ExtensionMap::r_delta(const HChar& delta) const {
  std::vector<int> out;
  for (int g = 0; g < rs_.num_pos(); ++g) {
    int sg = rs_.reflection(g);
    if (!(act_on_delta(sg, delta) == delta)) continue;
    if (delta_value(delta, V_.h_root(g)) == Cyclotomic(1)) out.push_back(g);
  }
  return out;
}

const std::vector<int>& ExtensionMap::vdelta(const HChar& delta) const {
  auto it = vdelta_.find(delta);
  if (it == vdelta_.end()) throw Error("unknown H-character");
  return it->second;
}

Cyclotomic ExtensionMap::lambda0_value(const HChar& delta, const ExtWeylElt& v) const {
  return lambda0_value_idx(delta, vgrp_->index_of(V_.encode(v)));
}

Cyclotomic ExtensionMap::lambda0_value_idx(const HChar& delta, int vidx) const {
  const auto& el = vdelta(delta);
  auto it = std::lower_bound(el.begin(), el.end(), vidx);
  if (it == el.end() || *it != vidx)
    throw Error("Lambda_0 evaluated outside the stabilizer");
  return values_.at(delta)[it - el.begin()];
}

void ExtensionMap::build() {
  int n = rs_.rank();
  long total = 1L << n;
  // orbits of W on Irr(H)
  std::set<HChar> seen;
  std::vector<std::vector<HChar>> orbits;
  for (long mask = 0; mask < total; ++mask) {
    HChar d(n);
    for (int i = 0; i < n; ++i) d[i] = (int)((mask >> i) & 1);
    if (seen.count(d)) continue;
    // BFS orbit
    std::vector<HChar> orb{d};
    seen.insert(d);
    for (size_t head = 0; head < orb.size(); ++head)
      for (int s = 0; s < n; ++s) {
        HChar nx = act_on_delta(rs_.simple_reflection(s), orb[head]);
        if (!seen.count(nx)) { seen.insert(nx); orb.push_back(nx); }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(orb);
  }
  // stabilizers in the v-group
  for (auto& orb : orbits)
    for (auto& d : orb) {
      std::vector<int> stab;
      for (int i = 0; i < vgrp_->order(); ++i) {
        ExtWeylElt v = V_.decode(vgrp_->element(i));
        if (act_on_delta(v.w, d) == d) stab.push_back(i);
      }
      std::sort(stab.begin(), stab.end());
      vdelta_[d] = std::move(stab);
    }
  // step 1 on each orbit representative (the lex-least member)
  for (auto& orb : orbits) {
    const HChar& rep = orb[0];
    reps_.push_back(rep);
    const auto& stab = vdelta_.at(rep);
    auto lins = vgrp_->linear_characters(stab);
    auto rdel = r_delta(rep);
    std::vector<int> nidx;
    for (int g : rdel) nidx.push_back(vgrp_->index_of(V_.encode(V_.n_root(g))));
    std::vector<std::vector<Cyclotomic>> admissible;
    for (auto& ch : lins) {
      bool ok = true;
      // restriction to H equals rep
      for (size_t k = 0; k < stab.size() && ok; ++k) {
        ExtWeylElt v = V_.decode(vgrp_->element(stab[k]));
        if (v.w != rs_.identity()) continue;
        if (!(ch[k] == delta_value(rep, v.h))) ok = false;
      }
      // trivial on n_gamma(-1) for gamma in R(delta)
      for (int ni : nidx) {
        if (!ok) break;
        auto it = std::lower_bound(stab.begin(), stab.end(), ni);
        if (it == stab.end() || *it != ni)
          throw Error("n_gamma(-1) escaped the stabilizer");
        if (!(ch[it - stab.begin()] == Cyclotomic(1))) ok = false;
      }
      if (ok) admissible.push_back(ch);
    }
    if (admissible.empty())
      throw Error("no admissible extension of an H-character (step 1 failed)");
    // deterministic tie-break: lexicographically least value tuple
    std::sort(admissible.begin(), admissible.end(),
              [&](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
                for (size_t k = 0; k < a.size(); ++k) {
                  if (a[k] == b[k]) continue;
                  return root_key(a[k]) < root_key(b[k]);
                }
                return false;
              });
    values_[rep] = admissible[0];
    // step 2: spread over the orbit by conjugation
    for (auto& d : orb) {
      if (d == rep) continue;
      // least x with rep^x = d
      int xfound = -1;
      for (int x = 0; x < vgrp_->order() && xfound < 0; ++x) {
        ExtWeylElt vx = V_.decode(vgrp_->element(x));
        if (act_on_delta(vx.w, rep) == d) xfound = x;
      }
      if (xfound < 0) throw Error("orbit member without conjugator");
      const auto& stabd = vdelta_.at(d);
      std::vector<Cyclotomic> vals(stabd.size());
      for (size_t k = 0; k < stabd.size(); ++k) {
        int conj = vgrp_->mult(vgrp_->mult(xfound, stabd[k]), vgrp_->inv(xfound));
        vals[k] = lambda0_value_idx(rep, conj);
      }
      values_[d] = std::move(vals);
    }
  }
  // well-definedness / equivariance on generators (hard error per contract)
  if (!is_v_equivariant()) throw Error("Lambda_0 fails V-equivariance");
}

bool ExtensionMap::is_v_equivariant() const {
  // Lambda_0(delta)^x (v) = Lambda_0(delta)(x v x^{-1}) must equal
  // Lambda_0(delta^x)(v) for generators x and all delta
  for (auto& [d, stab] : vdelta_) {
    for (int gx : vgrp_->generators()) {
      ExtWeylElt vx = V_.decode(vgrp_->element(gx));
      HChar dx = act_on_delta(vx.w, d);
      const auto& stabx = vdelta_.at(dx);
      for (size_t k = 0; k < stabx.size(); ++k) {
        int conj = vgrp_->mult(vgrp_->mult(gx, stabx[k]), vgrp_->inv(gx));
        if (!(lambda0_value_idx(d, conj) == values_.at(dx)[k])) return false;
      }
    }
  }
  return true;
}

bool ExtensionMap::values_galois_fixed(const HChar& delta) const {
  for (auto& v : values_.at(delta)) {
    long o, e;
    if (!v.as_root_of_unity(o, e)) return false;
    if (o > 2) return false;
  }
  return true;
}

namespace {
std::map<std::string, std::unique_ptr<ExtensionMap>> g_extmaps;
std::mutex g_extmaps_mu;
}  // namespace

const ExtensionMap& extension_map(const RootSystem& rs) {
  std::lock_guard<std::mutex> lk(g_extmaps_mu);
  auto it = g_extmaps.find(rs.label());
  if (it == g_extmaps.end())
    it = g_extmaps.emplace(rs.label(), std::make_unique<ExtensionMap>(rs)).first;
  return *it->second;
}

Cyclotomic LiftedExtension::value(const chevnorm::TorusElt& t, int w) const {
  ExtWeylElt v{HElt{std::vector<int>(base->root_system().rank(), 0)}, w};
  return relweyl::eval_char(*torus, lambda, t) * base->lambda0_value(delta, v);
}

LiftedExtension lift_to_N(const ExtensionMap& base, const TorusDesc& d,
                          const TorusChar& lambda) {
  LiftedExtension le;
  le.base = &base;
  le.torus = &d;
  le.lambda = lambda;
  le.delta = relweyl::restrict_to_H(d, lambda);
  return le;
}

std::map<int, Cyclotomic> delta_sigma(const ExtensionMap& base, const TorusDesc& d,
                                      const TorusChar& lambda, const RelWeylData& rel,
                                      const cyclo::GaloisElt& sigma) {
  HChar delta = relweyl::restrict_to_H(d, lambda);
  std::map<int, Cyclotomic> out;
  const RootSystem& rs = base.root_system();
  for (int w : rel.Wlambda) {
    ExtWeylElt v{HElt{std::vector<int>(rs.rank(), 0)}, w};
    Cyclotomic x = base.lambda0_value(delta, v);
    Cyclotomic val = sigma.act(x) * x.inverse();
    out[w] = val;
  }
  // must be a linear character of W(lambda), trivial on R, of order <= 2
  for (int a : rel.Wlambda)
    for (int b : rel.Wlambda) {
      int ab = rs.mult(a, b);
      if (!(out.at(ab) == out.at(a) * out.at(b)))
        throw Error("delta_sigma is not multiplicative");
    }
  for (int r : rel.Rlambda)
    if (!(out.at(r) == Cyclotomic(1)))
      throw Error("delta_sigma nontrivial on R(lambda)");
  for (int w : rel.Wlambda)
    if (!(out.at(w) * out.at(w) == Cyclotomic(1)))
      throw Error("delta_sigma does not square to 1");
  return out;
}

ElementCReport element_c_check(long n, long q) {
  if (n != 4) throw Error("element_c_check: only B4 is materialized at runtime");
  if (q % 2 == 0) throw Error("element_c_check: q must be odd");
  const RootSystem& rs = RootSystem::get("B4");
  const ExtensionMap& base = extension_map(rs);
  auto d = chevnorm::build_torus(rs, q, false);
  // lambda with lambda(h_{alpha_{n/2}}(zeta)) = -1, trivial on other simple
  // coroots: exponents (0, (q-1)/2, 0, 0)
  TorusChar lam{{0, (q - 1) / 2, 0, 0}};
  auto lift = lift_to_N(base, d, lam);
  // c = n_{e1-e3}(-1) n_{e2-e4}(-1)
  int g1 = rs.root_index({1, 1, 0, 0});
  int g2 = rs.root_index({0, 1, 1, 0});
  const auto& V = base.extweyl();
  ExtWeylElt c = V.mult(V.n_root(g1), V.n_root(g2));
  // c as a normalizer element: torus part is the H-image
  chevnorm::TorusElt tc = chevnorm::embed_H(d, c.h);
  ElementCReport rep;
  // factor values lambda(h_{e_i - e_{n/2+i}}(-1)) = (-1)^{(q-1)/2}
  rep.factor_values_ok = true;
  for (int i = 0; i < 2; ++i) {
    int gi = (i == 0) ? g1 : g2;
    auto hv = chevnorm::embed_H(d, V.h_root(gi));
    Cyclotomic val = relweyl::eval_char(d, lam, hv);
    Cyclotomic expect(((q - 1) / 2) % 2 ? -1 : 1);
    if (!(val == expect)) rep.factor_values_ok = false;
  }
  // Lambda(c) and Lambda(c)^2 = lambda(c^2)
  Cyclotomic lc = relweyl::eval_char(d, lam, tc) * base.lambda0_value(lift.delta, ExtWeylElt{HElt{{0,0,0,0}}, c.w});
  rep.lambda_c = lc;
  // c^2 in V is an H-element; evaluate lambda there
  ExtWeylElt c2 = V.mult(c, c);
  if (c2.w != rs.identity()) throw Error("c^2 is not toral");
  Cyclotomic lam_c2 = relweyl::eval_char(d, lam, chevnorm::embed_H(d, c2.h));
  rep.lambda_c2_is_one = lam_c2 == Cyclotomic(1);
  Cyclotomic lc2 = lc * lc;
  rep.lambda_c_pm1 = lc == Cyclotomic(1) || lc == Cyclotomic(-1);
  if (!(lc2 == lam_c2)) rep.lambda_c2_is_one = false;
  return rep;
}

}  // namespace galmck::extmap
