#include "galmck/chevnorm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace galmck::chevnorm {

using numth::mod;

ExtWeylGroup::ExtWeylGroup(const RootSystem& rs) : rs_(rs) {
  genmat_.resize(rs.rank());
  for (int s = 0; s < rs.rank(); ++s)
    genmat_[s] = rs.coroot_matrix(rs.simple_reflection(s));
  wmat_.resize(rs.weyl_order());
  for (int w = 0; w < rs.weyl_order(); ++w) wmat_[w] = rs.coroot_matrix(w);
}

const intmat::Mat& ExtWeylGroup::weyl_mat(int w) const {
  if (wmat_[w].empty()) wmat_[w] = rs_.coroot_matrix(w);
  return wmat_[w];
}

ExtWeylElt ExtWeylGroup::one() const {
  return ExtWeylElt{HElt{std::vector<int>(rs_.rank(), 0)}, rs_.identity()};
}

ExtWeylElt ExtWeylGroup::gen(int s) const {
  return ExtWeylElt{HElt{std::vector<int>(rs_.rank(), 0)}, rs_.simple_reflection(s)};
}

HElt ExtWeylGroup::h_root(int gamma) const {
  const auto& c = rs_.coroot_coords(gamma);
  HElt h{std::vector<int>(rs_.rank())};
  for (int i = 0; i < rs_.rank(); ++i) h.bits[i] = mod(c[i], 2);
  return h;
}

HElt ExtWeylGroup::h_mult(const HElt& a, const HElt& b) const {
  HElt r = a;
  for (size_t i = 0; i < r.bits.size(); ++i) r.bits[i] ^= b.bits[i];
  return r;
}

HElt ExtWeylGroup::w_act_h(int w, const HElt& h) const {
  const auto& m = weyl_mat(w);
  HElt r{std::vector<int>(rs_.rank(), 0)};
  for (int i = 0; i < rs_.rank(); ++i) {
    long acc = 0;
    for (int j = 0; j < rs_.rank(); ++j) acc += m[i][j] * h.bits[j];
    r.bits[i] = mod(acc, 2);
  }
  return r;
}

ExtWeylElt ExtWeylGroup::mult(const ExtWeylElt& a, const ExtWeylElt& b) const {
  // a = ha * what_a, b = hb * what_b:
  // ab = ha * (wa hb wa^{-1}) * (what_a what_b)
  HElt h = h_mult(a.h, w_act_h(a.w, b.h));
  // fold the canonical word of b.w into what_a, tracking H-corrections
  int w = a.w;
  for (uint8_t s : rs_.word(b.w)) {
    int ws = rs_.mult(w, rs_.simple_reflection(s));
    if (rs_.length(ws) > rs_.length(w)) {
      w = ws;
    } else {
      // what_w * n_s = h_{w'(alpha_s)}(-1) * what_{w'} with w' = w s
      std::vector<long> al(rs_.rank(), 0);
      al[s] = 1;
      int ai = rs_.root_index(al);
      int img = rs_.act_root(ws, ai);
      h = h_mult(h, h_root(img));
      w = ws;
    }
  }
  return ExtWeylElt{h, w};
}

HElt ExtWeylGroup::cocycle(int w1, int w2) const {
  ExtWeylElt a{HElt{std::vector<int>(rs_.rank(), 0)}, w1};
  ExtWeylElt b{HElt{std::vector<int>(rs_.rank(), 0)}, w2};
  return mult(a, b).h;
}

ExtWeylElt ExtWeylGroup::inverse(const ExtWeylElt& a) const {
  // (h what)^{-1} = what^{-1} h; what * (w^{-1})hat = embed(hz)
  int wi = rs_.inverse(a.w);
  HElt hz = cocycle(a.w, wi);
  // what^{-1} = (w^{-1})hat * hz  (hz has order <= 2 elementwise)
  // (h what)^{-1} = (w^{-1})hat hz h = (w^{-1} act on (hz h)) * (w^{-1})hat
  HElt hh = h_mult(hz, a.h);
  return ExtWeylElt{w_act_h(wi, hh), wi};
}

ExtWeylElt ExtWeylGroup::n_root(int gamma) const {
  if (!rs_.is_positive(gamma)) gamma = rs_.negative(gamma);
  // simple root?
  for (int s = 0; s < rs_.rank(); ++s) {
    std::vector<long> al(rs_.rank(), 0);
    al[s] = 1;
    if (rs_.root_index(al) == gamma) return gen(s);
  }
  // find a simple s with <gamma, alpha_s~> > 0 and descend
  for (int s = 0; s < rs_.rank(); ++s) {
    long pairing = 0;
    for (int i = 0; i < rs_.rank(); ++i) pairing += rs_.cartan(s, i) * rs_.root(gamma)[i];
    if (pairing <= 0) continue;
    int img = rs_.act_root(rs_.simple_reflection(s), gamma);
    if (img == gamma) continue;
    ExtWeylElt g = gen(s);
    return mult(mult(g, n_root(img)), inverse(g));
  }
  throw Error("n_root: no descent found");
}

long ExtWeylGroup::order() const {
  long h = 1;
  for (int i = 0; i < rs_.rank(); ++i) h *= 2;
  return h * rs_.weyl_order();
}

smallgroup::Elem ExtWeylGroup::encode(const ExtWeylElt& v) const {
  smallgroup::Elem e;
  for (int b : v.h.bits) e.push_back(b);
  e.push_back(v.w);
  return e;
}

ExtWeylElt ExtWeylGroup::decode(const smallgroup::Elem& e) const {
  ExtWeylElt v;
  v.h.bits.assign(e.begin(), e.end() - 1);
  v.w = (int)e.back();
  return v;
}

smallgroup::GroupOps ExtWeylGroup::group_ops() const {
  smallgroup::GroupOps ops;
  ops.id = encode(one());
  ops.mult = [this](const smallgroup::Elem& a, const smallgroup::Elem& b) {
    return encode(mult(decode(a), decode(b)));
  };
  ops.inv = [this](const smallgroup::Elem& a) { return encode(inverse(decode(a))); };
  return ops;
}

std::vector<smallgroup::Elem> ExtWeylGroup::generator_elems() const {
  std::vector<smallgroup::Elem> g;
  for (int s = 0; s < rs_.rank(); ++s) g.push_back(encode(gen(s)));
  // h generators are n_s^2, so the n's alone generate V
  return g;
}

long TorusDesc::order() const {
  long o = 1;
  for (long d : invariants) o *= d;
  return o;
}

TorusDesc build_torus(const RootSystem& rs, long q, bool twisted) {
  if (q < 2) throw Error("build_torus: q must be at least 2");
  if (twisted && !rs.longest_is_central())
    throw Error("twisted torus requires the longest element to be central");
  int n = rs.rank();
  intmat::Mat M = twisted ? rs.coroot_matrix(rs.w0()) : intmat::identity(n);
  intmat::Mat A(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = q * M[i][j] - (i == j ? 1 : 0);
  auto s = intmat::smith_normal_form(A);
  TorusDesc d;
  d.rs = &rs;
  d.q = q;
  d.twisted = twisted;
  d.U = s.U;
  d.V = s.V;
  d.Uinv = intmat::inv_unimodular(s.U);
  for (int i = 0; i < n; ++i) {
    if (s.D[i][i] == 0) throw Error("degenerate torus");
    d.invariants.push_back(std::abs(s.D[i][i]));
  }
  // precompute the action matrices so later reads are thread-safe
  d.elt_mat_.resize(rs.weyl_order());
  d.chr_mat_.resize(rs.weyl_order());
  auto vin = intmat::inv_unimodular(s.V);
  for (int w = 0; w < rs.weyl_order(); ++w) {
    auto m = rs.coroot_matrix(w);
    d.elt_mat_[w] = intmat::mul(d.U, intmat::mul(m, d.Uinv));
    d.chr_mat_[w] = intmat::transpose(intmat::mul(vin, intmat::mul(m, s.V)));
  }
  // the Weyl action must commute with A for the coordinates to be valid
  for (int sgen = 0; sgen < rs.rank(); ++sgen) {
    auto m = rs.coroot_matrix(rs.simple_reflection(sgen));
    if (intmat::mul(m, A) != intmat::mul(A, m))
      throw Error("Weyl action does not commute with the Frobenius matrix");
  }
  return d;
}

TorusElt torus_identity(const TorusDesc& d) {
  return TorusElt{std::vector<long>(d.invariants.size(), 0)};
}

TorusElt torus_mult(const TorusDesc& d, const TorusElt& a, const TorusElt& b) {
  TorusElt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod(r.c[i] + b.c[i], d.invariants[i]);
  return r;
}

TorusElt torus_inv(const TorusDesc& d, const TorusElt& a) {
  TorusElt r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod(-r.c[i], d.invariants[i]);
  return r;
}

TorusElt torus_weyl_act(const TorusDesc& d, int w, const TorusElt& a) {
  const auto& m = d.elt_mat(w);
  TorusElt r{std::vector<long>(a.c.size(), 0)};
  for (size_t i = 0; i < a.c.size(); ++i) {
    long acc = 0;
    for (size_t j = 0; j < a.c.size(); ++j) acc += m[i][j] * a.c[j];
    r.c[i] = mod(acc, d.invariants[i]);
  }
  return r;
}

TorusElt embed_H(const TorusDesc& d, const HElt& h) {
  TorusElt r = torus_identity(d);
  if (d.q % 2 == 0) return r;  // -1 = 1 in F_q
  // xi = (1/2) sum bits_i alpha_i~; coords c = U A xi mod D
  int n = (int)d.invariants.size();
  intmat::Mat M = d.twisted ? d.rs->coroot_matrix(d.rs->w0()) : intmat::identity(n);
  for (int i = 0; i < n; ++i) {
    long acc = 0;
    for (int j = 0; j < n; ++j) {
      // (U (qM - I))_{ij} applied to bits/2
      long aij = 0;
      for (int k = 0; k < n; ++k) aij += d.U[i][k] * (d.q * M[k][j] - (k == j ? 1 : 0));
      acc += aij * h.bits[j];
    }
    if (acc % 2) throw Error("embed_H: non-integral image");
    r.c[i] = mod(acc / 2, d.invariants[i]);
  }
  return r;
}

std::vector<TorusElt> center_elements(const TorusDesc& d) {
  // t in Z(G) iff alpha_j(t) = 1 for all simple roots; with xi = A^{-1}U^{-1}c
  // that reads C^T U^{-1} c = 0 mod the scalar A (A is +-scalar here)
  const RootSystem& rs = *d.rs;
  int n = rs.rank();
  intmat::Mat M = d.twisted ? rs.coroot_matrix(rs.w0()) : intmat::identity(n);
  // A = qM - I must be a scalar matrix for this shortcut
  long scalar = d.q * M[0][0] - 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((d.q * M[i][j] - (i == j ? 1 : 0)) != (i == j ? scalar : 0))
        throw Error("center_elements: non-scalar Frobenius matrix");
  long m = std::abs(scalar);
  std::vector<TorusElt> out;
  long total = d.order();
  for (long t = 0; t < total; ++t) {
    TorusElt e{std::vector<long>(n, 0)};
    long tt = t;
    for (int i = 0; i < n; ++i) { e.c[i] = tt % d.invariants[i]; tt /= d.invariants[i]; }
    // x = U^{-1} c; check C^T x = 0 mod m
    std::vector<long> x(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x[i] += d.Uinv[i][j] * e.c[j];
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      long acc = 0;
      for (int i = 0; i < n; ++i) acc += rs.cartan(i, j) * x[i];
      ok = acc % m == 0;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

Normalizer::Normalizer(const RootSystem& rs, long q, bool twisted, size_t bound)
    : desc_(build_torus(rs, q, twisted)), V_(rs) {
  wsize_ = rs.weyl_order();
  tsize_ = desc_.order();
  if ((size_t)(tsize_ * wsize_) > bound)
    throw Error("normalizer order exceeds the enumeration bound");
  radix_.resize(desc_.invariants.size());
  long r = 1;
  for (size_t i = 0; i < desc_.invariants.size(); ++i) {
    radix_[i] = r;
    r *= desc_.invariants[i];
  }
}

long Normalizer::t_index(const TorusElt& t) const {
  long idx = 0;
  for (size_t i = 0; i < t.c.size(); ++i) idx += t.c[i] * radix_[i];
  return idx;
}

TorusElt Normalizer::t_of_index(long i) const {
  TorusElt t{std::vector<long>(desc_.invariants.size(), 0)};
  for (size_t k = 0; k < desc_.invariants.size(); ++k) {
    t.c[k] = i % desc_.invariants[k];
    i /= desc_.invariants[k];
  }
  return t;
}

std::pair<TorusElt, int> Normalizer::element(long idx) const {
  return {t_of_index(idx / wsize_), (int)(idx % wsize_)};
}

long Normalizer::mult(long a, long b) const {
  auto [t1, w1] = element(a);
  auto [t2, w2] = element(b);
  const RootSystem& rs = *desc_.rs;
  TorusElt t = torus_mult(desc_, t1, torus_weyl_act(desc_, w1, t2));
  HElt hc = V_.cocycle(w1, w2);
  t = torus_mult(desc_, t, embed_H(desc_, hc));
  return index(t, rs.mult(w1, w2));
}

long Normalizer::inv(long a) const {
  auto [t, w] = element(a);
  const RootSystem& rs = *desc_.rs;
  int wi = rs.inverse(w);
  HElt hz = V_.cocycle(w, wi);
  TorusElt r = torus_weyl_act(desc_, wi, torus_inv(desc_, t));
  r = torus_mult(desc_, torus_weyl_act(desc_, wi, embed_H(desc_, hz)), r);
  return index(r, wi);
}

long Normalizer::v_image(const ExtWeylElt& v) const {
  return index(embed_H(desc_, v.h), v.w);
}

long Normalizer::element_order(long a) const {
  long o = 1;
  long x = a;
  while (x != 0) { x = mult(x, a); ++o; }
  return o;
}

void Normalizer::ensure_classes() const {
  if (!class_rep_.empty()) return;
  long n = order();
  // generators: torus unit vectors and the simple n's
  std::vector<long> gens;
  for (size_t i = 0; i < desc_.invariants.size(); ++i) {
    if (desc_.invariants[i] == 1) continue;
    TorusElt t = t_of_index(radix_[i]);
    gens.push_back(index(t, desc_.rs->identity()));
  }
  for (int s = 0; s < desc_.rs->rank(); ++s)
    gens.push_back(index(torus_identity(desc_), desc_.rs->simple_reflection(s)));
  std::vector<long> ginv;
  for (long g : gens) ginv.push_back(inv(g));
  // union-find
  std::vector<int32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int32_t(int32_t)> find = [&](int32_t x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  };
  auto unite = [&](long a, long b) {
    int32_t ra = find((int32_t)a), rb = find((int32_t)b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };
  for (long x = 0; x < n; ++x)
    for (size_t gi = 0; gi < gens.size(); ++gi)
      unite(x, mult(gens[gi], mult(x, ginv[gi])));
  // roots as class ids, relabeled by (size, least index)
  std::map<int32_t, long> size_of;
  for (long x = 0; x < n; ++x) size_of[find((int32_t)x)]++;
  std::vector<std::pair<std::pair<long, long>, int32_t>> order_keys;
  for (auto& [root, sz] : size_of) order_keys.push_back({{sz, root}, root});
  std::sort(order_keys.begin(), order_keys.end());
  std::map<int32_t, int> rank_of;
  for (size_t i = 0; i < order_keys.size(); ++i) rank_of[order_keys[i].second] = (int)i;
  class_of_.resize(n);
  class_rep_.resize(order_keys.size());
  class_size_.resize(order_keys.size());
  for (long x = 0; x < n; ++x) class_of_[x] = rank_of[find((int32_t)x)];
  for (size_t i = 0; i < order_keys.size(); ++i) {
    class_rep_[i] = order_keys[i].first.second;
    class_size_[i] = order_keys[i].first.first;
  }
  long e = 1;
  for (long rep : class_rep_) e = numth::lcm(e, element_order(rep));
  exponent_ = e;
}

int Normalizer::num_classes() const { ensure_classes(); return (int)class_rep_.size(); }
int Normalizer::class_of(long idx) const { ensure_classes(); return class_of_[idx]; }
long Normalizer::class_rep(int c) const { ensure_classes(); return class_rep_[c]; }
long Normalizer::class_size(int c) const { ensure_classes(); return class_size_[c]; }
long Normalizer::exponent() const { ensure_classes(); return exponent_; }

}  // namespace galmck::chevnorm
