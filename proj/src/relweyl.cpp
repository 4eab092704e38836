#include "galmck/relweyl.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace galmck::relweyl {

using numth::lcm;
using numth::mod;

Cyclotomic eval_char(const TorusDesc& d, const TorusChar& lam, const TorusElt& t) {
  long L = 1;
  for (long di : d.invariants) L = lcm(L, di);
  long num = 0;
  for (size_t i = 0; i < d.invariants.size(); ++i)
    num = mod(num + lam.exps[i] * t.c[i] % d.invariants[i] * (L / d.invariants[i]), L);
  return Cyclotomic::root_of_unity(L, num);
}

long char_order(const TorusDesc& d, const TorusChar& lam) {
  long o = 1;
  for (size_t i = 0; i < d.invariants.size(); ++i) {
    long di = d.invariants[i];
    o = lcm(o, di / numth::gcd(di, lam.exps[i]));
  }
  return o;
}

TorusChar w_act(const TorusDesc& d, int w, const TorusChar& lam) {
  const auto& K = d.chr_mat(w);  // already transposed
  TorusChar r{std::vector<long>(lam.exps.size(), 0)};
  for (size_t i = 0; i < lam.exps.size(); ++i) {
    long acc = 0;
    for (size_t j = 0; j < lam.exps.size(); ++j) acc += K[i][j] * lam.exps[j];
    r.exps[i] = mod(acc, d.invariants[i]);
  }
  return r;
}

TorusChar char_power(const TorusDesc& d, const TorusChar& lam, long u) {
  TorusChar r = lam;
  for (size_t i = 0; i < r.exps.size(); ++i)
    r.exps[i] = mod(r.exps[i] * u, d.invariants[i]);
  return r;
}

TorusChar char_mult(const TorusDesc& d, const TorusChar& a, const TorusChar& b) {
  TorusChar r = a;
  for (size_t i = 0; i < r.exps.size(); ++i)
    r.exps[i] = mod(r.exps[i] + b.exps[i], d.invariants[i]);
  return r;
}

std::vector<int> restrict_to_H(const TorusDesc& d, const TorusChar& lam) {
  const RootSystem& rs = *d.rs;
  std::vector<int> bits(rs.rank(), 0);
  if (d.q % 2 == 0) return bits;
  for (int s = 0; s < rs.rank(); ++s) {
    chevnorm::HElt h{std::vector<int>(rs.rank(), 0)};
    h.bits[s] = 1;
    auto t = chevnorm::embed_H(d, h);
    Cyclotomic v = eval_char(d, lam, t);
    if (v == Cyclotomic(1))
      bits[s] = 0;
    else if (v == Cyclotomic(-1))
      bits[s] = 1;
    else
      throw Error("restrict_to_H: image not of order <= 2");
  }
  return bits;
}

std::vector<int> stabilizer_W(const TorusDesc& d, const TorusChar& lam) {
  const RootSystem& rs = *d.rs;
  std::vector<int> out;
  for (int w = 0; w < rs.weyl_order(); ++w)
    if (w_act(d, w, lam) == lam) out.push_back(w);
  return out;
}

namespace {

// kernel-of-coroot test: the alpha-coroot subgroup of T lies in ker(lambda)
bool coroot_in_kernel(const TorusDesc& d, const TorusChar& lam, int gamma) {
  const RootSystem& rs = *d.rs;
  int n = rs.rank();
  const auto& cr = rs.coroot_coords(gamma);
  // generator of the coroot subgroup in invariant coordinates: U * coroot
  std::vector<long> y(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += d.U[i][j] * cr[j];
  long L = 1;
  for (long di : d.invariants) L = lcm(L, di);
  long acc = 0;
  for (int i = 0; i < n; ++i)
    acc = mod(acc + lam.exps[i] * mod(y[i], d.invariants[i]) % d.invariants[i] *
                        (L / d.invariants[i]),
              L);
  return acc == 0;
}

long expected_weyl_order(const std::string& lab) {
  static const std::map<std::string, long> orders{
      {"A1", 2},  {"A2", 6},   {"A3", 24},  {"A4", 120}, {"B2", 8},
      {"B3", 48}, {"B4", 384}, {"C3", 48},  {"C4", 384}, {"D3", 24},
      {"D4", 192}, {"G2", 12}, {"F4", 1152}};
  auto it = orders.find(lab);
  if (it == orders.end()) throw Error("unknown component label " + lab);
  return it->second;
}

}  // namespace

RelWeylData rel_weyl_data(const TorusDesc& d, const TorusChar& lam) {
  const RootSystem& rs = *d.rs;
  RelWeylData out;
  out.Wlambda = stabilizer_W(d, lam);
  for (int g = 0; g < rs.num_roots(); ++g)
    if (coroot_in_kernel(d, lam, g)) out.PhiLambda.push_back(g);
  // R(lambda) generated by the reflections of Phi_lambda
  {
    std::set<int> gens;
    for (int g : out.PhiLambda) gens.insert(rs.reflection(g));
    std::set<int> seen{rs.identity()};
    std::queue<int> work;
    work.push(rs.identity());
    while (!work.empty()) {
      int x = work.front();
      work.pop();
      for (int g : gens) {
        int y = rs.mult(x, g);
        if (!seen.count(y)) { seen.insert(y); work.push(y); }
      }
    }
    out.Rlambda.assign(seen.begin(), seen.end());
  }
  // every reflection of Phi_lambda must stabilize lambda
  for (int g : out.PhiLambda)
    if (!std::binary_search(out.Wlambda.begin(), out.Wlambda.end(), rs.reflection(g)))
      throw Error("reflection of Phi_lambda outside the stabilizer");
  // simple system: positive roots of Phi_lambda that are not sums of two
  // positive members
  std::set<int> phiset(out.PhiLambda.begin(), out.PhiLambda.end());
  std::vector<int> pos;
  for (int g : out.PhiLambda)
    if (rs.is_positive(g)) pos.push_back(g);
  for (int g : pos) {
    bool decomposable = false;
    for (int a : pos) {
      if (a == g) continue;
      std::vector<long> diff(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) diff[i] = rs.root(g)[i] - rs.root(a)[i];
      int b = rs.root_index(diff);
      if (b >= 0 && phiset.count(b) && rs.is_positive(b)) { decomposable = true; break; }
    }
    if (!decomposable) out.DeltaLambda.push_back(g);
  }
  // R equals the group generated by the simple reflections of Delta_lambda
  {
    std::set<int> seen{rs.identity()};
    std::queue<int> work;
    work.push(rs.identity());
    while (!work.empty()) {
      int x = work.front();
      work.pop();
      for (int g : out.DeltaLambda) {
        int y = rs.mult(x, rs.reflection(g));
        if (!seen.count(y)) { seen.insert(y); work.push(y); }
      }
    }
    if ((long)seen.size() != (long)out.Rlambda.size() ||
        !std::equal(seen.begin(), seen.end(), out.Rlambda.begin()))
      throw Error("Delta_lambda does not generate R(lambda)");
  }
  out.components = rs.classify_components(out.DeltaLambda);
  // Coxeter presentation check: |R| matches the classification
  {
    long expect = 1;
    for (auto& lab : out.components) expect *= expected_weyl_order(lab);
    if (expect != (long)out.Rlambda.size())
      throw Error("R(lambda) order does not match its Coxeter type");
  }
  // C(lambda): stabilizer of Delta_lambda in W(lambda)
  std::set<int> delta(out.DeltaLambda.begin(), out.DeltaLambda.end());
  for (int w : out.Wlambda) {
    bool stab = true;
    for (int g : out.DeltaLambda)
      if (!delta.count(rs.act_root(w, g))) { stab = false; break; }
    if (stab) out.Clambda.push_back(w);
  }
  // semidirect decomposition checks
  {
    std::set<int> rset(out.Rlambda.begin(), out.Rlambda.end());
    for (int c : out.Clambda)
      if (rset.count(c) && c != rs.identity())
        throw Error("R cap C nontrivial");
    if ((long)out.Rlambda.size() * (long)out.Clambda.size() != (long)out.Wlambda.size())
      throw Error("W(lambda) != R(lambda) x| C(lambda)");
    // R normal in W(lambda)
    for (int w : out.Wlambda)
      for (int g : out.DeltaLambda) {
        int conj = rs.mult(rs.mult(w, rs.reflection(g)), rs.inverse(w));
        if (!rset.count(conj)) throw Error("R(lambda) not normal in W(lambda)");
      }
  }
  return out;
}

std::pair<int, int> rc_decompose(const RootSystem& rs, const RelWeylData& rel, int w) {
  for (int c : rel.Clambda) {
    int wr = rs.mult(w, rs.inverse(c));
    if (std::binary_search(rel.Rlambda.begin(), rel.Rlambda.end(), wr)) return {wr, c};
  }
  throw Error("rc_decompose: element outside W(lambda)");
}

ExplicitGroup wlambda_group(const RootSystem& rs, const std::vector<int>& elems) {
  smallgroup::GroupOps ops;
  ops.id = {rs.identity()};
  ops.mult = [&rs](const smallgroup::Elem& a, const smallgroup::Elem& b) {
    return smallgroup::Elem{rs.mult((int)a[0], (int)b[0])};
  };
  ops.inv = [&rs](const smallgroup::Elem& a) {
    return smallgroup::Elem{rs.inverse((int)a[0])};
  };
  std::vector<smallgroup::Elem> gens;
  for (int w : elems) gens.push_back({w});
  return ExplicitGroup(ops, gens);
}

std::vector<TorusChar> orbit_representatives(const TorusDesc& d) {
  long total = d.order();
  const RootSystem& rs = *d.rs;
  std::vector<char> visited(total, 0);
  std::vector<long> radix(d.invariants.size());
  long r = 1;
  for (size_t i = 0; i < d.invariants.size(); ++i) { radix[i] = r; r *= d.invariants[i]; }
  auto idx_of = [&](const TorusChar& c) {
    long idx = 0;
    for (size_t i = 0; i < c.exps.size(); ++i) idx += c.exps[i] * radix[i];
    return idx;
  };
  auto of_idx = [&](long idx) {
    TorusChar c{std::vector<long>(d.invariants.size())};
    for (size_t i = 0; i < d.invariants.size(); ++i) {
      c.exps[i] = idx % d.invariants[i];
      idx /= d.invariants[i];
    }
    return c;
  };
  std::vector<TorusChar> reps;
  for (long i = 0; i < total; ++i) {
    if (visited[i]) continue;
    TorusChar lam = of_idx(i);
    // orbit BFS over generators
    std::vector<long> orbit{i};
    visited[i] = 1;
    TorusChar least = lam;
    for (size_t head = 0; head < orbit.size(); ++head) {
      TorusChar cur = of_idx(orbit[head]);
      for (int s = 0; s < rs.rank(); ++s) {
        TorusChar nxt = w_act(d, rs.simple_reflection(s), cur);
        long ni = idx_of(nxt);
        if (!visited[ni]) {
          visited[ni] = 1;
          orbit.push_back(ni);
          if (nxt < least) least = nxt;
        }
      }
    }
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

long orbit_size(const TorusDesc& d, const TorusChar& lam) {
  const RootSystem& rs = *d.rs;
  std::set<std::vector<long>> orbit{lam.exps};
  std::queue<TorusChar> work;
  work.push(lam);
  while (!work.empty()) {
    TorusChar cur = work.front();
    work.pop();
    for (int s = 0; s < rs.rank(); ++s) {
      TorusChar nxt = w_act(d, rs.simple_reflection(s), cur);
      if (!orbit.count(nxt.exps)) { orbit.insert(nxt.exps); work.push(nxt); }
    }
  }
  return (long)orbit.size();
}

TorusChar canonical_rep(const TorusDesc& d, const TorusChar& lam) {
  const RootSystem& rs = *d.rs;
  std::set<std::vector<long>> orbit{lam.exps};
  std::queue<TorusChar> work;
  work.push(lam);
  TorusChar least = lam;
  while (!work.empty()) {
    TorusChar cur = work.front();
    work.pop();
    for (int s = 0; s < rs.rank(); ++s) {
      TorusChar nxt = w_act(d, rs.simple_reflection(s), cur);
      if (!orbit.count(nxt.exps)) {
        orbit.insert(nxt.exps);
        work.push(nxt);
        if (nxt < least) least = nxt;
      }
    }
  }
  return least;
}

ParamSet enumerate_params(const RootSystem& rs, long q, long ell, bool twisted,
                          const TorusDesc& d) {
  ParamSet ps;
  ps.rs = &rs;
  ps.q = q;
  ps.ell = ell;
  ps.twisted = twisted;
  auto reps = orbit_representatives(d);
  long worder = rs.weyl_order();
  for (auto& lam : reps) {
    long osize = orbit_size(d, lam);
    long index = osize;  // [W : W(lambda)] = orbit size
    if (index % ell == 0) continue;
    ParamOrbit po;
    po.lambda = lam;
    po.orbit_size = osize;
    po.rel = rel_weyl_data(d, lam);
    if ((long)po.rel.Wlambda.size() * osize != worder)
      throw Error("orbit-stabilizer mismatch");
    po.wgroup = std::make_shared<ExplicitGroup>(wlambda_group(rs, po.rel.Wlambda));
    po.table = std::make_shared<CharTable>(charkit::dixon_table(*po.wgroup));
    for (size_t i = 0; i < po.table->irreducibles.size(); ++i) {
      auto deg = po.table->irreducibles[i].degree().rational_value();
      if (deg.get_den() != 1) throw Error("character degree not integral");
      if (deg.get_num() % ell != 0) po.eta_lprime.push_back((int)i);
    }
    ps.orbits.push_back(std::move(po));
  }
  for (size_t o = 0; o < ps.orbits.size(); ++o)
    for (int e : ps.orbits[o].eta_lprime) ps.params.push_back({(int)o, e});
  return ps;
}

TorusChar galois_on_lambda(const TorusDesc& d, long unit, const TorusChar& lam) {
  return char_power(d, lam, unit);
}

TorusChar semisimple_label_action(const TorusDesc& d, long ell, long r, long b,
                                  const TorusChar& lam) {
  // decompose lambda = lambda_{ell'} lambda_ell and act by ell^r and b
  long o = char_order(d, lam);
  long op = 1;
  while (o % ell == 0) { op *= ell; o /= ell; }
  // o = ell'-part, op = ell-part of the order
  long u_ellpart = (op == 1) ? 0 : numth::crt(0, o, 1, op);   // projector to ell-part
  long u_ellprime = (o == 1) ? 0 : numth::crt(1, o, 0, op);   // projector to ell'-part
  long m = o * op;
  long unit = mod(numth::pow_mod(ell, r, m) * u_ellprime + b % m * u_ellpart, m);
  if (op == 1) unit = numth::pow_mod(ell, r, m);
  if (o == 1) unit = mod(b, m);
  return char_power(d, lam, unit);
}

}  // namespace galmck::relweyl
