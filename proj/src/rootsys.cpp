#include "galmck/rootsys.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <mutex>
#include <queue>
#include <set>

namespace galmck::rootsys {

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<long> vadd(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<long> vsub(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::map<std::string, std::unique_ptr<RootSystem>> g_cache;
std::mutex g_cache_mu;

}  // namespace

const RootSystem& RootSystem::get(const std::string& label) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  auto it = g_cache.find(label);
  if (it == g_cache.end()) it = g_cache.emplace(label, build(label)).first;
  return *it->second;
}

std::unique_ptr<RootSystem> RootSystem::build(const std::string& label) {
  std::unique_ptr<RootSystem> rs(new RootSystem());
  rs->construct(label);
  rs->enumerate_weyl();
  rs->compute_structure_constants();
  return rs;
}

void RootSystem::construct(const std::string& label) {
  label_ = label;
  if (label.size() < 2) throw Error("bad type label: " + label);
  family_ = label[0];
  rank_ = std::stoi(label.substr(1));
  std::vector<std::vector<long>> simples;
  switch (family_) {
    case 'A': {
      if (rank_ < 1 || rank_ > 4) throw Error("unsupported rank for type A");
      for (int i = 0; i < rank_; ++i) {
        std::vector<long> v(rank_ + 1, 0);
        v[i] = 1; v[i + 1] = -1;
        simples.push_back(v);
      }
      break;
    }
    case 'B': {
      if (rank_ < 2 || rank_ > 4) throw Error("unsupported rank for type B");
      for (int i = 0; i < rank_ - 1; ++i) {
        std::vector<long> v(rank_, 0);
        v[i] = 1; v[i + 1] = -1;
        simples.push_back(v);
      }
      std::vector<long> v(rank_, 0);
      v[rank_ - 1] = 1;
      simples.push_back(v);
      break;
    }
    case 'C': {
      if (rank_ < 1 || rank_ > 4) throw Error("unsupported rank for type C");
      if (rank_ == 1) {  // C1 = A1 with a long root
        simples.push_back({2});
        break;
      }
      for (int i = 0; i < rank_ - 1; ++i) {
        std::vector<long> v(rank_, 0);
        v[i] = 1; v[i + 1] = -1;
        simples.push_back(v);
      }
      std::vector<long> v(rank_, 0);
      v[rank_ - 1] = 2;
      simples.push_back(v);
      break;
    }
    case 'D': {
      if (rank_ < 3 || rank_ > 4) throw Error("unsupported rank for type D");
      for (int i = 0; i < rank_ - 1; ++i) {
        std::vector<long> v(rank_, 0);
        v[i] = 1; v[i + 1] = -1;
        simples.push_back(v);
      }
      std::vector<long> v(rank_, 0);
      v[rank_ - 2] = 1; v[rank_ - 1] = 1;
      simples.push_back(v);
      break;
    }
    case 'G': {
      if (rank_ != 2) throw Error("G2 only");
      simples.push_back({1, -1, 0});
      simples.push_back({-2, 1, 1});
      break;
    }
    case 'F': {
      if (rank_ != 4) throw Error("F4 only");
      simples.push_back({0, 2, -2, 0});
      simples.push_back({0, 0, 2, -2});
      simples.push_back({0, 0, 0, 2});
      simples.push_back({1, -1, -1, -1});
      break;
    }
    default:
      throw Error("unsupported type label: " + label);
  }

  // close the simple roots under simple reflections
  std::map<std::vector<long>, std::vector<long>> seen;  // euclid -> simple coords
  std::queue<std::vector<long>> work;
  for (int i = 0; i < rank_; ++i) {
    std::vector<long> sc(rank_, 0);
    sc[i] = 1;
    seen[simples[i]] = sc;
    work.push(simples[i]);
  }
  while (!work.empty()) {
    auto x = work.front();
    work.pop();
    auto xs = seen[x];
    for (int i = 0; i < rank_; ++i) {
      long num = 2 * dot(x, simples[i]);
      long den = dot(simples[i], simples[i]);
      if (num % den) throw Error("non-integral Cartan pairing");
      long c = num / den;
      auto y = x;
      for (size_t k = 0; k < y.size(); ++k) y[k] -= c * simples[i][k];
      if (!seen.count(y)) {
        auto ys = xs;
        ys[i] -= c;
        seen[y] = ys;
        work.push(y);
      }
    }
  }

  // order: positives by (height, lex), negatives mirrored after
  std::vector<std::pair<std::vector<long>, std::vector<long>>> pos;  // (simple, euclid)
  for (auto& [eu, sc] : seen) {
    long h = 0;
    for (long v : sc) h += v;
    bool allnn = true, allnp = true;
    for (long v : sc) { allnn &= v >= 0; allnp &= v <= 0; }
    if (!(allnn || allnp)) throw Error("mixed-sign root");
    if (h > 0) pos.push_back({sc, eu});
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long v : a.first) ha += v;
    for (long v : b.first) hb += v;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  num_pos_ = (int)pos.size();
  for (auto& [sc, eu] : pos) { roots_.push_back(sc); euclid_.push_back(eu); }
  for (auto& [sc, eu] : pos) {
    std::vector<long> msc(sc.size()), meu(eu.size());
    for (size_t i = 0; i < sc.size(); ++i) msc[i] = -sc[i];
    for (size_t i = 0; i < eu.size(); ++i) meu[i] = -eu[i];
    roots_.push_back(msc);
    euclid_.push_back(meu);
  }
  neg_.resize(roots_.size());
  for (int i = 0; i < num_pos_; ++i) { neg_[i] = i + num_pos_; neg_[i + num_pos_] = i; }
  for (size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = (int)i;
  norm2_.resize(roots_.size());
  height_.resize(roots_.size());
  for (size_t i = 0; i < roots_.size(); ++i) {
    norm2_[i] = dot(euclid_[i], euclid_[i]);
    long h = 0;
    for (long v : roots_[i]) h += v;
    height_[i] = h;
  }
  cartan_ = intmat::Mat(rank_, std::vector<long>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      cartan_[i][j] = 2 * dot(simples[j], simples[i]) / dot(simples[i], simples[i]);
  coroot_.resize(roots_.size());
  for (size_t g = 0; g < roots_.size(); ++g) {
    std::vector<long> c(rank_);
    for (int i = 0; i < rank_; ++i) {
      long num = roots_[g][i] * dot(simples[i], simples[i]);
      if (num % norm2_[g]) throw Error("non-integral coroot coordinate");
      c[i] = num / norm2_[g];
    }
    coroot_[g] = c;
  }
}

int RootSystem::root_index(const std::vector<long>& sc) const {
  auto it = index_.find(sc);
  if (it == index_.end()) return -1;
  return it->second;
}

void RootSystem::enumerate_weyl() {
  int m = num_roots();
  // generator permutations
  std::vector<std::vector<int16_t>> gperm(rank_);
  for (int s = 0; s < rank_; ++s) {
    std::vector<long> al(rank_, 0);
    al[s] = 1;
    int ai = root_index(al);
    gperm[s].resize(m);
    for (int r = 0; r < m; ++r) {
      long c = 0;
      for (int i = 0; i < rank_; ++i) c += cartan_[s][i] * roots_[r][i];
      auto y = roots_[r];
      y[s] -= c;
      gperm[s][r] = (int16_t)root_index(y);
      if (gperm[s][r] < 0) throw Error("reflection left the root set");
    }
    (void)ai;
  }
  std::map<std::vector<int16_t>, int> idx;
  std::vector<int16_t> id(m);
  for (int r = 0; r < m; ++r) id[r] = (int16_t)r;
  perm_.push_back(id);
  word_.push_back({});
  idx[id] = 0;
  // BFS in lex order of words; right multiplication gives lex-least words
  for (size_t head = 0; head < perm_.size(); ++head) {
    auto cur = perm_[head];
    auto cw = word_[head];
    for (int s = 0; s < rank_; ++s) {
      std::vector<int16_t> nxt(m);
      for (int r = 0; r < m; ++r) nxt[r] = cur[gperm[s][r]];
      if (!idx.count(nxt)) {
        idx[nxt] = (int)perm_.size();
        perm_.push_back(nxt);
        auto w = cw;
        w.push_back((uint8_t)s);
        word_.push_back(w);
      }
    }
  }
  int W = (int)perm_.size();
  len_.resize(W);
  inv_.resize(W);
  for (int a = 0; a < W; ++a) {
    len_[a] = (int)word_[a].size();
    std::vector<int16_t> iv(m);
    for (int r = 0; r < m; ++r) iv[perm_[a][r]] = (int16_t)r;
    auto it = idx.find(iv);
    if (it == idx.end()) throw Error("inverse not found");
    inv_[a] = it->second;
  }
  rmult_.assign(W, std::vector<int32_t>(rank_));
  for (int a = 0; a < W; ++a)
    for (int s = 0; s < rank_; ++s) {
      std::vector<int16_t> nxt(m);
      for (int r = 0; r < m; ++r) nxt[r] = perm_[a][gperm[s][r]];
      rmult_[a][s] = idx.at(nxt);
    }
  gen_elt_.resize(rank_);
  for (int s = 0; s < rank_; ++s) gen_elt_[s] = rmult_[0][s];
  w0_ = 0;
  for (int a = 0; a < W; ++a)
    if (len_[a] > len_[w0_]) w0_ = a;
  // reflection elements per root
  refl_of_root_.assign(m, -1);
  for (int r = 0; r < m; ++r) {
    std::vector<int16_t> p(m);
    for (int x = 0; x < m; ++x) {
      long num = 2 * dot(euclid_[x], euclid_[r]);
      long c = num / norm2_[r];
      auto y = roots_[x];
      for (int i = 0; i < rank_; ++i) y[i] -= c * roots_[r][i];
      p[x] = (int16_t)root_index(y);
    }
    auto it = idx.find(p);
    if (it == idx.end()) throw Error("reflection not in Weyl group");
    refl_of_root_[r] = it->second;
  }
}

int RootSystem::reflection(int root) const { return refl_of_root_[root]; }

int RootSystem::mult(int a, int b) const {
  int r = a;
  for (uint8_t s : word_[b]) r = rmult_[r][s];
  return r;
}

bool RootSystem::longest_is_central() const {
  for (int r = 0; r < num_roots(); ++r)
    if (perm_[w0_][r] != neg_[r]) return false;
  return true;
}

intmat::Mat RootSystem::coroot_matrix(int w) const {
  intmat::Mat mt(rank_, std::vector<long>(rank_));
  for (int j = 0; j < rank_; ++j) {
    std::vector<long> al(rank_, 0);
    al[j] = 1;
    int aj = root_index(al);
    const auto& c = coroot_[perm_[w][aj]];
    for (int i = 0; i < rank_; ++i) mt[i][j] = c[i];
  }
  return mt;
}

std::vector<std::vector<uint8_t>> RootSystem::all_reduced_words(int w) const {
  if (w == 0) return {{}};
  std::vector<std::vector<uint8_t>> out;
  int wi = inv_[w];
  for (int s = 0; s < rank_; ++s) {
    // s is a left descent iff w^{-1}(alpha_s) < 0
    std::vector<long> al(rank_, 0);
    al[s] = 1;
    int ai = root_index(al);
    if (is_positive(perm_[wi][ai])) continue;
    int sw = mult(gen_elt_[s], w);
    for (auto& tail : all_reduced_words(sw)) {
      std::vector<uint8_t> word{(uint8_t)s};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(word);
    }
  }
  return out;
}

long RootSystem::chain_p(int alpha, int beta) const {
  long p = 0;
  auto cur = vsub(roots_[beta], roots_[alpha]);
  while (root_index(cur) >= 0) {
    ++p;
    cur = vsub(cur, roots_[alpha]);
  }
  return p;
}

void RootSystem::compute_structure_constants() {
  // positive special pairs keyed (a, b) with a < b (index order = root order)
  // helper for looking up N over arbitrary pairs, 0 when sum not a root
  std::function<long(int, int)> nval = [&](int x, int y) -> long {
    int sidx = root_index(vadd(roots_[x], roots_[y]));
    if (sidx < 0) return 0;
    bool px = is_positive(x), py = is_positive(y);
    if (px && py) {
      if (x < y) {
        auto it = nconst_.find({x, y});
        if (it == nconst_.end()) throw Error("N lookup before computed");
        return it->second;
      }
      auto it = nconst_.find({y, x});
      if (it == nconst_.end()) throw Error("N lookup before computed");
      return -it->second;
    }
    if (!px && !py) return -nval(neg_[x], neg_[y]);
    if (!px) return -nval(y, x);
    // x positive, y negative, x + y a root
    int z = neg_[sidx];
    if (is_positive(z)) {
      // N_{x,y} = (z,z)/(y,y) * N_{z,x}
      long v = nval(z, x) * norm2_[z];
      if (v % norm2_[y]) throw Error("cyclic identity non-integral");
      return v / norm2_[y];
    }
    long v = -nval(neg_[y], neg_[z]) * norm2_[z];
    if (v % norm2_[x]) throw Error("cyclic identity non-integral");
    return v / norm2_[x];
  };

  for (int g = 0; g < num_pos_; ++g) {
    if (height_[g] < 2) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < num_pos_; ++a) {
      int b = root_index(vsub(roots_[g], roots_[a]));
      if (b >= 0 && b < num_pos_ && a < b) pairs.push_back({a, b});
    }
    if (pairs.empty()) throw Error("no special pair for a composite root");
    // extraspecial: minimal first element
    std::sort(pairs.begin(), pairs.end());
    auto [a1, b1] = pairs[0];
    nconst_[{a1, b1}] = chain_p(a1, b1) + 1;
    // remaining pairs of this bucket: solve the Jacobi identities as a linear
    // system (they may reference each other within the bucket, but always
    // linearly since cross-bucket constants are known)
    std::map<std::pair<int, int>, int> var;
    for (size_t k = 1; k < pairs.size(); ++k) var[pairs[k]] = (int)k - 1;
    int nv = (int)var.size();
    if (nv == 0) continue;
    // rows: coefficients for unknowns plus constant term (lhs = 0 form)
    std::vector<std::vector<mpq_class>> rows;
    auto known_or_var = [&](int x, int y, long& cval, int& vidx) {
      // N over the positive pair {x, y}; either known (cval) or a variable
      auto key = std::minmax(x, y);
      int sign = (x <= y) ? 1 : -1;
      auto itv = var.find({key.first, key.second});
      if (itv != var.end()) { vidx = itv->second; cval = sign; return false; }
      cval = nval(x, y);
      vidx = -1;
      return true;
    };
    // anchors: all roots appearing in some bucket pair
    std::vector<int> anchors;
    for (auto& [x, y] : pairs) { anchors.push_back(x); anchors.push_back(y); }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    // For a bucket pair (a, b) and an anchor e with partner f = g - e:
    // the Jacobi identity on (x_a, x_e, x_{b-e}) reads
    //   N_{a,e} N_{a+e,th} + N_{e,th} N_{b,a} + N_{th,a} N_{f,e} = 0
    // which is linear in this bucket's unknowns as long as a+e, if a root,
    // lies in an earlier bucket.
    auto add_eq = [&](int a, int b, int e) {
      if (e == a || e == b) return;
      int th = root_index(vsub(roots_[b], roots_[e]));
      if (th < 0 || !is_positive(th)) return;
      int f = root_index(vsub(roots_[g], roots_[e]));
      if (f < 0) return;
      int ae = root_index(vadd(roots_[a], roots_[e]));
      if (ae >= 0 && ae >= g) return;  // coefficient not yet known
      std::vector<mpq_class> row(nv + 1, 0);
      auto addterm = [&](long coef, int x, int y) {
        // coef * N_{x,y} with {x,y} a positive pair of this bucket or known
        long cv; int vi;
        if (known_or_var(x, y, cv, vi))
          row[nv] += coef * cv;
        else
          row[vi] += coef * cv;
      };
      if (ae >= 0) addterm(nval(a, e), ae, th);
      addterm(-nval(e, th), a, b);      // N_{e,th} N_{b,a} = -N_{e,th} N_{a,b}
      addterm(nval(th, a), f, e);       // pair {e,f} belongs to this bucket
      rows.push_back(row);
    };
    for (auto& [a, b] : pairs) {
      if (!var.count({a, b})) continue;
      for (int e : anchors) {
        add_eq(a, b, e);
        add_eq(b, a, e);
      }
    }
    // gaussian elimination: rows * (x, 1)^T = 0
    std::vector<mpq_class> sol(nv);
    std::vector<bool> have(nv, false);
    int rank = 0;
    for (int col = 0; col < nv && rank < (int)rows.size(); ++col) {
      int piv = -1;
      for (int r = rank; r < (int)rows.size(); ++r)
        if (rows[r][col] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int r = 0; r < (int)rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        mpq_class f = rows[r][col] / rows[rank][col];
        for (int c = col; c <= nv; ++c) rows[r][c] -= f * rows[rank][c];
      }
      ++rank;
    }
    for (auto& row : rows) {
      int lead = -1;
      for (int c = 0; c < nv; ++c)
        if (row[c] != 0) { lead = c; break; }
      if (lead < 0) {
        if (row[nv] != 0) throw Error("inconsistent Jacobi system");
        continue;
      }
      bool single = true;
      for (int c = lead + 1; c < nv; ++c)
        if (row[c] != 0) single = false;
      if (single) {
        sol[lead] = -row[nv] / row[lead];
        have[lead] = true;
      }
    }
    for (auto& [pr, vi] : var) {
      if (!have[vi]) throw Error("underdetermined Jacobi system");
      mpq_class v = sol[vi];
      if (v.get_den() != 1) throw Error("non-integral structure constant");
      long val = (long)v.get_num().get_si();
      long expect = chain_p(pr.first, pr.second) + 1;
      if (val != expect && val != -expect)
        throw Error("structure constant magnitude mismatch");
      nconst_[pr] = val;
    }
  }
}

long RootSystem::structure_constant(int alpha, int beta) const {
  if (root_index(vadd(roots_[alpha], roots_[beta])) < 0)
    throw Error("alpha + beta is not a root");
  std::function<long(int, int)> nval = [&](int x, int y) -> long {
    int sidx = root_index(vadd(roots_[x], roots_[y]));
    if (sidx < 0) return 0;
    bool px = is_positive(x), py = is_positive(y);
    if (px && py) {
      if (x < y) return nconst_.at({x, y});
      return -nconst_.at({y, x});
    }
    if (!px && !py) return -nval(neg_[x], neg_[y]);
    if (!px) return -nval(y, x);
    int z = neg_[sidx];
    if (is_positive(z)) return nval(z, x) * norm2_[z] / norm2_[y];
    return -nval(neg_[y], neg_[z]) * norm2_[z] / norm2_[x];
  };
  return nval(alpha, beta);
}

int RootSystem::structure_sign(int alpha, int beta) const {
  long v = structure_constant(alpha, beta);
  return v > 0 ? 1 : -1;
}

std::vector<std::vector<int>> RootSystem::component_partition(
    const std::vector<int>& simples) const {
  int k = (int)simples.size();
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (int i = 0; i < k; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = nc;
    std::queue<int> q;
    q.push(i);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int j = 0; j < k; ++j)
        if (comp[j] < 0 && dot(euclid_[simples[x]], euclid_[simples[j]]) != 0) {
          comp[j] = nc;
          q.push(j);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < k; ++i) out[comp[i]].push_back(i);
  return out;
}

std::vector<std::string> RootSystem::classify_components(
    const std::vector<int>& simples) const {
  auto parts = component_partition(simples);
  std::vector<std::string> labels;
  for (auto& part : parts) {
    int k = (int)part.size();
    // pairing products n_ij = <a_j, a_i~> <a_i, a_j~> for i != j
    auto prod = [&](int i, int j) {
      long pij = 2 * dot(euclid_[simples[part[i]]], euclid_[simples[part[j]]]);
      long pji = pij;
      pij /= norm2_[simples[part[i]]];
      pji /= norm2_[simples[part[j]]];
      return pij * pji;
    };
    std::string lab;
    if (k == 1) lab = "A1";
    else if (k == 2) {
      long p = prod(0, 1);
      lab = p == 1 ? "A2" : p == 2 ? "B2" : p == 3 ? "G2" : "?";
    } else {
      std::vector<long> degs(k, 0);
      std::multiset<long> edges;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          long p = prod(i, j);
          if (p > 0) { degs[i]++; degs[j]++; edges.insert(p); }
        }
      long maxdeg = *std::max_element(degs.begin(), degs.end());
      bool has2 = edges.count(2) > 0;
      if (k == 3) lab = has2 ? "B3" : "A3";
      else if (k == 4) {
        if (maxdeg == 3) lab = "D4";
        else if (!has2) lab = "A4";
        else {
          // F4 has the double bond in the middle, B4/C4 at the end
          // find the double-bond pair and check endpoint degrees
          int di = -1, dj = -1;
          for (int i = 0; i < k && di < 0; ++i)
            for (int j = i + 1; j < k; ++j)
              if (prod(i, j) == 2) { di = i; dj = j; break; }
          lab = (degs[di] == 2 && degs[dj] == 2) ? "F4" : "B4";
        }
      } else {
        lab = "?";
      }
    }
    if (lab == "?") throw Error("unrecognized component type");
    labels.push_back(lab);
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

}  // namespace galmck::rootsys
