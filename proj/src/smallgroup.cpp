#include "galmck/smallgroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace galmck::smallgroup {

ExplicitGroup::ExplicitGroup(GroupOps ops, const std::vector<Elem>& generators,
                             size_t bound)
    : ops_(std::move(ops)) {
  elems_.push_back(ops_.id);
  index_[ops_.id] = 0;
  std::queue<int> work;
  work.push(0);
  std::vector<Elem> gens = generators;
  for (auto& g : gens) {
    if (!index_.count(g)) {
      index_[g] = (int)elems_.size();
      elems_.push_back(g);
      work.push(index_[g]);
    }
    gen_idx_.push_back(index_[g]);
  }
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (auto& g : gens) {
      Elem y = ops_.mult(elems_[x], g);
      if (!index_.count(y)) {
        if (elems_.size() >= bound) throw Error("group closure exceeds bound");
        index_[y] = (int)elems_.size();
        elems_.push_back(y);
        work.push(index_[y]);
      }
    }
  }
}

int ExplicitGroup::index_of(const Elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error("element not in group");
  return it->second;
}

int ExplicitGroup::mult(int a, int b) const {
  return index_of(ops_.mult(elems_[a], elems_[b]));
}

int ExplicitGroup::inv(int a) const { return index_of(ops_.inv(elems_[a])); }

long ExplicitGroup::element_order(int i) const {
  long o = 1;
  int x = i;
  while (x != 0) { x = mult(x, i); ++o; }
  return o;
}

long ExplicitGroup::exponent() const {
  long e = 1;
  for (int c = 0; c < num_classes(); ++c) e = numth::lcm(e, element_order(class_rep_[c]));
  return e;
}

void ExplicitGroup::ensure_classes() const {
  if (!class_rep_.empty()) return;
  int n = order();
  std::vector<int> comp(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(i);
    std::queue<int> q;
    q.push(i);
    comp[i] = c;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int g : gen_idx_) {
        int y = mult(mult(g, x), inv(g));
        if (comp[y] < 0) { comp[y] = c; q.push(y); }
      }
    }
  }
  // order classes by (size, least index)
  std::vector<long> sizes(reps.size(), 0);
  for (int i = 0; i < n; ++i) sizes[comp[i]]++;
  std::vector<int> ord(reps.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<int> rank(reps.size());
  for (size_t k = 0; k < ord.size(); ++k) rank[ord[k]] = (int)k;
  class_of_.resize(n);
  class_rep_.resize(reps.size());
  class_size_.resize(reps.size());
  for (int i = 0; i < n; ++i) class_of_[i] = rank[comp[i]];
  for (size_t c = 0; c < reps.size(); ++c) {
    class_rep_[rank[c]] = reps[c];
    class_size_[rank[c]] = sizes[c];
  }
}

int ExplicitGroup::inverse_class(int c) const {
  ensure_classes();
  return class_of_[inv(class_rep_[c])];
}

int ExplicitGroup::power_class(int c, long j) const {
  ensure_classes();
  long o = element_order(class_rep_[c]);
  j = numth::mod(j, o);
  auto key = std::make_pair(c, j);
  auto it = power_cache_.find(key);
  if (it != power_cache_.end()) return it->second;
  int x = 0;
  for (long t = 0; t < j; ++t) x = mult(x, class_rep_[c]);
  int r = class_of_[x];
  power_cache_[key] = r;
  return r;
}

std::vector<int> ExplicitGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> seen{0};
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int g : gens) {
      int y = mult(x, g);
      if (!seen.count(y)) { seen.insert(y); work.push(y); }
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<int> ExplicitGroup::small_generating_set(const std::vector<int>& sub) const {
  std::vector<int> gens;
  std::vector<int> closed{0};
  while (closed.size() < sub.size()) {
    int next = -1;
    for (int x : sub)
      if (!std::binary_search(closed.begin(), closed.end(), x)) { next = x; break; }
    if (next < 0) break;
    gens.push_back(next);
    closed = subgroup_closure(gens);
  }
  return gens;
}

std::vector<int> ExplicitGroup::derived_subgroup(const std::vector<int>& sub) const {
  // normal closure of the commutators of a small generating set: grow the
  // generating set of D until it is closed under conjugation by sub-gens
  auto gens = small_generating_set(sub);
  std::vector<int> ginv;
  for (int g : gens) ginv.push_back(inv(g));
  std::vector<int> cgens;
  for (int a : gens)
    for (int b : gens) {
      int c = mult(mult(a, b), inv(mult(b, a)));
      if (c != 0) cgens.push_back(c);
    }
  std::vector<int> D = subgroup_closure(cgens);
  while (true) {
    bool grew = false;
    for (int d : D) {
      for (size_t i = 0; i < gens.size(); ++i) {
        int c = mult(mult(gens[i], d), ginv[i]);
        if (!std::binary_search(D.begin(), D.end(), c)) {
          cgens.push_back(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) break;
    D = subgroup_closure(cgens);
  }
  return D;
}

bool ExplicitGroup::is_abelian_subgroup(const std::vector<int>& sub) const {
  for (int a : sub)
    for (int b : sub)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

namespace {

// cyclic decomposition of an abelian group given by a multiplication table;
// returns (element, order) pairs generating a direct product
std::vector<std::pair<int, long>> decompose_table(
    const std::vector<std::vector<int>>& tab) {
  int n = (int)tab.size();
  if (n == 1) return {};
  auto ord = [&](int x) {
    long o = 1;
    int y = x;
    while (y != 0) { y = tab[y][x]; ++o; }
    return o;
  };
  auto power = [&](int x, long e) {
    int y = 0;
    for (long t = 0; t < e; ++t) y = tab[y][x];
    return y;
  };
  int best = 1;
  long m = ord(1);
  for (int x = 2; x < n; ++x) {
    long o = ord(x);
    if (o > m) { m = o; best = x; }
  }
  // quotient by <best>
  std::vector<int> cyc;
  {
    int y = 0;
    do { cyc.push_back(y); y = tab[y][best]; } while (y != 0);
  }
  std::sort(cyc.begin(), cyc.end());
  std::vector<int> leader(n, -1);
  std::vector<int> leaders;
  for (int x = 0; x < n; ++x) {
    if (leader[x] >= 0) continue;
    int least = x;
    std::vector<int> coset;
    for (int s : cyc) coset.push_back(tab[x][s]);
    for (int y : coset) least = std::min(least, y);
    for (int y : coset) leader[y] = least;
  }
  std::map<int, int> qidx;
  for (int x = 0; x < n; ++x)
    if (leader[x] == x) { qidx[x] = (int)qidx.size(); }
  std::vector<std::vector<int>> qtab(qidx.size(), std::vector<int>(qidx.size()));
  std::vector<int> qelem(qidx.size());
  for (auto& [e, i] : qidx) qelem[i] = e;
  for (auto& [e1, i1] : qidx)
    for (auto& [e2, i2] : qidx) qtab[i1][i2] = qidx.at(leader[tab[e1][e2]]);
  auto rec = decompose_table(qtab);
  std::vector<std::pair<int, long>> out{{best, m}};
  for (auto& [zq, mo] : rec) {
    int z = qelem[zq];  // lift: coset leader as a group element
    // adjust so the lift has the right order: z^mo = best^t with mo | t
    int zp = power(z, mo);
    long t = 0;
    int y = 0;
    while (y != zp) { y = tab[y][best]; ++t; }
    if (t % mo) throw Error("abelian decomposition: adjustment failed");
    long shift = numth::mod(-(t / mo), m);
    int zadj = tab[z][power(best, shift)];
    out.push_back({zadj, mo});
  }
  return out;
}

}  // namespace

std::vector<std::pair<int, long>> ExplicitGroup::abelian_decomposition(
    const std::vector<int>& sub) const {
  if (!is_abelian_subgroup(sub)) throw Error("abelian_decomposition: not abelian");
  std::map<int, int> pos;
  for (size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = (int)i;
  std::vector<std::vector<int>> tab(sub.size(), std::vector<int>(sub.size()));
  for (size_t i = 0; i < sub.size(); ++i)
    for (size_t j = 0; j < sub.size(); ++j) tab[i][j] = pos.at(mult(sub[i], sub[j]));
  // sub[0] must be the identity for the table convention
  if (sub[0] != 0) throw Error("subgroup list must start with the identity");
  auto dec = decompose_table(tab);
  std::vector<std::pair<int, long>> out;
  for (auto& [i, o] : dec) out.push_back({sub[i], o});
  return out;
}

std::vector<std::vector<cyclo::Cyclotomic>> ExplicitGroup::linear_characters(
    const std::vector<int>& sub) const {
  if (sub.empty() || sub[0] != 0)
    throw Error("subgroup list must be sorted and contain the identity");
  auto D = derived_subgroup(sub);
  // quotient Q = sub / D as a small explicit table over coset leaders
  std::map<int, int> leader;  // element -> least element of its D-coset
  for (int x : sub) {
    if (leader.count(x)) continue;
    int least = x;
    std::vector<int> coset;
    for (int d : D) coset.push_back(mult(x, d));
    for (int y : coset) least = std::min(least, y);
    for (int y : coset) leader[y] = least;
  }
  std::vector<int> leaders;
  for (int x : sub)
    if (leader.at(x) == x) leaders.push_back(x);
  std::map<int, int> qidx;
  for (size_t i = 0; i < leaders.size(); ++i) qidx[leaders[i]] = (int)i;
  int qn = (int)leaders.size();
  std::vector<std::vector<int>> qtab(qn, std::vector<int>(qn));
  for (int i = 0; i < qn; ++i)
    for (int j = 0; j < qn; ++j)
      qtab[i][j] = qidx.at(leader.at(mult(leaders[i], leaders[j])));
  auto decomp = decompose_table(qtab);
  // exponent tuples: enumerate the direct product and check bijectivity
  long total = 1;
  for (auto& [g, o] : decomp) { (void)g; total *= o; }
  if (total != qn) throw Error("abelian decomposition size mismatch");
  std::vector<std::vector<long>> expo(qn);
  std::vector<int> hit(qn, 0);
  for (long t = 0; t < total; ++t) {
    std::vector<long> a(decomp.size());
    long tt = t;
    for (size_t i = 0; i < decomp.size(); ++i) {
      a[i] = tt % decomp[i].second;
      tt /= decomp[i].second;
    }
    int x = 0;
    for (size_t i = 0; i < decomp.size(); ++i)
      for (long e = 0; e < a[i]; ++e) x = qtab[x][decomp[i].first];
    if (hit[x]) throw Error("abelian decomposition is not direct");
    hit[x] = 1;
    expo[x] = a;
  }
  // all characters as value vectors on `sub`
  std::vector<std::vector<cyclo::Cyclotomic>> out;
  for (long t = 0; t < total; ++t) {
    std::vector<long> a(decomp.size());
    long tt = t;
    for (size_t i = 0; i < decomp.size(); ++i) {
      a[i] = tt % decomp[i].second;
      tt /= decomp[i].second;
    }
    std::vector<cyclo::Cyclotomic> vals(sub.size());
    for (size_t k = 0; k < sub.size(); ++k) {
      int q = qidx.at(leader.at(sub[k]));
      long lev = 1, num = 0;
      for (size_t i = 0; i < decomp.size(); ++i) {
        long o = decomp[i].second;
        long g = numth::gcd(lev, o);
        long nl = lev / g * o;
        num = num * (nl / lev) + a[i] * expo[q][i] % o * (nl / o);
        lev = nl;
        num = numth::mod(num, lev);
      }
      vals[k] = cyclo::Cyclotomic::root_of_unity(lev, num);
    }
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace galmck::smallgroup
