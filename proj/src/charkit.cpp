#include "galmck/charkit.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace galmck::charkit {

using numth::mod;
using numth::mul_mod;
using numth::pow_mod;

bool ClassFunction::operator==(const ClassFunction& o) const {
  if (G != o.G || values.size() != o.values.size()) return false;
  for (size_t i = 0; i < values.size(); ++i)
    if (!(values[i] == o.values[i])) return false;
  return true;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  ClassFunction r{G, values};
  for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * o.values[i];
  return r;
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  ClassFunction r{G, values};
  for (size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] + o.values[i];
  return r;
}

const Cyclotomic& SubChar::at(int gelem) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), gelem);
  if (it == elems.end() || *it != gelem) throw Error("SubChar: element outside subgroup");
  return values[it - elems.begin()];
}

bool SubChar::defined_at(int gelem) const {
  return std::binary_search(elems.begin(), elems.end(), gelem);
}

std::vector<std::vector<long>> linear_chars(const std::vector<long>& invariants) {
  long total = 1;
  for (long d : invariants) total *= d;
  std::vector<std::vector<long>> out;
  out.reserve(total);
  for (long t = 0; t < total; ++t) {
    std::vector<long> a(invariants.size());
    long tt = t;
    for (size_t i = 0; i < invariants.size(); ++i) {
      a[i] = tt % invariants[i];
      tt /= invariants[i];
    }
    out.push_back(a);
  }
  return out;
}

Cyclotomic eval_linear(const std::vector<long>& invariants,
                       const std::vector<long>& chr, const std::vector<long>& x) {
  long lev = 1;
  for (long d : invariants) lev = numth::lcm(lev, d);
  long num = 0;
  for (size_t i = 0; i < invariants.size(); ++i)
    num = mod(num + chr[i] * x[i] % invariants[i] * (lev / invariants[i]), lev);
  return Cyclotomic::root_of_unity(lev, num);
}

namespace {

// ---------- dense linear algebra over F_p (p < 2^31, products via int128) --

using FVec = std::vector<long>;
using FMat = std::vector<FVec>;

FVec matvec(const FMat& m, const FVec& v, long p) {
  FVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    __int128 acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc += (__int128)m[i][j] * v[j];
    r[i] = (long)(acc % p);
    if (r[i] < 0) r[i] += p;
  }
  return r;
}

// solve A x = b where columns of A are `basis`; returns coefficients
FVec solve_in_span(const std::vector<FVec>& basis, FVec b, long p) {
  int n = (int)b.size(), k = (int)basis.size();
  FMat aug(n, FVec(k + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = basis[j][i];
    aug[i][k] = b[i];
  }
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < k && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (aug[r][col] != 0) { pr = r; break; }
    if (pr < 0) continue;
    std::swap(aug[row], aug[pr]);
    long invp = numth::inv_mod(aug[row][col], p);
    for (int c = col; c <= k; ++c) aug[row][c] = mul_mod(aug[row][c], invp, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      long f = aug[r][col];
      for (int c = col; c <= k; ++c)
        aug[r][c] = mod(aug[r][c] - mul_mod(f, aug[row][c], p), p);
    }
    pivcol.push_back(col);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (aug[r][k] != 0) throw Error("solve_in_span: inconsistent");
  FVec x(k, 0);
  for (size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = aug[i][k];
  return x;
}

// characteristic polynomial of a small matrix over F_p (Hessenberg method)
FVec charpoly(FMat a, long p) {
  int n = (int)a.size();
  // reduce to Hessenberg form
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[col + 1]);
    for (int c = 0; c < n; ++c) std::swap(a[c][piv], a[c][col + 1]);
    long inv = numth::inv_mod(a[col + 1][col], p);
    for (int r = col + 2; r < n; ++r) {
      long f = mul_mod(a[r][col], inv, p);
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) a[r][c] = mod(a[r][c] - mul_mod(f, a[col + 1][c], p), p);
      for (int rr = 0; rr < n; ++rr) a[rr][col + 1] = mod(a[rr][col + 1] + mul_mod(f, a[rr][r], p), p);
    }
  }
  // charpoly of Hessenberg matrix by the standard recurrence
  std::vector<FVec> ps(n + 1);
  ps[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // p_m(x) = (x - a[m-1][m-1]) p_{m-1}(x) - sum_{i=1}^{m-1}
    //          a[m-1-i][m-1] * (prod of subdiagonals) p_{m-1-i}(x)
    FVec pm(m + 1, 0);
    for (int i = 0; i < m; ++i) {
      pm[i + 1] = mod(pm[i + 1] + ps[m - 1][i], p);
      pm[i] = mod(pm[i] - mul_mod(a[m - 1][m - 1], ps[m - 1][i], p), p);
    }
    long run = 1;
    for (int i = 1; i < m; ++i) {
      run = mul_mod(run, a[m - i][m - i - 1], p);
      if (run == 0) break;
      long coef = mul_mod(a[m - 1 - i][m - 1], run, p);
      if (coef == 0) continue;
      for (int j = 0; j < (int)ps[m - 1 - i].size(); ++j)
        pm[j] = mod(pm[j] - mul_mod(coef, ps[m - 1 - i][j], p), p);
    }
    ps[m] = pm;
  }
  return ps[n];
}

void poly_norm(FVec& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  if (f.empty()) f = {0};
}

bool poly_is_zero(const FVec& f) { return f.size() == 1 && f[0] == 0; }

FVec poly_mod(FVec a, FVec m, long p) {
  poly_norm(m);
  int dm = (int)m.size() - 1;
  if (dm == 0) {
    if (m[0] == 0) throw Error("poly_mod: division by zero polynomial");
    return {0};
  }
  while ((int)a.size() > dm) {
    long c = a.back();
    int sh = (int)a.size() - 1 - dm;
    if (c != 0) {
      long inv = numth::inv_mod(m[dm], p);
      long f = mul_mod(c, inv, p);
      for (int i = 0; i <= dm; ++i) a[sh + i] = mod(a[sh + i] - mul_mod(f, m[i], p), p);
    }
    a.pop_back();
  }
  poly_norm(a);
  return a;
}

FVec poly_mul_mod(const FVec& a, const FVec& b, const FVec& m, long p) {
  FVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod(r[i + j] + mul_mod(a[i], b[j], p), p);
  }
  return poly_mod(r, m, p);
}

FVec poly_gcd(FVec a, FVec b, long p) {
  poly_norm(a);
  poly_norm(b);
  while (!poly_is_zero(b)) {
    a = poly_mod(a, b, p);
    std::swap(a, b);
    poly_norm(b);
  }
  poly_norm(a);
  if (!poly_is_zero(a) && a.back() != 1) {
    long inv = numth::inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

FVec poly_powmod_x(long e, const FVec& m, long p) {
  // x^e mod m
  FVec r{1}, x{0, 1};
  x = poly_mod(x, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, x, m, p);
    x = poly_mul_mod(x, x, m, p);
    e >>= 1;
  }
  return r;
}

FVec poly_powmod(FVec base, long e, const FVec& m, long p) {
  FVec r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

// all roots in F_p of a polynomial whose eigenvalue roots lie in F_p
void poly_roots(const FVec& f, long p, std::vector<long>& out, uint64_t& seed) {
  FVec g = f;
  poly_norm(g);
  if (g.size() <= 1) return;
  // distinct-root part: gcd(g, x^p - x)
  FVec xp = poly_powmod_x(p, g, p);  // x^p mod g
  // t = x^p - x mod g
  FVec t = xp;
  if (t.size() < 2) t.resize(2, 0);
  t[1] = mod(t[1] - 1, p);
  t = poly_mod(t, g, p);
  FVec sq = poly_gcd(g, t, p);
  std::function<void(FVec)> split = [&](FVec h) {
    poly_norm(h);
    if (h.size() <= 1) return;
    if (h.size() == 2) {
      out.push_back(mod(-mul_mod(h[0], numth::inv_mod(h[1], p), p), p));
      return;
    }
    // roots 0 split off directly
    if (h[0] == 0) {
      out.push_back(0);
      h.erase(h.begin());
      split(h);
      return;
    }
    while (true) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      long a = (long)(seed % (uint64_t)p);
      FVec base{a, 1};
      FVec u = poly_powmod(base, (p - 1) / 2, h, p);
      poly_norm(u);
      u[0] = mod(u[0] - 1, p);
      FVec d = poly_gcd(h, u, p);
      if (d.size() > 1 && d.size() < h.size()) {
        split(d);
        // divide h by d
        FVec rem = h;
        int dd = (int)d.size() - 1;
        FVec q(h.size() - d.size() + 1, 0);
        for (int i = (int)rem.size() - 1 - dd; i >= 0; --i) {
          long c = mul_mod(rem[i + dd], numth::inv_mod(d[dd], p), p);
          q[i] = c;
          for (int j = 0; j <= dd; ++j)
            rem[i + j] = mod(rem[i + j] - mul_mod(c, d[j], p), p);
        }
        split(q);
        return;
      }
    }
  };
  split(sq);
}

}  // namespace

CharTable dixon_table(const ExplicitGroup& G) {
  long n = G.order();
  int k = G.num_classes();
  if (n > 20000 || k > 60) throw Error("dixon_table: group outside supported bounds");
  long e = G.exponent();
  // prime p = 1 mod e with p > 2n
  long p = 0;
  for (long c = (2 * n) / e + 1;; ++c) {
    long cand = c * e + 1;
    if (cand > 2 * n && numth::is_prime(cand)) { p = cand; break; }
  }
  // class map and representatives
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = G.class_of(i);
  // class "matrices": a[i][k][j], M_i[k][j] = #{(x,y) in C_i x C_k : xy = rep_j}
  std::vector<FMat> M(k, FMat(k, FVec(k, 0)));
  for (int j = 0; j < k; ++j) {
    int gj = G.class_rep(j);
    for (int x = 0; x < n; ++x) {
      int i = cls[x];
      int y = G.mult(G.inv(x), gj);
      M[i][cls[y]][j] += 1;
    }
  }
  // split the commuting family's common eigenvectors
  std::vector<std::vector<FVec>> spaces;
  {
    std::vector<FVec> full;
    for (int i = 0; i < k; ++i) {
      FVec v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  uint64_t seed = 88172645463325252ull;
  for (int i = 0; i < k; ++i) {
    bool alldone = true;
    for (auto& s : spaces) alldone &= s.size() == 1;
    if (alldone) break;
    std::vector<std::vector<FVec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) { next.push_back(s); continue; }
      int d = (int)s.size();
      // restricted matrix R with M_i * s_j = sum R[t][j] s_t
      FMat R(d, FVec(d));
      for (int j = 0; j < d; ++j) {
        FVec img = matvec(M[i], s[j], p);
        FVec coef = solve_in_span(s, img, p);
        for (int t = 0; t < d; ++t) R[t][j] = coef[t];
      }
      FVec cp = charpoly(R, p);
      std::vector<long> roots;
      poly_roots(cp, p, roots, seed);
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      if (roots.size() <= 1) { next.push_back(s); continue; }
      for (long lam : roots) {
        // kernel of (R - lam I)
        FMat A(d, FVec(d));
        for (int r = 0; r < d; ++r)
          for (int c = 0; c < d; ++c) A[r][c] = mod(R[r][c] - (r == c ? lam : 0), p);
        // row reduce to find kernel basis
        std::vector<int> piv(d, -1);
        int row = 0;
        for (int col = 0; col < d && row < d; ++col) {
          int pr = -1;
          for (int r = row; r < d; ++r)
            if (A[r][col] != 0) { pr = r; break; }
          if (pr < 0) continue;
          std::swap(A[row], A[pr]);
          long inv = numth::inv_mod(A[row][col], p);
          for (int c = col; c < d; ++c) A[row][c] = mul_mod(A[row][c], inv, p);
          for (int r = 0; r < d; ++r) {
            if (r == row || A[r][col] == 0) continue;
            long f = A[r][col];
            for (int c = col; c < d; ++c)
              A[r][c] = mod(A[r][c] - mul_mod(f, A[row][c], p), p);
          }
          piv[col] = row;
          ++row;
        }
        std::vector<FVec> kern;
        for (int col = 0; col < d; ++col) {
          if (piv[col] >= 0) continue;
          FVec kv(d, 0);
          kv[col] = 1;
          for (int c2 = 0; c2 < d; ++c2)
            if (piv[c2] >= 0) kv[c2] = mod(-A[piv[c2]][col], p);
          kern.push_back(kv);
        }
        if (kern.empty()) continue;
        std::vector<FVec> sub;
        for (auto& kv : kern) {
          FVec v(k, 0);
          for (int t = 0; t < d; ++t)
            for (int c = 0; c < k; ++c) v[c] = mod(v[c] + mul_mod(kv[t], s[t][c], p), p);
          sub.push_back(v);
        }
        next.push_back(sub);
      }
    }
    spaces = next;
  }
  for (auto& s : spaces)
    if (s.size() != 1) throw Error("dixon: eigenspace splitting incomplete");
  if ((int)spaces.size() != k) throw Error("dixon: wrong number of characters");

  // central characters: omega[c] normalized with omega[identity class] = 1
  int idc = G.class_of(0);
  long z = 0;  // primitive e-th root mod p
  {
    // find a generator of F_p^* and take power (p-1)/e
    for (long g = 2; g < p; ++g) {
      bool ok = true;
      for (auto& [q, ee] : numth::factorize(p - 1)) {
        (void)ee;
        if (pow_mod(g, (p - 1) / q, p) == 1) { ok = false; break; }
      }
      if (ok) { z = pow_mod(g, (p - 1) / e, p); break; }
    }
  }
  std::vector<ClassFunction> irrs;
  for (auto& s : spaces) {
    FVec om = s[0];
    long sc = numth::inv_mod(om[idc], p);
    for (auto& x : om) x = mul_mod(x, sc, p);
    // degree
    long ssum = 0;
    for (int c = 0; c < k; ++c) {
      long term = mul_mod(om[c], om[G.inverse_class(c)], p);
      term = mul_mod(term, numth::inv_mod(mod(G.class_size(c), p), p), p);
      ssum = mod(ssum + term, p);
    }
    long d2 = mul_mod(mod(n, p), numth::inv_mod(ssum, p), p);
    long deg = -1;
    for (long d = 1; d * d <= n; ++d)
      if (d * d == d2) { deg = d; break; }
    if (deg < 0) throw Error("dixon: degree not recovered");
    // values mod p
    FVec chi(k);
    for (int c = 0; c < k; ++c) {
      long v = mul_mod(mod(deg, p), om[c], p);
      chi[c] = mul_mod(v, numth::inv_mod(mod(G.class_size(c), p), p), p);
    }
    // exact lift per class via root-of-unity multiplicities
    ClassFunction f;
    f.G = &G;
    f.values.resize(k);
    for (int c = 0; c < k; ++c) {
      long o = G.element_order(G.class_rep(c));
      long th = pow_mod(z, e / o, p);
      Cyclotomic val;
      long oinv = numth::inv_mod(mod(o, p), p);
      for (long kk = 0; kk < o; ++kk) {
        long mkk = 0;
        for (long j = 0; j < o; ++j) {
          long cj = chi[G.power_class(c, j)];
          mkk = mod(mkk + mul_mod(cj, pow_mod(th, mod(-j * kk, o), p), p), p);
        }
        mkk = mul_mod(mkk, oinv, p);
        if (mkk > deg) throw Error("dixon: multiplicity lift out of range");
        if (mkk != 0) val += Cyclotomic(Rational(mkk)) * Cyclotomic::root_of_unity(o, kk);
      }
      f.values[c] = val;
    }
    irrs.push_back(std::move(f));
  }
  // verify: sum of squares, row orthogonality
  {
    Rational total(0);
    for (auto& f : irrs) total += f.degree().rational_value() * f.degree().rational_value();
    if (total != Rational(n)) throw Error("dixon: degree check failed");
    for (size_t a = 0; a < irrs.size(); ++a)
      for (size_t b = a; b < irrs.size(); ++b) {
        Rational ip = inner_product(irrs[a], irrs[b]);
        if (ip != Rational(a == b ? 1 : 0)) throw Error("dixon: orthogonality failed");
      }
  }
  std::sort(irrs.begin(), irrs.end(), [](const ClassFunction& x, const ClassFunction& y) {
    Rational dx = x.degree().rational_value(), dy = y.degree().rational_value();
    if (dx != dy) return dx < dy;
    for (size_t c = 0; c < x.values.size(); ++c) {
      if (x.values[c] == y.values[c]) continue;
      return x.values[c].serialized() < y.values[c].serialized();
    }
    return false;
  });
  return CharTable{&G, std::move(irrs)};
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  const ExplicitGroup& G = *a.G;
  Cyclotomic acc;
  for (int c = 0; c < G.num_classes(); ++c) {
    acc += Cyclotomic(Rational(G.class_size(c))) * a.values[c] *
           b.values[G.inverse_class(c)];
  }
  if (!acc.is_rational()) throw Error("inner product not rational");
  return acc.rational_value() / Rational(G.order());
}

ClassFunction induce(const ExplicitGroup& G, const SubChar& psi) {
  ClassFunction f;
  f.G = &G;
  int k = G.num_classes();
  f.values.resize(k);
  long h = (long)psi.elems.size();
  for (int c = 0; c < k; ++c) {
    int g = G.class_rep(c);
    Cyclotomic acc;
    for (int x = 0; x < G.order(); ++x) {
      int y = G.mult(G.mult(x, g), G.inv(x));
      if (psi.defined_at(y)) acc += psi.at(y);
    }
    // acc / |H|
    f.values[c] = acc * Cyclotomic(Rational(1, h));
  }
  return f;
}

SubChar restrict_to(const ClassFunction& chi, const std::vector<int>& elems) {
  SubChar s;
  s.elems = elems;
  for (int e : elems) s.values.push_back(chi.at_element(e));
  return s;
}

ClassFunction det_character(const ClassFunction& chi) {
  const ExplicitGroup& G = *chi.G;
  ClassFunction f;
  f.G = &G;
  f.values.resize(G.num_classes());
  for (int c = 0; c < G.num_classes(); ++c) {
    long o = G.element_order(G.class_rep(c));
    // multiplicity of zeta_o^k among eigenvalues: m_k = (1/o) sum_j
    // chi(g^j) zeta_o^{-jk}
    long detexp = 0;
    for (long kk = 0; kk < o; ++kk) {
      Cyclotomic mk;
      for (long j = 0; j < o; ++j)
        mk += chi.values[G.power_class(c, j)] *
              Cyclotomic::root_of_unity(o, mod(-j * kk, o));
      mk = mk * Cyclotomic(Rational(1, o));
      if (!mk.is_rational()) throw Error("det: non-integral multiplicity");
      Rational m = mk.rational_value();
      if (m.get_den() != 1 || m < 0) throw Error("det: bad multiplicity");
      detexp = mod(detexp + kk * m.get_num().get_si(), o);
    }
    f.values[c] = Cyclotomic::root_of_unity(o, detexp);
  }
  return f;
}

std::optional<ClassFunction> det_canonical_extension(
    const ExplicitGroup& K, const std::vector<int>& relems, const SubChar& theta,
    const std::vector<int>& complement_gens) {
  const CharTable& tab = dixon_table(K);
  // extensions of theta
  std::vector<ClassFunction> exts;
  for (auto& chi : tab.irreducibles) {
    bool match = true;
    for (size_t i = 0; i < relems.size() && match; ++i)
      match = chi.at_element(relems[i]) == theta.values[i];
    if (match) exts.push_back(chi);
  }
  if (exts.empty()) return std::nullopt;
  // determinant of theta as a linear character value map on R
  // (compute det of each extension and of theta via power maps)
  // Xi0(det theta): extension of det theta that is 1 on the complement gens
  for (auto& chi : exts) {
    ClassFunction d = det_character(chi);
    bool good = true;
    for (int c : complement_gens)
      if (!(d.at_element(c) == Cyclotomic(1))) good = false;
    if (good) return chi;
  }
  return std::nullopt;
}

ClassFunction act_classfunction(const cyclo::GaloisElt& sigma, const ClassFunction& chi) {
  ClassFunction f{chi.G, chi.values};
  for (auto& v : f.values) v = sigma.act(v);
  return f;
}

bool rationality(const ClassFunction& chi) {
  for (auto& v : chi.values)
    if (!v.is_rational()) return false;
  return true;
}

std::string serialize_table(const CharTable& t) {
  std::ostringstream os;
  os << "group order " << t.G->order() << " classes " << t.G->num_classes() << "\n";
  for (int c = 0; c < t.G->num_classes(); ++c)
    os << "class " << c << " size " << t.G->class_size(c) << " order "
       << t.G->element_order(t.G->class_rep(c)) << "\n";
  for (auto& f : t.irreducibles) {
    for (size_t c = 0; c < f.values.size(); ++c) {
      if (c) os << " ";
      os << f.values[c].serialized();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace galmck::charkit
