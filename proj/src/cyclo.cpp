#include "galmck/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace galmck::cyclo {

using numth::gcd;
using numth::lcm;
using numth::mod;

namespace {

// polynomials over Z as coefficient vectors, lowest degree first
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// exact division of polynomials with integer coefficients (remainder 0)
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, mpz_class(0));
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    size_t shift = num.size() - den.size();
    mpz_class c = num.back() / den.back();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    ztrim(num);
    if (num.size() == 1 && num[0] == 0) break;
  }
  return q;
}

ZPoly cyclotomic_poly(long n) {
  // Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)} by iterated division
  ZPoly num{mpz_class(-1)};
  num.resize(n + 1, mpz_class(0));
  num[n] = 1;  // x^n - 1
  ZPoly res = num;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    ZPoly phi_d;  // recursive by memo below, but iterative divide works too
    // divide res by Phi_d for each proper divisor d
    // compute Phi_d recursively
    phi_d = cyclotomic_poly(d);
    res = zdiv_exact(res, phi_d);
  }
  return res;
}

std::map<long, LevelData> g_levels;
std::mutex g_levels_mu;

}  // namespace

const LevelData& level_data(long n) {
  std::lock_guard<std::mutex> lk(g_levels_mu);
  auto it = g_levels.find(n);
  if (it != g_levels.end()) return it->second;
  if (n <= 0) throw Error("level must be positive");
  LevelData ld;
  ld.n = n;
  ld.deg = numth::euler_phi(n);
  ld.phi_coeffs = cyclotomic_poly(n);
  // x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1}) since Phi is monic
  long deg = ld.deg;
  ld.power_rows.resize(n - deg);
  if (n > deg) {
    std::vector<mpz_class> cur(deg);
    for (long i = 0; i < deg; ++i) cur[i] = -ld.phi_coeffs[i];
    ld.power_rows[0] = cur;
    for (long k = 1; k < n - deg; ++k) {
      // multiply by x and reduce
      std::vector<mpz_class> nxt(deg, mpz_class(0));
      for (long i = 0; i < deg - 1; ++i) nxt[i + 1] = cur[i];
      mpz_class top = cur[deg - 1];
      if (top != 0)
        for (long i = 0; i < deg; ++i) nxt[i] += top * ld.power_rows[0][i];
      ld.power_rows[k] = nxt;
      cur = nxt;
    }
  }
  auto [pos, ok] = g_levels.emplace(n, std::move(ld));
  (void)ok;
  return pos->second;
}

void Cyclotomic::reduce_tail(std::vector<Rational>& raw) const {
  const LevelData& ld = level_data(level_);
  long deg = ld.deg;
  // fold exponents >= level first (x^n = 1), then rows for [deg, n)
  if ((long)raw.size() > level_) {
    for (long e = (long)raw.size() - 1; e >= level_; --e) {
      if (raw[e] != 0) raw[e % level_] += raw[e];
      raw[e] = 0;
    }
    raw.resize(level_);
  }
  for (long e = std::min<long>((long)raw.size(), level_) - 1; e >= deg; --e) {
    if (raw[e] == 0) continue;
    const auto& row = ld.power_rows[e - deg];
    for (long i = 0; i < deg; ++i)
      if (row[i] != 0) raw[i] += Rational(row[i]) * raw[e];
    raw[e] = 0;
  }
  raw.resize(deg);
  for (auto& x : raw) x.canonicalize();
}

Cyclotomic::Cyclotomic(long level, std::vector<Rational> coeffs) : level_(level) {
  if (level <= 0) throw Error("bad level");
  reduce_tail(coeffs);
  c_ = std::move(coeffs);
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n <= 0) throw Error("bad level");
  k = mod(k, n);
  std::vector<Rational> raw(k + 1, Rational(0));
  raw[k] = 1;
  return Cyclotomic(n, std::move(raw));
}

Cyclotomic Cyclotomic::lifted(long m) const {
  if (m == level_) return *this;
  if (m % level_ != 0) throw Error("lift target not a multiple of level");
  long f = m / level_;
  std::vector<Rational> raw((level_data(level_).deg - 1) * f + 1, Rational(0));
  for (long i = 0; i < (long)c_.size(); ++i) raw[i * f] = c_[i];
  return Cyclotomic(m, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error("value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = lcm(level_, o.level_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long m = lcm(level_, o.level_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<Rational> raw(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
  // extended Euclid in Q[x] against Phi_n
  using QPoly = std::vector<Rational>;
  auto deg_of = [](const QPoly& p) {
    long d = (long)p.size() - 1;
    while (d > 0 && p[d] == 0) --d;
    return p[d] == 0 && d == 0 ? -1 : d;
  };
  const LevelData& ld = level_data(level_);
  QPoly a(ld.phi_coeffs.size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = Rational(ld.phi_coeffs[i]);
  QPoly b = c_;
  QPoly s0{Rational(0)}, s1{Rational(1)};  // coeffs of b-side combination
  while (true) {
    long db = deg_of(b);
    if (db < 0) throw Error("inverse: zero remainder before unit");
    if (db == 0) break;
    long da = deg_of(a);
    if (da < db) { std::swap(a, b); std::swap(s0, s1); continue; }
    // a -= (lead a / lead b) x^{da-db} * b ; s0 -= q * s1
    Rational c = a[da] / b[db];
    long sh = da - db;
    for (long i = 0; i <= db; ++i) a[sh + i] -= c * b[i];
    if ((long)s0.size() < (long)s1.size() + sh) s0.resize(s1.size() + sh, Rational(0));
    for (size_t i = 0; i < s1.size(); ++i) s0[sh + i] -= c * s1[i];
  }
  // b is a nonzero constant: inverse = s1 / b[0]
  std::vector<Rational> res = s1;
  for (auto& x : res) x /= b[0];
  return Cyclotomic(level_, std::move(res));
}

Cyclotomic Cyclotomic::conj() const {
  if (level_ <= 2) return *this;
  return apply_unit(level_ - 1);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = lcm(level_, o.level_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::apply_unit(long u) const {
  u = mod(u, level_);
  if (gcd(u, level_) != 1) throw Error("apply_unit: not a unit");
  std::vector<Rational> raw(level_, Rational(0));
  for (long i = 0; i < (long)c_.size(); ++i)
    if (c_[i] != 0) raw[(i * u) % level_] += c_[i];
  return Cyclotomic(level_, std::move(raw));
}

bool Cyclotomic::as_root_of_unity(long& order, long& expo) const {
  for (long k = 0; k < level_; ++k) {
    if (*this == root_of_unity(level_, k)) {
      long g = gcd(k, level_);
      order = level_ / g;
      expo = (order == 1) ? 0 : (k / g) % order;
      return true;
    }
  }
  return false;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < (long)c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z" << level_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string Cyclotomic::serialized() const {
  std::ostringstream os;
  os << "(" << level_ << ",[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i].get_str();
  }
  os << "])";
  return os.str();
}

Cyclotomic Cyclotomic::deserialize(const std::string& s) {
  size_t p1 = s.find('(');
  size_t pc = s.find(',');
  size_t pb = s.find('[');
  size_t pe = s.find(']');
  if (p1 == std::string::npos || pc == std::string::npos || pb == std::string::npos ||
      pe == std::string::npos)
    throw Error("bad cyclotomic literal");
  long n = std::stol(s.substr(p1 + 1, pc - p1 - 1));
  std::vector<Rational> cs;
  std::string body = s.substr(pb + 1, pe - pb - 1);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ','))
    if (!tok.empty()) cs.emplace_back(Rational(tok));
  if ((long)cs.size() != numth::euler_phi(n)) throw Error("bad coefficient count");
  return Cyclotomic(n, std::move(cs));
}

GaloisElt::GaloisElt(long n, long u) : level(n), unit(mod(u, n)) {
  if (n <= 0 || gcd(unit, n) != 1) throw Error("GaloisElt: bad unit");
}

Cyclotomic GaloisElt::act(const Cyclotomic& x) const {
  if (level % x.level() == 0) return x.apply_unit(mod(unit, x.level()));
  if (x.level() % level == 0)
    throw Error("GaloisElt::act: value level exceeds automorphism level");
  throw Error("GaloisElt::act: incompatible levels");
}

Cyclotomic act(const GaloisElt& sigma, const Cyclotomic& x) { return sigma.act(x); }

HEllElt::HEllElt(long ell_, long r_, long b_, long level_)
    : base(level_, 1), ell(ell_), r(r_), b(b_) {
  if (!numth::is_prime(ell_)) throw Error("HEllElt: ell must be prime");
  if (r_ < 0) throw Error("HEllElt: r must be nonnegative");
  long np = 1, nq = level_;
  while (nq % ell_ == 0) { np *= ell_; nq /= ell_; }
  // level = np * nq with nq the ell'-part
  long uq = numth::pow_mod(ell_, r_, nq);
  if (gcd(mod(b_, np), np) != 1) throw Error("HEllElt: b not a unit on ell-part");
  long u = (np == 1) ? uq : (nq == 1 ? mod(b_, np) : numth::crt(b_, np, uq, nq));
  base = GaloisElt(level_, u);
}

HEllElt HEllElt::from_unit(long ell_, long u, long level_) {
  long np = 1, nq = level_;
  while (nq % ell_ == 0) { np *= ell_; nq /= ell_; }
  long uq = mod(u, nq);
  long o = (nq == 1) ? 1 : numth::mult_order(ell_, nq);
  for (long r = 0; r < o; ++r) {
    if (numth::pow_mod(ell_, r, nq) == uq) return HEllElt(ell_, r, mod(u, np), level_);
  }
  throw Error("unit is not in H_ell at this level");
}

Cyclotomic HEllElt::act_any(const Cyclotomic& x) const {
  long n = x.level();
  long np = 1, nq = n;
  while (nq % ell == 0) { np *= ell; nq /= ell; }
  long uq = numth::pow_mod(ell, r, nq);
  if (np != 1 && gcd(mod(b, np), np) != 1)
    throw Error("act_any: b not defined modulo the ell-part of the level");
  long u = (np == 1) ? uq : (nq == 1 ? mod(b, np) : numth::crt(b, np, uq, nq));
  return x.apply_unit(u);
}

long d_ell(long q, long ell) {
  if (!numth::is_prime(ell)) throw Error("d_ell: ell must be prime");
  if (q % ell == 0) throw Error("d_ell: ell divides q");
  if (ell == 2) return numth::mult_order(q, 4);
  return numth::mult_order(q, ell);
}

Cyclotomic sqrt_as_cyclotomic(long p) {
  if (!numth::is_prime(p)) throw Error("sqrt_as_cyclotomic: p must be prime");
  if (p == 2) {
    return Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  }
  // quadratic Gauss sum g = sum_t (t|p) zeta_p^t; g = sqrt(p) for p = 1 mod 4,
  // g = i sqrt(p) for p = 3 mod 4 (classical sign)
  Cyclotomic g;
  for (long t = 1; t < p; ++t) {
    if (numth::legendre(t, p) == 1)
      g += Cyclotomic::root_of_unity(p, t);
    else
      g -= Cyclotomic::root_of_unity(p, t);
  }
  if (p % 4 == 1) return g;
  // sqrt(p) = -zeta_4 * g
  return -(Cyclotomic::root_of_unity(4, 1) * g);
}

Cyclotomic sqrt_prime_power(long q) {
  auto [p, a] = numth::prime_power_decompose(q);
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), p, a / 2);
  Cyclotomic r{Rational(half)};
  if (a % 2) r = r * sqrt_as_cyclotomic(p);
  return r;
}

bool sqrt_fixed(long p, const HEllElt& sigma) {
  if (sigma.ell == p) throw Error("sqrt_fixed: requires p != ell");
  if (sigma.ell == 2) throw Error("sqrt_fixed: lemma requires odd ell");
  bool criterion = (sigma.r % 2 == 0) || numth::legendre(p, sigma.ell) == 1;
  return criterion;
}

std::vector<long> h_ell_units(long ell, long n) {
  long np = 1, nq = n;
  while (nq % ell == 0) { np *= ell; nq /= ell; }
  std::vector<long> out;
  for (long u = 0; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    long uq = mod(u, nq);
    bool good = false;
    long o = (nq == 1) ? 1 : numth::mult_order(ell, nq);
    for (long r = 0; r < o && !good; ++r)
      if (numth::pow_mod(ell, r, nq) == uq) good = true;
    if (good) out.push_back(u);
  }
  return out;
}

std::vector<HEllElt> h_ell_generators(long ell, long n) {
  long np = 1, nq = n;
  while (nq % ell == 0) { np *= ell; nq /= ell; }
  std::vector<HEllElt> gens;
  // generator acting as ell on the ell'-part, 1 on the ell-part
  if (nq > 1) gens.emplace_back(ell, 1, 1, n);
  // generators of the unit group modulo the ell-part
  if (np > 2) {
    if (ell == 2) {
      gens.emplace_back(ell, 0, np - 1, n);
      if (np >= 8) gens.emplace_back(ell, 0, 5, n);
    } else {
      // (Z/ell^k)^x cyclic: find a generator
      long phi = numth::euler_phi(np);
      for (long g = 2; g < np; ++g) {
        if (gcd(g, np) != 1) continue;
        if (numth::mult_order(g, np) == phi) {
          gens.emplace_back(ell, 0, g, n);
          break;
        }
      }
    }
  }
  if (gens.empty()) gens.emplace_back(ell, 0, 1, n);  // trivial group
  return gens;
}

bool is_rational(const Cyclotomic& x) { return x.is_rational(); }

}  // namespace galmck::cyclo
