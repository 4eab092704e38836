#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "galmck/numth.hpp"

namespace galmck::cyclo {

using Rational = mpq_class;

// Reduction data for Q(zeta_n) = Q[x]/Phi_n(x): coefficients of Phi_n and
// the expansion of x^k, phi(n) <= k < n, in the power basis 1..x^{phi(n)-1}.
struct LevelData {
  long n;
  long deg;  // phi(n)
  std::vector<mpz_class> phi_coeffs;
  std::vector<std::vector<mpz_class>> power_rows;  // for exponents deg..n-1
};

const LevelData& level_data(long n);

// Element of Q(zeta_n), stored as a polynomial in zeta_n reduced mod Phi_n.
class Cyclotomic {
 public:
  Cyclotomic() : level_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : level_(1), c_(1, r) {}
  explicit Cyclotomic(long r) : level_(1), c_(1, Rational(r)) {}
  Cyclotomic(long level, std::vector<Rational> coeffs);

  static Cyclotomic root_of_unity(long n, long k);
  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(1); }

  long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclotomic lifted(long m) const;  // m must be a multiple of level()

  bool is_zero() const;
  bool is_rational() const;
  // value as a rational; throws if not rational
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic inverse() const;
  Cyclotomic conj() const;  // complex conjugation
  Cyclotomic pow(long e) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // galois action zeta_n -> zeta_n^u (gcd(u, level) = 1)
  Cyclotomic apply_unit(long u) const;

  // If this is a root of unity, return (order, exponent); else nullopt-like
  // flag via the bool.
  bool as_root_of_unity(long& order, long& expo) const;

  std::string str() const;          // human-readable
  std::string serialized() const;   // "(n,[c0,c1,...])" exact format
  static Cyclotomic deserialize(const std::string& s);

 private:
  long level_;
  std::vector<Rational> c_;  // size phi(level_)
  void reduce_tail(std::vector<Rational>& raw) const;
};

// Automorphism of Q(zeta_n): zeta_n -> zeta_n^unit.
struct GaloisElt {
  long level;
  long unit;
  GaloisElt(long n, long u);
  Cyclotomic act(const Cyclotomic& x) const;
};

// Element of the Galois subgroup H_ell: acts as zeta -> zeta^{ell^r} on
// ell'-roots of unity; b is the unit on the ell-part of the level.
struct HEllElt {
  GaloisElt base;
  long ell;
  long r;
  long b;
  HEllElt(long ell, long r, long b, long level);
  // solve for r from a raw unit; throws if u is not in H_ell at this level
  static HEllElt from_unit(long ell, long u, long level);
  Cyclotomic act(const Cyclotomic& x) const { return base.act(x); }
  // canonical action on a value of any level coprime-compatible with (r, b)
  Cyclotomic act_any(const Cyclotomic& x) const;
};

// order of q mod ell (mod 4 when ell = 2)
long d_ell(long q, long ell);

Cyclotomic act(const GaloisElt& sigma, const Cyclotomic& x);

// exact square root of a prime, sign fixed by the classical Gauss sum
Cyclotomic sqrt_as_cyclotomic(long p);

// sqrt of a prime power q = p^a
Cyclotomic sqrt_prime_power(long q);

// Lemma criterion: sqrt(p)^sigma = sqrt(p) iff r even or p square mod ell
bool sqrt_fixed(long p, const HEllElt& sigma);

// generators of the image of H_ell in (Z/n)^x
std::vector<HEllElt> h_ell_generators(long ell, long n);

// all units of (Z/n)^x that lie in H_ell (enumeration oracle)
std::vector<long> h_ell_units(long ell, long n);

bool is_rational(const Cyclotomic& x);

}  // namespace galmck::cyclo
