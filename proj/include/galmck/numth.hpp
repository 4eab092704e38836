#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace galmck {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace numth {

inline long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { long t = a % b; a = b; b = t; }
  return a;
}

inline long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

// ax + by = gcd(a, b)
inline long exgcd(long a, long b, long& x, long& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  long x1, y1;
  long g = exgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long inv_mod(long a, long m) {
  long x, y;
  long g = exgcd(mod(a, m), m, x, y);
  if (g != 1) throw Error("inv_mod: not invertible");
  return mod(x, m);
}

inline long mul_mod(long a, long b, long m) {
  return (long)((__int128)a * b % m);
}

inline long pow_mod(long a, long e, long m) {
  long r = 1 % m;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::map<long, int> factorize(long n) {
  std::map<long, int> f;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) { f[d]++; n /= d; }
  if (n > 1) f[n]++;
  return f;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto& [p, e] : factorize(n)) { (void)e; r -= r / p; }
  return r;
}

// multiplicative order of a modulo m, gcd(a, m) = 1
inline long mult_order(long a, long m) {
  if (m == 1) return 1;
  a = mod(a, m);
  if (gcd(a, m) != 1) throw Error("mult_order: not a unit");
  long o = 1, x = a;
  while (x != 1) { x = mul_mod(x, a, m); ++o; }
  return o;
}

// x with x = a mod m, x = b mod n for coprime m, n
inline long crt(long a, long m, long b, long n) {
  long x, y;
  long g = exgcd(m, n, x, y);
  if (g != 1) throw Error("crt: moduli not coprime");
  long M = m * n;
  long r = mod(a * n % M * mod(y, M) % M + b * m % M * mod(x, M) % M, M);
  return r;
}

// q = p^a for prime p; returns {p, a} or throws
inline std::pair<long, int> prime_power_decompose(long q) {
  if (q < 2) throw Error("not a prime power");
  auto f = factorize(q);
  if (f.size() != 1) throw Error("not a prime power");
  return {f.begin()->first, f.begin()->second};
}

// Legendre symbol (a | p) for odd prime p
inline int legendre(long a, long p) {
  a = mod(a, p);
  if (a == 0) return 0;
  long r = pow_mod(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

}  // namespace numth
}  // namespace galmck
