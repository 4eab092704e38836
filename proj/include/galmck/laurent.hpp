#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "galmck/cyclo.hpp"

namespace galmck::laurent {

// Laurent polynomials in v where u = v^2 (so sqrt(u) is representable);
// exact rational coefficients
class LaurentV {
 public:
  LaurentV() = default;
  explicit LaurentV(const mpq_class& c) {
    if (c != 0) c_[0] = c;
  }
  explicit LaurentV(long c) : LaurentV(mpq_class(c)) {}
  static LaurentV monomial(const mpq_class& c, long vpow) {
    LaurentV p;
    if (c != 0) p.c_[vpow] = c;
    return p;
  }
  static LaurentV u(long upow = 1) { return monomial(1, 2 * upow); }

  const std::map<long, mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool operator==(const LaurentV& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentV& o) const { return !(*this == o); }

  LaurentV operator+(const LaurentV& o) const;
  LaurentV operator-(const LaurentV& o) const;
  LaurentV operator-() const;
  LaurentV operator*(const LaurentV& o) const;
  LaurentV& operator+=(const LaurentV& o) { return *this = *this + o; }
  LaurentV& operator-=(const LaurentV& o) { return *this = *this - o; }
  LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }

  // substitute v -> value (exact); value must be invertible if negative
  // powers occur
  cyclo::Cyclotomic eval(const cyclo::Cyclotomic& v) const;
  // evaluate at u = q (all powers of v must be even), q rational
  mpq_class eval_u(const mpq_class& q) const;
  bool even_only() const;

  std::string str() const;

 private:
  std::map<long, mpq_class> c_;  // v-exponent -> coefficient
  void trim();
};

}  // namespace galmck::laurent
