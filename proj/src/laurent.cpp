#include "galmck/laurent.hpp"

#include <sstream>

namespace galmck::laurent {

void LaurentV::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0)
      it = c_.erase(it);
    else
      ++it;
  }
}

LaurentV LaurentV::operator+(const LaurentV& o) const {
  LaurentV r = *this;
  for (auto& [e, c] : o.c_) r.c_[e] += c;
  r.trim();
  return r;
}

LaurentV LaurentV::operator-() const {
  LaurentV r = *this;
  for (auto& [e, c] : r.c_) c = -c;
  return r;
}

LaurentV LaurentV::operator-(const LaurentV& o) const { return *this + (-o); }

LaurentV LaurentV::operator*(const LaurentV& o) const {
  LaurentV r;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

cyclo::Cyclotomic LaurentV::eval(const cyclo::Cyclotomic& v) const {
  cyclo::Cyclotomic acc;
  cyclo::Cyclotomic vinv;
  bool has_inv = false;
  for (auto& [e, c] : c_) {
    cyclo::Cyclotomic term{cyclo::Rational(c)};
    if (e > 0) term = term * v.pow(e);
    if (e < 0) {
      if (!has_inv) { vinv = v.inverse(); has_inv = true; }
      term = term * vinv.pow(-e);
    }
    acc += term;
  }
  return acc;
}

mpq_class LaurentV::eval_u(const mpq_class& q) const {
  mpq_class acc = 0;
  for (auto& [e, c] : c_) {
    if (e % 2) throw Error("eval_u: odd power of v present");
    long k = e / 2;
    mpq_class t = c;
    mpq_class qq = q;
    if (k < 0) { qq = 1 / q; k = -k; }
    for (long i = 0; i < k; ++i) t *= qq;
    acc += t;
  }
  return acc;
}

bool LaurentV::even_only() const {
  for (auto& [e, c] : c_) {
    (void)c;
    if (e % 2) return false;
  }
  return true;
}

std::string LaurentV::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    if (!first) os << " + ";
    os << c.get_str();
    if (e != 0) os << "*v^" << e;
    first = false;
  }
  return os.str();
}

}  // namespace galmck::laurent
