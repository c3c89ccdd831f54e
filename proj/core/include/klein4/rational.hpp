#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace klein4 {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

// mpq_class(a,b) does not canonicalize on its own
inline Rat ratio(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline bool vec_is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Rat& s);
void vec_axpy(Vec& acc, const Rat& s, const Vec& a);  // acc += s*a
Rat vec_dot(const Vec& a, const Vec& b);

std::string rat_str(const Rat& x);

}  // namespace klein4
