#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tudim {

// Exact scalars. Int is arbitrary-precision; Rat is kept in canonical form
// (positive denominator, coprime) by every helper below and by gmp arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rat to_rat(const Int& v) { return Rat(v); }

inline RatVector to_rat(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

// Parses "p" or "p/q".
Rat parse_rat(const std::string& token);
Int parse_int(const std::string& token);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

bool lex_less(const RatVector& a, const RatVector& b);
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace tudim
