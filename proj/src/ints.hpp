#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrCode {
  Internal,
  NotSemisimple,
  RootExtractionFailure,
  UnsupportedComponent,
  UnsupportedField,
  RankDeficient,
  ImproperConductor,
  NotInvertible,
  NotUnitModConductor,
  NotUnit,
  NotNormal,
  NotFullIdeal,
  NotProper,
  NotAHomomorphism,
  RepresentationTooLarge,
  EnumerationTooLarge,
  LiftFailure,
  BadInput,
};

struct Error : std::runtime_error {
  ErrCode code;
  Error(ErrCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrCode c, const std::string& msg) { throw Error(c, msg); }

inline void check(bool cond, ErrCode c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

const char* err_name(ErrCode c);

// Deterministic RNG; every randomised routine is seeded explicitly.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed = 0) : g(seed) {}
  // uniform in [lo, hi] inclusive
  int64_t uniform(int64_t lo, int64_t hi) {
    std::uniform_int_distribution<int64_t> d(lo, hi);
    return d(g);
  }
  uint64_t bits() { return g(); }
};

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = gcd(a,b) = s*a + t*b
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// floored division remainder in [0, m)
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int fdiv(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) { return d != 0 && a % d == 0; }

inline Int invmod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    fail(ErrCode::NotInvertible, "invmod: not invertible");
  return r;
}

inline Int powmod(const Int& a, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_square(const Int& a, Int& root) {
  if (a < 0) return false;
  root = isqrt(a);
  return root * root == a;
}

inline long to_long(const Int& a) {
  if (!a.fits_slong_p()) fail(ErrCode::EnumerationTooLarge, "integer does not fit a machine word");
  return a.get_si();
}

// (a|p) for odd prime p; kronecker handles the general case
inline int kronecker(const Int& a, const Int& b) {
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

bool is_prime(const Int& n);

// Factor |n| into prime powers, smallest prime first.
std::vector<std::pair<Int, int>> factor(Int n);

std::vector<Int> prime_divisors(const Int& n);

Int valuation(Int n, const Int& p);

// squarefree kernel d and cofactor m with n = d*m^2 (n != 0)
void squarefree_decompose(const Int& n, Int& d, Int& m);

std::string to_str(const Int& a);
std::string to_str(const Rat& a);

}  // namespace sfc
