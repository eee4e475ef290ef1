#include "ints.hpp"

#include <algorithm>

namespace sfc {

const char* err_name(ErrCode c) {
  switch (c) {
    case ErrCode::Internal: return "Internal";
    case ErrCode::NotSemisimple: return "NotSemisimple";
    case ErrCode::RootExtractionFailure: return "RootExtractionFailure";
    case ErrCode::UnsupportedComponent: return "UnsupportedComponent";
    case ErrCode::UnsupportedField: return "UnsupportedField";
    case ErrCode::RankDeficient: return "RankDeficient";
    case ErrCode::ImproperConductor: return "ImproperConductor";
    case ErrCode::NotInvertible: return "NotInvertible";
    case ErrCode::NotUnitModConductor: return "NotUnitModConductor";
    case ErrCode::NotUnit: return "NotUnit";
    case ErrCode::NotNormal: return "NotNormal";
    case ErrCode::NotFullIdeal: return "NotFullIdeal";
    case ErrCode::NotProper: return "NotProper";
    case ErrCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrCode::RepresentationTooLarge: return "RepresentationTooLarge";
    case ErrCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrCode::LiftFailure: return "LiftFailure";
    case ErrCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Pollard rho for the occasional large cofactor (discriminants of
// user-supplied orders); group-ring discriminants only involve primes
// dividing the group order.
Int pollard_rho(const Int& n, Rng& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    Int c = Int(rng.uniform(1, 1 << 30));
    Int x = Int(rng.uniform(2, 1 << 30)), y = x, d = 1;
    while (d == 1) {
      x = mod(x * x + c, n);
      y = mod(y * y + c, n);
      y = mod(y * y + c, n);
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_rec(Int n, std::vector<Int>& primes, Rng& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Int d = pollard_rho(n, rng);
  factor_rec(d, primes, rng);
  factor_rec(n / d, primes, rng);
}

}  // namespace

std::vector<std::pair<Int, int>> factor(Int n) {
  std::vector<std::pair<Int, int>> out;
  n = abs(n);
  check(n != 0, ErrCode::BadInput, "factor(0)");
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.push_back({Int(p), e});
  }
  Int p = 17;
  while (p * p <= n && p < 100000) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.push_back({p, e});
    p += 2;
  }
  if (n > 1) {
    std::vector<Int> rest;
    Rng rng(42);
    factor_rec(n, rest, rng);
    std::sort(rest.begin(), rest.end());
    for (size_t i = 0; i < rest.size();) {
      size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      out.push_back({rest[i], int(j - i)});
      i = j;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> ps;
  for (auto& [p, e] : factor(n)) ps.push_back(p);
  return ps;
}

Int valuation(Int n, const Int& p) {
  check(n != 0, ErrCode::BadInput, "valuation of 0");
  Int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

void squarefree_decompose(const Int& n, Int& d, Int& m) {
  check(n != 0, ErrCode::BadInput, "squarefree_decompose(0)");
  d = n < 0 ? -1 : 1;
  m = 1;
  for (auto& [p, e] : factor(n)) {
    for (int i = 0; i + 1 < e; i += 2) m *= p;
    if (e % 2) d *= p;
  }
}

std::string to_str(const Int& a) { return a.get_str(); }

std::string to_str(const Rat& a) { return a.get_str(); }

}  // namespace sfc
