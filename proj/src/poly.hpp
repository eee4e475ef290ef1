#pragma once

#include "ints.hpp"

namespace sfc {

// Polynomials are coefficient vectors, constant term first, no trailing zeros.
using PolyQ = std::vector<Rat>;
using PolyZ = std::vector<Int>;

int deg(const PolyQ& f);
int deg(const PolyZ& f);
void trim(PolyQ& f);
void trim(PolyZ& f);

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
// division with remainder, b != 0
void poly_divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
PolyQ poly_mod(const PolyQ& a, const PolyQ& b);
PolyQ poly_monic(const PolyQ& f);
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);
PolyQ poly_derivative(const PolyQ& f);
Rat poly_eval(const PolyQ& f, const Rat& x);
PolyQ poly_pow(const PolyQ& f, int e);

bool poly_is_squarefree(const PolyQ& f);

// monic m-th root of a monic polynomial over Q, by coefficient recursion;
// throws RootExtractionFailure if none exists
PolyQ poly_root_monic(const PolyQ& f, int m);

// arithmetic mod p (coefficients in [0, p))
PolyZ fp_normalize(PolyZ f, const Int& p);
PolyZ fp_mul(const PolyZ& a, const PolyZ& b, const Int& p);
void fp_divmod(const PolyZ& a, const PolyZ& b, const Int& p, PolyZ& q, PolyZ& r);
PolyZ fp_gcd(PolyZ a, PolyZ b, const Int& p);
PolyZ fp_powmod(const PolyZ& a, Int e, const PolyZ& f, const Int& p);

// complete factorisation of a monic squarefree polynomial mod p
std::vector<PolyZ> berlekamp(const PolyZ& f, const Int& p);

// monic f in Z[x]: full factorisation into monic integer irreducibles with
// multiplicities (Zassenhaus: Berlekamp mod p, Hensel lift, recombination)
std::vector<std::pair<PolyZ, int>> factor_monic_z(const PolyZ& f);

// monic f in Q[x]
std::vector<std::pair<PolyQ, int>> factor_monic_q(const PolyQ& f);

}  // namespace sfc
