#include "poly.hpp"

#include <algorithm>

namespace sfc {

int deg(const PolyQ& f) { return int(f.size()) - 1; }
int deg(const PolyZ& f) { return int(f.size()) - 1; }

void trim(PolyQ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
void trim(PolyZ& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
  PolyQ r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
  if (a.empty() || b.empty()) return {};
  PolyQ r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void poly_divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
  check(!b.empty(), ErrCode::BadInput, "poly division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rat c = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

PolyQ poly_mod(const PolyQ& a, const PolyQ& b) {
  PolyQ q, r;
  poly_divmod(a, b, q, r);
  return r;
}

PolyQ poly_monic(const PolyQ& f) {
  PolyQ r = f;
  trim(r);
  if (r.empty()) return r;
  Rat c = r.back();
  for (auto& x : r) x /= c;
  return r;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  PolyQ x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    PolyQ r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return poly_monic(x);
}

PolyQ poly_derivative(const PolyQ& f) {
  PolyQ r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * Rat(Int(i)));
  trim(r);
  return r;
}

Rat poly_eval(const PolyQ& f, const Rat& x) {
  Rat r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

PolyQ poly_pow(const PolyQ& f, int e) {
  PolyQ r = {Rat(1)};
  for (int i = 0; i < e; ++i) r = poly_mul(r, f);
  return r;
}

bool poly_is_squarefree(const PolyQ& f) {
  PolyQ g = poly_gcd(f, poly_derivative(f));
  return deg(g) <= 0;
}

PolyQ poly_root_monic(const PolyQ& f, int m) {
  check(!f.empty() && f.back() == 1, ErrCode::BadInput, "poly_root_monic: monic input required");
  int n = deg(f);
  check(m >= 1 && n % m == 0, ErrCode::RootExtractionFailure, "degree not divisible");
  if (m == 1) return f;
  int k = n / m;
  // g = x^k + a_1 x^{k-1} + ... ; match coefficients of g^m against f from the top
  PolyQ g(k + 1, Rat(0));
  g[k] = 1;
  for (int t = 1; t <= k; ++t) {
    // coefficient of x^{n-t} in g^m equals f[n-t]; it is m*a_t + (terms in a_1..a_{t-1})
    PolyQ p = poly_pow(g, m);
    Rat cur = (n - t) < int(p.size()) ? p[n - t] : Rat(0);
    Rat want = (n - t) < int(f.size()) ? f[n - t] : Rat(0);
    g[k - t] = (want - cur) / Rat(m);
  }
  if (poly_pow(g, m) != f) fail(ErrCode::RootExtractionFailure, "no monic m-th root");
  return g;
}

PolyZ fp_normalize(PolyZ f, const Int& p) {
  for (auto& c : f) c = mod(c, p);
  trim(f);
  return f;
}

PolyZ fp_mul(const PolyZ& a, const PolyZ& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return fp_normalize(std::move(r), p);
}

void fp_divmod(const PolyZ& a, const PolyZ& b, const Int& p, PolyZ& q, PolyZ& r) {
  check(!b.empty(), ErrCode::BadInput, "fp division by zero");
  Int inv = invmod(b.back(), p);
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
  while (r.size() >= b.size() && !r.empty()) {
    Int c = mod(r.back() * inv, p);
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = mod(r[shift + i] - c * b[i], p);
    trim(r);
  }
  trim(q);
}

PolyZ fp_gcd(PolyZ a, PolyZ b, const Int& p) {
  a = fp_normalize(std::move(a), p);
  b = fp_normalize(std::move(b), p);
  while (!b.empty()) {
    PolyZ q, r;
    fp_divmod(a, b, p, q, r);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Int inv = invmod(a.back(), p);
    for (auto& c : a) c = mod(c * inv, p);
  }
  return a;
}

PolyZ fp_powmod(const PolyZ& a, Int e, const PolyZ& f, const Int& p) {
  PolyZ base = a, r = {Int(1)};
  {
    PolyZ q, rem;
    fp_divmod(base, f, p, q, rem);
    base = rem;
  }
  while (e > 0) {
    if (mod(e, 2) == 1) {
      PolyZ q, rem;
      fp_divmod(fp_mul(r, base, p), f, p, q, rem);
      r = rem;
    }
    PolyZ q, rem;
    fp_divmod(fp_mul(base, base, p), f, p, q, rem);
    base = rem;
    e = fdiv(e, 2);
  }
  return r;
}

namespace {

// Berlekamp Q-matrix kernel: basis of {v mod f : v^p = v}
std::vector<PolyZ> berlekamp_kernel(const PolyZ& f, const Int& p) {
  int n = deg(f);
  // rows of (Q - I): row i is coords of x^{i*p} mod f minus e_i
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  PolyZ xp = fp_powmod({Int(0), Int(1)}, p, f, p);
  PolyZ cur = {Int(1)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= deg(cur); ++j) m[i][j] = cur[j];
    m[i][i] = mod(m[i][i] - 1, p);
    PolyZ q, r;
    fp_divmod(fp_mul(cur, xp, p), f, p, q, r);
    cur = r;
  }
  // kernel over F_p by Gaussian elimination on rows: basis of {v : v*M = 0}
  std::vector<std::vector<Int>> rows = m;
  std::vector<std::vector<Int>> id(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  int r = 0;
  for (int j = 0; j < n && r < n; ++j) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (rows[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(id[piv], id[r]);
    Int inv = invmod(rows[r][j], p);
    for (int k = 0; k < n; ++k) {
      rows[r][k] = mod(rows[r][k] * inv, p);
      id[r][k] = mod(id[r][k] * inv, p);
    }
    for (int i = 0; i < n; ++i) {
      if (i == r || rows[i][j] == 0) continue;
      Int c = rows[i][j];
      for (int k = 0; k < n; ++k) {
        rows[i][k] = mod(rows[i][k] - c * rows[r][k], p);
        id[i][k] = mod(id[i][k] - c * id[r][k], p);
      }
    }
    ++r;
  }
  std::vector<PolyZ> basis;
  for (int i = r; i < n; ++i) {
    PolyZ v(id[i].begin(), id[i].end());
    trim(v);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::vector<PolyZ> berlekamp(const PolyZ& f0, const Int& p) {
  PolyZ f = fp_normalize(f0, p);
  {
    Int inv = invmod(f.back(), p);
    for (auto& c : f) c = mod(c * inv, p);
  }
  if (deg(f) <= 1) return {f};
  auto basis = berlekamp_kernel(f, p);
  size_t want = basis.size();
  std::vector<PolyZ> factors = {f};
  if (want == 1) return factors;
  for (const auto& v : basis) {
    if (deg(v) < 1) continue;  // skip the constant kernel vector
    for (Int c = 0; c < p; ++c) {
      PolyZ shifted = v;
      shifted[0] = mod(shifted[0] - c, p);
      trim(shifted);
      std::vector<PolyZ> next;
      for (const auto& g : factors) {
        if (deg(g) <= 1) {
          next.push_back(g);
          continue;
        }
        PolyZ d = fp_gcd(g, shifted, p);
        if (deg(d) <= 0 || deg(d) == deg(g)) {
          next.push_back(g);
        } else {
          PolyZ q, r;
          fp_divmod(g, d, p, q, r);
          next.push_back(d);
          next.push_back(q);
        }
      }
      factors = next;
      if (factors.size() == want) break;
    }
    if (factors.size() == want) break;
  }
  check(factors.size() == want, ErrCode::Internal, "berlekamp: incomplete split");
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {

PolyZ zmod_normalize(PolyZ f, const Int& m) {
  for (auto& c : f) c = mod(c, m);
  trim(f);
  return f;
}

PolyZ zmod_mul(const PolyZ& a, const PolyZ& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zmod_normalize(std::move(r), m);
}

PolyZ zmod_add(const PolyZ& a, const PolyZ& b, const Int& m) {
  PolyZ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zmod_normalize(std::move(r), m);
}

PolyZ zmod_sub(const PolyZ& a, const PolyZ& b, const Int& m) {
  PolyZ r(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zmod_normalize(std::move(r), m);
}

// division by a monic b mod m
void zmod_divmod(const PolyZ& a, const PolyZ& b, const Int& m, PolyZ& q, PolyZ& r) {
  check(!b.empty() && b.back() == 1, ErrCode::Internal, "zmod_divmod: monic divisor required");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Int(0));
  while (r.size() >= b.size() && !r.empty()) {
    Int c = r.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] = mod(r[shift + i] - c * b[i], m);
    trim(r);
  }
  trim(q);
}

struct HenselPair {
  PolyZ g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod modulus)
};

// one quadratic lift step: modulus m -> m^2
void hensel_step(const PolyZ& f, HenselPair& pr, const Int& m) {
  Int m2 = m * m;
  PolyZ e = zmod_sub(zmod_normalize(f, m2), zmod_mul(pr.g, pr.h, m2), m2);
  PolyZ q, r;
  zmod_divmod(zmod_mul(pr.s, e, m2), pr.h, m2, q, r);
  PolyZ gn = zmod_add(pr.g, zmod_add(zmod_mul(pr.t, e, m2), zmod_mul(q, pr.g, m2), m2), m2);
  PolyZ hn = zmod_add(pr.h, r, m2);
  PolyZ b = zmod_sub(zmod_add(zmod_mul(pr.s, gn, m2), zmod_mul(pr.t, hn, m2), m2), {Int(1)}, m2);
  PolyZ qb, rb;
  zmod_divmod(zmod_mul(pr.s, b, m2), hn, m2, qb, rb);
  PolyZ sn = zmod_sub(pr.s, rb, m2);
  PolyZ tn = zmod_sub(zmod_sub(pr.t, zmod_mul(pr.t, b, m2), m2), zmod_mul(qb, gn, m2), m2);
  pr = {gn, hn, sn, tn};
}

// extended gcd for coprime monic-ish polys mod p: s*a + t*b = 1
void fp_gcdext(const PolyZ& a, const PolyZ& b, const Int& p, PolyZ& s, PolyZ& t) {
  PolyZ r0 = fp_normalize(a, p), r1 = fp_normalize(b, p);
  PolyZ s0 = {Int(1)}, s1 = {}, t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    PolyZ q, r;
    fp_divmod(r0, r1, p, q, r);
    PolyZ s2 = fp_normalize(zmod_sub(s0, fp_mul(q, s1, p), p), p);
    PolyZ t2 = fp_normalize(zmod_sub(t0, fp_mul(q, t1, p), p), p);
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  check(deg(r0) == 0, ErrCode::Internal, "fp_gcdext: inputs not coprime");
  Int inv = invmod(r0[0], p);
  for (auto& c : s0) c = mod(c * inv, p);
  for (auto& c : t0) c = mod(c * inv, p);
  s = s0;
  t = t0;
}

// lift the factorisation f = prod(parts) from mod p to mod p^(2^steps),
// returning the lifted factors and the final modulus
std::vector<PolyZ> hensel_tree(const PolyZ& f, std::vector<PolyZ> parts, const Int& p, const Int& target, Int& modulus_out) {
  Int m = p;
  while (m < target) m = m * m;  // final modulus after repeated squaring from p
  modulus_out = m;
  if (parts.size() == 1) return {zmod_normalize(f, m)};
  size_t half = parts.size() / 2;
  PolyZ g0 = {Int(1)}, h0 = {Int(1)};
  for (size_t i = 0; i < half; ++i) g0 = fp_mul(g0, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) h0 = fp_mul(h0, parts[i], p);
  PolyZ s, t;
  fp_gcdext(g0, h0, p, s, t);
  HenselPair pr = {g0, h0, s, t};
  Int cur = p;
  while (cur < target) {
    hensel_step(f, pr, cur);
    cur = cur * cur;
  }
  Int sub_mod;
  std::vector<PolyZ> left(parts.begin(), parts.begin() + half);
  std::vector<PolyZ> right(parts.begin() + half, parts.end());
  auto lg = hensel_tree(pr.g, left, p, target, sub_mod);
  auto rg = hensel_tree(pr.h, right, p, target, sub_mod);
  lg.insert(lg.end(), rg.begin(), rg.end());
  return lg;
}

Int symmetric(const Int& a, const Int& m) {
  Int r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

PolyZ symmetric_poly(PolyZ f, const Int& m) {
  for (auto& c : f) c = symmetric(c, m);
  trim(f);
  return f;
}

bool divides_poly_z(const PolyZ& f, const PolyZ& g, PolyZ& quotient) {
  // g monic; test g | f over Z
  PolyZ r = f, q;
  q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, Int(0));
  while (r.size() >= g.size() && !r.empty()) {
    Int c = r.back();
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
    trim(r);
  }
  if (!r.empty()) return false;
  trim(q);
  quotient = q;
  return true;
}

// factor a monic squarefree integer polynomial
std::vector<PolyZ> zassenhaus_squarefree(const PolyZ& f) {
  int n = deg(f);
  if (n <= 1) return {f};
  // choose a prime keeping f squarefree mod p
  Int p = 2;
  while (true) {
    if (mod(f.back(), p) != 0) {
      PolyZ fp = fp_normalize(f, p);
      PolyZ d;
      {
        PolyZ der;
        for (size_t i = 1; i < fp.size(); ++i) der.push_back(mod(fp[i] * Int(i), p));
        trim(der);
        d = fp_gcd(fp, der, p);
      }
      if (deg(d) == 0) break;
    }
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  auto modular = berlekamp(f, p);
  if (modular.size() == 1) return {f};
  // Mignotte-style bound on coefficients of monic factors
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int sq = isqrt(norm2) + 1;
  Int binom = 1;
  for (int i = 0; i < n; ++i) binom *= 2;  // 2^n >= binom(n, n/2)
  Int bound = 2 * binom * sq + 1;
  Int modulus;
  auto lifted = hensel_tree(f, modular, p, bound, modulus);

  std::vector<PolyZ> result;
  PolyZ rem = f;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) alive[i] = int(i);
  int s = 1;
  while (2 * s <= int(alive.size())) {
    bool found = true;
    while (found && 2 * s <= int(alive.size())) {
      found = false;
      std::vector<int> comb(s);
      for (int i = 0; i < s; ++i) comb[i] = i;
      while (true) {
        PolyZ prod = {Int(1)};
        for (int i : comb) prod = zmod_mul(prod, lifted[alive[i]], modulus);
        prod = symmetric_poly(prod, modulus);
        PolyZ q;
        if (!prod.empty() && prod.back() == 1 && divides_poly_z(rem, prod, q)) {
          result.push_back(prod);
          rem = q;
          std::vector<int> next;
          for (size_t i = 0; i < alive.size(); ++i)
            if (std::find(comb.begin(), comb.end(), int(i)) == comb.end()) next.push_back(alive[i]);
          alive = next;
          found = true;
          break;
        }
        // next combination
        int i = s - 1;
        while (i >= 0 && comb[i] == int(alive.size()) - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    ++s;
  }
  if (deg(rem) > 0) result.push_back(rem);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<std::pair<PolyZ, int>> factor_monic_z(const PolyZ& f) {
  check(!f.empty() && f.back() == 1, ErrCode::BadInput, "factor_monic_z: monic required");
  // squarefree decomposition over Q, staying integral (monic gcds of monic polys are integral)
  PolyQ fq(f.begin(), f.end());
  auto sq = factor_monic_q(fq);
  std::vector<std::pair<PolyZ, int>> out;
  for (auto& [g, e] : sq) {
    PolyZ gz(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
      check(g[i].get_den() == 1, ErrCode::Internal, "non-integral factor of integral poly");
      gz[i] = g[i].get_num();
    }
    out.push_back({gz, e});
  }
  return out;
}

std::vector<std::pair<PolyQ, int>> factor_monic_q(const PolyQ& f0) {
  PolyQ f = f0;
  trim(f);
  check(!f.empty() && f.back() == 1, ErrCode::BadInput, "factor_monic_q: monic required");
  std::vector<std::pair<PolyQ, int>> out;
  if (deg(f) == 0) return out;
  // squarefree decomposition (Yun)
  std::vector<std::pair<PolyQ, int>> squarefree_parts;
  {
    PolyQ a = f, d = poly_derivative(f);
    PolyQ g = poly_gcd(a, d);
    PolyQ b, c, q, r;
    poly_divmod(a, g, b, r);
    poly_divmod(d, g, c, r);
    c = poly_sub(c, poly_derivative(b));
    int i = 1;
    while (deg(b) > 0) {
      PolyQ p = poly_gcd(b, c);
      if (deg(p) > 0) squarefree_parts.push_back({poly_monic(p), i});
      poly_divmod(b, p, q, r);
      b = q;
      PolyQ cq;
      poly_divmod(c, p, cq, r);
      c = poly_sub(cq, poly_derivative(b));
      ++i;
    }
  }
  for (auto& [part, mult] : squarefree_parts) {
    // scale x -> x/a to make the monic polynomial integral
    Int a = 1;
    for (auto& c : part) a = lcm(a, c.get_den());
    PolyZ g(part.size());
    Int pw = 1;
    for (size_t i = part.size(); i-- > 0;) {
      Rat c = part[i] * Rat(pw);
      check(c.get_den() == 1, ErrCode::Internal, "scaling failed");
      g[i] = c.get_num();
      pw *= a;
    }
    auto zf = zassenhaus_squarefree(g);
    for (auto& h : zf) {
      PolyQ hq(h.size());
      Int pw2 = 1;
      for (size_t i = h.size(); i-- > 0;) {
        hq[i] = Rat(h[i]) / Rat(pw2);
        pw2 *= a;
      }
      out.push_back({hq, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return deg(x.first) < deg(y.first); });
  return out;
}

}  // namespace sfc
