// Copyright 2026 The lvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Univariate factorization over Q: square-free decomposition, then
// Zassenhaus (Cantor-Zassenhaus modulo a small prime, linear Hensel lifting,
// exhaustive factor recombination).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "lvf/upoly.hpp"

namespace lvf {

namespace {

using ZPoly = std::vector<Integer>;
using MPoly = std::vector<std::int64_t>;

// ---------------------------------------------------------------------------
// Integer polynomials.

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = igcd(g, c);
  return g;
}

ZPoly primitive(ZPoly a) {
  const Integer g = content(a);
  if (g == 0) return a;
  for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0) {
    for (auto& c : a) c = -c;
  }
  return a;
}

// Exact quotient a / b over Z, or nullopt.
std::optional<ZPoly> zdivide(ZPoly a, const ZPoly& b) {
  if (deg(a) < deg(b)) {
    if (a.empty()) return ZPoly{};
    return std::nullopt;
  }
  const auto db = static_cast<std::size_t>(deg(b));
  ZPoly q(a.size() - db, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    if (!mpz_divisible_p(a[k + db].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const Integer f = a[k + db] / b.back();
    q[k] = f;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= f * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Symmetric residue of every coefficient modulo m.
ZPoly symmetric_mod(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly reduce_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(a);
  return a;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p with p < 2^31.

struct Field {
  std::int64_t p;

  [[nodiscard]] std::int64_t norm(std::int64_t a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  [[nodiscard]] std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  [[nodiscard]] std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  static void trim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  [[nodiscard]] MPoly from(const ZPoly& a) const {
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      Integer c = a[i] % Integer(p);
      r[i] = norm(c.get_si());
    }
    trim(r);
    return r;
  }

  [[nodiscard]] MPoly add(MPoly a, const MPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    trim(a);
    return a;
  }
  [[nodiscard]] MPoly sub(MPoly a, const MPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = norm(a[i] - b[i]);
    trim(a);
    return a;
  }
  [[nodiscard]] MPoly mul(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    MPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }
  [[nodiscard]] MPoly scale(MPoly a, std::int64_t s) const {
    for (auto& c : a) c = mul(c, norm(s));
    trim(a);
    return a;
  }
  [[nodiscard]] std::pair<MPoly, MPoly> divmod(MPoly a, const MPoly& b) const {
    if (a.size() < b.size()) return {MPoly{}, a};
    const std::size_t db = b.size() - 1;
    const std::int64_t li = inv(b.back());
    MPoly q(a.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::int64_t f = mul(a[k + db], li);
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) a[k + j] = norm(a[k + j] - f * b[j]);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }
  [[nodiscard]] MPoly rem(const MPoly& a, const MPoly& b) const { return divmod(a, b).second; }
  [[nodiscard]] MPoly monic(const MPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  [[nodiscard]] MPoly gcd(MPoly a, MPoly b) const {
    while (!b.empty()) {
      MPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  [[nodiscard]] std::pair<MPoly, MPoly> bezout(const MPoly& a, const MPoly& b) const {
    MPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      MPoly s2 = sub(s0, mul(q, s1));
      MPoly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const std::int64_t li = inv(r0.back());
    return {scale(s0, li), scale(t0, li)};
  }
  [[nodiscard]] MPoly powmod(MPoly base, const Integer& e, const MPoly& m) const {
    MPoly result{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
  [[nodiscard]] MPoly derivative(const MPoly& a) const {
    if (a.size() <= 1) return {};
    MPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], static_cast<std::int64_t>(i) % p);
    trim(d);
    return d;
  }
};

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<MPoly, int>> distinct_degree(const Field& F, MPoly f) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, Integer(F.p), f);
    MPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const Field& F, const MPoly& f, int d, std::mt19937_64& rng,
                  std::vector<MPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(F.monic(f));
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> coeff(0, F.p - 1);
  while (true) {
    MPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    Field::trim(a);
    if (a.size() <= 1) continue;
    MPoly b = F.sub(F.powmod(a, e, f), MPoly{1});
    MPoly g = F.gcd(b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// One Hensel step sequence: f = lc * g * h mod p with g monic, lifted to
// f = G * H mod p^k, G monic.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const MPoly& g0, const MPoly& h0,
                                    const Field& F, int k) {
  auto to_z = [](const MPoly& a) {
    ZPoly z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = Integer(static_cast<long>(a[i]));
    return z;
  };
  const auto [s, t] = F.bezout(g0, h0);
  ZPoly G = to_z(g0);
  ZPoly H = to_z(h0);
  Integer pj = F.p;
  const Integer pz = F.p;
  for (int j = 1; j < k; ++j) {
    ZPoly e = zsub(f, zmul(G, H));
    for (auto& c : e) c /= pj;
    const MPoly em = F.from(e);
    const auto [quo, dg] = F.divmod(F.mul(t, em), g0);
    const MPoly dh = F.add(F.mul(s, em), F.mul(quo, h0));
    ZPoly dgz = to_z(dg);
    ZPoly dhz = to_z(dh);
    for (auto& c : dgz) c *= pj;
    for (auto& c : dhz) c *= pj;
    pj *= pz;
    G = reduce_mod(zadd(G, dgz), pj);
    H = reduce_mod(zadd(H, dhz), pj);
  }
  return {G, H};
}

std::vector<ZPoly> lift_all(const ZPoly& f, const std::vector<MPoly>& factors, const Field& F,
                            int k, const Integer& modulus) {
  if (factors.size() == 1) {
    // Monic representative of f modulo p^k.
    Integer inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly m = f;
    for (auto& c : m) c *= inv_lc;
    return {reduce_mod(m, modulus)};
  }
  const std::size_t half = factors.size() / 2;
  std::vector<MPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<MPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  MPoly g0{1}, h0{F.norm(Integer(f.back() % Integer(F.p)).get_si())};
  for (const auto& a : left) g0 = F.mul(g0, a);
  for (const auto& b : right) h0 = F.mul(h0, b);
  auto [G, H] = hensel_pair(f, g0, h0, F, k);
  auto out = lift_all(G, left, F, k, modulus);
  auto rest = lift_all(H, right, F, k, modulus);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Factors a primitive square-free integer polynomial with positive leading
// coefficient into primitive irreducibles.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  const int n = deg(f);
  if (n <= 1) return {f};

  Field F{3};
  for (std::int64_t p = 3;; p += 2) {
    if (!is_prime(p)) continue;
    if (f.back() % Integer(p) == 0) continue;
    const Field cand{p};
    const MPoly fm = cand.from(f);
    if (cand.gcd(fm, cand.derivative(fm)).size() == 1) {
      F = cand;
      break;
    }
  }

  std::mt19937_64 rng(0x5eed);
  std::vector<MPoly> modular;
  for (const auto& [g, d] : distinct_degree(F, F.monic(F.from(f)))) {
    equal_degree(F, g, d, rng, modular);
  }
  if (modular.size() == 1) return {f};

  // Landau-Mignotte: coefficients of any factor times lc stay below bound.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = sqrt(norm2) + 1;
  bound <<= static_cast<unsigned long>(n);
  bound *= abs(f.back());
  int k = 1;
  Integer modulus = F.p;
  while (modulus <= 2 * bound) {
    modulus *= F.p;
    ++k;
  }
  const std::vector<ZPoly> lifted = lift_all(f, modular, F, k, modulus);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{rest.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (mask[i]) cand = reduce_mod(zmul(cand, lifted[remaining[i]]), modulus);
      }
      cand = primitive(symmetric_mod(cand, modulus));
      if (auto q = zdivide(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
          if (!mask[i]) keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  if (deg(rest) > 0) result.push_back(primitive(rest));
  return result;
}

ZPoly to_primitive_integer(const UPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) den_lcm = ilcm(den_lcm, c.get_den());
  ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back(Integer(c * den_lcm));
  return primitive(z);
}

UPoly to_monic_rational(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c)).monic();
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> factor(const UPoly& p) {
  std::vector<std::pair<UPoly, unsigned>> out;
  for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
    for (const auto& z : factor_squarefree(to_primitive_integer(sqf))) {
      out.emplace_back(to_monic_rational(z), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    return a.second < b.second;
  });
  return out;
}

}  // namespace lvf
