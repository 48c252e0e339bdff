/*
   Copyright 2026 The dessins-catalog Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dessins/zp.hpp"

#include <random>

namespace dessins {

namespace {

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int64_t zp_inv(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % p) + p) % p;
}

// Quotient of an exact division (remainder known to be zero).
ZpPoly zp_divexact(const ZpPoly& f, const ZpPoly& g, int64_t p) {
    ZpPoly a = f;
    const int dg = zp_deg(g);
    ZpPoly q(zp_deg(f) - dg + 1, 0);
    const int64_t inv_lead = zp_inv(g.back(), p);
    while (zp_deg(a) >= dg) {
        int64_t fac = a.back() * inv_lead % p;
        int shift = zp_deg(a) - dg;
        q[shift] = fac;
        for (int i = 0; i <= dg; ++i) a[i + shift] = ((a[i + shift] - fac * g[i]) % p + p) % p;
        zp_trim(a);
    }
    return q;
}

}  // namespace

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_from_int_poly(const std::vector<Int>& coeffs, int64_t p) {
    ZpPoly r(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Int m = coeffs[i] % p;
        if (m < 0) m += p;
        r[i] = static_cast<int64_t>(m);
    }
    zp_trim(r);
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, int64_t p) {
    const int dm = zp_deg(m);
    const int64_t inv_lead = zp_inv(m.back(), p);
    while (zp_deg(a) >= dm) {
        int64_t f = a.back() * inv_lead % p;
        int shift = zp_deg(a) - dm;
        for (int i = 0; i <= dm; ++i) a[i + shift] = ((a[i + shift] - f * m[i]) % p + p) % p;
        zp_trim(a);
    }
    return a;
}

ZpPoly zp_monic(ZpPoly a, int64_t p) {
    if (a.empty()) return a;
    int64_t inv = zp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, int64_t p) {
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(std::move(a), p);
}

ZpPoly zp_derivative(const ZpPoly& a, int64_t p) {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (static_cast<int64_t>(i) % p) % p;
    zp_trim(r);
    return r;
}

ZpPoly zp_powmod(const ZpPoly& base, Int e, const ZpPoly& m, int64_t p) {
    ZpPoly r{1}, b = zp_mod(base, m, p);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = zp_mod(zp_mul(r, b, p), m, p);
        e >>= 1;
        if (e > 0) b = zp_mod(zp_mul(b, b, p), m, p);
    }
    return r;
}

namespace {

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product
// of irreducibles all of degree d.
void zp_edf(const ZpPoly& f, int d, int64_t p, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
    if (zp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    const Int exponent = (boost::multiprecision::pow(Int(p), d) - 1) / 2;
    for (;;) {
        ZpPoly r(zp_deg(f));
        for (auto& c : r) c = static_cast<int64_t>(rng() % static_cast<uint64_t>(p));
        zp_trim(r);
        if (zp_deg(r) < 1) continue;
        ZpPoly g = zp_gcd(f, r, p);
        if (!(zp_deg(g) > 0 && zp_deg(g) < zp_deg(f))) {
            ZpPoly h = zp_powmod(r, exponent, f, p);
            if (h.empty())
                h = ZpPoly{p - 1};
            else {
                h[0] = (h[0] + p - 1) % p;
                zp_trim(h);
            }
            if (h.empty()) continue;
            g = zp_gcd(f, h, p);
            if (!(zp_deg(g) > 0 && zp_deg(g) < zp_deg(f))) continue;
        }
        zp_edf(g, d, p, rng, out);
        zp_edf(zp_monic(zp_divexact(f, g, p), p), d, p, rng, out);
        return;
    }
}

}  // namespace

std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& f, int64_t p) {
    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<ZpPoly> out;
    ZpPoly rest = zp_monic(f, p);
    int d = 1;
    ZpPoly h = zp_powmod(ZpPoly{0, 1}, Int(p), rest, p);  // x^{p^d} mod rest
    while (zp_deg(rest) >= 2 * d) {
        ZpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        zp_trim(diff);
        ZpPoly g = diff.empty() ? rest : zp_gcd(rest, diff, p);
        if (zp_deg(g) > 0) {
            zp_edf(g, d, p, rng, out);
            rest = zp_monic(zp_divexact(rest, g, p), p);
            if (zp_deg(rest) == 0) break;
            h = zp_mod(h, rest, p);
        }
        ++d;
        h = zp_powmod(h, Int(p), rest, p);
    }
    if (zp_deg(rest) > 0) out.push_back(rest);
    return out;
}

}  // namespace dessins
