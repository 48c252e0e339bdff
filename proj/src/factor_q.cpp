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

#include "dessins/factor_q.hpp"

#include <numeric>

#include "dessins/zp.hpp"

namespace dessins {

namespace {

// Dense integer polynomial, lowest degree first.
using IPoly = std::vector<Int>;

void itrim(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int ideg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

IPoly imul(const IPoly& a, const IPoly& b) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IPoly imod_centered(IPoly a, const Int& m) {
    const Int half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c > half) c -= m;
        if (c < -half) c += m;
    }
    itrim(a);
    return a;
}

// a mod (m, x-adic): reduce coefficients into centered residues mod m.
IPoly iadd(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    itrim(r);
    return r;
}

IPoly isub(const IPoly& a, const IPoly& b) {
    IPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    itrim(r);
    return r;
}

// Division in (Z/m)[x] by a polynomial whose lc is invertible mod m.
// Returns {q, r}; all coefficients centered mod m.
std::pair<IPoly, IPoly> idivmod_mod(IPoly a, const IPoly& b, const Int& m, const Int& lc_inv) {
    a = imod_centered(std::move(a), m);
    IPoly q(std::max(ideg(a) - ideg(b) + 1, 0), Int(0));
    while (ideg(a) >= ideg(b)) {
        Int f = a.back() * lc_inv % m;
        int shift = ideg(a) - ideg(b);
        q[shift] = f;
        for (int i = 0; i <= ideg(b); ++i) a[i + shift] = (a[i + shift] - f * b[i]) % m;
        itrim(a);
    }
    return {imod_centered(std::move(q), m), imod_centered(std::move(a), m)};
}

Int int_inv_mod(const Int& a, const Int& m) {
    Int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        Int q = r / nr;
        Int tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % m) + m) % m;
}

QPoly ipoly_to_q(const IPoly& f) {
    std::vector<Rat> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
    return QPoly(std::move(c));
}

IPoly q_to_ipoly_primitive(const QPoly& f) {
    QPoly pp = q_primitive_part(f);
    IPoly r(pp.degree() + 1);
    for (int i = 0; i <= pp.degree(); ++i) r[i] = rat_num(pp[i]);
    return r;
}

// One quadratic Hensel step: from f ≡ g*h (mod m), s*g + t*h ≡ 1 (mod m)
// to the same congruences mod m^2 (von zur Gathen-Gerhard Alg. 15.10).
// h is monic; lc(f) is carried by g.
struct HenselPair {
    IPoly g, h, s, t;
};

HenselPair hensel_step(const IPoly& f, const HenselPair& in, const Int& m) {
    const Int m2 = m * m;
    IPoly e = imod_centered(isub(f, imul(in.g, in.h)), m2);
    // h monic: divide s*e by h
    auto [q, r] = idivmod_mod(imul(in.s, e), in.h, m2, Int(1));
    IPoly g2 = imod_centered(iadd(iadd(in.g, imul(in.t, e)), imul(q, in.g)), m2);
    IPoly h2 = imod_centered(iadd(in.h, r), m2);
    IPoly b = imod_centered(isub(iadd(imul(in.s, g2), imul(in.t, h2)), IPoly{1}), m2);
    auto [c, d] = idivmod_mod(imul(in.s, b), h2, m2, Int(1));
    IPoly s2 = imod_centered(isub(in.s, d), m2);
    IPoly t2 = imod_centered(isub(isub(in.t, imul(in.t, b)), imul(c, g2)), m2);
    return {g2, h2, s2, t2};
}

// Lift a factorization f ≡ lc(f) * prod(monic factors) (mod p) to mod p^K
// with p^K >= bound, by the divide-and-conquer factor tree.
// Returns factors mod p^K; the first factor in each split carries lc.
void hensel_lift_tree(const IPoly& f, std::vector<ZpPoly>::const_iterator begin,
                      std::vector<ZpPoly>::const_iterator end, int64_t p, const Int& target,
                      std::vector<IPoly>& out) {
    const size_t count = static_cast<size_t>(end - begin);
    if (count == 1) {
        // f ≡ lc * (*begin) mod p^k already; store f reduced
        out.push_back(f);
        return;
    }
    const size_t half = count / 2;
    // g = lc(f) * prod of first half, h = monic prod of second half (mod p)
    ZpPoly gp{static_cast<int64_t>(((f.back() % p) + p) % p)};
    for (auto it = begin; it != begin + half; ++it) gp = zp_mul(gp, *it, p);
    ZpPoly hp{1};
    for (auto it = begin + half; it != end; ++it) hp = zp_mul(hp, *it, p);
    // Bezout: s*g + t*h = 1 mod p
    // compute via extended Euclid over F_p
    ZpPoly r0 = gp, r1 = hp;
    ZpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // divmod over F_p
        ZpPoly a = r0, q(std::max(zp_deg(r0) - zp_deg(r1) + 1, 0), 0);
        {
            int64_t inv = 1;
            {  // inverse of lc(r1) mod p
                int64_t t = 0, nt = 1, rr = p, nr = r1.back() % p;
                while (nr != 0) {
                    int64_t qq = rr / nr;
                    int64_t tmp = t - qq * nt;
                    t = nt;
                    nt = tmp;
                    tmp = rr - qq * nr;
                    rr = nr;
                    nr = tmp;
                }
                inv = ((t % p) + p) % p;
            }
            while (zp_deg(a) >= zp_deg(r1)) {
                int64_t fac = a.back() * inv % p;
                int shift = zp_deg(a) - zp_deg(r1);
                q[shift] = fac;
                for (int i = 0; i <= zp_deg(r1); ++i)
                    a[i + shift] = ((a[i + shift] - fac * r1[i]) % p + p) % p;
                while (!a.empty() && a.back() == 0) a.pop_back();
            }
        }
        ZpPoly s2 = s0, t2 = t0;
        {
            ZpPoly qs = zp_mul(q, s1, p), qt = zp_mul(q, t1, p);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
            while (!s2.empty() && s2.back() == 0) s2.pop_back();
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
            while (!t2.empty() && t2.back() == 0) t2.pop_back();
        }
        r0 = std::move(r1);
        r1 = std::move(a);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a unit (gcd of coprime factor products); normalize
    int64_t unit_inv;
    {
        int64_t t = 0, nt = 1, rr = p, nr = r0[0] % p;
        while (nr != 0) {
            int64_t qq = rr / nr;
            int64_t tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = rr - qq * nr;
            rr = nr;
            nr = tmp;
        }
        unit_inv = ((t % p) + p) % p;
    }
    for (auto& c : s0) c = c * unit_inv % p;
    for (auto& c : t0) c = c * unit_inv % p;

    HenselPair pair;
    auto to_ipoly = [](const ZpPoly& z) {
        IPoly r(z.size());
        for (size_t i = 0; i < z.size(); ++i) r[i] = Int(z[i]);
        return r;
    };
    pair.g = to_ipoly(gp);
    pair.h = to_ipoly(hp);
    pair.s = to_ipoly(s0);
    pair.t = to_ipoly(t0);
    Int m(p);
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m *= m;
    }
    hensel_lift_tree(imod_centered(pair.g, m), begin, begin + half, p, target, out);
    hensel_lift_tree(imod_centered(pair.h, m), begin + half, end, p, target, out);
}

Int inorm2_sq(const IPoly& f) {
    Int s = 0;
    for (const Int& c : f) s += c * c;
    return s;
}

}  // namespace

std::vector<QPoly> q_factor_squarefree(const QPoly& fq) {
    std::vector<QPoly> out;
    if (fq.degree() <= 0) return out;
    if (fq.degree() == 1) {
        out.push_back(fq.monic());
        return out;
    }
    IPoly f = q_to_ipoly_primitive(fq);

    // pick a prime keeping f squarefree mod p, preferring few modular factors
    static const int64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23,  29,  31,  37,  41,  43,
                                      47, 53, 59, 61, 67, 71, 73, 79,  83,  89,  97,  101, 103,
                                      107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
    int64_t best_p = 0;
    std::vector<ZpPoly> best_factors;
    int tried = 0;
    for (int64_t p : kPrimes) {
        if (f.back() % p == 0) continue;
        ZpPoly fp = zp_from_int_poly(f, p);
        if (zp_deg(fp) != ideg(f)) continue;
        ZpPoly d = zp_derivative(fp, p);
        if (d.empty()) continue;
        if (zp_deg(zp_gcd(fp, d, p)) != 0) continue;
        auto factors = zp_factor_squarefree(zp_monic(fp, p), p);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
        if (++tried >= 4) break;
    }
    if (best_p == 0) throw std::runtime_error("q_factor_squarefree: no usable prime found");
    if (best_factors.size() == 1) {
        out.push_back(ipoly_to_q(f).monic());
        return out;
    }
    std::sort(best_factors.begin(), best_factors.end());

    // Landau-Mignotte style bound on any factor's coefficients (times lc)
    const int n = ideg(f);
    Int bound = (int_isqrt(inorm2_sq(f) * (n + 1)) + 1) * boost::multiprecision::abs(f.back());
    bound <<= n;
    const Int target = 2 * bound + 1;

    std::vector<IPoly> lifted;
    hensel_lift_tree(f, best_factors.begin(), best_factors.end(), best_p, target, lifted);
    Int modulus(best_p);
    while (modulus < target) modulus *= modulus;

    // make every lifted factor monic mod p^K for the subset products
    std::vector<IPoly> rem = lifted;
    for (IPoly& g : rem) {
        Int inv = int_inv_mod(g.back(), modulus);
        for (Int& c : g) c = c * inv % modulus;
        g = imod_centered(std::move(g), modulus);
    }
    IPoly rest = f;
    std::vector<bool> used(rem.size(), false);
    size_t remaining = rem.size();
    auto try_subsets = [&](auto&& self, std::vector<size_t>& pick, size_t start, size_t want) -> bool {
        if (pick.size() == want) {
            IPoly cand{rest.back()};
            for (size_t i : pick) cand = imod_centered(imul(cand, rem[i]), modulus);
            QPoly candq = q_primitive_part(ipoly_to_q(cand));
            QPoly restq = ipoly_to_q(rest);
            auto [q, r] = divmod(restq, candq);
            if (r.is_zero()) {
                out.push_back(candq.monic());
                for (size_t i : pick) used[i] = true;
                rest = q_to_ipoly_primitive(q);
                return true;
            }
            return false;
        }
        for (size_t i = start; i < rem.size(); ++i) {
            if (used[i]) continue;
            pick.push_back(i);
            if (self(self, pick, i + 1, want)) return true;
            pick.pop_back();
        }
        return false;
    };
    size_t subset_size = 1;
    while (remaining > 0 && 2 * subset_size <= remaining) {
        std::vector<size_t> pick;
        if (try_subsets(try_subsets, pick, 0, subset_size)) {
            remaining = 0;
            for (bool u : used) remaining += u ? 0 : 1;
            continue;  // retry same size with the reduced rest
        }
        ++subset_size;
    }
    if (ideg(rest) > 0) out.push_back(ipoly_to_q(rest).monic());
    std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

std::vector<std::pair<QPoly, int>> q_factor(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factorization of zero");
    std::vector<std::pair<QPoly, int>> out;
    for (const auto& [g, m] : squarefree_decompose(f))
        for (const QPoly& p : q_factor_squarefree(g)) out.emplace_back(p, m);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return false;
    });
    return out;
}

bool q_is_irreducible(const QPoly& f) {
    if (f.degree() <= 0) return false;
    auto fac = q_factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace dessins
