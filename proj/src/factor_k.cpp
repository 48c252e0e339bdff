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

#include "dessins/factor_k.hpp"

#include "dessins/factor_q.hpp"

namespace dessins {

namespace {

Rat nf_elem_norm(const FieldElem& v, const NumberFieldPtr& K) {
    if (!K) return v.rational_value();
    if (v.is_zero()) return 0;
    return q_resultant(K->min_poly(), QPoly(v.coords()));
}

FieldElem fe_pow(const FieldElem& b, int e) {
    FieldElem r(1), base = b;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

}  // namespace

NumberFieldPtr kpoly_field(const KPoly& f) {
    for (const FieldElem& c : f.coeffs())
        if (c.field()) return c.field();
    return nullptr;
}

QPoly k_norm(const KPoly& f, const NumberFieldPtr& K) {
    if (!K) return kpoly_to_q(f);
    if (f.is_zero()) return QPoly();
    const int out_deg = f.degree() * K->degree();
    std::vector<Rat> xs, ys;
    xs.reserve(out_deg + 1);
    ys.reserve(out_deg + 1);
    for (int j = 0; static_cast<int>(xs.size()) <= out_deg; ++j) {
        Rat x(j);
        xs.push_back(x);
        ys.push_back(nf_elem_norm(f.eval(FieldElem(x)), K));
    }
    return q_interpolate(xs, ys);
}

FieldElem k_resultant(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return FieldElem(0);
    if (a.degree() == 0) return fe_pow(a.lc(), b.degree());
    if (b.degree() == 0) return fe_pow(b.lc(), a.degree());
    KPoly r = a % b;
    if (r.is_zero()) return FieldElem(0);
    FieldElem sign((a.degree() * b.degree()) % 2 ? -1 : 1);
    return sign * fe_pow(b.lc(), a.degree() - r.degree()) * k_resultant(b, r);
}

KPoly k_interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
    assert(xs.size() == ys.size());
    const size_t n = xs.size();
    std::vector<FieldElem> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    KPoly acc;
    for (size_t i = n; i-- > 0;)
        acc = acc * KPoly({FieldElem(0) - xs[i], FieldElem(1)}) + KPoly::constant(dd[i]);
    return acc;
}

std::vector<KPoly> k_factor_squarefree(const KPoly& f, const NumberFieldPtr& K) {
    std::vector<KPoly> out;
    if (f.degree() <= 0) return out;
    if (!K) {
        for (const QPoly& g : q_factor_squarefree(kpoly_to_q(f))) out.push_back(kpoly_from_q(g));
        return out;
    }
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return out;
    }
    const KPoly fm = f.monic();
    const FieldElem theta = FieldElem::generator(K);
    for (int trial = 0;; ++trial) {
        // shifts 0, 1, -1, 2, -2, ...
        int s = (trial + 1) / 2 * (trial % 2 ? 1 : -1);
        KPoly shift_down({FieldElem(Rat(-s)) * theta, FieldElem(1)});  // x - s*theta
        KPoly g = fm.compose(shift_down);
        QPoly norm = k_norm(g, K);
        if (!poly_gcd(norm, norm.derivative()).is_constant()) continue;
        std::vector<QPoly> hs = q_factor_squarefree(norm);
        if (hs.size() == 1) {
            out.push_back(fm);
            return out;
        }
        KPoly shift_up({FieldElem(Rat(s)) * theta, FieldElem(1)});  // x + s*theta
        KPoly rest = fm;
        for (const QPoly& h : hs) {
            KPoly cand = poly_gcd(rest, kpoly_from_q(h).compose(shift_up));
            if (cand.degree() > 0) {
                out.push_back(cand);
                rest = rest / cand;
            }
        }
        if (rest.degree() != 0)
            throw std::logic_error("k_factor_squarefree: factors do not exhaust input");
        return out;
    }
}

std::vector<std::pair<KPoly, int>> k_factor(const KPoly& f, const NumberFieldPtr& K) {
    if (f.is_zero()) throw std::domain_error("factorization of zero");
    std::vector<std::pair<KPoly, int>> out;
    for (const auto& [g, m] : squarefree_decompose(f))
        for (const KPoly& p : k_factor_squarefree(g, K)) out.emplace_back(p, m);
    return out;
}

bool k_is_irreducible(const KPoly& f, const NumberFieldPtr& K) {
    if (f.degree() <= 0) return false;
    auto fac = k_factor(f, K);
    return fac.size() == 1 && fac[0].second == 1;
}

KPoly residue_inverse(const KPoly& a, const KPoly& p) {
    KPoly s, t;
    KPoly g = poly_xgcd(a % p, p, &s, &t);
    if (g.degree() != 0) throw ZeroDivisorError("residue_inverse: zero divisor mod p", g);
    return s % p;
}

namespace {

// Arithmetic in L[T] where L = K[x]/(p): a polynomial in T is a vector of
// residues mod p. Only tiny degrees occur (quadratics and their gcds).
using LPoly = std::vector<KPoly>;

void l_trim(LPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

LPoly l_mod(LPoly a, const LPoly& b, const KPoly& p) {
    // b's leading coefficient must be invertible mod p
    KPoly inv_lead = residue_inverse(b.back(), p);
    while (a.size() >= b.size()) {
        KPoly f = (a.back() * inv_lead) % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] - f * b[i]) % p;
        l_trim(a);
        if (a.size() < b.size()) break;
    }
    l_trim(a);
    return a;
}

}  // namespace

std::optional<KPoly> residue_sqrt(const KPoly& a_in, const KPoly& p, const NumberFieldPtr& K) {
    const KPoly a = a_in % p;
    if (a.is_zero()) throw std::domain_error("residue_sqrt of zero residue");
    // Constant residue field: deg p == 1 reduces to squareness in K itself.
    if (p.degree() == 1) {
        const FieldElem c = a.eval(FieldElem(0) - p[0] / p[1]);
        assert(!c.is_zero());
        if (!K) {
            auto r = rat_sqrt(c.rational_value());
            if (!r) return std::nullopt;
            return KPoly::constant(FieldElem(*r));
        }
        // squareness in K: factor T^2 - c over K
        KPoly quad({FieldElem(0) - c, FieldElem(0), FieldElem(1)});
        for (const KPoly& h : k_factor_squarefree(quad, K))
            if (h.degree() == 1) return KPoly::constant(FieldElem(0) - h[0]);
        return std::nullopt;
    }
    // Relative case: decide whether T^2 - a splits over L = K[x]/(p) by
    // factoring its norm down to K[T] (Trager with a T-shift by s*x when the
    // norm is not squarefree), then extracting a root via an L[T] gcd.
    const int dp = p.degree();
    for (int trial = 0;; ++trial) {
        int s = (trial + 1) / 2 * (trial % 2 ? 1 : -1);
        // W(T) = (T - s*x)^2 - a(x) in L[T]
        // Norm to K[T] by interpolation in T.
        std::vector<FieldElem> ts, ns;
        const int out_deg = 2 * dp;
        for (int j = 0; static_cast<int>(ts.size()) <= out_deg; ++j) {
            FieldElem tj{Rat(j)};
            // W(tj)(x) = (tj - s x)^2 - a(x) as a K-polynomial in x
            KPoly w = KPoly({tj, FieldElem(Rat(-s))}).pow(2) - a;
            ts.push_back(tj);
            ns.push_back(k_resultant(p.monic(), w));
        }
        KPoly normT = k_interpolate(ts, ns);
        if (normT.degree() != out_deg) continue;  // degenerate evaluation; reshift
        if (!poly_gcd(normT, normT.derivative()).is_constant()) continue;
        // factor over K and look for a factor yielding a linear gcd with W
        LPoly W = {(KPoly({FieldElem(0), FieldElem(Rat(-s))}).pow(2) - a) % p,
                   (KPoly({FieldElem(0), FieldElem(Rat(-s))}) * FieldElem(2)) % p,
                   KPoly::constant(FieldElem(1))};
        for (const KPoly& h : k_factor_squarefree(normT, K)) {
            // H as element of L[T]
            LPoly H(h.degree() + 1);
            for (int i = 0; i <= h.degree(); ++i) H[i] = KPoly::constant(h[i]);
            l_trim(H);
            LPoly r = l_mod(H, W, p);
            if (r.empty()) continue;          // W divides H: no split information
            if (r.size() == 1) continue;      // unit gcd
            // r = r1*T + r0 with r1 invertible: candidate root of W
            KPoly root = (KPoly() - ((r[0] * residue_inverse(r[1], p)) % p)) % p;
            // g0 = root - s*x must square to a mod p
            KPoly g0 = (root - KPoly({FieldElem(0), FieldElem(Rat(s))})) % p;
            if (((g0 * g0 - a) % p).is_zero()) return g0;
        }
        return std::nullopt;
    }
}

}  // namespace dessins
