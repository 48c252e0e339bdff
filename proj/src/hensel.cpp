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

#include "dessins/hensel.hpp"

namespace dessins {

namespace {

// Canonical sign: first nonzero coordinate of the lowest-degree nonzero
// coefficient is positive.
KPoly canonical_sign(KPoly g) {
    for (int i = 0; i <= g.degree(); ++i) {
        const FieldElem& c = g[i];
        if (c.is_zero()) continue;
        for (const Rat& coord : c.coords()) {
            if (coord == 0) continue;
            if (coord < 0) return -g;
            return g;
        }
    }
    return g;
}

}  // namespace

KPoly hensel_sqrt_lift(const KPoly& F, const KPoly& p, int k, const NumberFieldPtr& K) {
    if (k < 1) throw std::invalid_argument("hensel_sqrt_lift: k must be positive");
    if (p.degree() < 1) throw std::invalid_argument("hensel_sqrt_lift: p must be nonconstant");
    const KPoly pm = p.monic();
    if ((F % pm).is_zero()) throw BranchPointError("hensel_sqrt_lift: F ≡ 0 (mod p)");
    auto g0 = residue_sqrt(F, pm, K);
    if (!g0) throw NotSquareError("hensel_sqrt_lift: F is not a square mod p");

    // Newton iteration g -> (g + F/g)/2, doubling the p-adic precision.
    KPoly g = *g0;
    int prec = 1;
    const FieldElem half(Rat(1, 2));
    while (prec < k) {
        prec = std::min(2 * prec, k);
        KPoly mod = pm.pow(prec);
        KPoly s, t;
        KPoly gcd = poly_xgcd(g, mod, &s, &t);
        if (gcd.degree() != 0)
            throw ZeroDivisorError("hensel_sqrt_lift: zero divisor (p not irreducible?)", gcd);
        // s ≡ g^{-1} (mod p^prec)
        g = ((g + (F % mod) * s) * half) % mod;
    }
    KPoly modk = pm.pow(k);
    g = g % modk;
    assert(((g * g - F) % modk).is_zero());
    return canonical_sign(g);
}

}  // namespace dessins
