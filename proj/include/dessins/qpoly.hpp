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

#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dessins/rational.hpp"

namespace dessins {

// Dense univariate polynomial over a field coefficient type C.
// Coefficients are stored lowest degree first; the zero polynomial is the
// empty vector and has degree -1. All catalog polynomials have degree <= ~20,
// so no attempt is made at asymptotically fast arithmetic.
template <class C>
class PolyT {
  public:
    PolyT() = default;
    explicit PolyT(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyT constant(const C& v) { return PolyT(std::vector<C>{v}); }
    // x^k with unit coefficient
    static PolyT monomial(const C& v, int k) {
        std::vector<C> c(k + 1, C(0));
        c[k] = v;
        return PolyT(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<C>& coeffs() const { return c_; }

    const C& operator[](int i) const {
        static const C kZero{0};
        if (i < 0 || i > degree()) return kZero;
        return c_[i];
    }
    const C& lc() const {
        assert(!is_zero());
        return c_.back();
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return PolyT(std::move(r));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return PolyT(std::move(r));
    }
    PolyT operator-() const {
        std::vector<C> r = c_;
        for (auto& x : r) x = C(0) - x;
        return PolyT(std::move(r));
    }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == C(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return PolyT(std::move(r));
    }
    friend PolyT operator*(const PolyT& a, const C& s) {
        std::vector<C> r = a.c_;
        for (auto& x : r) x = x * s;
        return PolyT(std::move(r));
    }
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    // Euclidean division; requires b != 0 and invertible lc(b).
    friend std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        PolyT q, r = a;
        const C inv_lead = C(1) / b.lc();
        std::vector<C> qc(std::max<int>(a.degree() - b.degree() + 1, 0), C(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            C f = r.lc() * inv_lead;
            int shift = r.degree() - b.degree();
            qc[shift] = f;
            std::vector<C> rc = r.c_;
            for (int i = 0; i <= b.degree(); ++i) rc[i + shift] = rc[i + shift] - f * b.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = PolyT(std::move(rc));
        }
        return {PolyT(std::move(qc)), r};
    }
    friend PolyT operator/(const PolyT& a, const PolyT& b) { return divmod(a, b).first; }
    friend PolyT operator%(const PolyT& a, const PolyT& b) { return divmod(a, b).second; }

    PolyT derivative() const {
        if (c_.size() <= 1) return PolyT();
        std::vector<C> r(c_.size() - 1, C(0));
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<int>(i));
        return PolyT(std::move(r));
    }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    PolyT compose(const PolyT& g) const {
        PolyT acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

    PolyT monic() const {
        if (is_zero()) return *this;
        return *this * (C(1) / lc());
    }

    PolyT pow(int e) const {
        PolyT r = constant(C(1)), b = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
    }
    std::vector<C> c_;
};

// Monic gcd via the Euclidean algorithm with monic remainders (the
// normalization keeps number-field coefficients from exploding).
template <class C>
PolyT<C> poly_gcd(PolyT<C> a, PolyT<C> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        PolyT<C> r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = s*a + t*b with g the monic gcd.
template <class C>
PolyT<C> poly_xgcd(const PolyT<C>& a, const PolyT<C>& b, PolyT<C>* s_out, PolyT<C>* t_out) {
    PolyT<C> r0 = a, r1 = b;
    PolyT<C> s0 = PolyT<C>::constant(C(1)), s1;
    PolyT<C> t0, t1 = PolyT<C>::constant(C(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyT<C> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) throw std::domain_error("xgcd(0, 0) undefined");
    C inv = C(1) / r0.lc();
    if (s_out) *s_out = s0 * inv;
    if (t_out) *t_out = t0 * inv;
    return r0 * inv;
}

// Yun's squarefree decomposition: f = unit * prod g_i^{m_i} with the g_i
// monic, squarefree, pairwise coprime and the m_i strictly increasing.
template <class C>
std::vector<std::pair<PolyT<C>, int>> squarefree_decompose(const PolyT<C>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_decompose of zero");
    std::vector<std::pair<PolyT<C>, int>> out;
    PolyT<C> fm = f.monic();
    if (fm.degree() == 0) return out;
    PolyT<C> g = poly_gcd(fm, fm.derivative());
    PolyT<C> w = fm / g;
    int m = 1;
    while (w.degree() > 0) {
        PolyT<C> y = poly_gcd(w, g);
        PolyT<C> piece = w / y;
        if (piece.degree() > 0) out.emplace_back(piece, m);
        w = std::move(y);
        g = g / w;
        ++m;
    }
    return out;
}

// Multiplicity of the factor p in f (how many times p divides f exactly).
template <class C>
int poly_valuation(PolyT<C> f, const PolyT<C>& p) {
    if (f.is_zero()) throw std::domain_error("poly_valuation of zero");
    int v = 0;
    for (;;) {
        auto [q, r] = divmod(f, p);
        if (!r.is_zero()) return v;
        ++v;
        f = std::move(q);
    }
}

using QPoly = PolyT<Rat>;

// --- Q-specific helpers -------------------------------------------------

// Smallest positive rational c with c*f integral and primitive.
QPoly q_primitive_part(const QPoly& f, Rat* content = nullptr);

// Resultant of two rational polynomials (0 if either is zero and the other
// nonconstant; standard conventions otherwise).
Rat q_resultant(const QPoly& a, const QPoly& b);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
QPoly q_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

std::string poly_to_string(const QPoly& f, const std::string& var = "x");

}  // namespace dessins
