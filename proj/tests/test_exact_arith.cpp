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

#include <random>

#include "dessins/factor_k.hpp"
#include "dessins/factor_q.hpp"
#include "dessins/hensel.hpp"
#include "doctest.h"

using namespace dessins;

namespace {

QPoly qp(std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly random_qpoly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_d(0, max_deg), coef_d(-9, 9), den_d(1, 4);
    int d = deg_d(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(coef_d(rng), den_d(rng));
    if (c.back() == 0) c.back() = 1;
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(rat_from_string("-3/6") == Rat(-1, 2));
    CHECK(rat_to_string(Rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(*rat_sqrt(Rat(9, 4)) == Rat(3, 2));
    CHECK(!rat_sqrt(Rat(2)).has_value());
    CHECK(!rat_sqrt(Rat(-4)).has_value());
}

TEST_CASE("polynomial arithmetic and division") {
    QPoly f = qp({-1, 0, 1});  // x^2 - 1
    QPoly g = qp({-1, 1});     // x - 1
    auto [q, r] = divmod(f, g);
    CHECK(q == qp({1, 1}));
    CHECK(r.is_zero());
    CHECK(f.eval(Rat(3)) == Rat(8));
    CHECK((f * g).degree() == 3);
}

TEST_CASE("poly_gcd examples") {
    CHECK(poly_gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
    // gcd(f, f') for f = (29x^3 - 54x^2 + 108x + 108)^2 recovers the cube-free part
    QPoly base = qp({108, 108, -54, 29});
    QPoly f = base * base;
    CHECK(poly_gcd(f, f.derivative()) == base.monic());
    // gcd(f, 0) = monic f
    CHECK(poly_gcd(f, QPoly()) == f.monic());
}

TEST_CASE("squarefree decomposition") {
    // x^4 - 2x^2 + 1 = (x^2-1)^2
    auto d1 = squarefree_decompose(qp({1, 0, -2, 0, 1}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first == qp({-1, 0, 1}));
    CHECK(d1[0].second == 2);

    // 625 x^6 / 11664 decomposes as (x, 6)
    QPoly n0 = QPoly::monomial(Rat(625, 11664), 6);
    auto d2 = squarefree_decompose(n0);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == qp({0, 1}));
    CHECK(d2[0].second == 6);

    // x(x-1)^2(x+1)^2 -> [(x,1), (x^2-1,2)]
    QPoly f = qp({0, 1}) * qp({-1, 1}) * qp({-1, 1}) * qp({1, 1}) * qp({1, 1});
    auto d3 = squarefree_decompose(f);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == std::make_pair(qp({0, 1}), 1));
    CHECK(d3[1] == std::make_pair(qp({-1, 0, 1}), 2));
}

TEST_CASE("squarefree decomposition round-trips on random inputs") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 200; ++it) {
        QPoly f = random_qpoly(rng, 4) * random_qpoly(rng, 3) * random_qpoly(rng, 3);
        if (f.degree() < 1) continue;
        QPoly rebuilt = QPoly::constant(1);
        for (const auto& [g, m] : squarefree_decompose(f)) {
            CHECK(poly_gcd(g, g.derivative()).is_constant());
            rebuilt = rebuilt * g.pow(m);
        }
        CHECK(rebuilt == f.monic());
    }
}

TEST_CASE("gcd scaling property") {
    std::mt19937_64 rng(777);
    for (int it = 0; it < 60; ++it) {
        QPoly f = random_qpoly(rng, 4), g = random_qpoly(rng, 4), h = random_qpoly(rng, 3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        QPoly lhs = poly_gcd(f * h, g * h);
        QPoly rhs = (h * poly_gcd(f, g)).monic();
        // equal up to unit; both monic here
        CHECK((lhs % rhs).is_zero());
        CHECK(lhs.degree() == rhs.degree());
    }
}

TEST_CASE("factorization over Q") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    auto f1 = q_factor(qp({-1, 0, 0, 0, 1}));
    REQUIRE(f1.size() == 3);
    CHECK(f1[0] == std::make_pair(qp({-1, 1}), 1));
    CHECK(f1[1] == std::make_pair(qp({1, 1}), 1));
    CHECK(f1[2] == std::make_pair(qp({1, 0, 1}), 1));

    // 4x^3 - 27x + 27 = 4 (x+3)(x - 3/2)^2
    auto f2 = q_factor(qp({27, -27, 0, 4}));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0] == std::make_pair(qp({3, 1}), 1));
    CHECK(f2[1] == std::make_pair(QPoly({Rat(-3, 2), Rat(1)}), 2));

    CHECK(q_is_irreducible(qp({1, 1, 1, 1, 1, 1, 1})));  // cyclotomic Phi_7
    CHECK(q_is_irreducible(qp({-2, 0, 1})));
    CHECK(!q_is_irreducible(qp({-1, 0, 1})));
}

TEST_CASE("factorization round-trips with squarefree factors") {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 40; ++it) {
        QPoly f = random_qpoly(rng, 3) * random_qpoly(rng, 3) * random_qpoly(rng, 2);
        if (f.degree() < 1) continue;
        QPoly rebuilt = QPoly::constant(f.lc());
        for (const auto& [p, m] : q_factor(f)) {
            CHECK(poly_gcd(p, p.derivative()).is_constant());
            CHECK(q_is_irreducible(p));
            rebuilt = rebuilt * p.pow(m);
        }
        CHECK(rebuilt == f);
    }
}

TEST_CASE("nf_create") {
    auto f7 = nf_create(qp({7, 0, 1}));  // t^2 + 7 (houses i*sqrt(7))
    REQUIRE(f7);
    CHECK(f7->degree() == 2);

    CHECK(nf_create(qp({-1, 1})) == nullptr);  // t - 1 -> Q
    CHECK_THROWS_AS(nf_create(qp({-1, 0, 1})), ReducibleError);
}

TEST_CASE("FieldElem arithmetic in catalog fields") {
    std::vector<QPoly> min_polys = {
        qp({-2, 0, 1}),            // sqrt(2)
        qp({7, 0, 1}),             // i sqrt(7)
        qp({-105, 0, 1}),          // sqrt(105)
        qp({3, 0, 1}),             // i sqrt(3)
        qp({-4, -1, 2, 7}),        // 7t^3 + 2t^2 - t - 4
        qp({-172, 1427, -544, 256})  // 256t^3 - 544t^2 + 1427t - 172
    };
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef_d(-5, 5);
    for (const QPoly& mp : min_polys) {
        auto K = nf_create(mp);
        REQUIRE(K);
        for (int it = 0; it < 100; ++it) {
            std::vector<Rat> ac(K->degree()), bc(K->degree());
            for (auto& x : ac) x = coef_d(rng);
            for (auto& x : bc) x = coef_d(rng);
            FieldElem a(K, ac), b(K, bc);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK((a * b) * a.inverse() == b);
            CHECK(a * a.inverse() == FieldElem(1));
        }
        // rationals embed transparently
        FieldElem theta = FieldElem::generator(K);
        CHECK(theta + FieldElem(0) == theta);
        CHECK(theta * FieldElem(1) == theta);
    }
}

TEST_CASE("field mismatch is an error") {
    auto a = nf_create(qp({-2, 0, 1}));
    auto b = nf_create(qp({7, 0, 1}));
    CHECK_THROWS_AS(FieldElem::generator(a) + FieldElem::generator(b), FieldMismatchError);
}

TEST_CASE("factorization over number fields (Trager)") {
    auto K = nf_create(qp({-2, 0, 1}));  // Q(sqrt 2)
    // x^2 - 2 = (x - sqrt2)(x + sqrt2)
    KPoly f = kpoly_from_q(qp({-2, 0, 1}));
    auto factors = k_factor(f, K);
    REQUIRE(factors.size() == 2);
    for (const auto& [p, m] : factors) {
        CHECK(p.degree() == 1);
        CHECK(m == 1);
    }
    KPoly rebuilt = KPoly::constant(FieldElem(1));
    for (const auto& [p, m] : factors) rebuilt = rebuilt * p.pow(m);
    CHECK(rebuilt == f.monic());

    // x^2 + 1 stays irreducible over Q(sqrt 2)
    CHECK(k_is_irreducible(kpoly_from_q(qp({1, 0, 1})), K));

    // x^4 - 2 = (x^2 - sqrt2)(x^2 + sqrt2) over Q(sqrt 2)
    auto f2 = k_factor(kpoly_from_q(qp({-2, 0, 0, 0, 1})), K);
    CHECK(f2.size() == 2);
    for (const auto& [p, m] : f2) {
        CHECK(p.degree() == 2);
        CHECK(m == 1);
    }
}

TEST_CASE("Trager over a cubic catalog field") {
    auto K = nf_create(qp({-4, -1, 2, 7}));  // 7t^3+2t^2-t-4 = 0
    FieldElem nu = FieldElem::generator(K);
    // (x - nu)(x - nu^2)(x + 1) expands and factors back
    KPoly f = KPoly({FieldElem(0) - nu, FieldElem(1)}) *
              KPoly({FieldElem(0) - nu * nu, FieldElem(1)}) * KPoly({FieldElem(1), FieldElem(1)});
    auto factors = k_factor(f, K);
    CHECK(factors.size() == 3);
    KPoly rebuilt = KPoly::constant(FieldElem(1));
    for (const auto& [p, m] : factors) {
        CHECK(p.degree() == 1);
        rebuilt = rebuilt * p.pow(m);
    }
    CHECK(rebuilt == f.monic());
}

TEST_CASE("hensel_sqrt_lift examples") {
    // F = 1 + x, p = x, k = 3 -> 1 + x/2 - x^2/8
    KPoly F = kpoly_from_q(qp({1, 1}));
    KPoly p = kpoly_from_q(qp({0, 1}));
    KPoly g = hensel_sqrt_lift(F, p, 3, nullptr);
    CHECK(g == KPoly({FieldElem(1), FieldElem(Rat(1, 2)), FieldElem(Rat(-1, 8))}));

    // F = 4, p = x - 5, k = 1 -> 2
    CHECK(hensel_sqrt_lift(kpoly_from_q(qp({4})), kpoly_from_q(qp({-5, 1})), 1, nullptr) ==
          KPoly::constant(FieldElem(2)));

    // F = x^3 - x, p = x - 3: F(3) = 24 is not a rational square
    CHECK_THROWS_AS(hensel_sqrt_lift(kpoly_from_q(qp({0, -1, 0, 1})), kpoly_from_q(qp({-3, 1})), 2,
                                     nullptr),
                    NotSquareError);

    // F ≡ 0 mod p flags a branch point
    CHECK_THROWS_AS(
        hensel_sqrt_lift(kpoly_from_q(qp({0, -1, 0, 1})), kpoly_from_q(qp({0, 1})), 1, nullptr),
        BranchPointError);
}

TEST_CASE("hensel_sqrt_lift exactness on random instances") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coef_d(-6, 6), k_d(1, 5);
    int done = 0;
    while (done < 100) {
        // random F, random linear or quadratic p
        QPoly Fq = random_qpoly(rng, 5);
        int pd = 1 + static_cast<int>(rng() % 2);
        std::vector<Rat> pc(pd + 1);
        for (auto& c : pc) c = coef_d(rng);
        pc.back() = 1;
        QPoly pq(pc);
        if (Fq.is_zero() || !poly_gcd(Fq, pq).is_constant()) continue;
        if (pd == 2 && !q_is_irreducible(pq)) continue;
        int k = k_d(rng);
        KPoly F = kpoly_from_q(Fq), p = kpoly_from_q(pq);
        try {
            KPoly g = hensel_sqrt_lift(F, p, k, nullptr);
            CHECK(((g * g - F) % p.pow(k)).is_zero());
            CHECK(g.degree() < k * pq.degree());
            ++done;
        } catch (const NotSquareError&) {
            // fine: F simply isn't a square at this place; try another draw
        }
    }
}

TEST_CASE("residue square roots over a quadratic field") {
    auto K = nf_create(qp({-2, 0, 1}));  // Q(sqrt 2)
    // 2 is a square in Q(sqrt2)[x]/(x - 3) even though it is not in Q
    auto r = residue_sqrt(kpoly_from_q(qp({2})), kpoly_from_q(qp({-3, 1})), K);
    REQUIRE(r.has_value());
    CHECK((*r * *r) % kpoly_from_q(qp({-3, 1})) == kpoly_from_q(qp({2})) % kpoly_from_q(qp({-3, 1})));

    // -1 is not a square in Q[x]/(x^2 - 2) (a real field)
    auto r2 = residue_sqrt(kpoly_from_q(qp({-1})), kpoly_from_q(qp({-2, 0, 1})), nullptr);
    CHECK(!r2.has_value());

    // x is a square mod x^2 - 2 iff ... check a known one: (x+1)^2 = x^2+2x+1 ≡ 2x+3
    auto r3 = residue_sqrt(kpoly_from_q(qp({3, 2})), kpoly_from_q(qp({-2, 0, 1})), nullptr);
    REQUIRE(r3.has_value());
    KPoly sq = (*r3 * *r3) % kpoly_from_q(qp({-2, 0, 1}));
    CHECK(sq == kpoly_from_q(qp({3, 2})));
}
