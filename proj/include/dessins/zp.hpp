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

#include <cstdint>
#include <vector>

#include "dessins/qpoly.hpp"

namespace dessins {

// Polynomials over F_p for word-sized odd primes, used only as the modular
// side of Zassenhaus factorization over Z.
using ZpPoly = std::vector<int64_t>;  // lowest degree first, coefficients in [0, p)

ZpPoly zp_from_int_poly(const std::vector<Int>& coeffs, int64_t p);
ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, int64_t p);
ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, int64_t p);
ZpPoly zp_gcd(ZpPoly a, ZpPoly b, int64_t p);
ZpPoly zp_monic(ZpPoly a, int64_t p);
ZpPoly zp_derivative(const ZpPoly& a, int64_t p);
ZpPoly zp_powmod(const ZpPoly& base, Int e, const ZpPoly& m, int64_t p);
int zp_deg(const ZpPoly& a);

// Full monic factorization over F_p of a squarefree monic input
// (distinct-degree then Cantor-Zassenhaus equal-degree splitting with a
// deterministic RNG).
std::vector<ZpPoly> zp_factor_squarefree(const ZpPoly& f, int64_t p);

}  // namespace dessins
