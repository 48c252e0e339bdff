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

#include <optional>

#include "dessins/number_field.hpp"

namespace dessins {

// Raised when an arithmetic step modulo a supposedly-irreducible polynomial
// meets a zero divisor; `factor` is the proper divisor that was discovered.
struct ZeroDivisorError : std::domain_error {
    ZeroDivisorError(const std::string& what, KPoly factor_)
        : std::domain_error(what), factor(std::move(factor_)) {}
    KPoly factor;
};

// The coefficient field of f: the field of its first non-rational
// coefficient, or null (Q) if every coefficient is rational.
NumberFieldPtr kpoly_field(const KPoly& f);

// Norm from K[x] down to Q[x]: the product of the conjugates of f,
// computed by evaluation/interpolation. K may be null (identity).
QPoly k_norm(const KPoly& f, const NumberFieldPtr& K);

// Resultant of two polynomials over K.
FieldElem k_resultant(const KPoly& a, const KPoly& b);

KPoly k_interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

// Trager factorization: monic irreducible factors of a squarefree f over K.
std::vector<KPoly> k_factor_squarefree(const KPoly& f, const NumberFieldPtr& K);

// Full factorization f = unit * prod p_i^{m_i} over K.
std::vector<std::pair<KPoly, int>> k_factor(const KPoly& f, const NumberFieldPtr& K);

bool k_is_irreducible(const KPoly& f, const NumberFieldPtr& K);

// Square root of `a` in the residue field K[x]/(p), p irreducible over K:
// some g with g^2 ≡ a (mod p), deg g < deg p, or nullopt when a is not a
// square there. Throws ZeroDivisorError if p turns out to be reducible.
std::optional<KPoly> residue_sqrt(const KPoly& a, const KPoly& p, const NumberFieldPtr& K);

// Inverse of `a` modulo p over K (throws ZeroDivisorError on zero divisors).
KPoly residue_inverse(const KPoly& a, const KPoly& p);

}  // namespace dessins
