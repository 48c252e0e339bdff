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

#include "dessins/factor_k.hpp"

namespace dessins {

struct NotSquareError : std::domain_error {
    explicit NotSquareError(const std::string& what) : std::domain_error(what) {}
};
struct BranchPointError : std::domain_error {
    explicit BranchPointError(const std::string& what) : std::domain_error(what) {}
};

// Local square root: g with g^2 ≡ F (mod p^k) and deg g < k*deg p, for
// irreducible p with F a nonzero square in the residue field. The mod-p
// branch is fixed deterministically (first nonzero coordinate of the first
// nonzero coefficient positive), so results are reproducible; the other
// branch is -g.
//
// Errors: NotSquareError (inert), BranchPointError (p | F), ZeroDivisorError
// (p was not irreducible and the computation split it).
KPoly hensel_sqrt_lift(const KPoly& F, const KPoly& p, int k, const NumberFieldPtr& K);

}  // namespace dessins
