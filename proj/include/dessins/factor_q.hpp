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

#include "dessins/qpoly.hpp"

namespace dessins {

// Monic irreducible factors of a squarefree rational polynomial
// (Zassenhaus: factor modulo a small prime, Hensel lift, recombine).
std::vector<QPoly> q_factor_squarefree(const QPoly& f);

// Full factorization f = unit * prod p_i^{m_i} over Q, p_i monic irreducible.
std::vector<std::pair<QPoly, int>> q_factor(const QPoly& f);

bool q_is_irreducible(const QPoly& f);

}  // namespace dessins
