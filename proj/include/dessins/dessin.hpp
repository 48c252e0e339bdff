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
#include <stdexcept>
#include <string>
#include <vector>

namespace dessins {

// A permutation on {0, ..., n-1}, image form.
using Perm = std::vector<int>;

Perm perm_compose_apply_second_first(const Perm& outer, const Perm& inner);  // outer ∘ inner
std::vector<std::vector<int>> perm_cycles(const Perm& p);

struct MapValidationError : std::invalid_argument {
    explicit MapValidationError(const std::string& what) : std::invalid_argument(what) {}
};

struct ValencyProfile {
    std::vector<int> vertex_valencies;  // descending
    std::vector<int> face_valencies;    // descending

    friend bool operator==(const ValencyProfile& a, const ValencyProfile& b) = default;
};

// A dessin as a transitive permutation pair on darts 1..2n (stored 0-based):
// sigma rotates darts counterclockwise around vertices, alpha is the
// fixed-point-free involution pairing the two darts of each edge.
// Faces are the cycles of sigma∘alpha with alpha applied first; this
// convention makes dual∘dual the identity up to isomorphism.
class Dessin {
  public:
    // Throws MapValidationError (NotInvolution / FixedPointInAlpha /
    // Disconnected) on invalid input.
    Dessin(int n_edges, Perm sigma, Perm alpha);

    int n_edges() const { return n_; }
    int n_darts() const { return 2 * n_; }
    const Perm& sigma() const { return sigma_; }
    const Perm& alpha() const { return alpha_; }

    std::vector<std::vector<int>> faces() const;  // cycles of sigma∘alpha, 0-based darts
    int genus() const;
    ValencyProfile profile() const;
    int aut_order() const;
    Dessin dual() const;

    // Isomorphism-class key: lexicographically minimal BFS relabeling of
    // (sigma, alpha) over all start darts. Equal keys <=> isomorphic.
    std::vector<uint8_t> canonical_key() const;
    // The dessin relabeled into its canonical form.
    Dessin canonical_form() const;

    // "n;sigma-cycles;alpha-cycles" with darts 1..2n, e.g.
    // "2;(1 2 3)(4);(1 4)(2 3)". Singleton cycles are written explicitly.
    std::string serialize() const;
    static Dessin deserialize(const std::string& text);

    friend bool operator==(const Dessin& a, const Dessin& b) {
        return a.n_ == b.n_ && a.sigma_ == b.sigma_ && a.alpha_ == b.alpha_;
    }

  private:
    int n_;
    Perm sigma_, alpha_;
};

// Brute-force |Aut| as the number of permutations commuting with both sigma
// and alpha. Exponential; test oracle for small n only.
int aut_order_brute_force(const Dessin& d);

std::string profile_to_string(const ValencyProfile& p);

}  // namespace dessins
