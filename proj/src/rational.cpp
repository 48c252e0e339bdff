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

#include "dessins/rational.hpp"

namespace dessins {

Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int int_isqrt(const Int& a) {
    if (a < 0) throw std::domain_error("int_isqrt: negative argument");
    return boost::multiprecision::sqrt(a);
}

bool is_perfect_square(const Int& a, Int* root) {
    if (a < 0) return false;
    Int r = int_isqrt(a);
    if (r * r != a) return false;
    if (root) *root = r;
    return true;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int rn, rd;
    if (!is_perfect_square(rat_num(r), &rn)) return std::nullopt;
    if (!is_perfect_square(rat_den(r), &rd)) return std::nullopt;
    return Rat(rn, rd);
}

Rat rat_pow(const Rat& base, int e) {
    if (e < 0) return Rat(1) / rat_pow(base, -e);
    Rat r(1), b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

}  // namespace dessins
