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

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace dessins {

// Exact integers and rationals. cpp_rational keeps gcd(num, den) = 1 and
// den >= 1 as a class invariant, which is exactly the BigRational contract.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

// Floor of the integer square root; exact test for perfect squares.
Int int_isqrt(const Int& a);
bool is_perfect_square(const Int& a, Int* root = nullptr);

// Exact square root of a nonnegative rational, if it exists.
std::optional<Rat> rat_sqrt(const Rat& r);

Rat rat_pow(const Rat& base, int e);

// Serialization used by the catalog file: "a" or "a/b" with b > 0.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace dessins
