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

#include "dessins/qpoly.hpp"

namespace dessins {

QPoly q_primitive_part(const QPoly& f, Rat* content) {
    if (f.is_zero()) {
        if (content) *content = 0;
        return f;
    }
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& c : f.coeffs()) den_lcm = int_lcm(den_lcm, rat_den(c));
    for (const Rat& c : f.coeffs()) num_gcd = int_gcd(num_gcd, rat_num(c) * (den_lcm / rat_den(c)));
    Rat scale(den_lcm, num_gcd);
    if (f.lc() < 0) scale = -scale;
    if (content) *content = Rat(1) / scale;
    return f * scale;
}

Rat q_resultant(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return rat_pow(a.lc(), b.degree());
    if (b.degree() == 0) return rat_pow(b.lc(), a.degree());
    // Res(a, b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} Res(b, r)
    QPoly r = a % b;
    Rat sign = (a.degree() * b.degree()) % 2 ? Rat(-1) : Rat(1);
    if (r.is_zero()) return 0;
    return sign * rat_pow(b.lc(), a.degree() - r.degree()) * q_resultant(b, r);
}

QPoly q_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    assert(xs.size() == ys.size());
    const size_t n = xs.size();
    std::vector<Rat> dd = ys;  // Newton divided differences, in place
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    QPoly acc;
    for (size_t i = n; i-- > 0;) acc = acc * QPoly({-xs[i], 1}) + QPoly::constant(dd[i]);
    return acc;
}

std::string poly_to_string(const QPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Rat c = f[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rat a = c > 0 ? c : Rat(-c);
        if (a != 1 || i == 0) os << rat_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace dessins
