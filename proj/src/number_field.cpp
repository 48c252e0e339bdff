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

#include "dessins/number_field.hpp"

#include "dessins/factor_q.hpp"

namespace dessins {

NumberField::NumberField(QPoly monic_min_poly) : min_poly_(std::move(monic_min_poly)) {
    assert(min_poly_.degree() >= 2);
    assert(min_poly_.lc() == 1);
}

NumberFieldPtr nf_create(const QPoly& min_poly) {
    if (min_poly.degree() < 1) throw std::domain_error("nf_create: constant minimal polynomial");
    QPoly m = min_poly.monic();
    if (m.degree() == 1) return nullptr;  // Q itself
    if (!q_is_irreducible(m))
        throw ReducibleError("nf_create: reducible minimal polynomial " + poly_to_string(m, "t"));
    return std::make_shared<const NumberField>(std::move(m));
}

FieldElem::FieldElem(NumberFieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    const size_t want = field_ ? static_cast<size_t>(field_->degree()) : 1;
    if (coords_.size() > want) throw std::invalid_argument("FieldElem: too many coordinates");
    coords_.resize(want, Rat(0));
    if (!field_ && coords_.empty()) coords_.assign(1, Rat(0));
}

FieldElem FieldElem::generator(const NumberFieldPtr& field) {
    if (!field) throw std::domain_error("generator of Q requested");
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return FieldElem(field, std::move(c));
}

bool FieldElem::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat FieldElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("FieldElem: not rational");
    return coords_[0];
}

void FieldElem::unify(const FieldElem& a, const FieldElem& b, NumberFieldPtr* field,
                      std::vector<Rat>* ac, std::vector<Rat>* bc) {
    if (a.field_ && b.field_ && a.field_ != b.field_) {
        if (a.field_->min_poly() != b.field_->min_poly())
            throw FieldMismatchError("FieldElem: operands from different fields");
    }
    *field = a.field_ ? a.field_ : b.field_;
    const size_t d = *field ? static_cast<size_t>((*field)->degree()) : 1;
    *ac = a.coords_;
    ac->resize(d, Rat(0));
    *bc = b.coords_;
    bc->resize(d, Rat(0));
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    NumberFieldPtr f;
    std::vector<Rat> x, y;
    FieldElem::unify(a, b, &f, &x, &y);
    for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return FieldElem(f, std::move(x));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    NumberFieldPtr f;
    std::vector<Rat> x, y;
    FieldElem::unify(a, b, &f, &x, &y);
    for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return FieldElem(f, std::move(x));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    NumberFieldPtr f;
    std::vector<Rat> x, y;
    FieldElem::unify(a, b, &f, &x, &y);
    if (!f) return FieldElem(x[0] * y[0]);
    QPoly prod = QPoly(std::move(x)) * QPoly(std::move(y));
    QPoly red = prod % f->min_poly();
    std::vector<Rat> c(f->degree(), Rat(0));
    for (int i = 0; i <= red.degree(); ++i) c[i] = red[i];
    return FieldElem(f, std::move(c));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
    if (!field_) return FieldElem(Rat(1) / coords_[0]);
    if (is_rational()) {
        std::vector<Rat> c(field_->degree(), Rat(0));
        c[0] = Rat(1) / coords_[0];
        return FieldElem(field_, std::move(c));
    }
    QPoly s, t;
    QPoly g = poly_xgcd(as_qpoly(), field_->min_poly(), &s, &t);
    if (g.degree() != 0)
        throw std::domain_error("FieldElem: element not invertible (reducible modulus?)");
    // s * this ≡ g (a nonzero constant, = 1 since xgcd normalizes) mod m
    std::vector<Rat> c(field_->degree(), Rat(0));
    for (int i = 0; i <= s.degree(); ++i) c[i] = s[i];
    return FieldElem(field_, std::move(c));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    NumberFieldPtr f;
    std::vector<Rat> x, y;
    FieldElem::unify(a, b, &f, &x, &y);
    return x == y;
}

Rat FieldElem::norm() const {
    if (!field_) return coords_[0];
    if (is_zero()) return 0;
    return q_resultant(field_->min_poly(), as_qpoly());
}

std::string FieldElem::to_string(const std::string& gen) const {
    if (is_rational()) return rat_to_string(coords_[0]);
    return "(" + poly_to_string(as_qpoly(), gen) + ")";
}

KPoly kpoly_from_q(const QPoly& f) {
    std::vector<FieldElem> c(f.degree() + 1, FieldElem(0));
    for (int i = 0; i <= f.degree(); ++i) c[i] = FieldElem(f[i]);
    return KPoly(std::move(c));
}

bool kpoly_is_rational(const KPoly& f) {
    for (const FieldElem& c : f.coeffs())
        if (!c.is_rational()) return false;
    return true;
}

QPoly kpoly_to_q(const KPoly& f) {
    std::vector<Rat> c(f.degree() + 1, Rat(0));
    for (int i = 0; i <= f.degree(); ++i) c[i] = f[i].rational_value();
    return QPoly(std::move(c));
}

std::string kpoly_to_string(const KPoly& f, const std::string& var, const std::string& gen) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        if (f[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += f[i].to_string(gen);
        if (i > 0) {
            out += "*" + var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace dessins
