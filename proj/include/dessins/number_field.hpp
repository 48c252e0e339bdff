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

#include <memory>

#include "dessins/qpoly.hpp"

namespace dessins {

struct ReducibleError : std::domain_error {
    explicit ReducibleError(const std::string& what) : std::domain_error(what) {}
};
struct FieldMismatchError : std::domain_error {
    explicit FieldMismatchError(const std::string& what) : std::domain_error(what) {}
};

// Q[t]/(m(t)) for a monic irreducible m. The rational field itself is
// represented by a null NumberFieldPtr throughout; nf_create returns null
// for degree-1 input.
class NumberField {
  public:
    explicit NumberField(QPoly monic_min_poly);
    const QPoly& min_poly() const { return min_poly_; }
    int degree() const { return min_poly_.degree(); }

  private:
    QPoly min_poly_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

// Validates irreducibility; degree-1 inputs yield Q (null pointer).
NumberFieldPtr nf_create(const QPoly& min_poly);

// An element of a number field in the power basis 1, t, ..., t^{d-1}.
// A null field means the element is a plain rational; rationals embed into
// any field on contact, so mixed arithmetic works without explicit casts.
class FieldElem {
  public:
    FieldElem() : coords_{Rat(0)} {}
    FieldElem(int v) : coords_{Rat(v)} {}  // NOLINT: implicit by design (poly code uses C(0), C(1))
    explicit FieldElem(Rat v) : coords_{std::move(v)} {}
    FieldElem(NumberFieldPtr field, std::vector<Rat> coords);

    static FieldElem generator(const NumberFieldPtr& field);

    const NumberFieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    FieldElem inverse() const;
    // Field norm down to Q (resultant of the minimal polynomial with the
    // coordinate polynomial); for rationals this is the value itself.
    Rat norm() const;

    std::string to_string(const std::string& gen = "t") const;

  private:
    // poly in t representing this element, degree < field degree
    QPoly as_qpoly() const { return QPoly(coords_); }
    static void unify(const FieldElem& a, const FieldElem& b, NumberFieldPtr* field,
                      std::vector<Rat>* ac, std::vector<Rat>* bc);

    NumberFieldPtr field_;       // null = Q
    std::vector<Rat> coords_;    // size = max(1, field degree)
};

using KPoly = PolyT<FieldElem>;

// Lift a rational polynomial into K[x] coefficients.
KPoly kpoly_from_q(const QPoly& f);
// All coefficients rational? Then project back to Q[x].
bool kpoly_is_rational(const KPoly& f);
QPoly kpoly_to_q(const KPoly& f);

std::string kpoly_to_string(const KPoly& f, const std::string& var = "x",
                            const std::string& gen = "t");

}  // namespace dessins
