/*
   Copyright 2026 the qkzforge authors

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

#include <string>

#include "qkz/rational.hpp"
#include "qkz/unipoly.hpp"

namespace qkz {

/**
 * FieldElem: an element of the rational-function field Q(t).
 *
 * Canonical form: num is a Laurent polynomial in t, den is an ordinary
 * polynomial with low() == 0, nonzero constant term and leading coefficient 1,
 * and gcd(num cleared of t-offsets, den) = 1. With this normalization equal
 * elements have identical storage, so operator== is structural.
 */
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(int value) : num_(UniPoly::constant(value)) {}  // NOLINT: implicit by design
    FieldElem(const Rational& value) : num_(UniPoly::constant(value)) {}
    explicit FieldElem(UniPoly num) : num_(std::move(num)) {}
    FieldElem(UniPoly num, UniPoly den);

    static FieldElem t_power(int k) { return FieldElem(UniPoly::t_power(k)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    /** True when the element is a Laurent polynomial (denominator 1). */
    bool is_polynomial() const { return den_.is_one(); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator/(const FieldElem& rhs) const;
    FieldElem& operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
    FieldElem& operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
    FieldElem& operator*=(const FieldElem& rhs) { return *this = *this * rhs; }
    FieldElem& operator/=(const FieldElem& rhs) { return *this = *this / rhs; }

    bool operator==(const FieldElem& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const FieldElem& rhs) const { return !(*this == rhs); }

    /** Multiplicative inverse; throws std::domain_error on zero. */
    FieldElem inverse() const;

    /** Evaluate at a nonzero rational t; throws on a denominator zero. */
    Rational eval(const Rational& t0) const;

    /** Canonical rendering "t^<off>:[...]/t^0:[...]". */
    std::string to_string() const;
    /** Parse the to_string() rendering. */
    static FieldElem parse(const std::string& text);

private:
    UniPoly num_;                   // Laurent numerator
    UniPoly den_ = UniPoly::one();  // monic polynomial, constant term nonzero

    void reduce();
};

/** Integer power with field inverse for negative exponents. */
FieldElem pow(const FieldElem& base, int exponent);

}  // namespace qkz
