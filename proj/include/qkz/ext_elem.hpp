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

#include <stdexcept>
#include <string>
#include <utility>

#include "qkz/field_elem.hpp"

namespace qkz {

/**
 * ExtElem: an element a + b*w of the quadratic extension Q(t)[w]/(w^2 + t^4).
 *
 * Hosts the boundary Hecke parameters q_0 = q_N = w, whose square is -q.
 */
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(int value) : a_(value) {}  // NOLINT: implicit by design
    ExtElem(const FieldElem& value) : a_(value) {}
    ExtElem(FieldElem a, FieldElem b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExtElem w() { return ExtElem(FieldElem(0), FieldElem(1)); }

    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    ExtElem operator-() const { return ExtElem(-a_, -b_); }
    ExtElem operator+(const ExtElem& rhs) const { return ExtElem(a_ + rhs.a_, b_ + rhs.b_); }
    ExtElem operator-(const ExtElem& rhs) const { return ExtElem(a_ - rhs.a_, b_ - rhs.b_); }
    ExtElem operator*(const ExtElem& rhs) const {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = -t^4.
        static const FieldElem q = FieldElem::t_power(4);
        return ExtElem(a_ * rhs.a_ - q * (b_ * rhs.b_), a_ * rhs.b_ + b_ * rhs.a_);
    }
    ExtElem operator/(const ExtElem& rhs) const { return *this * rhs.inverse(); }
    ExtElem& operator+=(const ExtElem& rhs) { return *this = *this + rhs; }
    ExtElem& operator-=(const ExtElem& rhs) { return *this = *this - rhs; }
    ExtElem& operator*=(const ExtElem& rhs) { return *this = *this * rhs; }
    ExtElem& operator/=(const ExtElem& rhs) { return *this = *this / rhs; }

    bool operator==(const ExtElem& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }
    bool operator!=(const ExtElem& rhs) const { return !(*this == rhs); }

    ExtElem inverse() const {
        // (a + bw)(a - bw) = a^2 + t^4 b^2, nonzero for nonzero (a, b) since
        // -t^4 is not a square in Q(t).
        static const FieldElem q = FieldElem::t_power(4);
        FieldElem norm = a_ * a_ + q * (b_ * b_);
        if (norm.is_zero())
            throw std::domain_error("ExtElem::inverse: zero element");
        FieldElem inv = norm.inverse();
        return ExtElem(a_ * inv, -b_ * inv);
    }

    std::string to_string() const {
        return "(" + a_.to_string() + ") + (" + b_.to_string() + ")w";
    }

private:
    FieldElem a_;
    FieldElem b_;
};

/** Integer power with inverse for negative exponents. */
inline ExtElem pow(const ExtElem& base, int exponent) {
    if (exponent == 0) return ExtElem(1);
    ExtElem b = exponent < 0 ? base.inverse() : base;
    int n = exponent < 0 ? -exponent : exponent;
    ExtElem acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace qkz
