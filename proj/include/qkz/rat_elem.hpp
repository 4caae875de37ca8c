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

#include "qkz/rational.hpp"

namespace qkz {

/**
 * RatElem: a plain rational number carrying the scalar interface shared by
 * FieldElem and CycElem.
 *
 * Used to run the solver with the deformation parameter evaluated at a fixed
 * rational value, where coefficients stay small enough to handle chain sizes
 * whose symbolic form does not fit in memory.
 */
class RatElem {
public:
    RatElem() = default;
    RatElem(int value) : v_(value) {}  // NOLINT: implicit by design
    explicit RatElem(Rational value) : v_(std::move(value)) {}

    const Rational& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    RatElem operator-() const { return RatElem(-v_); }
    RatElem operator+(const RatElem& rhs) const { return RatElem(v_ + rhs.v_); }
    RatElem operator-(const RatElem& rhs) const { return RatElem(v_ - rhs.v_); }
    RatElem operator*(const RatElem& rhs) const { return RatElem(v_ * rhs.v_); }
    RatElem operator/(const RatElem& rhs) const { return *this * rhs.inverse(); }
    RatElem& operator+=(const RatElem& rhs) { v_ += rhs.v_; return *this; }
    RatElem& operator-=(const RatElem& rhs) { v_ -= rhs.v_; return *this; }
    RatElem& operator*=(const RatElem& rhs) { v_ *= rhs.v_; return *this; }
    RatElem& operator/=(const RatElem& rhs) { return *this = *this / rhs; }

    bool operator==(const RatElem& rhs) const { return v_ == rhs.v_; }
    bool operator!=(const RatElem& rhs) const { return !(*this == rhs); }

    RatElem inverse() const {
        if (v_ == 0)
            throw std::domain_error("RatElem::inverse: zero element");
        return RatElem(1 / v_);
    }

    /** Canonical rendering "p/q". */
    std::string to_string() const { return rational_to_string(v_); }

    static RatElem parse(const std::string& text) { return RatElem(parse_rational(text)); }

private:
    Rational v_;
};

/** Integer power with inverse for negative exponents. */
inline RatElem pow(const RatElem& base, int exponent) {
    if (exponent == 0) return RatElem(1);
    RatElem b = exponent < 0 ? base.inverse() : base;
    int n = exponent < 0 ? -exponent : exponent;
    RatElem acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace qkz
