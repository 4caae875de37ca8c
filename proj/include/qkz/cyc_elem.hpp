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

#include "qkz/rational.hpp"

namespace qkz {

/**
 * CycElem: an element c0 + c1*x of Q[x]/(x^2 - x + 1).
 *
 * x is a primitive sixth root of unity; reduction x^2 -> x - 1 is applied by
 * every operation, so the (c0, c1) pair is canonical.
 */
class CycElem {
public:
    CycElem() = default;
    CycElem(int value) : c0_(value) {}  // NOLINT: implicit by design
    CycElem(const Rational& value) : c0_(value) {}
    CycElem(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

    static CycElem x() { return CycElem(0, 1); }

    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }

    bool is_zero() const { return c0_ == 0 && c1_ == 0; }
    bool is_one() const { return c0_ == 1 && c1_ == 0; }
    bool is_rational() const { return c1_ == 0; }

    CycElem operator-() const { return CycElem(-c0_, -c1_); }
    CycElem operator+(const CycElem& rhs) const { return CycElem(c0_ + rhs.c0_, c1_ + rhs.c1_); }
    CycElem operator-(const CycElem& rhs) const { return CycElem(c0_ - rhs.c0_, c1_ - rhs.c1_); }
    CycElem operator*(const CycElem& rhs) const {
        // (a0 + a1 x)(b0 + b1 x) with x^2 = x - 1.
        Rational cross = c1_ * rhs.c1_;
        return CycElem(c0_ * rhs.c0_ - cross, c0_ * rhs.c1_ + c1_ * rhs.c0_ + cross);
    }
    CycElem operator/(const CycElem& rhs) const { return *this * rhs.inverse(); }
    CycElem& operator+=(const CycElem& rhs) { return *this = *this + rhs; }
    CycElem& operator-=(const CycElem& rhs) { return *this = *this - rhs; }
    CycElem& operator*=(const CycElem& rhs) { return *this = *this * rhs; }
    CycElem& operator/=(const CycElem& rhs) { return *this = *this / rhs; }

    bool operator==(const CycElem& rhs) const { return c0_ == rhs.c0_ && c1_ == rhs.c1_; }
    bool operator!=(const CycElem& rhs) const { return !(*this == rhs); }

    CycElem inverse() const {
        // Norm (c0 + c1 x)(c0 + c1 - c1 x) = c0^2 + c0 c1 + c1^2.
        Rational norm = c0_ * c0_ + c0_ * c1_ + c1_ * c1_;
        if (norm == 0)
            throw std::domain_error("CycElem::inverse: zero element");
        return CycElem((c0_ + c1_) / norm, -c1_ / norm);
    }

    /** Canonical rendering "x:[c0,c1]" with rationals as "p/q". */
    std::string to_string() const {
        return "x:[" + rational_to_string(c0_) + "," + rational_to_string(c1_) + "]";
    }

    static CycElem parse(const std::string& text) {
        if (text.rfind("x:[", 0) != 0 || text.back() != ']')
            throw std::invalid_argument("CycElem::parse: malformed '" + text + "'");
        const std::string body = text.substr(3, text.size() - 4);
        const std::size_t comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("CycElem::parse: malformed '" + text + "'");
        return CycElem(parse_rational(body.substr(0, comma)),
                       parse_rational(body.substr(comma + 1)));
    }

private:
    Rational c0_;
    Rational c1_;
};

/** Integer power with inverse for negative exponents. */
inline CycElem pow(const CycElem& base, int exponent) {
    if (exponent == 0) return CycElem(1);
    CycElem b = exponent < 0 ? base.inverse() : base;
    int n = exponent < 0 ? -exponent : exponent;
    CycElem acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace qkz
