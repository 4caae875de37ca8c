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
#include <vector>

#include "qkz/rational.hpp"

namespace qkz {

/**
 * UniPoly: a univariate Laurent polynomial in t with Rational coefficients.
 *
 * Stored as a dense coefficient vector plus an explicit lowest-power offset,
 * so t^{-6} and t^4 live in the same ring without a denominator. The zero
 * polynomial is the empty vector with offset 0; otherwise the first and last
 * stored coefficients are nonzero.
 */
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return monomial(1, 0); }
    static UniPoly constant(const Rational& c) { return monomial(c, 0); }
    static UniPoly t_power(int k) { return monomial(1, k); }
    static UniPoly monomial(const Rational& c, int k);
    /** Build from an offset and coefficient list (normalizes trailing zeros). */
    static UniPoly from_coeffs(int offset, std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /** True when exactly one coefficient is stored. */
    bool is_monomial() const { return coeffs_.size() == 1; }

    /** Lowest stored exponent (0 for the zero polynomial). */
    int low() const { return offset_; }
    /** Highest stored exponent (0 for the zero polynomial). */
    int high() const { return coeffs_.empty() ? 0 : offset_ + static_cast<int>(coeffs_.size()) - 1; }
    int width() const { return coeffs_.empty() ? 0 : high() - low(); }

    /** Coefficient of t^k (zero when outside the stored range). */
    Rational coeff(int k) const;
    /** Coefficient of the highest power; polynomial must be nonzero. */
    const Rational& leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly& operator+=(const UniPoly& rhs) { return *this = *this + rhs; }
    UniPoly& operator-=(const UniPoly& rhs) { return *this = *this - rhs; }
    UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

    bool operator==(const UniPoly& rhs) const {
        return offset_ == rhs.offset_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    /** Multiply by t^k. */
    UniPoly shifted(int k) const;
    UniPoly scaled(const Rational& c) const;

    /**
     * Exact division in the Laurent ring: returns true and sets quot when
     * rhs divides this exactly (t-powers are units, so offsets never block).
     */
    static bool div_exact(const UniPoly& lhs, const UniPoly& rhs, UniPoly& quot);

    /**
     * Monic gcd of the polynomial parts (offsets stripped); the result has
     * low() == 0 and leading coefficient 1. gcd(0,0) = 0.
     */
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    /** Evaluate at a nonzero rational point. */
    Rational eval(const Rational& t0) const;

    /** Canonical rendering "t^<low>:[c0,c1,...]" with rationals as "p/q". */
    std::string to_string() const;
    /** Parse the to_string() rendering; throws std::invalid_argument. */
    static UniPoly parse(const std::string& text);

private:
    int offset_ = 0;
    std::vector<Rational> coeffs_;

    void normalize();
};

}  // namespace qkz
