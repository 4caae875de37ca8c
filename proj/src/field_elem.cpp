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

#include "qkz/field_elem.hpp"

#include <stdexcept>
#include <utility>

namespace qkz {

FieldElem::FieldElem(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("FieldElem: zero denominator");
    reduce();
}

void FieldElem::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    // Push the denominator's t-offset and leading coefficient into num.
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    if (den_.leading() != 1) {
        Rational lead = den_.leading();
        num_ = num_.scaled(1 / lead);
        den_ = den_.scaled(1 / lead);
    }
    if (den_.is_one()) return;
    UniPoly g = UniPoly::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        UniPoly qn, qd;
        if (!UniPoly::div_exact(num_, g, qn) || !UniPoly::div_exact(den_, g, qd))
            throw std::logic_error("FieldElem::reduce: gcd does not divide");
        num_ = std::move(qn);
        den_ = std::move(qd);
        if (den_.low() != 0) {
            num_ = num_.shifted(-den_.low());
            den_ = den_.shifted(-den_.low());
        }
        if (den_.leading() != 1) {
            Rational lead = den_.leading();
            num_ = num_.scaled(1 / lead);
            den_ = den_.scaled(1 / lead);
        }
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    FieldElem r;
    if (den_ == rhs.den_) {
        r.num_ = num_ + rhs.num_;
        r.den_ = den_;
        if (r.num_.is_zero()) return FieldElem();
        if (!r.den_.is_one()) r.reduce();
        return r;
    }
    r.num_ = num_ * rhs.den_ + rhs.num_ * den_;
    r.den_ = den_ * rhs.den_;
    r.reduce();
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const { return *this + (-rhs); }

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    if (is_zero() || rhs.is_zero()) return FieldElem();
    FieldElem r;
    r.num_ = num_ * rhs.num_;
    r.den_ = den_ * rhs.den_;
    if (!r.den_.is_one()) r.reduce();
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& rhs) const { return *this * rhs.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero())
        throw std::domain_error("FieldElem::inverse: zero element");
    FieldElem r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

Rational FieldElem::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d == 0)
        throw std::domain_error("FieldElem::eval: denominator vanishes");
    return num_.eval(t0) / d;
}

std::string FieldElem::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

FieldElem FieldElem::parse(const std::string& text) {
    const std::size_t sep = text.find("]/");
    if (sep == std::string::npos)
        throw std::invalid_argument("FieldElem::parse: missing ']/' in '" + text + "'");
    UniPoly num = UniPoly::parse(text.substr(0, sep + 1));
    UniPoly den = UniPoly::parse(text.substr(sep + 2));
    return FieldElem(std::move(num), std::move(den));
}

FieldElem pow(const FieldElem& base, int exponent) {
    if (exponent == 0) return FieldElem(1);
    FieldElem b = exponent < 0 ? base.inverse() : base;
    int n = exponent < 0 ? -exponent : exponent;
    FieldElem acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace qkz
