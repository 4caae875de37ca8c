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

#include "qkz/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qkz {

void UniPoly::normalize() {
    std::size_t lead = coeffs_.size();
    while (lead > 0 && coeffs_[lead - 1] == 0) --lead;
    coeffs_.resize(lead);
    std::size_t trail = 0;
    while (trail < coeffs_.size() && coeffs_[trail] == 0) ++trail;
    if (trail > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(trail));
        offset_ += static_cast<int>(trail);
    }
    if (coeffs_.empty()) offset_ = 0;
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    UniPoly p;
    if (c != 0) {
        p.offset_ = k;
        p.coeffs_ = {c};
    }
    return p;
}

UniPoly UniPoly::from_coeffs(int offset, std::vector<Rational> coeffs) {
    UniPoly p;
    p.offset_ = offset;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

bool UniPoly::is_one() const {
    return offset_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational UniPoly::coeff(int k) const {
    if (coeffs_.empty() || k < offset_ || k > high()) return 0;
    return coeffs_[static_cast<std::size_t>(k - offset_)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty())
        throw std::domain_error("UniPoly::leading: zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    const int lo = std::min(offset_, rhs.offset_);
    const int hi = std::max(high(), rhs.high());
    UniPoly p;
    p.offset_ = lo;
    p.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.coeffs_[static_cast<std::size_t>(offset_ - lo) + i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        p.coeffs_[static_cast<std::size_t>(rhs.offset_ - lo) + i] += rhs.coeffs_[i];
    p.normalize();
    return p;
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    UniPoly p;
    p.offset_ = offset_ + rhs.offset_;
    p.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            p.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    p.normalize();
    return p;
}

UniPoly UniPoly::shifted(int k) const {
    UniPoly p = *this;
    if (!p.coeffs_.empty()) p.offset_ += k;
    return p;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    UniPoly p = *this;
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

bool UniPoly::div_exact(const UniPoly& lhs, const UniPoly& rhs, UniPoly& quot) {
    if (rhs.is_zero())
        throw std::domain_error("UniPoly::div_exact: division by zero");
    if (lhs.is_zero()) {
        quot = UniPoly();
        return true;
    }
    // Work on the polynomial parts; reattach the offset difference at the end.
    std::vector<Rational> rem = lhs.coeffs_;
    const std::vector<Rational>& d = rhs.coeffs_;
    if (rem.size() < d.size()) return false;
    std::vector<Rational> q(rem.size() - d.size() + 1, Rational(0));
    for (std::size_t step = q.size(); step-- > 0;) {
        Rational factor = rem[step + d.size() - 1] / d.back();
        q[step] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[step + j] -= factor * d[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    quot = from_coeffs(lhs.offset_ - rhs.offset_, std::move(q));
    return true;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    // Primitive pseudo-remainder sequence over the integers.  A plain
    // rational Euclidean sequence suffers exponential coefficient growth on
    // the large operands produced by elimination, so both inputs are scaled
    // to primitive integer polynomials and the content is stripped after
    // every reduction step.
    auto primitive = [](const UniPoly& p) {
        std::vector<mpz_class> v;
        if (p.is_zero()) return v;
        mpz_class den(1);
        for (const auto& c : p.coeffs_) {
            const mpz_class d = c.get_den();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        }
        v.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) v.emplace_back(c.get_num() * (den / c.get_den()));
        mpz_class cont(0);
        for (const auto& x : v) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        if (cont > 1)
            for (auto& x : v) x /= cont;
        if (!v.empty() && v.back() < 0)
            for (auto& x : v) x = -x;
        return v;
    };
    auto strip = [](std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        if (v.empty()) return;
        mpz_class cont(0);
        for (const auto& x : v) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
        if (cont > 1)
            for (auto& x : v) x /= cont;
        if (v.back() < 0)
            for (auto& x : v) x = -x;
    };

    std::vector<mpz_class> x = primitive(a);
    std::vector<mpz_class> y = primitive(b);
    if (x.size() < y.size()) std::swap(x, y);
    if (x.empty()) return UniPoly();
    while (!y.empty()) {
        std::vector<mpz_class> r = std::move(x);
        while (r.size() >= y.size()) {
            const mpz_class c = r.back();
            const mpz_class lead = y.back();
            const std::size_t shift = r.size() - y.size();
            for (auto& e : r) e *= lead;
            for (std::size_t j = 0; j < y.size(); ++j) r[shift + j] -= c * y[j];
            strip(r);
        }
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> out;
    out.reserve(x.size());
    const Rational lead(x.back());
    for (const auto& c : x) out.push_back(Rational(c) / lead);
    return from_coeffs(0, std::move(out));
}

Rational UniPoly::eval(const Rational& t0) const {
    if (coeffs_.empty()) return 0;
    if (t0 == 0) throw std::domain_error("UniPoly::eval: t=0 outside the Laurent domain");
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t0 + coeffs_[i];
    if (offset_ > 0) {
        for (int k = 0; k < offset_; ++k) acc *= t0;
    } else {
        for (int k = 0; k < -offset_; ++k) acc /= t0;
    }
    return acc;
}

std::string UniPoly::to_string() const {
    std::ostringstream out;
    out << "t^" << offset_ << ":[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) out << ",";
        out << rational_to_string(coeffs_[i]);
    }
    out << "]";
    return out.str();
}

UniPoly UniPoly::parse(const std::string& text) {
    if (text.rfind("t^", 0) != 0)
        throw std::invalid_argument("UniPoly::parse: missing 't^' in '" + text + "'");
    const std::size_t colon = text.find(':');
    const std::size_t open = text.find('[');
    const std::size_t close = text.rfind(']');
    if (colon == std::string::npos || open != colon + 1 || close != text.size() - 1)
        throw std::invalid_argument("UniPoly::parse: malformed '" + text + "'");
    int offset = 0;
    try {
        offset = std::stoi(text.substr(2, colon - 2));
    } catch (const std::exception&) {
        throw std::invalid_argument("UniPoly::parse: bad offset in '" + text + "'");
    }
    std::vector<Rational> coeffs;
    std::string body = text.substr(open + 1, close - open - 1);
    if (!body.empty()) {
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t comma = body.find(',', start);
            if (comma == std::string::npos) comma = body.size();
            coeffs.push_back(parse_rational(body.substr(start, comma - start)));
            start = comma + 1;
            if (comma == body.size()) break;
        }
    }
    return from_coeffs(offset, std::move(coeffs));
}

}  // namespace qkz
