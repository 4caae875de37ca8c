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

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qkz/errors.hpp"

namespace qkz {

/**
 * Monomials over at most 8 variables, packed into a uint64.
 *
 * Each byte lane holds one signed exponent biased by 128; lane 0 occupies the
 * most significant byte. Unsigned comparison of the packed keys is then the
 * lexicographic order on exponent tuples with lane 0 strongest. The solver
 * assigns lanes 0..N-1 to z_1..z_N, lane N to zeta_L and lane N+1 to zeta_R.
 */
using Mono = std::uint64_t;

namespace mono {

constexpr int kMaxVars = 8;
constexpr std::uint64_t kBias = 0x8080808080808080ull;

/** The exponent-zero monomial. */
constexpr Mono one() { return kBias; }

/** Shift amount of a lane (lane 0 = most significant byte). */
constexpr int lane_shift(int lane) { return 8 * (7 - lane); }

/** Exponent of a lane. */
inline int exp(Mono m, int lane) {
    return static_cast<int>((m >> lane_shift(lane)) & 0xff) - 128;
}

/** Replace one lane's exponent. */
inline Mono with_exp(Mono m, int lane, int e) {
    if (e < -127 || e > 127)
        throw std::overflow_error("mono::with_exp: exponent out of range");
    const int shift = lane_shift(lane);
    m &= ~(0xffull << shift);
    return m | (static_cast<std::uint64_t>(static_cast<std::uint8_t>(e + 128)) << shift);
}

/** Single-variable monomial v_lane^exp. */
inline Mono var(int lane, int exp = 1) {
    if (lane < 0 || lane >= kMaxVars)
        throw std::invalid_argument("mono::var: lane out of range");
    if (exp < -127 || exp > 127)
        throw std::overflow_error("mono::var: exponent out of range");
    return with_exp(one(), lane, exp);
}

/** Lane-wise exponent addition with overflow checking. */
inline Mono mul(Mono a, Mono b) {
    Mono r = 0;
    for (int lane = 0; lane < kMaxVars; ++lane) {
        const int e = exp(a, lane) + exp(b, lane);
        if (e < -127 || e > 127)
            throw std::overflow_error("mono::mul: exponent out of range");
        r |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(e + 128)) << lane_shift(lane);
    }
    return r;
}

/** Lane-wise exponent subtraction (a / b) with overflow checking. */
inline Mono div(Mono a, Mono b) {
    Mono r = 0;
    for (int lane = 0; lane < kMaxVars; ++lane) {
        const int e = exp(a, lane) - exp(b, lane);
        if (e < -127 || e > 127)
            throw std::overflow_error("mono::div: exponent out of range");
        r |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(e + 128)) << lane_shift(lane);
    }
    return r;
}

/** True when b's exponents are lane-wise <= a's (polynomial divisibility). */
inline bool divides(Mono b, Mono a) {
    for (int lane = 0; lane < kMaxVars; ++lane)
        if (exp(b, lane) > exp(a, lane)) return false;
    return true;
}

/** Lane-wise minimum. */
inline Mono gcd(Mono a, Mono b) {
    Mono r = 0;
    for (int lane = 0; lane < kMaxVars; ++lane) {
        const int e = std::min(exp(a, lane), exp(b, lane));
        r |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(e + 128)) << lane_shift(lane);
    }
    return r;
}

}  // namespace mono

/**
 * LPoly: a sparse multivariate Laurent polynomial over an exact scalar S.
 *
 * Terms are kept sorted by descending monomial key (lexicographic order with
 * z_1 strongest) with no zero coefficients, so iteration order, leading terms
 * and the serialized form are all deterministic.
 */
template <typename S>
class LPoly {
public:
    using Term = std::pair<Mono, S>;

    LPoly() = default;

    static LPoly zero() { return LPoly(); }
    static LPoly scalar(const S& c) { return monomial(c, mono::one()); }
    static LPoly one() { return scalar(S(1)); }
    static LPoly monomial(const S& c, Mono m) {
        LPoly p;
        if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }
    static LPoly variable(int lane, int exp = 1) { return monomial(S(1), mono::var(lane, exp)); }

    /** Build from unsorted terms; merges duplicates and drops zeros. */
    static LPoly from_terms(std::vector<Term> terms) {
        LPoly p;
        p.terms_ = std::move(terms);
        std::sort(p.terms_.begin(), p.terms_.end(),
                  [](const Term& a, const Term& b) { return a.first > b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < p.terms_.size();) {
            Mono key = p.terms_[i].first;
            S acc = std::move(p.terms_[i].second);
            ++i;
            while (i < p.terms_.size() && p.terms_[i].first == key) {
                acc += p.terms_[i].second;
                ++i;
            }
            if (!acc.is_zero()) p.terms_[out++] = {key, std::move(acc)};
        }
        p.terms_.resize(out);
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /** Leading (lex-greatest) term; polynomial must be nonzero. */
    const Term& leading() const {
        if (terms_.empty())
            throw std::domain_error("LPoly::leading: zero polynomial");
        return terms_.front();
    }

    bool operator==(const LPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LPoly& rhs) const { return !(*this == rhs); }

    LPoly operator-() const {
        LPoly p = *this;
        for (auto& term : p.terms_) term.second = -term.second;
        return p;
    }

    LPoly operator+(const LPoly& rhs) const {
        LPoly p;
        p.terms_.reserve(terms_.size() + rhs.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < rhs.terms_.size()) {
            if (terms_[i].first > rhs.terms_[j].first) {
                p.terms_.push_back(terms_[i++]);
            } else if (terms_[i].first < rhs.terms_[j].first) {
                p.terms_.push_back(rhs.terms_[j++]);
            } else {
                S acc = terms_[i].second + rhs.terms_[j].second;
                if (!acc.is_zero()) p.terms_.emplace_back(terms_[i].first, std::move(acc));
                ++i;
                ++j;
            }
        }
        while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
        while (j < rhs.terms_.size()) p.terms_.push_back(rhs.terms_[j++]);
        return p;
    }

    LPoly operator-(const LPoly& rhs) const { return *this + (-rhs); }
    LPoly& operator+=(const LPoly& rhs) { return *this = *this + rhs; }
    LPoly& operator-=(const LPoly& rhs) { return *this = *this - rhs; }

    LPoly operator*(const LPoly& rhs) const {
        if (is_zero() || rhs.is_zero()) return LPoly();
        // The product of the longer factor b with one term of the shorter
        // factor a visits keys in strictly descending order, so the result is
        // a k-way merge of |a| pre-sorted streams, each generated lazily.
        const bool left_smaller = terms_.size() <= rhs.terms_.size();
        const std::vector<Term>& a = left_smaller ? terms_ : rhs.terms_;
        const std::vector<Term>& b = left_smaller ? rhs.terms_ : terms_;
        LPoly p;
        if (a.size() == 1) {
            const auto& [ma, ca] = a.front();
            p.terms_.reserve(b.size());
            for (const auto& [mb, cb] : b) p.terms_.emplace_back(mono::mul(ma, mb), cb * ca);
            return p;
        }
        if (a.size() == 2) {
            const auto& [m0, c0] = a[0];
            const auto& [m1, c1] = a[1];
            p.terms_.reserve(b.size() * 2);
            std::size_t i = 0, j = 0;
            Mono k0 = mono::mul(b[0].first, m0);
            Mono k1 = mono::mul(b[0].first, m1);
            while (i < b.size() && j < b.size()) {
                if (k0 > k1) {
                    p.terms_.emplace_back(k0, b[i].second * c0);
                    if (++i < b.size()) k0 = mono::mul(b[i].first, m0);
                } else if (k1 > k0) {
                    p.terms_.emplace_back(k1, b[j].second * c1);
                    if (++j < b.size()) k1 = mono::mul(b[j].first, m1);
                } else {
                    S acc = b[i].second * c0 + b[j].second * c1;
                    if (!acc.is_zero()) p.terms_.emplace_back(k0, std::move(acc));
                    if (++i < b.size()) k0 = mono::mul(b[i].first, m0);
                    if (++j < b.size()) k1 = mono::mul(b[j].first, m1);
                }
            }
            for (; i < b.size(); ++i) p.terms_.emplace_back(mono::mul(b[i].first, m0), b[i].second * c0);
            for (; j < b.size(); ++j) p.terms_.emplace_back(mono::mul(b[j].first, m1), b[j].second * c1);
            return p;
        }
        struct Cursor {
            Mono key;
            std::size_t ai, bi;
        };
        auto later = [](const Cursor& x, const Cursor& y) { return x.key < y.key; };
        std::vector<Cursor> heap;
        heap.reserve(a.size());
        for (std::size_t ai = 0; ai < a.size(); ++ai)
            heap.push_back({mono::mul(a[ai].first, b[0].first), ai, 0});
        std::make_heap(heap.begin(), heap.end(), later);
        p.terms_.reserve(b.size() + a.size());
        while (!heap.empty()) {
            const Mono key = heap.front().key;
            S acc(0);
            do {
                std::pop_heap(heap.begin(), heap.end(), later);
                Cursor cur = heap.back();
                heap.pop_back();
                acc += a[cur.ai].second * b[cur.bi].second;
                if (++cur.bi < b.size()) {
                    cur.key = mono::mul(a[cur.ai].first, b[cur.bi].first);
                    heap.push_back(cur);
                    std::push_heap(heap.begin(), heap.end(), later);
                }
            } while (!heap.empty() && heap.front().key == key);
            if (!acc.is_zero()) p.terms_.emplace_back(key, std::move(acc));
        }
        return p;
    }
    LPoly& operator*=(const LPoly& rhs) { return *this = *this * rhs; }

    LPoly scaled(const S& c) const {
        if (c.is_zero()) return LPoly();
        LPoly p = *this;
        for (auto& term : p.terms_) term.second = term.second * c;
        return p;
    }

    LPoly mono_scaled(const S& c, Mono m) const {
        if (c.is_zero()) return LPoly();
        LPoly p;
        p.terms_.reserve(terms_.size());
        for (const auto& [key, coeff] : terms_)
            p.terms_.emplace_back(mono::mul(key, m), coeff * c);
        return p;  // order preserved: multiplying every key by m is monotone
    }

    /** Coefficient of a monomial (zero when absent). */
    S coeff(Mono m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Mono key) { return t.first > key; });
        if (it != terms_.end() && it->first == m) return it->second;
        return S(0);
    }

    /** Max exponent of a lane across terms; polynomial must be nonzero. */
    int degree(int lane) const {
        check_nonzero("degree");
        int best = mono::exp(terms_[0].first, lane);
        for (const auto& term : terms_) best = std::max(best, mono::exp(term.first, lane));
        return best;
    }

    /** Min exponent of a lane across terms; polynomial must be nonzero. */
    int low_degree(int lane) const {
        check_nonzero("low_degree");
        int best = mono::exp(terms_[0].first, lane);
        for (const auto& term : terms_) best = std::min(best, mono::exp(term.first, lane));
        return best;
    }

private:
    std::vector<Term> terms_;

    void check_nonzero(const char* fn) const {
        if (terms_.empty())
            throw std::domain_error(std::string("LPoly::") + fn + ": zero polynomial");
    }
};

/** Degree width: max minus min exponent of a variable; errors on zero input. */
template <typename S>
int degree_width(const LPoly<S>& p, int lane) {
    return p.degree(lane) - p.low_degree(lane);
}

/** Swap two variables (the bulk exchange t_i when applied to adjacent lanes). */
template <typename S>
LPoly<S> substitute_swap(const LPoly<S>& p, int lane_a, int lane_b) {
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        const int ea = mono::exp(m, lane_a);
        const int eb = mono::exp(m, lane_b);
        terms.emplace_back(mono::with_exp(mono::with_exp(m, lane_a, eb), lane_b, ea), c);
    }
    return LPoly<S>::from_terms(std::move(terms));
}

/**
 * Substitute v -> scale / v on one lane (t_R with scale 1, t_L with scale s).
 * The scale must be invertible; exponents negate and coefficients pick up
 * scale^e.
 */
template <typename S>
LPoly<S> substitute_invert(const LPoly<S>& p, int lane, const S& scale) {
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        const int e = mono::exp(m, lane);
        terms.emplace_back(mono::with_exp(m, lane, -e), c * pow(scale, e));
    }
    return LPoly<S>::from_terms(std::move(terms));
}

/** Substitute v -> scale * v on one lane (exponents unchanged). */
template <typename S>
LPoly<S> substitute_scale(const LPoly<S>& p, int lane, const S& scale) {
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms())
        terms.emplace_back(m, c * pow(scale, mono::exp(m, lane)));
    return LPoly<S>::from_terms(std::move(terms));
}

/**
 * Substitute v_lane -> scale * v_target^dir and eliminate the lane
 * (dir in {+1, -1}; pass target_lane = -1 to set the variable to the scalar
 * `scale` alone). Used for evaluations like z_N = q/zeta_R or z_{i+1} = q^2 z_i.
 */
template <typename S>
LPoly<S> substitute_assign(const LPoly<S>& p, int lane, const S& scale, int target_lane,
                           int dir = 1) {
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        const int e = mono::exp(m, lane);
        Mono key = mono::with_exp(m, lane, 0);
        if (target_lane >= 0 && e != 0) {
            const int et = mono::exp(key, target_lane);
            key = mono::with_exp(key, target_lane, et + dir * e);
        }
        terms.emplace_back(key, c * pow(scale, e));
    }
    return LPoly<S>::from_terms(std::move(terms));
}

/**
 * Substitute v_lane -> point, where point is a single-term Laurent polynomial
 * in the other variables; the lane is eliminated from the result.
 */
template <typename S>
LPoly<S> substitute_set(const LPoly<S>& p, int lane, const LPoly<S>& point) {
    if (point.term_count() != 1)
        throw std::invalid_argument("substitute_set: point must be a monomial");
    const auto& [pm, pc] = point.leading();
    if (mono::exp(pm, lane) != 0)
        throw std::invalid_argument("substitute_set: point refers to the substituted lane");
    auto mono_pow = [](Mono m, int e) {
        Mono r = mono::one();
        for (int k = 0; k < (e < 0 ? -e : e); ++k) r = mono::mul(r, m);
        return e < 0 ? mono::div(mono::one(), r) : r;
    };
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        const int e = mono::exp(m, lane);
        terms.emplace_back(mono::mul(mono::with_exp(m, lane, 0), mono_pow(pm, e)),
                           c * pow(pc, e));
    }
    return LPoly<S>::from_terms(std::move(terms));
}

/**
 * Relabel variables: lane_map[old] = new lane, or -1 when the variable must
 * not occur (throws std::invalid_argument if it does).
 */
template <typename S>
LPoly<S> relabel(const LPoly<S>& p, const std::vector<int>& lane_map) {
    std::vector<typename LPoly<S>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Mono key = mono::one();
        for (int lane = 0; lane < mono::kMaxVars; ++lane) {
            const int e = mono::exp(m, lane);
            if (e == 0) continue;
            const int dest = lane < static_cast<int>(lane_map.size()) ? lane_map[lane] : -1;
            if (dest < 0)
                throw std::invalid_argument("relabel: variable in a forbidden lane");
            key = mono::with_exp(key, dest, mono::exp(key, dest) + e);
        }
        terms.emplace_back(key, c);
    }
    return LPoly<S>::from_terms(std::move(terms));
}

/**
 * Apply a scalar map to every coefficient, changing the coefficient type.
 * Terms whose image is zero drop out.
 */
template <typename T, typename S, typename F>
LPoly<T> map_coefficients(const LPoly<S>& p, F f) {
    std::vector<typename LPoly<T>::Term> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m, f(c));
    return LPoly<T>::from_terms(std::move(terms));
}

namespace detail {

/**
 * Synthetic division by a two-term divisor u·x^d·U − (−v·V), near-linear in
 * the number of terms. Both inputs must be content-stripped; the quotient is
 * rebuilt slice by slice along the first lane where the divisor's monomials
 * differ, then checked by one multiplication.
 */
template <typename S>
LPoly<S> divide_binomial(const LPoly<S>& num, const LPoly<S>& den) {
    const auto& [m1, c1] = den.terms()[0];
    const auto& [m2, c2] = den.terms()[1];
    int lane = 0;
    while (lane < mono::kMaxVars && mono::exp(m1, lane) == mono::exp(m2, lane)) ++lane;
    const int d = mono::exp(m1, lane) - mono::exp(m2, lane);  // > 0 by lex order

    // Slice the numerator by the exponent of the chosen lane.
    std::map<int, std::vector<typename LPoly<S>::Term>> slices;
    for (const auto& [m, c] : num.terms())
        slices[mono::exp(m, lane)].emplace_back(mono::with_exp(m, lane, 0), c);

    const S c1_inv = S(1) / c1;
    const Mono m1_rest_inv = mono::div(mono::one(), mono::with_exp(m1, lane, 0));
    std::map<int, LPoly<S>> qslices;
    std::vector<typename LPoly<S>::Term> quot;
    const int kmax = slices.rbegin()->first;
    const int kmin = slices.begin()->first;
    for (int k = kmax; k >= kmin; --k) {
        LPoly<S> pk = slices.count(k)
                          ? LPoly<S>::from_terms(std::move(slices[k]))
                          : LPoly<S>();
        auto qk = qslices.find(k);
        if (qk != qslices.end()) {
            pk -= qk->second.mono_scaled(c2, mono::with_exp(m2, lane, 0));
            qslices.erase(qk);
        }
        if (pk.is_zero()) continue;
        LPoly<S> q = pk.mono_scaled(c1_inv, m1_rest_inv);
        for (const auto& [m, c] : q.terms())
            quot.emplace_back(mono::with_exp(m, lane, k - d), c);
        qslices.emplace(k - d, std::move(q));
    }
    LPoly<S> result = LPoly<S>::from_terms(std::move(quot));
    if (result * den != num)
        throw NotDivisibleError("exact_divide: binomial division leaves a remainder");
    return result;
}

}  // namespace detail

/**
 * Exact division in the Laurent ring; throws NotDivisibleError when the
 * quotient does not exist. Monomial content is stripped first; two-term
 * divisors take a near-linear synthetic path, general divisors an ordinary
 * lex-leading-term loop.
 */
template <typename S>
LPoly<S> exact_divide(const LPoly<S>& num, const LPoly<S>& den) {
    if (den.is_zero())
        throw std::domain_error("exact_divide: division by zero polynomial");
    if (num.is_zero()) return LPoly<S>();

    auto content = [](const LPoly<S>& p) {
        Mono g = p.terms().front().first;
        for (const auto& [m, c] : p.terms()) g = mono::gcd(g, m);
        return g;
    };
    const Mono gn = content(num);
    const Mono gd = content(den);
    LPoly<S> rem = num.mono_scaled(S(1), mono::div(mono::one(), gn));
    LPoly<S> divisor = den.mono_scaled(S(1), mono::div(mono::one(), gd));

    if (divisor.term_count() == 1) {
        const auto& [dm, dc] = divisor.leading();
        LPoly<S> result = rem.mono_scaled(S(1) / dc, mono::div(mono::one(), dm));
        return result.mono_scaled(S(1), mono::div(gn, gd));
    }
    if (divisor.term_count() == 2) {
        LPoly<S> result = detail::divide_binomial(rem, divisor);
        return result.mono_scaled(S(1), mono::div(gn, gd));
    }

    const S lead_inv = S(1) / divisor.leading().second;
    std::vector<typename LPoly<S>::Term> quot;
    // Each step cancels the current lex-leading term; for exact quotients the
    // loop runs once per quotient term.
    const std::size_t kMaxSteps = 4u << 20;
    std::size_t steps = 0;
    while (!rem.is_zero()) {
        if (++steps > kMaxSteps)
            throw NotDivisibleError("exact_divide: step limit exceeded");
        const auto& [rm, rc] = rem.leading();
        if (!mono::divides(divisor.leading().first, rm))
            throw NotDivisibleError("exact_divide: leading term not divisible");
        const Mono qm = mono::div(rm, divisor.leading().first);
        const S qc = rc * lead_inv;
        quot.emplace_back(qm, qc);
        rem -= divisor.mono_scaled(qc, qm);
    }
    LPoly<S> result = LPoly<S>::from_terms(std::move(quot));
    return result.mono_scaled(S(1), mono::div(gn, gd));
}

/** exact_divide by a sequence of factors, one at a time (fast for binomials). */
template <typename S>
LPoly<S> exact_divide_factors(LPoly<S> num, const std::vector<LPoly<S>>& factors) {
    for (const auto& f : factors) num = exact_divide(num, f);
    return num;
}

/**
 * Lagrange interpolation in one variable. Nodes are (point, value) pairs
 * where each point is a monomial in the other variables (as an LPoly); the
 * window [lo, hi] prescribes the exponent range of the result, which must
 * clear to a Laurent polynomial.
 */
template <typename S>
LPoly<S> lagrange_interpolate(int lane, const std::vector<std::pair<LPoly<S>, LPoly<S>>>& nodes,
                              int lo, int hi) {
    const int count = hi - lo + 1;
    if (static_cast<int>(nodes.size()) != count)
        throw InsufficientNodesError("lagrange_interpolate: need " + std::to_string(count) +
                                     " nodes, got " + std::to_string(nodes.size()));
    auto mono_pow = [](Mono m, int e) {
        Mono r = mono::one();
        for (int k = 0; k < (e < 0 ? -e : e); ++k) r = mono::mul(r, m);
        return e < 0 ? mono::div(mono::one(), r) : r;
    };
    // Multiply values by point^{-lo} so the target becomes an ordinary
    // polynomial of degree hi-lo in the variable.
    std::vector<LPoly<S>> points, values;
    for (const auto& [pt, val] : nodes) {
        if (pt.term_count() != 1)
            throw std::invalid_argument("lagrange_interpolate: node points must be monomials");
        points.push_back(pt);
        const auto& [pm, pc] = pt.leading();
        values.push_back(val.mono_scaled(pow(pc, -lo), mono_pow(pm, -lo)));
    }
    // Assemble sum_k values[k] * prod_{l != k} (v - points[l]) / (points[k] - points[l])
    // over the common denominator D = prod_{a<b} (points[a] - points[b]).
    const LPoly<S> v = LPoly<S>::variable(lane);
    LPoly<S> numerator;
    for (std::size_t k = 0; k < points.size(); ++k) {
        LPoly<S> term = values[k];
        for (std::size_t l = 0; l < points.size(); ++l)
            if (l != k) term *= v - points[l];
        // rest_k = prod over pairs (a < b), a, b != k; sign (-1)^k restores
        // orientation of the pairs split off from D.
        for (std::size_t a = 0; a < points.size(); ++a)
            for (std::size_t b = a + 1; b < points.size(); ++b)
                if (a != k && b != k) term *= points[a] - points[b];
        if (k % 2 == 1) term = -term;
        numerator += term;
    }
    std::vector<LPoly<S>> dfactors;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            dfactors.push_back(points[a] - points[b]);
    LPoly<S> result;
    try {
        result = exact_divide_factors(std::move(numerator), dfactors);
    } catch (const NotDivisibleError&) {
        throw NonPolynomialResultError("lagrange_interpolate: result does not clear to a polynomial");
    }
    // Undo the window shift.
    if (lo != 0) result = result.mono_scaled(S(1), mono::var(lane, lo));
    if (!result.is_zero() && (result.low_degree(lane) < lo || result.degree(lane) > hi))
        throw NonPolynomialResultError("lagrange_interpolate: result exceeds the window");
    return result;
}

}  // namespace qkz
