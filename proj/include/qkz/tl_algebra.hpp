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

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "qkz/consts.hpp"
#include "qkz/link_pattern.hpp"
#include "qkz/rational.hpp"
#include "qkz/report.hpp"

namespace qkz {

/**
 * LinOp: a sparse square matrix over the pattern basis of size 2^N.
 *
 * Rows are stored as ordered column->value maps, so iteration order and all
 * derived reports are deterministic.
 */
template <typename S>
class LinOp {
public:
    explicit LinOp(int dim = 0) : rows_(static_cast<std::size_t>(dim)) {}

    static LinOp identity(int dim) {
        LinOp m(dim);
        for (int i = 0; i < dim; ++i) m.rows_[i][i] = S(1);
        return m;
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::map<int, S>& row(int r) const { return rows_[r]; }

    void add(int r, int c, const S& value) {
        if (value.is_zero()) return;
        auto [it, inserted] = rows_[r].emplace(c, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) rows_[r].erase(it);
        }
    }

    LinOp operator+(const LinOp& rhs) const {
        LinOp m = *this;
        for (int r = 0; r < rhs.dim(); ++r)
            for (const auto& [c, v] : rhs.rows_[r]) m.add(r, c, v);
        return m;
    }

    LinOp operator-(const LinOp& rhs) const { return *this + rhs.scaled(S(-1)); }

    LinOp operator*(const LinOp& rhs) const {
        LinOp m(dim());
        for (int r = 0; r < dim(); ++r)
            for (const auto& [k, a] : rows_[r])
                for (const auto& [c, b] : rhs.rows_[k]) m.add(r, c, a * b);
        return m;
    }

    LinOp scaled(const S& factor) const {
        LinOp m(dim());
        if (factor.is_zero()) return m;
        for (int r = 0; r < dim(); ++r)
            for (const auto& [c, v] : rows_[r]) m.rows_[r][c] = v * factor;
        return m;
    }

    bool operator==(const LinOp& rhs) const { return rows_ == rhs.rows_; }
    bool operator!=(const LinOp& rhs) const { return !(*this == rhs); }

    bool is_zero() const {
        for (const auto& row : rows_)
            if (!row.empty()) return false;
        return true;
    }

    /** Matrix-vector product over any module V with S-scalar multiplication. */
    template <typename V>
    std::vector<V> apply(const std::vector<V>& vec) const {
        std::vector<V> out(rows_.size());
        for (int r = 0; r < dim(); ++r) {
            for (const auto& [c, v] : rows_[r]) {
                if constexpr (std::is_same_v<V, S>)
                    out[r] += vec[static_cast<std::size_t>(c)] * v;
                else
                    out[r] += vec[static_cast<std::size_t>(c)].scaled(v);
            }
        }
        return out;
    }

private:
    std::vector<std::map<int, S>> rows_;
};

/** Resolve a generator weight tag in the scalar field. */
template <typename S>
S gen_weight(GenWeight w, const ModelConsts<S>& consts) {
    switch (w) {
        case GenWeight::kTau:
            return consts.tau;
        case GenWeight::kSqrtTauC:
            return consts.sqrt_tauc;
        default:
            return consts.one;
    }
}

/** Matrix of a generator in the pattern basis (column = source pattern). */
template <typename S>
LinOp<S> gen_matrix(const Gen& g, int n, const ModelConsts<S>& consts) {
    LinOp<S> m(1 << n);
    for (const auto& p : enumerate_patterns(n)) {
        GenAction act = apply_gen(g, p);
        m.add(pattern_index(act.result.word), pattern_index(p.word),
              gen_weight(act.weight, consts));
    }
    return m;
}

/**
 * Verify every defining relation of the two-boundary Temperley-Lieb algebra at
 * tau_L = tau_R = 1, including the parity-dependent quotient relations
 * g_1 g_2 g_1 = tau_c g_1 and g_2 g_1 g_2 = tau_c g_2, as exact matrix
 * identities over Q(t). Each relation contributes one named check.
 */
Report check_relations(int n);

/**
 * The combinatorial-point stochastic generator
 * H = sum_i (e_i - 1) + alpha_R (f_R - 1) + alpha_L (f_L - 1); every column
 * sums to zero since each generator column carries total weight 1.
 */
LinOp<CycElem> hamiltonian(int n, const Rational& alpha_l, const Rational& alpha_r);

}  // namespace qkz
