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

#include "qkz/cyc_elem.hpp"
#include "qkz/errors.hpp"
#include "qkz/ext_elem.hpp"
#include "qkz/field_elem.hpp"
#include "qkz/rat_elem.hpp"

namespace qkz {

/**
 * The model constants over a scalar field S.
 *
 * Over Q(t): q = t^4, s = q^{-3/2} = t^{-6}, tau = -(q + 1/q), and
 * sqrt_tauc = t/(t^2+1) so that tauc = 1/(q^{1/2} + 2 + q^{-1/2}).
 * At the combinatorial point every loop weight becomes 1.
 */
template <typename S>
struct ModelConsts {
    S q, q_inv, q_half, q_half_inv;
    S s, s_inv, sqrt_s, sqrt_s_inv;
    S tau, tau_c, sqrt_tauc;
    S one{1};
    S zero{0};
    std::string field_label = "generic";
};

/** Constants over the generic field Q(t). */
inline ModelConsts<FieldElem> generic_consts() {
    ModelConsts<FieldElem> c;
    c.q = FieldElem::t_power(4);
    c.q_inv = FieldElem::t_power(-4);
    c.q_half = FieldElem::t_power(2);
    c.q_half_inv = FieldElem::t_power(-2);
    c.s = FieldElem::t_power(-6);
    c.s_inv = FieldElem::t_power(6);
    c.sqrt_s = FieldElem::t_power(-3);
    c.sqrt_s_inv = FieldElem::t_power(3);
    c.tau = -(FieldElem::t_power(4) + FieldElem::t_power(-4));
    c.sqrt_tauc = FieldElem(UniPoly::t_power(1), UniPoly::t_power(2) + UniPoly::one());
    c.tau_c = c.sqrt_tauc * c.sqrt_tauc;
    return c;
}

/**
 * The two ring maps Q(t) -> Q[x]/(x^2-x+1) onto the combinatorial point:
 * t |-> 1-x (so t^2 |-> -x) or the conjugate t |-> x. Both send tau, tauc
 * and s to 1.
 */
enum class CombMap { kOneMinusX, kX };

/** Image of t under the chosen map. */
inline CycElem comb_t(CombMap map) {
    return map == CombMap::kOneMinusX ? CycElem(1, -1) : CycElem::x();
}

/** Ring-homomorphism image of a field element at the combinatorial point. */
inline CycElem specialize_comb(const FieldElem& value, CombMap map = CombMap::kOneMinusX) {
    const CycElem t0 = comb_t(map);
    auto eval_unipoly = [&t0](const UniPoly& p) {
        CycElem acc(0);
        if (p.is_zero()) return acc;
        for (int k = p.high(); k >= p.low(); --k)
            acc = acc * t0 + CycElem(p.coeff(k));
        return acc * pow(t0, p.low());
    };
    CycElem den = eval_unipoly(value.den());
    if (den.is_zero())
        throw SpecializationPoleError("specialize_comb: denominator vanishes at the combinatorial point");
    return eval_unipoly(value.num()) / den;
}

/**
 * Constants over Q with t evaluated at a fixed rational value; t0 must avoid
 * the poles of the generic constants (0, +-1 and +-i are excluded by t0 != 0
 * rational with |t0| != 1).
 */
inline ModelConsts<RatElem> rational_consts(const Rational& t0) {
    if (t0 == 0 || t0 == 1 || t0 == -1)
        throw std::invalid_argument("rational_consts: t must be none of 0, 1, -1");
    const auto g = generic_consts();
    auto at = [&t0](const FieldElem& value) { return RatElem(value.eval(t0)); };
    ModelConsts<RatElem> c;
    c.q = at(g.q);
    c.q_inv = at(g.q_inv);
    c.q_half = at(g.q_half);
    c.q_half_inv = at(g.q_half_inv);
    c.s = at(g.s);
    c.s_inv = at(g.s_inv);
    c.sqrt_s = at(g.sqrt_s);
    c.sqrt_s_inv = at(g.sqrt_s_inv);
    c.tau = at(g.tau);
    c.tau_c = at(g.tau_c);
    c.sqrt_tauc = at(g.sqrt_tauc);
    return c;
}

/** Constants over the combinatorial-point field. */
inline ModelConsts<CycElem> comb_consts(CombMap map = CombMap::kOneMinusX) {
    const auto g = generic_consts();
    ModelConsts<CycElem> c;
    c.q = specialize_comb(g.q, map);
    c.q_inv = specialize_comb(g.q_inv, map);
    c.q_half = specialize_comb(g.q_half, map);
    c.q_half_inv = specialize_comb(g.q_half_inv, map);
    c.s = specialize_comb(g.s, map);
    c.s_inv = specialize_comb(g.s_inv, map);
    c.sqrt_s = specialize_comb(g.sqrt_s, map);
    c.sqrt_s_inv = specialize_comb(g.sqrt_s_inv, map);
    c.tau = specialize_comb(g.tau, map);
    c.tau_c = specialize_comb(g.tau_c, map);
    c.sqrt_tauc = specialize_comb(g.sqrt_tauc, map);
    c.field_label = "comb";
    return c;
}

/** Constants over the extension Q(t)[w], for the Hecke module. */
inline ModelConsts<ExtElem> ext_consts() {
    const auto g = generic_consts();
    ModelConsts<ExtElem> c;
    c.q = ExtElem(g.q);
    c.q_inv = ExtElem(g.q_inv);
    c.q_half = ExtElem(g.q_half);
    c.q_half_inv = ExtElem(g.q_half_inv);
    c.s = ExtElem(g.s);
    c.s_inv = ExtElem(g.s_inv);
    c.sqrt_s = ExtElem(g.sqrt_s);
    c.sqrt_s_inv = ExtElem(g.sqrt_s_inv);
    c.tau = ExtElem(g.tau);
    c.tau_c = ExtElem(g.tau_c);
    c.sqrt_tauc = ExtElem(g.sqrt_tauc);
    return c;
}

}  // namespace qkz
