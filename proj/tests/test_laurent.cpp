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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qkz/consts.hpp"
#include "qkz/errors.hpp"
#include "qkz/laurent.hpp"

using namespace qkz;

using FP = LPoly<FieldElem>;

namespace {

FP var(int lane, int e = 1) { return FP::variable(lane, e); }

FP random_poly(std::mt19937_64& rng, int nvars, int nterms) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<std::pair<Mono, FieldElem>> terms;
    for (int k = 0; k < nterms; ++k) {
        Mono m = mono::one();
        for (int v = 0; v < nvars; ++v) m = mono::mul(m, mono::var(v, e(rng)));
        terms.emplace_back(m, FieldElem(c(rng)));
    }
    return FP::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("monomial packing") {
    Mono a = mono::var(0, 3);
    Mono b = mono::var(1, -2);
    Mono ab = mono::mul(a, b);
    CHECK(mono::exp(ab, 0) == 3);
    CHECK(mono::exp(ab, 1) == -2);
    CHECK(mono::exp(ab, 2) == 0);
    CHECK(mono::div(ab, a) == b);
    CHECK(mono::divides(b, ab));
    CHECK_FALSE(mono::divides(mono::var(0, 4), ab));

    // lex order: higher exponent in the first lane dominates
    CHECK(mono::var(0, 1) > mono::var(1, 5));
    CHECK(mono::var(0, 1) > mono::var(0, -1));
    CHECK_THROWS_AS(mono::var(8, 1), std::invalid_argument);
    CHECK_THROWS_AS(mono::var(0, 200), std::overflow_error);
}

TEST_CASE("basic arithmetic") {
    FP z = var(0), w = var(1);
    FP p = z * w + z.scaled(FieldElem(2)) - FP::one();
    CHECK(p.term_count() == 3);
    CHECK(p - p == FP::zero());
    CHECK((z + w) * (z - w) == z * z - w * w);
    CHECK(p.coeff(mono::var(0, 1)) == FieldElem(2));
    CHECK(p.coeff(mono::var(1, 1)).is_zero());

    // Laurent inverses multiply away
    CHECK(var(0, 1) * var(0, -1) == FP::one());
}

TEST_CASE("substitutions") {
    const auto consts = generic_consts();
    FP z1 = var(0), z2 = var(1);

    // swap is an involution
    FP p = z1 * z1 * z2 + z1.scaled(consts.q) - z2.scaled(consts.q_inv);
    CHECK(substitute_swap(substitute_swap(p, 0, 1), 0, 1) == p);
    CHECK(substitute_swap(z1.scaled(consts.q) - z2.scaled(consts.q_inv), 0, 1) ==
          z2.scaled(consts.q) - z1.scaled(consts.q_inv));

    // invert_right: z -> 1/z on an invariant input
    FP inv_invariant = var(1, 1) + var(1, -1);
    CHECK(substitute_invert(inv_invariant, 1, consts.one) == inv_invariant);
    CHECK(substitute_invert(substitute_invert(p, 1, consts.one), 1, consts.one) == p);

    // reflect_left: z_1 -> s/z_1, s = t^-6
    FP refl = substitute_invert(z1, 0, consts.s);
    CHECK(refl == var(0, -1).scaled(consts.s));
    CHECK(substitute_invert(refl, 0, consts.s) == z1);

    // scale
    CHECK(substitute_scale(z1, 0, consts.q) == z1.scaled(consts.q));

    // set z_2 = q/zeta with zeta on lane 2
    FP assigned = substitute_assign(z2, 1, consts.q, 2, -1);
    CHECK(assigned == var(2, -1).scaled(consts.q));
}

TEST_CASE("exact division") {
    FP z = var(0);
    FP num = z * z - FP::one();
    FP den = z - FP::one();
    CHECK(exact_divide(num, den) == z + FP::one());
    CHECK_THROWS_AS(exact_divide(z + FP::one(), den), NotDivisibleError);

    // 2x2 symplectic determinant factorization:
    // det(z_i^j - z_i^-j) over i,j in {1,2} divided by
    // (z_1 - 1/z_1)(z_2 - 1/z_2) gives -((z_1+1/z_1) - (z_2+1/z_2)).
    FP z1 = var(0), z2 = var(1);
    FP det = (z1 - var(0, -1)) * (var(1, 2) - var(1, -2)) -
             (var(0, 2) - var(0, -2)) * (z2 - var(1, -1));
    FP wden = (z1 - var(0, -1)) * (z2 - var(1, -1));
    FP quot = exact_divide(det, wden);
    FP expected = (z2 + var(1, -1)) - (z1 + var(0, -1));
    CHECK(quot == expected);

    // randomized roundtrip
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        FP f = random_poly(rng, 3, 4);
        FP d = random_poly(rng, 3, 3);
        if (d.is_zero()) continue;
        CHECK(exact_divide(f * d, d) == f);
    }
}

TEST_CASE("degree width") {
    FP z = var(0);
    CHECK(degree_width(z + var(0, -1), 0) == 2);
    CHECK(degree_width(FP::one(), 0) == 0);
    CHECK_THROWS_AS(degree_width(FP::zero(), 0), std::domain_error);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        FP f = random_poly(rng, 2, 3);
        FP g = random_poly(rng, 2, 3);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(degree_width(f * g, 0) == degree_width(f, 0) + degree_width(g, 0));
        CHECK(degree_width(f * g, 1) == degree_width(f, 1) + degree_width(g, 1));
    }
}

TEST_CASE("lagrange interpolation") {
    const FieldElem two(2), three(3), five(5);
    FP z = var(0), w = var(1);

    // window [0,1]: recover a + b v with a = w, b = 3
    FP target = w + z.scaled(three);
    std::vector<std::pair<FP, FP>> nodes;
    FP p1 = FP::scalar(two);
    FP p2 = FP::scalar(five);
    nodes.push_back({p1, substitute_set(target, 0, p1)});
    nodes.push_back({p2, substitute_set(target, 0, p2)});
    CHECK(lagrange_interpolate(0, nodes, 0, 1) == target);

    // window [-1,1]: recover v + 1/v from three nodes
    FP vinv = z + var(0, -1);
    std::vector<std::pair<FP, FP>> nodes3;
    for (const FieldElem& c : {two, three, five}) {
        FP pt = FP::scalar(c);
        nodes3.push_back({pt, substitute_set(vinv, 0, pt)});
    }
    CHECK(lagrange_interpolate(0, nodes3, -1, 1) == vinv);

    // monomial-valued nodes work too: recover z^2*w from nodes z = c*w
    FP zw = var(0, 2) * w;
    std::vector<std::pair<FP, FP>> nodesm;
    for (const FieldElem& c : {two, three, five}) {
        FP pt = w.scaled(c);
        nodesm.push_back({pt, substitute_set(zw, 0, pt)});
    }
    CHECK(lagrange_interpolate(0, nodesm, 0, 2) == zw);

    // insufficient nodes
    CHECK_THROWS_AS(lagrange_interpolate(0, nodes, 0, 2), InsufficientNodesError);

    // values that do not clear the denominators: interpolating through the
    // points z = w and z = w^2 with values 1 and 0 forces a coefficient
    // 1/(w - w^2), which is not a Laurent polynomial
    std::vector<std::pair<FP, FP>> bad;
    bad.push_back({w, FP::one()});
    bad.push_back({var(1, 2), FP::zero()});
    CHECK_THROWS_AS(lagrange_interpolate(0, bad, 0, 1), NonPolynomialResultError);
}
