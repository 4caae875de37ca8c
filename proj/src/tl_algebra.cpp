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

#include "qkz/tl_algebra.hpp"

#include <functional>

namespace qkz {

namespace {

/** The quotient generators g_1, g_2 of the finite-dimensional algebra. */
template <typename S>
std::pair<LinOp<S>, LinOp<S>> quotient_gens(int n, const ModelConsts<S>& consts) {
    auto mat = [&](const Gen& g) { return gen_matrix(g, n, consts); };
    LinOp<S> g1 = LinOp<S>::identity(1 << n);
    LinOp<S> g2 = LinOp<S>::identity(1 << n);
    if (n % 2 == 1) {
        // N = 2M+1: g_1 = f_L e_2 e_4 ... e_{N-1}, g_2 = f_R e_1 e_3 ... e_{N-2}.
        g1 = mat(Gen::fl());
        for (int i = 2; i <= n - 1; i += 2) g1 = g1 * mat(Gen::e(i));
        g2 = mat(Gen::fr());
        for (int i = 1; i <= n - 2; i += 2) g2 = g2 * mat(Gen::e(i));
    } else {
        // N = 2M: g_1 = f_L f_R e_2 e_4 ... e_{N-2}, g_2 = e_1 e_3 ... e_{N-1}.
        g1 = mat(Gen::fl()) * mat(Gen::fr());
        for (int i = 2; i <= n - 2; i += 2) g1 = g1 * mat(Gen::e(i));
        g2 = mat(Gen::e(1));
        for (int i = 3; i <= n - 1; i += 2) g2 = g2 * mat(Gen::e(i));
    }
    return {g1, g2};
}

}  // namespace

Report check_relations(int n) {
    Report report;
    report.suite = "algebra";
    report.n = n;
    const auto consts = generic_consts();
    auto mat = [&](const Gen& g) { return gen_matrix(g, n, consts); };

    std::vector<LinOp<FieldElem>> e;
    for (int i = 1; i <= n - 1; ++i) e.push_back(mat(Gen::e(i)));
    const LinOp<FieldElem> fl = mat(Gen::fl());
    const LinOp<FieldElem> fr = mat(Gen::fr());

    auto check = [&report](const std::string& name, const LinOp<FieldElem>& lhs,
                           const LinOp<FieldElem>& rhs) {
        report.add(name, lhs == rhs, lhs == rhs ? "" : "matrices differ");
    };

    for (int i = 1; i <= n - 1; ++i)
        check("e" + std::to_string(i) + "^2 = tau e" + std::to_string(i),
              e[i - 1] * e[i - 1], e[i - 1].scaled(consts.tau));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            check("e" + std::to_string(i) + " e" + std::to_string(j) + " commute",
                  e[i - 1] * e[j - 1], e[j - 1] * e[i - 1]);
    for (int i = 1; i <= n - 1; ++i) {
        if (i + 1 <= n - 1)
            check("e" + std::to_string(i) + " e" + std::to_string(i + 1) + " e" +
                      std::to_string(i) + " = e" + std::to_string(i),
                  e[i - 1] * e[i] * e[i - 1], e[i - 1]);
        if (i - 1 >= 1)
            check("e" + std::to_string(i) + " e" + std::to_string(i - 1) + " e" +
                      std::to_string(i) + " = e" + std::to_string(i),
                  e[i - 1] * e[i - 2] * e[i - 1], e[i - 1]);
    }
    check("fR^2 = fR", fr * fr, fr);
    check("fL^2 = fL", fl * fl, fl);
    if (n >= 2) {
        check("e" + std::to_string(n - 1) + " fR e" + std::to_string(n - 1) + " = e" +
                  std::to_string(n - 1),
              e[n - 2] * fr * e[n - 2], e[n - 2]);
        check("e1 fL e1 = e1", e[0] * fl * e[0], e[0]);
    }
    check("fL fR = fR fL", fl * fr, fr * fl);
    for (int i = 2; i <= n - 1; ++i)
        check("fL e" + std::to_string(i) + " commute", fl * e[i - 1], e[i - 1] * fl);
    for (int i = 1; i <= n - 2; ++i)
        check("fR e" + std::to_string(i) + " commute", fr * e[i - 1], e[i - 1] * fr);

    auto [g1, g2] = quotient_gens(n, consts);
    check("g1 g2 g1 = tau_c g1", g1 * g2 * g1, g1.scaled(consts.tau_c));
    check("g2 g1 g2 = tau_c g2", g2 * g1 * g2, g2.scaled(consts.tau_c));

    // Hecke images on the finite side: T = -e - 1/q satisfies (T+1/q)(T-q) = 0.
    const LinOp<FieldElem> id = LinOp<FieldElem>::identity(1 << n);
    for (int i = 1; i <= n - 1; ++i) {
        LinOp<FieldElem> t = e[i - 1].scaled(FieldElem(-1)) - id.scaled(consts.q_inv);
        check("(T" + std::to_string(i) + "+1/q)(T" + std::to_string(i) + "-q) = 0",
              (t + id.scaled(consts.q_inv)) * (t - id.scaled(consts.q)),
              LinOp<FieldElem>(1 << n));
    }
    return report;
}

LinOp<CycElem> hamiltonian(int n, const Rational& alpha_l, const Rational& alpha_r) {
    const auto consts = comb_consts();
    const int dim = 1 << n;
    const LinOp<CycElem> id = LinOp<CycElem>::identity(dim);
    LinOp<CycElem> h(dim);
    for (int i = 1; i <= n - 1; ++i)
        h = h + (gen_matrix(Gen::e(i), n, consts) - id);
    h = h + (gen_matrix(Gen::fr(), n, consts) - id).scaled(CycElem(alpha_r));
    h = h + (gen_matrix(Gen::fl(), n, consts) - id).scaled(CycElem(alpha_l));
    return h;
}

}  // namespace qkz
