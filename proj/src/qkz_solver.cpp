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

#include "qkz/qkz_solver.hpp"

namespace qkz {

FP seed_phiR(int n) { return seed_phiR<FieldElem>(n, generic_consts()); }

FP assemble_base(int n) { return assemble_base<FieldElem>(n, generic_consts()); }

FP mirror_map(const FP& p, int n) { return mirror_map<FieldElem>(p, n, generic_consts()); }

QKZSolution propagate(int n) { return propagate<FieldElem>(n, generic_consts()); }

void check_solution_consistency(const QKZSolution& sol) {
    check_solution_consistency<FieldElem>(sol, generic_consts());
}

Report verify_bulk_recursion(const QKZSolution& sol_n, const QKZSolution& sol_m, int i) {
    return verify_bulk_recursion<FieldElem>(sol_n, sol_m, i, generic_consts());
}

Report verify_boundary_recursion(const QKZSolution& sol_n, const QKZSolution& sol_m) {
    return verify_boundary_recursion<FieldElem>(sol_n, sol_m, generic_consts());
}

}  // namespace qkz
