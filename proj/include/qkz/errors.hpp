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

namespace qkz {

/** Requested size exceeds a configured cap (pattern enumeration, solver N). */
struct SizeLimitError : std::runtime_error {
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/** exact_divide was asked for a quotient that does not exist. */
struct NotDivisibleError : std::runtime_error {
    explicit NotDivisibleError(const std::string& what) : std::runtime_error(what) {}
};

/** A division that is guaranteed exact for valid inputs failed; upstream bug. */
struct InternalDivisibilityError : std::logic_error {
    explicit InternalDivisibilityError(const std::string& what) : std::logic_error(what) {}
};

/** Lagrange interpolation: node count does not match the exponent window. */
struct InsufficientNodesError : std::runtime_error {
    explicit InsufficientNodesError(const std::string& what) : std::runtime_error(what) {}
};

/** Lagrange interpolation result failed to clear to a Laurent polynomial. */
struct NonPolynomialResultError : std::runtime_error {
    explicit NonPolynomialResultError(const std::string& what) : std::runtime_error(what) {}
};

/** Component propagation ran out of solvable equations. */
struct PropagationStalledError : std::runtime_error {
    explicit PropagationStalledError(const std::string& what) : std::runtime_error(what) {}
};

/** An overdetermining equation (or a reconstruction consistency check) failed. */
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/** Reconstruction system has unknowns that no equation determines. */
struct UnderdeterminedError : std::runtime_error {
    explicit UnderdeterminedError(const std::string& what) : std::runtime_error(what) {}
};

/** A scalar denominator vanishes at the combinatorial specialization point. */
struct SpecializationPoleError : std::runtime_error {
    explicit SpecializationPoleError(const std::string& what) : std::runtime_error(what) {}
};

/** Stationary-state kernel dimension is not one. */
struct KernelDimensionError : std::runtime_error {
    explicit KernelDimensionError(const std::string& what) : std::runtime_error(what) {}
};

/** Solution file is malformed; message carries the offending line number. */
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qkz
