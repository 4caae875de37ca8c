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

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qkz {

/**
 * Rational: exact arbitrary-precision rational numbers.
 *
 * Backed by GMP's mpq_class, which keeps values canonical (reduced fraction,
 * positive denominator) after every arithmetic operation.
 */
using Rational = mpq_class;

/** Parse "p/q" or "p" into a canonical Rational; throws on malformed input. */
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    value.canonicalize();
    return value;
}

/** Render a Rational as "p/q", denominator always present ("3" prints as "3/1"). */
inline std::string rational_to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace qkz
