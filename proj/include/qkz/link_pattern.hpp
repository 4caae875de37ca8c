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
#include <vector>

namespace qkz {

/** Boundary targets in a matching; nonnegative values are 0-based site indices. */
constexpr int kLeft = -1;
constexpr int kRight = -2;

/**
 * An extended link pattern on N sites: a non-crossing matching in which every
 * site is either arc-paired with another site or attached to the left (L) or
 * right (R) boundary. Canonical storage is the o/c word; the matching is the
 * decoded view.
 */
struct LinkPattern {
    std::string word;         // letters 'o' and 'c', word.size() == N
    std::vector<int> target;  // per site: partner site, kLeft, or kRight

    int size() const { return static_cast<int>(word.size()); }

    /** True when sites i and j (0-based) are arc-paired. */
    bool has_arc(int i, int j) const { return target[i] == j; }

    /** Number of site-to-site arcs. */
    int arc_count() const;
    /** Number of sites attached to the right boundary. */
    int r_count() const;

    bool operator==(const LinkPattern& rhs) const { return word == rhs.word; }
    bool operator!=(const LinkPattern& rhs) const { return word != rhs.word; }
};

/**
 * Decode an o/c word by the stack algorithm: scan left to right, push 'o',
 * pop-and-pair on 'c' (empty stack sends the site to L); leftover 'o' sites
 * go to R. Throws std::invalid_argument on letters outside {o, c}.
 */
LinkPattern decode(const std::string& word);

/** Rebuild the word from a matching; validates pairing and non-crossing. */
std::string encode(const std::vector<int>& target);

/** Lexicographic index of a word with 'c' < 'o' (0 .. 2^N-1). */
int pattern_index(const std::string& word);

/** Inverse of pattern_index. */
std::string pattern_word(int n, int index);

/**
 * All 2^N patterns in lexicographic order (c before o).
 * Throws SizeLimitError for N above the cap.
 */
std::vector<LinkPattern> enumerate_patterns(int n, int cap = 12);

/** Generators of the two-boundary Temperley-Lieb algebra. */
struct Gen {
    enum Kind { kE, kFL, kFR } kind;
    int i;  // 1-based site index for kE; ignored otherwise

    static Gen e(int i) { return {kE, i}; }
    static Gen fl() { return {kFL, 0}; }
    static Gen fr() { return {kFR, 0}; }
};

/** Multiplicative weight tags produced by generator actions. */
enum class GenWeight { kOne, kTau, kSqrtTauC };

struct GenAction {
    LinkPattern result;
    GenWeight weight;
};

/**
 * Apply a generator to a basis pattern.
 *
 * e_i: when arc(i, i+1) is present the pattern is a tau-eigenvector; otherwise
 * a new arc(i, i+1) forms and the former partners of i and i+1 are joined
 * (site-site: new arc; site-boundary: redirect; L-L or R-R: weight 1;
 * L-R: weight sqrt(tau_c)). f_R re-targets site N to R (weight sqrt(tau_c)
 * when its former partner was L); f_L is the mirror at site 1.
 */
GenAction apply_gen(const Gen& g, const LinkPattern& p);

/**
 * Upsilon: pair the R-attached sites into arcs from the right; an odd
 * leftover R-site is redirected to L. The image has no R-targets.
 */
LinkPattern upsilon(const LinkPattern& p);

/**
 * Theta: move the R-lines to a new site N+1, then reduce until that site
 * carries exactly one line: while more than two lines remain, the second and
 * third R-sites from the right are arced together; with exactly two left the
 * leftmost goes to L; with none, site N+1 goes to L. Output length N+1.
 */
LinkPattern theta(const LinkPattern& p);

/** p_i of the bulk recursion: insert an arc at sites (i, i+1), 1-based i. */
LinkPattern insert_arc(const LinkPattern& p, int i);

/**
 * p_R of the boundary recursion: delete site N and its R-line. Throws
 * std::invalid_argument when site N does not target R.
 */
LinkPattern remove_r_arc(const LinkPattern& p);

}  // namespace qkz
