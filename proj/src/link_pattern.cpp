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

#include "qkz/link_pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "qkz/errors.hpp"

namespace qkz {

int LinkPattern::arc_count() const {
    int arcs = 0;
    for (int i = 0; i < size(); ++i)
        if (target[i] > i) ++arcs;
    return arcs;
}

int LinkPattern::r_count() const {
    return static_cast<int>(std::count(target.begin(), target.end(), kRight));
}

LinkPattern decode(const std::string& word) {
    LinkPattern p;
    p.word = word;
    p.target.assign(word.size(), kRight);
    std::vector<int> open;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[i] == 'o') {
            open.push_back(i);
        } else if (word[i] == 'c') {
            if (open.empty()) {
                p.target[i] = kLeft;
            } else {
                int j = open.back();
                open.pop_back();
                p.target[i] = j;
                p.target[j] = i;
            }
        } else {
            throw std::invalid_argument("decode: letter '" + std::string(1, word[i]) +
                                        "' outside {o, c}");
        }
    }
    return p;
}

std::string encode(const std::vector<int>& target) {
    const int n = static_cast<int>(target.size());
    std::string word(target.size(), '?');
    for (int i = 0; i < n; ++i) {
        if (target[i] == kLeft) {
            word[i] = 'c';
        } else if (target[i] == kRight) {
            word[i] = 'o';
        } else {
            const int j = target[i];
            if (j < 0 || j >= n || j == i || target[j] != i)
                throw std::invalid_argument("encode: sites are not mutually paired");
            word[i] = i < j ? 'o' : 'c';
        }
    }
    // The word must decode back to the same matching (rules out crossings and
    // misplaced boundary attachments).
    if (decode(word).target != target)
        throw std::invalid_argument("encode: matching is not a valid extended link pattern");
    return word;
}

int pattern_index(const std::string& word) {
    int index = 0;
    for (char letter : word) index = 2 * index + (letter == 'o' ? 1 : 0);
    return index;
}

std::string pattern_word(int n, int index) {
    std::string word(static_cast<std::size_t>(n), 'c');
    for (int i = n - 1; i >= 0; --i) {
        if (index & 1) word[i] = 'o';
        index >>= 1;
    }
    return word;
}

std::vector<LinkPattern> enumerate_patterns(int n, int cap) {
    if (n < 1)
        throw std::invalid_argument("enumerate_patterns: N must be positive");
    if (n > cap)
        throw SizeLimitError("enumerate_patterns: N=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
    std::vector<LinkPattern> patterns;
    patterns.reserve(1u << n);
    for (int index = 0; index < (1 << n); ++index)
        patterns.push_back(decode(pattern_word(n, index)));
    return patterns;
}

namespace {

/** Join the former partners a and b of a freshly arced pair; returns the weight. */
GenWeight join_targets(std::vector<int>& target, int a, int b) {
    const bool a_site = a >= 0;
    const bool b_site = b >= 0;
    if (a_site && b_site) {
        target[a] = b;
        target[b] = a;
        return GenWeight::kOne;
    }
    if (a_site) {
        target[a] = b;  // b is a boundary tag
        return GenWeight::kOne;
    }
    if (b_site) {
        target[b] = a;
        return GenWeight::kOne;
    }
    // Two boundary tags: same side closes a boundary loop of weight 1
    // (tau_L = tau_R = 1); opposite sides remove an L-R line at sqrt(tau_c).
    return a == b ? GenWeight::kOne : GenWeight::kSqrtTauC;
}

}  // namespace

GenAction apply_gen(const Gen& g, const LinkPattern& p) {
    const int n = p.size();
    if (g.kind == Gen::kE) {
        const int i = g.i - 1;
        if (g.i < 1 || g.i > n - 1)
            throw std::invalid_argument("apply_gen: e index out of range");
        if (p.target[i] == i + 1) return {p, GenWeight::kTau};
        std::vector<int> target = p.target;
        const int a = target[i];
        const int b = target[i + 1];
        target[i] = i + 1;
        target[i + 1] = i;
        GenWeight weight = join_targets(target, a, b);
        return {decode(encode(target)), weight};
    }
    const int site = g.kind == Gen::kFR ? n - 1 : 0;
    const int boundary = g.kind == Gen::kFR ? kRight : kLeft;
    if (p.target[site] == boundary) return {p, GenWeight::kOne};
    std::vector<int> target = p.target;
    const int old = target[site];
    target[site] = boundary;
    GenWeight weight = GenWeight::kOne;
    if (old >= 0)
        target[old] = boundary;
    else
        weight = GenWeight::kSqrtTauC;  // former partner was the opposite boundary
    return {decode(encode(target)), weight};
}

LinkPattern upsilon(const LinkPattern& p) {
    std::vector<int> target = p.target;
    std::vector<int> rsites;
    for (int i = 0; i < p.size(); ++i)
        if (target[i] == kRight) rsites.push_back(i);
    // Pair off from the right; the odd leftover (leftmost) goes to L.
    int k = static_cast<int>(rsites.size());
    while (k >= 2) {
        target[rsites[k - 2]] = rsites[k - 1];
        target[rsites[k - 1]] = rsites[k - 2];
        k -= 2;
    }
    if (k == 1) target[rsites[0]] = kLeft;
    return decode(encode(target));
}

LinkPattern theta(const LinkPattern& p) {
    const int n = p.size();
    std::vector<int> target = p.target;
    target.push_back(kLeft);  // provisional: new site joins L when no R-lines exist
    std::vector<int> rsites;
    for (int i = 0; i < n; ++i)
        if (target[i] == kRight) rsites.push_back(i);
    // Reduce until at most one line reaches the new site: the second and third
    // R-sites from the right are arced together repeatedly.
    while (rsites.size() > 2) {
        const int second = rsites[rsites.size() - 2];
        const int third = rsites[rsites.size() - 3];
        target[third] = second;
        target[second] = third;
        rsites.erase(rsites.end() - 3, rsites.end() - 1);
    }
    if (rsites.size() == 2) {
        target[rsites[0]] = kLeft;
        rsites.erase(rsites.begin());
    }
    if (rsites.size() == 1) {
        target[rsites[0]] = n;
        target[n] = rsites[0];
    }
    return decode(encode(target));
}

LinkPattern insert_arc(const LinkPattern& p, int i) {
    const int n = p.size();
    if (i < 1 || i > n + 1)
        throw std::invalid_argument("insert_arc: index out of range");
    std::vector<int> target(static_cast<std::size_t>(n) + 2);
    auto shifted = [i](int t) { return t >= i - 1 ? t + 2 : t; };
    for (int k = 0; k < n; ++k) {
        const int dest = k >= i - 1 ? k + 2 : k;
        target[dest] = p.target[k] >= 0 ? shifted(p.target[k]) : p.target[k];
    }
    target[i - 1] = i;
    target[i] = i - 1;
    return decode(encode(target));
}

LinkPattern remove_r_arc(const LinkPattern& p) {
    const int n = p.size();
    if (n < 1 || p.target[n - 1] != kRight)
        throw std::invalid_argument("remove_r_arc: site N does not target R");
    std::vector<int> target(p.target.begin(), p.target.end() - 1);
    return decode(encode(target));
}

}  // namespace qkz
