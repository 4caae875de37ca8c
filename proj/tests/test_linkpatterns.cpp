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

#include <map>
#include <set>
#include <string>

#include "qkz/errors.hpp"
#include "qkz/link_pattern.hpp"

using namespace qkz;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("decode worked example") {
    LinkPattern p = decode("ccooccco");
    CHECK(p.target[0] == kLeft);
    CHECK(p.target[1] == kLeft);
    CHECK(p.target[2] == 5);   // arc (3,6), zero-based 2 <-> 5
    CHECK(p.target[3] == 4);   // arc (4,5)
    CHECK(p.target[4] == 3);
    CHECK(p.target[5] == 2);
    CHECK(p.target[6] == kLeft);
    CHECK(p.target[7] == kRight);
    CHECK(p.arc_count() == 2);
    CHECK(p.r_count() == 1);
}

TEST_CASE("decode and encode are inverse") {
    for (int n = 1; n <= 10; ++n) {
        auto patterns = enumerate_patterns(n);
        CHECK(patterns.size() == (1u << n));
        for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
            const LinkPattern& p = patterns[idx];
            CHECK(pattern_index(p.word) == static_cast<int>(idx));
            CHECK(pattern_word(n, static_cast<int>(idx)) == p.word);
            CHECK(encode(p.target) == p.word);
        }
        // lexicographic order with c < o
        for (std::size_t idx = 1; idx < patterns.size(); ++idx) {
            CHECK(patterns[idx - 1].word < patterns[idx].word);
        }
    }
    CHECK_THROWS_AS(enumerate_patterns(13), SizeLimitError);
    CHECK_THROWS_AS(decode("cxo"), std::invalid_argument);
}

TEST_CASE("encode rejects malformed targets") {
    // crossing arcs: 1<->3, 2<->4
    CHECK_THROWS_AS(encode({2, 3, 0, 1}), std::invalid_argument);
    // asymmetric pairing
    CHECK_THROWS_AS(encode({1, 0, 0}), std::invalid_argument);
    // out-of-range target
    CHECK_THROWS_AS(encode({5, kLeft}), std::invalid_argument);
}

TEST_CASE("generator action tables at two sites") {
    struct Row {
        const char* from;
        const char* to;
        GenWeight w;
    };
    auto run = [](Gen g, const Row& row) {
        GenAction act = apply_gen(g, decode(row.from));
        CHECK(act.result.word == row.to);
        CHECK(act.weight == row.w);
    };

    const Row e1[] = {{"oo", "oc", GenWeight::kOne},
                      {"oc", "oc", GenWeight::kTau},
                      {"co", "oc", GenWeight::kSqrtTauC},
                      {"cc", "oc", GenWeight::kOne}};
    for (const auto& row : e1) run(Gen::e(1), row);

    const Row fr[] = {{"oo", "oo", GenWeight::kOne},
                      {"oc", "oo", GenWeight::kOne},
                      {"co", "co", GenWeight::kOne},
                      {"cc", "co", GenWeight::kSqrtTauC}};
    for (const auto& row : fr) run(Gen::fr(), row);

    const Row fl[] = {{"cc", "cc", GenWeight::kOne},
                      {"oc", "cc", GenWeight::kOne},
                      {"co", "co", GenWeight::kOne},
                      {"oo", "co", GenWeight::kSqrtTauC}};
    for (const auto& row : fl) run(Gen::fl(), row);
}

TEST_CASE("generator action tables at three sites") {
    struct Row {
        const char* from;
        const char* to;
        GenWeight w;
    };
    auto run = [](Gen g, const Row& row) {
        GenAction act = apply_gen(g, decode(row.from));
        CHECK(act.result.word == row.to);
        CHECK(act.weight == row.w);
    };

    const Row e1[] = {{"ooo", "oco", GenWeight::kOne},
                      {"ooc", "oco", GenWeight::kOne},
                      {"oco", "oco", GenWeight::kTau},
                      {"occ", "occ", GenWeight::kTau},
                      {"coo", "oco", GenWeight::kSqrtTauC},
                      {"coc", "occ", GenWeight::kOne},
                      {"cco", "oco", GenWeight::kOne},
                      {"ccc", "occ", GenWeight::kOne}};
    for (const auto& row : e1) run(Gen::e(1), row);

    const Row e2[] = {{"ooo", "ooc", GenWeight::kOne},
                      {"ooc", "ooc", GenWeight::kTau},
                      {"oco", "ooc", GenWeight::kOne},
                      {"occ", "coc", GenWeight::kOne},
                      {"coo", "coc", GenWeight::kOne},
                      {"coc", "coc", GenWeight::kTau},
                      {"cco", "coc", GenWeight::kSqrtTauC},
                      {"ccc", "coc", GenWeight::kOne}};
    for (const auto& row : e2) run(Gen::e(2), row);

    const Row fr[] = {{"ooo", "ooo", GenWeight::kOne},
                      {"ooc", "ooo", GenWeight::kOne},
                      {"oco", "oco", GenWeight::kOne},
                      {"occ", "oco", GenWeight::kSqrtTauC},
                      {"coo", "coo", GenWeight::kOne},
                      {"coc", "coo", GenWeight::kOne},
                      {"cco", "cco", GenWeight::kOne},
                      {"ccc", "cco", GenWeight::kSqrtTauC}};
    for (const auto& row : fr) run(Gen::fr(), row);

    const Row fl[] = {{"ooo", "coo", GenWeight::kSqrtTauC},
                      {"ooc", "coc", GenWeight::kSqrtTauC},
                      {"oco", "cco", GenWeight::kOne},
                      {"occ", "ccc", GenWeight::kOne},
                      {"coo", "coo", GenWeight::kOne},
                      {"coc", "coc", GenWeight::kOne},
                      {"cco", "cco", GenWeight::kOne},
                      {"ccc", "ccc", GenWeight::kOne}};
    for (const auto& row : fl) run(Gen::fl(), row);
}

TEST_CASE("generator weights stay in the allowed set") {
    for (int n = 2; n <= 8; ++n) {
        auto patterns = enumerate_patterns(n);
        std::vector<Gen> gens;
        for (int i = 1; i < n; ++i) gens.push_back(Gen::e(i));
        gens.push_back(Gen::fl());
        gens.push_back(Gen::fr());
        for (const auto& p : patterns) {
            for (const Gen& g : gens) {
                GenAction act = apply_gen(g, p);
                CHECK(act.result.size() == p.size());
                // idempotent-type weights only
                bool ok = act.weight == GenWeight::kOne ||
                          act.weight == GenWeight::kTau ||
                          act.weight == GenWeight::kSqrtTauC;
                CHECK(ok);
                // tau weight means fixed point for e_i
                if (act.weight == GenWeight::kTau) CHECK(act.result.word == p.word);
            }
        }
    }
}

TEST_CASE("pairing map examples") {
    CHECK(upsilon(decode("oo")).word == "oc");
    CHECK(upsilon(decode("co")).word == "cc");
    CHECK(upsilon(decode("ooo")).word == "coc");
    CHECK(upsilon(decode("cc")).word == "cc");

    CHECK(theta(decode("oc")).word == "occ");
    CHECK(theta(decode("co")).word == "coc");
    CHECK(theta(decode("oo")).word == "coc");
    CHECK(theta(decode("ooo")).word == "ococ");
    CHECK(theta(decode("ooc")).word == "oocc");
    CHECK(theta(decode("oooo")).word == "cococ");
}

TEST_CASE("pairing map image sizes") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> ups, ths;
        for (const auto& p : enumerate_patterns(n)) {
            LinkPattern u = upsilon(p);
            CHECK(u.r_count() == 0);
            ups.insert(u.word);
            LinkPattern t = theta(p);
            CHECK(t.size() == p.size() + 1);
            CHECK(t.r_count() == 0);
            ths.insert(t.word);
        }
        CHECK(ups.size() == static_cast<std::size_t>(binom(n, n / 2)));
        CHECK(ths.size() == static_cast<std::size_t>(binom(n + 1, (n + 1) / 2)));
    }
}

TEST_CASE("preimage slots at three sites") {
    std::map<std::string, std::set<std::string>> ups, ths;
    for (const auto& p : enumerate_patterns(3)) {
        ups[upsilon(p).word].insert(p.word);
        ths[theta(p).word].insert(p.word);
    }
    CHECK(ups["ccc"] == std::set<std::string>{"ccc", "cco"});
    CHECK(ups["occ"] == std::set<std::string>{"occ", "oco"});
    CHECK(ups["coc"] == std::set<std::string>{"coc", "coo", "ooo", "ooc"});

    CHECK(ths["cccc"] == std::set<std::string>{"ccc"});
    CHECK(ths["cocc"] == std::set<std::string>{"coc"});
    CHECK(ths["occc"] == std::set<std::string>{"occ"});
    CHECK(ths["oocc"] == std::set<std::string>{"ooc"});
    CHECK(ths["ccoc"] == std::set<std::string>{"coo", "cco"});
    CHECK(ths["ococ"] == std::set<std::string>{"ooo", "oco"});
}

TEST_CASE("arc insertion and right-boundary removal") {
    // insert at every slot of a small pattern, then undo where possible
    LinkPattern base = decode("oco");
    for (int i = 1; i <= 4; ++i) {
        LinkPattern bigger = insert_arc(base, i);
        CHECK(bigger.size() == base.size() + 2);
        CHECK(bigger.target[i - 1] == i);
        CHECK(bigger.target[i] == i - 1);
    }
    CHECK_THROWS_AS(insert_arc(base, 0), std::invalid_argument);
    CHECK_THROWS_AS(insert_arc(base, 6), std::invalid_argument);

    // remove_r_arc drops the last site when it points right
    LinkPattern q = decode("ooo");
    LinkPattern r = remove_r_arc(q);
    CHECK(r.word == "oo");
    CHECK_THROWS_AS(remove_r_arc(decode("ooc")), std::invalid_argument);
}
