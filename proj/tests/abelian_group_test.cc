// Copyright 2026 The hsp-elimination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hsp/abelian_group.h"

#include <map>

#include "gtest/gtest.h"
#include "test_support.h"

using namespace hsp;
using hsp::testing::Coords;

namespace {

std::vector<Coords> coords_of(const Subgroup &h) {
    std::vector<Coords> out;
    for (const auto &x : h.elements()) {
        out.push_back(x.coords);
    }
    return out;
}

Subgroup sub(const GroupSpec &g, std::vector<std::vector<int>> elems) {
    std::vector<GroupElement> xs;
    for (auto &c : elems) {
        xs.push_back(GroupElement{c});
    }
    return subgroup_from_elements(g, xs);
}

}  // namespace

TEST(abelian_group, parse_group_spec) {
    EXPECT_EQ(parse_group_spec("Z4xZ2xZ2").factors(), (std::vector<int>{4, 2, 2}));
    EXPECT_EQ(parse_group_spec("z6").order(), 6u);
    EXPECT_EQ(parse_group_spec("Z3XZ3").to_string(), "Z3xZ3");
    EXPECT_EQ(parse_group_spec("Z1").order(), 1u);
    EXPECT_THROW(parse_group_spec("Z0"), DomainError);
    EXPECT_THROW(parse_group_spec(""), DomainError);
    EXPECT_THROW(parse_group_spec("Z4x"), DomainError);
    EXPECT_THROW(parse_group_spec("Z4 x Z2"), DomainError);
    EXPECT_THROW(parse_group_spec("Q8"), DomainError);
    EXPECT_THROW(parse_group_spec("Z-3"), DomainError);
    EXPECT_THROW(parse_group_spec("Z4097"), SizeError);
    EXPECT_THROW(parse_group_spec("Z64xZ64xZ2"), SizeError);
    EXPECT_EQ(parse_group_spec("Z8", 8).order(), 8u);
    EXPECT_THROW(parse_group_spec("Z9", 8), SizeError);
}

TEST(abelian_group, element_indexing_is_lexicographic) {
    GroupSpec g({3, 2, 4});
    auto elems = g.elements();
    ASSERT_EQ(elems.size(), 24u);
    EXPECT_TRUE(std::is_sorted(elems.begin(), elems.end()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        EXPECT_EQ(g.index_of(elems[i]), i);
    }
    EXPECT_EQ(g.element_order(GroupElement{{1, 1, 2}}), 6u);
    EXPECT_EQ(g.add(GroupElement{{2, 1, 3}}, GroupElement{{2, 1, 3}}), (GroupElement{{1, 0, 2}}));
    EXPECT_EQ(g.negate(GroupElement{{1, 1, 1}}), (GroupElement{{2, 1, 3}}));
    EXPECT_THROW(g.index_of(GroupElement{{3, 0, 0}}), DomainError);
}

TEST(abelian_group, enumerate_subgroups_examples) {
    auto z2 = enumerate_subgroups(GroupSpec({2}));
    ASSERT_EQ(z2.size(), 2u);
    EXPECT_EQ(coords_of(z2[0]), (std::vector<Coords>{{0}}));
    EXPECT_EQ(coords_of(z2[1]), (std::vector<Coords>{{0}, {1}}));

    auto z4 = enumerate_subgroups(GroupSpec({4}));
    ASSERT_EQ(z4.size(), 3u);
    EXPECT_EQ(coords_of(z4[0]), (std::vector<Coords>{{0}}));
    EXPECT_EQ(coords_of(z4[1]), (std::vector<Coords>{{0}, {2}}));
    EXPECT_EQ(coords_of(z4[2]), (std::vector<Coords>{{0}, {1}, {2}, {3}}));

    auto v4 = enumerate_subgroups(GroupSpec({2, 2}));
    ASSERT_EQ(v4.size(), 5u);
    EXPECT_EQ(v4.front().order(), 1u);
    EXPECT_EQ(v4[1].order(), 2u);
    EXPECT_EQ(v4[2].order(), 2u);
    EXPECT_EQ(v4[3].order(), 2u);
    EXPECT_EQ(v4.back().order(), 4u);

    auto trivial = enumerate_subgroups(GroupSpec({1}));
    ASSERT_EQ(trivial.size(), 1u);
    EXPECT_EQ(trivial[0].order(), 1u);
}

TEST(abelian_group, enumerate_subgroups_matches_subset_closure_oracle) {
    for (const auto &factors : hsp::testing::abelian_factorizations(12)) {
        GroupSpec g(factors);
        auto found = enumerate_subgroups(g);
        auto oracle = hsp::testing::brute_force_subgroups(factors);
        ASSERT_EQ(found.size(), oracle.size()) << g.to_string();
        std::set<std::set<Coords>> got;
        for (const auto &h : found) {
            auto c = coords_of(h);
            got.insert({c.begin(), c.end()});
            EXPECT_TRUE(is_subgroup(g, h));
            EXPECT_EQ(g.order() % h.order(), 0u);
            EXPECT_EQ(generate_subgroup(g, h.generators()), h);
        }
        EXPECT_EQ(got, std::set<std::set<Coords>>(oracle.begin(), oracle.end())) << g.to_string();
        for (std::size_t i = 1; i < found.size(); ++i) {
            auto key = [](const Subgroup &h) { return std::make_pair(h.order(), h.elements()); };
            EXPECT_LT(key(found[i - 1]), key(found[i]));
        }
    }
}

TEST(abelian_group, generators_are_minimal) {
    // Z2^3 subgroups of order 2^r need exactly r generators.
    GroupSpec g({2, 2, 2});
    for (const auto &h : enumerate_subgroups(g)) {
        std::size_t r = 0;
        while ((std::size_t{1} << r) < h.order()) {
            ++r;
        }
        EXPECT_EQ(h.generators().size(), r);
    }
    // Cyclic groups: every subgroup has at most one generator.
    for (const auto &h : enumerate_subgroups(GroupSpec({12}))) {
        EXPECT_LE(h.generators().size(), 1u);
    }
}

TEST(abelian_group, subgroups_of_prime_cyclic_groups) {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        EXPECT_EQ(enumerate_subgroups(GroupSpec({p})).size(), 2u) << p;
    }
}

TEST(abelian_group, enumerate_respects_cap) {
    GroupSpec g({8});
    EXPECT_THROW(enumerate_subgroups(g, 4), SizeError);
}

TEST(abelian_group, coset_transversal_examples) {
    GroupSpec z4({4});
    auto reps = coset_transversal(z4, sub(z4, {{0}, {2}}));
    EXPECT_EQ(reps, (std::vector<GroupElement>{{{0}}, {{1}}}));

    GroupSpec z2({2});
    EXPECT_EQ(coset_transversal(z2, sub(z2, {{0}, {1}})), (std::vector<GroupElement>{{{0}}}));
    EXPECT_EQ(coset_transversal(z2, sub(z2, {{0}})), (std::vector<GroupElement>{{{0}}, {{1}}}));

    Subgroup not_closed({{{0}}, {{1}}}, {});
    EXPECT_THROW(coset_transversal(z4, not_closed), DomainError);
}

TEST(abelian_group, coset_transversal_matches_partition_oracle) {
    for (const auto &factors : hsp::testing::abelian_factorizations(16)) {
        GroupSpec g(factors);
        for (const auto &h : enumerate_subgroups(g)) {
            auto reps = coset_transversal(g, h);
            ASSERT_EQ(reps.size() * h.order(), g.order());
            std::set<std::set<Coords>> cosets;
            for (const auto &c : reps) {
                auto elems = coset(g, h, c);
                EXPECT_EQ(elems.front(), c) << "representative is the smallest element";
                std::set<Coords> s;
                for (const auto &x : elems) {
                    s.insert(x.coords);
                }
                cosets.insert(s);
            }
            EXPECT_EQ(cosets, hsp::testing::brute_force_cosets(factors, coords_of(h)));
        }
    }
}

TEST(abelian_group, orthogonal_group_examples) {
    GroupSpec z4({4});
    auto perp = orthogonal_group(z4, sub(z4, {{0}, {2}}));
    EXPECT_EQ(perp, (std::vector<Character>{{{0}}, {{2}}}));

    GroupSpec g({3, 2});
    auto all = enumerate_subgroups(g);
    EXPECT_EQ(orthogonal_group(g, all.front()).size(), 6u);
    EXPECT_EQ(orthogonal_group(g, all.back()), (std::vector<Character>{{{0, 0}}}));
}

TEST(abelian_group, orthogonal_group_matches_numeric_oracle) {
    for (const auto &factors : hsp::testing::abelian_factorizations(24)) {
        GroupSpec g(factors);
        for (const auto &h : enumerate_subgroups(g)) {
            std::vector<Character> expected;
            for (const auto &a : hsp::testing::all_coords(factors)) {
                bool trivial = true;
                for (const auto &x : h.elements()) {
                    trivial = trivial && std::abs(hsp::testing::character_value(factors, a, x.coords) - 1.0) < 1e-9;
                }
                if (trivial) {
                    expected.push_back(Character{a});
                }
            }
            EXPECT_EQ(orthogonal_group(g, h), expected) << g.to_string();
        }
    }
}

TEST(abelian_group, character_evaluation) {
    GroupSpec g({4, 6});
    for (const auto &chi : characters(g)) {
        EXPECT_NEAR(std::abs(evaluate(g, chi, g.identity()) - 1.0), 0.0, 1e-15);
        for (const auto &x : g.elements()) {
            auto v = evaluate(g, chi, x);
            EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
            EXPECT_NEAR(std::abs(v - hsp::testing::character_value(g.factors(), chi.exponents, x.coords)), 0.0, 1e-9);
            EXPECT_EQ(is_trivial_on(g, chi, x), std::abs(v - 1.0) < 1e-9);
        }
    }
}

TEST(abelian_group, character_classes_examples) {
    auto z3 = character_classes(GroupSpec({3}));
    ASSERT_EQ(z3.size(), 2u);
    EXPECT_EQ(z3[0], (std::vector<Character>{{{0}}}));
    EXPECT_EQ(z3[1], (std::vector<Character>{{{1}}, {{2}}}));

    auto v4 = character_classes(GroupSpec({2, 2}));
    ASSERT_EQ(v4.size(), 4u);
    for (const auto &c : v4) {
        EXPECT_EQ(c.size(), 1u);
    }

    for (const auto &factors : hsp::testing::abelian_factorizations(24)) {
        GroupSpec g(factors);
        auto classes = character_classes(g);
        EXPECT_EQ(classes.front(), (std::vector<Character>{Character{g.identity().coords}}));
    }
}

TEST(abelian_group, character_classes_partition_and_match_oracle) {
    // Oracle: characters as value vectors; <chi> is the set of pointwise powers.
    for (const auto &factors : hsp::testing::abelian_factorizations(24)) {
        GroupSpec g(factors);
        auto elems = hsp::testing::all_coords(factors);
        auto values = [&](const Coords &a) {
            std::vector<std::complex<double>> v;
            for (const auto &b : elems) {
                v.push_back(hsp::testing::character_value(factors, a, b));
            }
            return v;
        };
        auto key = [](const std::vector<std::complex<double>> &v) {
            std::vector<long> k;
            for (auto z : v) {
                k.push_back(std::lround(z.real() * 1e6));
                k.push_back(std::lround(z.imag() * 1e6));
            }
            return k;
        };
        std::map<Coords, std::set<std::vector<long>>> cyclic;
        for (const auto &a : elems) {
            auto base = values(a);
            auto cur = base;
            std::set<std::vector<long>> powers;
            while (powers.insert(key(cur)).second) {
                for (std::size_t i = 0; i < cur.size(); ++i) {
                    cur[i] *= base[i];
                }
            }
            cyclic[a] = powers;
        }
        auto classes = character_classes(g);
        std::size_t covered = 0;
        std::set<Character> seen;
        for (const auto &cls : classes) {
            covered += cls.size();
            for (const auto &chi : cls) {
                EXPECT_TRUE(seen.insert(chi).second) << "classes overlap";
                for (const auto &other : cls) {
                    EXPECT_EQ(cyclic[chi.exponents], cyclic[other.exponents]);
                }
            }
        }
        EXPECT_EQ(covered, g.order());
        // Members of different classes generate different cyclic groups.
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                EXPECT_NE(cyclic[classes[i].front().exponents], cyclic[classes[j].front().exponents]);
            }
        }
    }
}

TEST(abelian_group, containment) {
    GroupSpec z4({4});
    auto triv = sub(z4, {{0}});
    auto half = sub(z4, {{0}, {2}});
    auto full = sub(z4, {{0}, {1}, {2}, {3}});
    EXPECT_TRUE(subgroup_contains(triv, half));
    EXPECT_TRUE(is_strict(triv, half));
    EXPECT_TRUE(subgroup_contains(half, half));
    EXPECT_FALSE(is_strict(half, half));
    EXPECT_FALSE(subgroup_contains(full, half));
    EXPECT_FALSE(is_strict(full, half));
}

TEST(abelian_group, perp_properties) {
    for (const auto &factors : hsp::testing::abelian_factorizations(64)) {
        GroupSpec g(factors);
        if (g.order() > 64) {
            continue;
        }
        auto subs = enumerate_subgroups(g);
        std::vector<Subgroup> perps;
        for (const auto &h : subs) {
            auto perp = orthogonal_group(g, h);
            EXPECT_EQ(perp.size() * h.order(), g.order());
            perps.push_back(as_subgroup(g, perp));
            // Duality: (H-perp)-perp == H under chi_a <-> a.
            auto back = orthogonal_group(g, perps.back());
            std::vector<GroupElement> back_elems;
            for (const auto &chi : back) {
                back_elems.push_back(GroupElement{chi.exponents});
            }
            EXPECT_EQ(back_elems, h.elements()) << g.to_string();
        }
        if (g.order() > 24) {
            continue;
        }
        for (std::size_t i = 0; i < subs.size(); ++i) {
            for (std::size_t j = 0; j < subs.size(); ++j) {
                EXPECT_EQ(subgroup_contains(subs[j], subs[i]), subgroup_contains(perps[i], perps[j]));
            }
        }
    }
}

TEST(abelian_group, as_subgroup_rejects_non_subgroups) {
    GroupSpec z4({4});
    std::vector<Character> bad{{{0}}, {{1}}};
    EXPECT_THROW(as_subgroup(z4, bad), DomainError);
}
