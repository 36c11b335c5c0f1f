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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace hsp {

GroupSpec::GroupSpec(std::vector<int> factors, std::size_t cap) : factors_(std::move(factors)) {
    order_ = 1;
    exponent_ = 1;
    for (int n : factors_) {
        if (n < 1) {
            throw DomainError("cyclic factor order must be >= 1, got " + std::to_string(n));
        }
        if (order_ > cap / static_cast<std::size_t>(n)) {
            throw SizeError("group order exceeds dimension cap " + std::to_string(cap));
        }
        order_ *= static_cast<std::size_t>(n);
        exponent_ = std::lcm(exponent_, static_cast<std::int64_t>(n));
    }
    if (order_ > cap) {
        throw SizeError("group order exceeds dimension cap " + std::to_string(cap));
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t j = factors_.size(); j-- > 1;) {
        strides_[j - 1] = strides_[j] * static_cast<std::size_t>(factors_[j]);
    }
}

GroupElement GroupSpec::identity() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

bool GroupSpec::is_valid(const GroupElement &x) const {
    if (x.coords.size() != factors_.size()) {
        return false;
    }
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (x.coords[j] < 0 || x.coords[j] >= factors_[j]) {
            return false;
        }
    }
    return true;
}

std::size_t GroupSpec::index_of(const GroupElement &x) const {
    if (!is_valid(x)) {
        throw DomainError("element is not a reduced element of " + to_string());
    }
    std::size_t index = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        index += strides_[j] * static_cast<std::size_t>(x.coords[j]);
    }
    return index;
}

GroupElement GroupSpec::element_at(std::size_t index) const {
    if (index >= order_) {
        throw DomainError("element index out of range");
    }
    GroupElement x{std::vector<int>(factors_.size(), 0)};
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        x.coords[j] = static_cast<int>(index / strides_[j]);
        index %= strides_[j];
    }
    return x;
}

std::vector<GroupElement> GroupSpec::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) {
        out.push_back(element_at(i));
    }
    return out;
}

GroupElement GroupSpec::add(const GroupElement &x, const GroupElement &y) const {
    GroupElement z{std::vector<int>(factors_.size(), 0)};
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        z.coords[j] = (x.coords[j] + y.coords[j]) % factors_[j];
    }
    return z;
}

GroupElement GroupSpec::negate(const GroupElement &x) const {
    GroupElement z{std::vector<int>(factors_.size(), 0)};
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        z.coords[j] = (factors_[j] - x.coords[j]) % factors_[j];
    }
    return z;
}

std::size_t GroupSpec::add_index(std::size_t x, std::size_t y) const {
    std::size_t z = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        auto n = static_cast<std::size_t>(factors_[j]);
        std::size_t a = (x / strides_[j]) % n;
        std::size_t b = (y / strides_[j]) % n;
        z += strides_[j] * ((a + b) % n);
    }
    return z;
}

std::size_t GroupSpec::element_order(const GroupElement &x) const {
    std::int64_t result = 1;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        std::int64_t n = factors_[j];
        result = std::lcm(result, n / std::gcd(n, static_cast<std::int64_t>(x.coords[j])));
    }
    return static_cast<std::size_t>(result);
}

std::string GroupSpec::to_string() const {
    if (factors_.empty()) {
        return "Z1";
    }
    std::string out;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (j > 0) {
            out += 'x';
        }
        out += 'Z' + std::to_string(factors_[j]);
    }
    return out;
}

GroupSpec parse_group_spec(std::string_view text, std::size_t cap) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower.empty()) {
        throw DomainError("empty group spec");
    }
    std::vector<int> factors;
    std::size_t pos = 0;
    while (true) {
        if (pos >= lower.size() || lower[pos] != 'z') {
            throw DomainError("bad group spec '" + std::string(text) + "': expected Z<n>");
        }
        ++pos;
        std::size_t end = pos;
        while (end < lower.size() && std::isdigit(static_cast<unsigned char>(lower[end]))) {
            ++end;
        }
        int n = 0;
        auto [ptr, ec] = std::from_chars(lower.data() + pos, lower.data() + end, n);
        if (end == pos || ec != std::errc() || ptr != lower.data() + end) {
            throw DomainError("bad group spec '" + std::string(text) + "': missing or invalid order");
        }
        if (n < 1) {
            throw DomainError("bad group spec '" + std::string(text) + "': cyclic order must be >= 1");
        }
        factors.push_back(n);
        pos = end;
        if (pos == lower.size()) {
            break;
        }
        if (lower[pos] != 'x') {
            throw DomainError("bad group spec '" + std::string(text) + "': expected 'x' between factors");
        }
        ++pos;
    }
    return GroupSpec(std::move(factors), cap);
}

Subgroup::Subgroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(const GroupElement &x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

namespace {

std::vector<char> membership(const GroupSpec &g, const std::vector<std::size_t> &indices) {
    std::vector<char> member(g.order(), 0);
    for (std::size_t i : indices) {
        member[i] = 1;
    }
    return member;
}

std::vector<std::size_t> indices_of(const GroupSpec &g, const std::vector<GroupElement> &xs) {
    std::vector<std::size_t> out;
    out.reserve(xs.size());
    for (const auto &x : xs) {
        out.push_back(g.index_of(x));
    }
    return out;
}

std::vector<GroupElement> elements_of(const GroupSpec &g, const std::vector<std::size_t> &indices) {
    std::vector<GroupElement> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) {
        out.push_back(g.element_at(i));
    }
    return out;
}

// <S, x> = union of the cosets k*x + S for k below the order of x modulo S.
std::vector<std::size_t> join(const GroupSpec &g, const std::vector<std::size_t> &s, std::size_t x) {
    std::vector<char> in_s = membership(g, s);
    std::vector<std::size_t> out = s;
    std::size_t step = x;
    while (!in_s[step]) {
        for (std::size_t h : s) {
            out.push_back(g.add_index(step, h));
        }
        step = g.add_index(step, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool is_subgroup(const GroupSpec &g, const Subgroup &h) {
    if (h.elements().empty()) {
        return false;
    }
    for (const auto &x : h.elements()) {
        if (!g.is_valid(x)) {
            return false;
        }
    }
    if (!h.contains(g.identity())) {
        return false;
    }
    std::vector<std::size_t> idx = indices_of(g, h.elements());
    std::vector<char> member = membership(g, idx);
    for (std::size_t a : idx) {
        for (std::size_t b : idx) {
            if (!member[g.add_index(a, b)]) {
                return false;
            }
        }
    }
    return true;
}

Subgroup generate_subgroup(const GroupSpec &g, std::span<const GroupElement> generators) {
    std::vector<std::size_t> current{g.index_of(g.identity())};
    for (const auto &x : generators) {
        current = join(g, current, g.index_of(x));
    }
    return Subgroup(elements_of(g, current), {generators.begin(), generators.end()});
}

Subgroup subgroup_from_elements(const GroupSpec &g, std::vector<GroupElement> elements) {
    Subgroup candidate(std::move(elements), {});
    if (!is_subgroup(g, candidate)) {
        throw DomainError("element set is not a subgroup of " + g.to_string());
    }
    std::vector<std::size_t> current{g.index_of(g.identity())};
    std::vector<GroupElement> generators;
    for (const auto &x : candidate.elements()) {
        std::size_t i = g.index_of(x);
        if (!std::binary_search(current.begin(), current.end(), i)) {
            current = join(g, current, i);
            generators.push_back(x);
        }
    }
    return Subgroup(candidate.elements(), std::move(generators));
}

std::vector<Subgroup> enumerate_subgroups(const GroupSpec &g, std::size_t cap) {
    if (g.order() > cap) {
        throw SizeError("group order " + std::to_string(g.order()) + " exceeds dimension cap " + std::to_string(cap));
    }
    struct Found {
        std::vector<std::size_t> elements;
        std::vector<std::size_t> generators;
    };
    // Level k holds the subgroups whose minimal generating sets have size k.
    std::set<std::vector<std::size_t>> seen;
    std::vector<Found> all;
    std::vector<Found> level{{{g.index_of(g.identity())}, {}}};
    seen.insert(level.front().elements);
    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        std::vector<Found> next;
        for (const auto &s : level) {
            std::vector<char> in_s = membership(g, s.elements);
            for (std::size_t x = 0; x < g.order(); ++x) {
                if (in_s[x]) {
                    continue;
                }
                auto joined = join(g, s.elements, x);
                if (seen.insert(joined).second) {
                    auto gens = s.generators;
                    gens.push_back(x);
                    next.push_back({std::move(joined), std::move(gens)});
                }
            }
        }
        level = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Found &a, const Found &b) {
        if (a.elements.size() != b.elements.size()) {
            return a.elements.size() < b.elements.size();
        }
        return a.elements < b.elements;
    });
    std::vector<Subgroup> out;
    out.reserve(all.size());
    for (const auto &f : all) {
        out.emplace_back(elements_of(g, f.elements), elements_of(g, f.generators));
    }
    return out;
}

std::vector<GroupElement> coset_transversal(const GroupSpec &g, const Subgroup &h) {
    if (!is_subgroup(g, h)) {
        throw DomainError("not a subgroup of " + g.to_string());
    }
    std::vector<std::size_t> hidx = indices_of(g, h.elements());
    std::vector<char> covered(g.order(), 0);
    std::vector<GroupElement> reps;
    for (std::size_t c = 0; c < g.order(); ++c) {
        if (covered[c]) {
            continue;
        }
        reps.push_back(g.element_at(c));
        for (std::size_t x : hidx) {
            covered[g.add_index(c, x)] = 1;
        }
    }
    return reps;
}

std::vector<GroupElement> coset(const GroupSpec &g, const Subgroup &h, const GroupElement &c) {
    if (!g.is_valid(c)) {
        throw DomainError("coset representative is not an element of " + g.to_string());
    }
    std::vector<GroupElement> out;
    out.reserve(h.order());
    for (const auto &x : h.elements()) {
        out.push_back(g.add(c, x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool subgroup_contains(const Subgroup &a, const Subgroup &b) {
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(), a.elements().end());
}

bool is_strict(const Subgroup &a, const Subgroup &b) { return subgroup_contains(a, b) && a.order() < b.order(); }

std::int64_t phase_numerator(const GroupSpec &g, const Character &chi, const GroupElement &x) {
    const std::int64_t modulus = g.exponent();
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        std::int64_t n = g.factors()[j];
        std::int64_t term = (static_cast<std::int64_t>(chi.exponents[j]) * x.coords[j]) % n;
        acc = (acc + term * (modulus / n)) % modulus;
    }
    return acc;
}

bool is_trivial_on(const GroupSpec &g, const Character &chi, const GroupElement &x) {
    return phase_numerator(g, chi, x) == 0;
}

std::complex<double> evaluate(const GroupSpec &g, const Character &chi, const GroupElement &x) {
    std::int64_t r = phase_numerator(g, chi, x);
    if (r == 0) {
        return {1.0, 0.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(g.exponent());
    return std::polar(1.0, angle);
}

std::vector<Character> characters(const GroupSpec &g) {
    std::vector<Character> out;
    out.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        out.push_back(Character{g.element_at(i).coords});
    }
    return out;
}

std::vector<Character> orthogonal_group(const GroupSpec &g, const Subgroup &h) {
    if (!is_subgroup(g, h)) {
        throw DomainError("not a subgroup of " + g.to_string());
    }
    // Generators suffice; fall back to all elements if none were recorded.
    const auto &test = h.generators().empty() ? h.elements() : h.generators();
    std::vector<Character> out;
    for (auto &chi : characters(g)) {
        bool trivial = std::all_of(test.begin(), test.end(), [&](const GroupElement &x) { return is_trivial_on(g, chi, x); });
        if (trivial) {
            out.push_back(std::move(chi));
        }
    }
    if (out.size() * h.order() != g.order()) {
        throw std::logic_error("|H-perp| * |H| != |G| for " + g.to_string());
    }
    return out;
}

Subgroup as_subgroup(const GroupSpec &g, std::span<const Character> chars) {
    std::vector<GroupElement> elems;
    elems.reserve(chars.size());
    for (const auto &chi : chars) {
        elems.push_back(GroupElement{chi.exponents});
    }
    return subgroup_from_elements(g, std::move(elems));
}

std::vector<std::vector<Character>> character_classes(const GroupSpec &g) {
    std::map<std::vector<std::size_t>, std::vector<Character>> by_cyclic;
    const std::size_t zero = g.index_of(g.identity());
    for (std::size_t a = 0; a < g.order(); ++a) {
        std::vector<std::size_t> cyclic{zero};
        for (std::size_t x = a; x != zero; x = g.add_index(x, a)) {
            cyclic.push_back(x);
        }
        std::sort(cyclic.begin(), cyclic.end());
        by_cyclic[cyclic].push_back(Character{g.element_at(a).coords});
    }
    std::vector<std::vector<Character>> classes;
    classes.reserve(by_cyclic.size());
    for (auto &[key, members] : by_cyclic) {
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return classes;
}

}  // namespace hsp
