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

#include "hsp/dihedral_group.h"

#include <cctype>
#include <charconv>

namespace hsp {

DihedralSpec::DihedralSpec(int n, std::size_t cap) : n_(n) {
    if (n < 2) {
        throw DomainError("dihedral D_N needs N >= 2, got " + std::to_string(n));
    }
    if (2 * static_cast<std::size_t>(n) > cap) {
        throw SizeError("dihedral order " + std::to_string(2 * static_cast<std::size_t>(n)) + " exceeds dimension cap " +
                        std::to_string(cap));
    }
}

bool DihedralSpec::is_valid(const DihedralElement &x) const {
    return x.rotation >= 0 && x.rotation < n_ && (x.flip == 0 || x.flip == 1);
}

std::size_t DihedralSpec::index_of(const DihedralElement &x) const {
    if (!is_valid(x)) {
        throw DomainError("not an element of " + to_string());
    }
    return static_cast<std::size_t>(x.rotation) + static_cast<std::size_t>(x.flip) * static_cast<std::size_t>(n_);
}

DihedralElement DihedralSpec::element_at(std::size_t index) const {
    if (index >= order()) {
        throw DomainError("element index out of range");
    }
    auto n = static_cast<std::size_t>(n_);
    return {static_cast<int>(index % n), static_cast<int>(index / n)};
}

DihedralSpec parse_dihedral_spec(std::string_view text, std::size_t cap) {
    if (text.size() < 2 || std::tolower(static_cast<unsigned char>(text.front())) != 'd') {
        throw DomainError("bad dihedral spec '" + std::string(text) + "': expected D<n>");
    }
    int n = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw DomainError("bad dihedral spec '" + std::string(text) + "': expected D<n>");
    }
    return DihedralSpec(n, cap);
}

DihedralElement dihedral_multiply(const DihedralSpec &g, const DihedralElement &x, const DihedralElement &y) {
    const int n = g.n();
    int turned = x.flip ? (n - y.rotation) % n : y.rotation;
    return {(x.rotation + turned) % n, (x.flip + y.flip) % 2};
}

HiddenReflection hidden_reflection(const DihedralSpec &g, int k) {
    if (k < 0 || k >= g.n()) {
        throw DomainError("reflection index k must lie in [0, N)");
    }
    return HiddenReflection{k};
}

bool is_subgroup(const DihedralSpec &g, const HiddenReflection &h) {
    auto elems = h.elements();
    for (const auto &x : elems) {
        if (!g.is_valid(x)) {
            return false;
        }
    }
    for (const auto &x : elems) {
        for (const auto &y : elems) {
            auto z = dihedral_multiply(g, x, y);
            if (z != elems[0] && z != elems[1]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<DihedralElement, DihedralElement>> reflection_cosets(const DihedralSpec &g,
                                                                           const HiddenReflection &h) {
    const DihedralElement r{h.k, 1};
    std::vector<std::pair<DihedralElement, DihedralElement>> out;
    out.reserve(static_cast<std::size_t>(g.n()));
    for (int a = 0; a < g.n(); ++a) {
        DihedralElement c{a, 0};
        out.emplace_back(c, dihedral_multiply(g, c, r));
    }
    return out;
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace hsp
