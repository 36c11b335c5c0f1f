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

#ifndef HSP_DIHEDRAL_GROUP_H
#define HSP_DIHEDRAL_GROUP_H

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsp/errors.h"

namespace hsp {

/// (a, b) = r^a s^b in Z_N x| Z_2.
struct DihedralElement {
    int rotation = 0;
    int flip = 0;

    auto operator<=>(const DihedralElement &) const = default;
    bool operator==(const DihedralElement &) const = default;
};

/// The dihedral group D_N of order 2N.
class DihedralSpec {
   public:
    explicit DihedralSpec(int n, std::size_t cap = kDefaultDimensionCap);

    int n() const { return n_; }
    std::size_t order() const { return 2 * static_cast<std::size_t>(n_); }
    bool is_valid(const DihedralElement &x) const;
    /// Basis index of |(a,b)> in C[D_N]: a + b*N.
    std::size_t index_of(const DihedralElement &x) const;
    DihedralElement element_at(std::size_t index) const;
    std::string to_string() const { return "D" + std::to_string(n_); }

   private:
    int n_;
};

/// Parses "D<n>" (case-insensitive). Throws DomainError on bad input.
DihedralSpec parse_dihedral_spec(std::string_view text, std::size_t cap = kDefaultDimensionCap);

/// (a,b)(c,d) = (a + (-1)^b c mod N, b + d mod 2).
DihedralElement dihedral_multiply(const DihedralSpec &g, const DihedralElement &x, const DihedralElement &y);

/// The order-2 subgroup {(0,0), (k,1)}.
struct HiddenReflection {
    int k = 0;

    std::vector<DihedralElement> elements() const { return {{0, 0}, {k, 1}}; }
};

/// Throws DomainError unless 0 <= k < N.
HiddenReflection hidden_reflection(const DihedralSpec &g, int k);

/// Brute-force closure test on the element set of `h`.
bool is_subgroup(const DihedralSpec &g, const HiddenReflection &h);

/// Left cosets (a,0)H = {(a,0), (a+k mod N, 1)} for a = 0..N-1.
std::vector<std::pair<DihedralElement, DihedralElement>> reflection_cosets(const DihedralSpec &g,
                                                                           const HiddenReflection &h);

bool is_prime(int n);

}  // namespace hsp

#endif  // HSP_DIHEDRAL_GROUP_H
