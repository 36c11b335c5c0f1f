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

#ifndef HSP_ABELIAN_GROUP_H
#define HSP_ABELIAN_GROUP_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hsp/errors.h"

namespace hsp {

/// An element of Z_{n_1} x ... x Z_{n_k}, stored as reduced residues.
struct GroupElement {
    std::vector<int> coords;

    auto operator<=>(const GroupElement &) const = default;
    bool operator==(const GroupElement &) const = default;
};

/// A finite Abelian group given as an ordered product of cyclic factors.
///
/// Elements are indexed in mixed radix with the first factor most
/// significant, so index order coincides with lexicographic order on
/// coordinate tuples. That index is also the basis index of |g> in C[G].
class GroupSpec {
   public:
    /// Trivial group (no factors, order 1).
    GroupSpec() = default;

    /// Throws DomainError on a factor < 1 and SizeError if the order
    /// exceeds `cap`.
    explicit GroupSpec(std::vector<int> factors, std::size_t cap = kDefaultDimensionCap);

    const std::vector<int> &factors() const { return factors_; }
    std::size_t order() const { return order_; }
    std::size_t rank() const { return factors_.size(); }
    /// lcm of the factor orders; every character value is a power of
    /// exp(2 pi i / exponent()).
    std::int64_t exponent() const { return exponent_; }

    GroupElement identity() const;
    bool is_valid(const GroupElement &x) const;
    std::size_t index_of(const GroupElement &x) const;
    GroupElement element_at(std::size_t index) const;
    std::vector<GroupElement> elements() const;

    GroupElement add(const GroupElement &x, const GroupElement &y) const;
    GroupElement negate(const GroupElement &x) const;
    /// Index-level addition, used by the enumeration loops.
    std::size_t add_index(std::size_t x, std::size_t y) const;
    std::size_t element_order(const GroupElement &x) const;

    /// Canonical spelling, e.g. "Z4xZ2". The trivial group is "Z1".
    std::string to_string() const;

    bool operator==(const GroupSpec &other) const { return factors_ == other.factors_; }

   private:
    std::vector<int> factors_;
    std::vector<std::size_t> strides_;
    std::size_t order_ = 1;
    std::int64_t exponent_ = 1;
};

/// Parses `Z<n>` factors joined by `x`, e.g. "Z4xZ2xZ2" (case-insensitive,
/// no whitespace). Throws DomainError on malformed input or n < 1.
GroupSpec parse_group_spec(std::string_view text, std::size_t cap = kDefaultDimensionCap);

/// A subgroup as its sorted element list plus a generating set.
class Subgroup {
   public:
    Subgroup(std::vector<GroupElement> elements, std::vector<GroupElement> generators);

    const std::vector<GroupElement> &elements() const { return elements_; }
    const std::vector<GroupElement> &generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const GroupElement &x) const;

    bool operator==(const Subgroup &other) const { return elements_ == other.elements_; }

   private:
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
};

/// True if every element is valid for `g`, the identity is present and the
/// set is closed under addition.
bool is_subgroup(const GroupSpec &g, const Subgroup &h);

/// Smallest subgroup containing `generators`; the given list is kept as the
/// generator witness.
Subgroup generate_subgroup(const GroupSpec &g, std::span<const GroupElement> generators);

/// Wraps an element set that is already a subgroup, choosing generators
/// greedily in canonical order. Throws DomainError if the set is not closed.
Subgroup subgroup_from_elements(const GroupSpec &g, std::vector<GroupElement> elements);

/// Every subgroup exactly once, sorted by (order, element list). Each
/// generator set has the minimum possible size.
std::vector<Subgroup> enumerate_subgroups(const GroupSpec &g, std::size_t cap = kDefaultDimensionCap);

/// Smallest element of each coset c + H, in increasing order.
std::vector<GroupElement> coset_transversal(const GroupSpec &g, const Subgroup &h);

/// The coset c + H in canonical order.
std::vector<GroupElement> coset(const GroupSpec &g, const Subgroup &h, const GroupElement &c);

/// a <= b as element sets.
bool subgroup_contains(const Subgroup &a, const Subgroup &b);
/// a < b strictly.
bool is_strict(const Subgroup &a, const Subgroup &b);

/// chi_a(b) = exp(2 pi i sum_j a_j b_j / n_j).
struct Character {
    std::vector<int> exponents;

    auto operator<=>(const Character &) const = default;
    bool operator==(const Character &) const = default;
};

/// The exact phase of chi(x) as a residue r modulo g.exponent(), so that
/// chi(x) = exp(2 pi i r / g.exponent()).
std::int64_t phase_numerator(const GroupSpec &g, const Character &chi, const GroupElement &x);

/// True iff chi(x) == 1, decided in integer arithmetic.
bool is_trivial_on(const GroupSpec &g, const Character &chi, const GroupElement &x);

std::complex<double> evaluate(const GroupSpec &g, const Character &chi, const GroupElement &x);

/// All |G| characters, in exponent-tuple order (same order as elements).
std::vector<Character> characters(const GroupSpec &g);

/// H-perp: the characters equal to 1 on every generator of H.
std::vector<Character> orthogonal_group(const GroupSpec &g, const Subgroup &h);

/// Identifies a set of characters with the subgroup of G having the same
/// exponent tuples. Throws DomainError if the set is not a subgroup of G^.
Subgroup as_subgroup(const GroupSpec &g, std::span<const Character> chars);

/// Classes of chi ~ chi' iff <chi> == <chi'>. Members are in canonical
/// order and classes are sorted by their first member, so [chi_0] is first.
std::vector<std::vector<Character>> character_classes(const GroupSpec &g);

}  // namespace hsp

#endif  // HSP_ABELIAN_GROUP_H
