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

#ifndef HSP_VERIFY_H
#define HSP_VERIFY_H

#include <cstddef>
#include <string>
#include <vector>

#include "hsp/abelian_group.h"
#include "hsp/dihedral_group.h"
#include "hsp/elimination.h"
#include "json.hpp"

namespace hsp {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Worst numerical residual seen by the check (0 for exact checks).
    double residual = 0.0;
    nlohmann::json details;
};

struct VerifyReport {
    std::string group;
    std::vector<CheckResult> checks;
    nlohmann::json summary;
    bool pass = false;
};

/// Runs every state, observable and elimination check for one Abelian group:
/// kernel structure of rho_H, coset-state expansion, exact character-lattice
/// identities, efficiency of A(G), refinement by F(G) and optimality. With
/// m > 1 the multicoset construction is checked against tensor powers.
VerifyReport verify_abelian(const GroupSpec &g, int m = 1, const Tolerances &tol = {},
                            std::size_t cap = kDefaultDimensionCap);

/// Dihedral elimination-subspace collapse; assertions only for prime N.
VerifyReport verify_dihedral(const DihedralSpec &d, const Tolerances &tol = {});

}  // namespace hsp

#endif  // HSP_VERIFY_H
