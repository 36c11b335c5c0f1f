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

#ifndef HSP_REPORT_JSON_H
#define HSP_REPORT_JSON_H

#include <string>
#include <vector>

#include "hsp/abelian_group.h"
#include "hsp/dihedral_group.h"
#include "hsp/elimination.h"
#include "hsp/game.h"
#include "hsp/hsp_states.h"
#include "hsp/verify.h"
#include "json.hpp"

namespace hsp {

using Json = nlohmann::json;

Json element_json(const GroupElement &x);
Json subgroup_json(const Subgroup &h);
Json character_json(const Character &chi);

/// Nested rows of [re, im] pairs.
Json matrix_json(const CMatrix &m);
/// Inverse of matrix_json; throws DomainError on a malformed document.
CMatrix matrix_from_json(const Json &j);
Json subspace_json(const CSubspace &s);

Json tolerances_json(const Tolerances &tol);
Json povm_report_json(const linalg::PovmReport &r);
Json state_json(const HiddenSubgroupState &s, bool include_matrix = true);

Json efficiency_json(const EliminationReport &r);
Json optimality_json(const OptimalityReport &r, const std::vector<std::string> &labels);
Json generic_json(const GenericConstruction &r);
Json dihedral_json(const DihedralReport &r);

Json transcript_json(const GameTranscript &t, const std::vector<std::string> &labels);
Json tournament_json(const TournamentStats &s);
Json verify_json(const VerifyReport &r);

/// Indented "key: value" rendering of a JSON document.
std::string render_text(const Json &j);

}  // namespace hsp

#endif  // HSP_REPORT_JSON_H
