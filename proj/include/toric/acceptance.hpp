// SPDX-License-Identifier: MIT
/*! \file  acceptance.hpp
    \brief The thirteen end-to-end acceptance checks of the artifact, shared
           by the acceptance binary and the CLI verify-all command.
*/
#pragma once

#include <string>
#include <vector>

namespace toric {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string tag;     ///< module grouping, e.g. "family", "sasaki"
    std::string name;    ///< one-line description
    bool passed = false;
    std::string detail;  ///< worst residual or failure reason
};

/*! Run the acceptance criteria.  `only` filters by tag substring (empty
    runs everything).  `tolOverride` > 0 tightens every numeric comparison
    tolerance to min(default, tolOverride); the defaults are pinned inside
    each criterion.  `seed` drives all random sampling. */
std::vector<CriterionResult> run_acceptance(unsigned seed = 2026,
                                            const std::string& only = "",
                                            double tolOverride = 0.0);

}  // namespace toric
