#pragma once

// Plain-text and DOT renderers for the CLI. Twist numerators print as
// reduced fractions over 2 to match the usual notation; JSON output keeps
// the integer numerators.

#include <string>
#include <vector>

#include "psicalc/filtration.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/kclass.hpp"
#include "psicalc/monodromy.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"
#include "psicalc/vanishing.hpp"

namespace psicalc::render {

std::string kclass(const KClass& x);
std::string shkclass(const ShKClass& x);
std::string sheaf_table(const SheafTable& t);
std::string filtration(const Filtration& f);
std::string stalk_table(const StalkTable& t);
std::string e1_page(const E1Page& page, const std::vector<CohomologyProfile>& cohomology,
                    const StalkTable& abutment, long long characteristic);
std::string monodromy(const MonodromyGrid& g, int power);
std::string constraints(const std::vector<Constraint>& cs);
std::string admissibility(const AdmissibilityReport& rep);
std::string vanishing(const CharacterDatum& chi, const IntervalMap& intervals,
                      const DegreeInterval& concentration);
std::string identity_reports(const std::vector<IdentityReport>& reps);

// DOT diagram of the graded grid: solid edges for order constraints,
// dashed edges for the monodromy arcs.
std::string diagram_dot(int r);

}  // namespace psicalc::render
