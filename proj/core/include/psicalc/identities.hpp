#pragma once

// Catalog of structural identities of the calculus, each checked exactly
// over every admissible index choice at a given branch count. The catalog
// keys are stable identifiers used by the CLI (`verify --identity <key>`).
//
//   binom          alternating binomial identity underlying the
//                  inclusion-exclusion basis change
//   eq-jh!*        level-aggregated expansion of an intermediate extension
//                  in the shriek basis, with binomial coefficients
//   eq-jh!         level-aggregated expansion of a shriek class in the IC
//                  basis, with binomial coefficients
//   lem-important  class identity of the short exact sequence produced by
//                  extending a level sum by zero off one branch
//   lem-jneq!      class identity of the short exact sequence cutting one
//                  adjacent stratum out of the kernel class P_I
//   prop-ij        the deeper-stratum part of a direct image class equals
//                  the adjacent direct image class twisted by -1/2
//   datlem         sheaf-table identity: the table of the nearby-cycles
//                  class restricted to strata containing I agrees with the
//                  direct-image expansion of its own row at I

#include <string>
#include <vector>

#include "psicalc/kclass.hpp"

namespace psicalc {

struct IdentityReport {
  std::string name;
  bool pass = false;
  long long instances = 0;        // index choices checked
  std::string counterexample;     // first failing instance, empty on pass
};

const std::vector<std::string>& identity_catalog();

// Evaluates both sides of the named identity for all admissible index
// choices at this r. Throws std::domain_error for unknown names.
IdentityReport verify_identity(const std::string& name, int r);

// Runs the whole catalog; reports in catalog order.
std::vector<IdentityReport> verify_all_identities(int r);

}  // namespace psicalc
