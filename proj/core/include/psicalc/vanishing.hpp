#pragma once

// Degree-range vanishing for character components of the nearby-cycles
// class under the affineness hypothesis.
//
// Characters are pure combinatorial labels: a character datum records the
// set I of branches on which the character is trivial, so the twisted
// class is supported exactly on strata contained in I. A character is
// generic when that set is a single branch.
//
// The induction works with closed integer intervals bounding the possibly
// nonzero global cohomology degrees (perverse normalization, degree 0 in
// the middle). Base facts, taken as axioms: extensions by zero from open
// strata have no cohomology in negative degrees (the strata behave as if
// affine), and dually direct images have none in positive degrees.

#include <map>
#include <string>
#include <vector>

#include "psicalc/kclass.hpp"

namespace psicalc {

struct DegreeInterval {
  bool is_empty = true;
  int lo = 0;
  int hi = 0;

  static DegreeInterval empty() { return DegreeInterval{}; }
  static DegreeInterval closed(int lo, int hi);

  bool contains(int n) const { return !is_empty && lo <= n && n <= hi; }
  bool subset_of(const DegreeInterval& o) const {
    return is_empty || (!o.is_empty && o.lo <= lo && hi <= o.hi);
  }
  bool operator==(const DegreeInterval& o) const {
    if (is_empty || o.is_empty) return is_empty == o.is_empty;
    return lo == o.lo && hi == o.hi;
  }
  std::string to_string() const;
};

struct CharacterDatum {
  Stratum support;  // branches on which the character is trivial
  bool generic;     // equivalent to #support == 1

  CharacterDatum(Stratum s, bool g);
  static CharacterDatum with_support(Stratum s);
};

// Strata carrying the twisted class: all nonempty subsets of the support.
std::vector<Stratum> chi_support_strata(int r, const CharacterDatum& chi);

// The nearby-cycles class cut down to supported strata.
KClass psi_chi_class(int r, const CharacterDatum& chi);

using IntervalMap = std::map<Stratum, DegreeInterval, StratumLess>;

// Descending induction over stratum size: each stratum's interval is cut
// by the spectral-sequence accounting of its extension by zero (floor
// from affineness, differential partners one degree away in the already
// settled deeper strata) and the dual run for the direct image. Output
// equals [-(#I-#J), #I-#J] on subsets J of the support I and is empty
// elsewhere.
IntervalMap run_vanishing_induction(int r, const CharacterDatum& chi);

// Outer bound for the twisted class through the graded spectral sequence:
// the hull of the constituent intervals, within [-(#I-1), #I-1]; equals
// [0,0] for generic characters.
DegreeInterval psi_chi_concentration(int r, const CharacterDatum& chi);

}  // namespace psicalc
