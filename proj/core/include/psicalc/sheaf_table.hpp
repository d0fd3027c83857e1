#pragma once

// Stratum-wise sheaf tables: the faithful linear image of a K-group class.
//
// A class contributes, on every stratum containing the support of a term,
// a stalk entry keyed by codegree (codegree m means true cohomological
// degree m - d, where d is the ambient relative dimension parameter) and
// absolute twist numerator. Entries in the same (stratum, twist) slot
// combine by the signed count (-1)^codegree * multiplicity: that signed
// value is the per-twist Euler characteristic of the stalk, which is what
// the class determines. The leading (smallest) contributing codegree is
// kept so honest tables display with their natural degree and positive
// multiplicity.
//
// The resulting map KClass -> SheafTable is injective: reading the table
// of a shriek basis element recovers its coefficient directly, so tables
// are in bijection with shriek-basis expansions.

#include <map>

#include "psicalc/kclass.hpp"

namespace psicalc {

struct SheafEntry {
  int lead_codegree;    // smallest codegree that contributed
  long long euler;      // sum of (-1)^codegree * multiplicity
  long long display_mult() const {
    return (lead_codegree % 2 == 0) ? euler : -euler;
  }
};

class SheafTable {
 public:
  using TwistMap = std::map<int, SheafEntry>;
  using Rows = std::map<Stratum, TwistMap, StratumLess>;

  SheafTable(int r, int d);

  int r() const { return r_; }
  int d() const { return d_; }
  const Rows& rows() const { return rows_; }

  void add(const Stratum& stratum, int codegree, int twist, long long mult);
  const TwistMap* row(const Stratum& stratum) const;

  // Keep only the rows whose stratum contains I.
  SheafTable restricted_to(const Stratum& I) const;

  // Equality of the represented classes: the signed per-twist values agree
  // on every stratum. Lead codegrees are display metadata and do not
  // participate.
  bool operator==(const SheafTable& o) const;
  bool operator!=(const SheafTable& o) const { return !(*this == o); }

 private:
  int r_;
  int d_;
  Rows rows_;
};

// The table of a class: IC(J; a) contributes, on every stratum containing
// J, the entry (codegree #J, twist d - #J + a) with its coefficient.
SheafTable to_sheaf_table(const KClass& x, int d);

// Inverse of to_sheaf_table: each (stratum, twist) slot of the table is one
// shriek-basis coefficient.
KClass from_sheaf_table(const SheafTable& t);

}  // namespace psicalc
