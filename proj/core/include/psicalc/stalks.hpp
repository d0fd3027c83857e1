#pragma once

// Stalk computations. The stalk of the nearby-cycles class at a point of
// the open stratum of I is computed two ways: a closed-form oracle (one
// entry per degree with binomial multiplicities) and a spectral-sequence
// route whose first page consists of one signed subset-inclusion (Koszul)
// complex per block. The page degenerates after taking cohomology of the
// rows, which is found by exact rank computations over Q or F_p; the two
// routes must agree exactly.
//
// Sign convention: the inclusion matrices carry the standard simplicial
// signs so that consecutive differentials compose to zero; cohomology
// dimensions are unchanged by the choice. Bases are size-p subsets in
// lexicographic order, so all matrices are reproducible bit for bit.

#include <map>
#include <vector>

#include "psicalc/kclass.hpp"
#include "psicalc/linalg.hpp"

namespace psicalc {

struct StalkEntry {
  int lead_q;       // smallest contributing degree index q (true degree q-(d-1))
  long long euler;  // sum of (-1)^q * multiplicity over contributions
  long long display_mult() const { return (lead_q % 2 == 0) ? euler : -euler; }
};

// Stalk table at a point of the open stratum of I. Honest tables have one
// entry per degree index q with positive multiplicity; virtual tables
// (linear extensions over a class) may carry signs.
class StalkTable {
 public:
  StalkTable(Stratum I, int d);

  const Stratum& point_stratum() const { return I_; }
  int r() const { return I_.r(); }
  int d() const { return d_; }
  const std::map<int, StalkEntry>& entries() const { return entries_; }

  void add(int q, int twist, long long mult);

  // Equality of represented stalk classes (per-twist signed values).
  bool operator==(const StalkTable& o) const;
  bool operator!=(const StalkTable& o) const { return !(*this == o); }

 private:
  Stratum I_;
  int d_;
  std::map<int, StalkEntry> entries_;  // keyed by twist numerator
};

// Stalk of a single IC class at a point of the open stratum of I: empty
// unless the class's stratum is contained in I, else one entry.
StalkTable ic_stalk(const ICClass& c, const Stratum& I, int d);

// Linear extension of ic_stalk over a class.
StalkTable kclass_stalk(const KClass& x, const Stratum& I, int d);

// Closed form for the stalk of the nearby-cycles class: multiplicity
// C(#I-1, q) at degree index q and twist d-1-2q, for q = 0..#I-1.
StalkTable psi_stalk_oracle(const Stratum& I, int d);

// Signed subset-inclusion complex on an m-set, truncated to subset sizes
// k..m. Terms have dimension C(m, p); the differential entry at (K, J) is
// the simplicial sign when K is J with one element added, zero otherwise.
// Differentials compose to zero exactly.
struct ChainComplex {
  int m = 0;
  int k = 0;                       // positions run k..m
  std::vector<int> dims;           // dims[i] = C(m, k+i)
  std::vector<IntMatrix> diffs;    // diffs[i]: position k+i -> k+i+1

  int positions() const { return static_cast<int>(dims.size()); }
};

ChainComplex koszul_complex(int m, int k);

// The same construction including the empty subset (positions 0..m): the
// augmented complex of a full simplex, exact everywhere over any field.
// This realizes the vanishing of the stalks of an extension by zero away
// from its open stratum.
ChainComplex full_subset_complex(int m);

struct CohomologyProfile {
  std::vector<int> dims;     // one per position
  long long characteristic = 0;
};

// Exact cohomology dimensions of a complex with squared differential zero.
CohomologyProfile complex_cohomology(const ChainComplex& c, long long characteristic);

// First page of the stalk spectral sequence at a point of the open
// stratum of I: one row per block k = 1..#I, each row the Koszul complex
// on subsets of I starting at size k, with twist label d-1-2(k-1).
// Cross-block maps vanish, so rows are independent complexes.
struct E1Row {
  int k = 0;
  int twist = 0;
  ChainComplex complex;
};

struct E1Page {
  Stratum I;
  int r = 0;
  int d = 0;
  std::vector<E1Row> rows;

  E1Page(Stratum point, int r_in, int d_in) : I(std::move(point)), r(r_in), d(d_in) {}
};

E1Page e1_page(int r, const Stratum& I, int d);

// Second page = abutment: row cohomology survives only at the leftmost
// position of each row, giving the stalk table. Agrees with the oracle.
StalkTable e2_abutment(int r, const Stratum& I, int d, long long characteristic);

}  // namespace psicalc
