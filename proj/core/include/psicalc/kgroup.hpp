#pragma once

// Exact Grothendieck-group arithmetic for the nearby-cycles calculus:
// basis changes between intermediate extensions and j_!/j_* classes,
// the class of the nearby cycles complex, duality, and kernels of the
// canonical adjunction maps.
//
// Coefficients are plain integers: these identities are independent of
// the coefficient field of the sheaves (the intermediate extensions of
// the constant systems involved agree for the two perverse t-structures,
// so nothing here sees the characteristic).

#include "psicalc/kclass.hpp"

namespace psicalc {

// Class of the extension by zero i_{I,*} j_{I,!} Lambda_I(a/2) in the IC
// basis: sum over J containing I of IC(J; a + #J - #I). 2^(r-#I) terms.
KClass shriek_to_ic(const Stratum& I, int a, int r);

// Class of IC(I; a) in the shriek basis: inclusion-exclusion over the
// subset lattice, sum over J containing I of (-1)^(#J-#I) Sh(J; a + #J - #I).
ShKClass ic_to_shriek(const Stratum& I, int a, int r);

// Class of the direct image i_{I,*} j_{I,*} Lambda_I(a/2) in the IC basis:
// sum over J containing I of IC(J; a - (#J - #I)).
KClass star_to_ic(const Stratum& I, int a, int r);

// Linear extensions of the basis changes above.
KClass expand_shriek(const ShKClass& x);
ShKClass to_shriek_basis(const KClass& x);

// The class of the nearby cycles perverse sheaf for r branches:
// levels h = 1..r, block twists h-1-2(k-1) for k = 1..h, each level
// aggregated over all strata of that size. r * 2^(r-1) constituents,
// all of multiplicity one.
KClass psi_class(int r);

// Verdier duality on classes: IC(J; a) -> IC(J; -a), linearly.
KClass dual(const KClass& x);

// Kernel of the canonical epimorphism j_{I,!} Lambda_I -> IC(I): the
// shriek class minus its top. All coefficients nonnegative; zero on the
// deepest stratum.
KClass pI_class(const Stratum& I, int r);

// Restriction-to-open followed by extension by zero, at class level.
// The shriek basis is diagonal for stalks, so j_! j^* keeps exactly the
// shriek terms whose stratum survives the predicate.
KClass keep_shriek_terms(const KClass& x, bool (*keep)(const Stratum&, const Stratum&),
                         const Stratum& arg);

// Shriek terms of x with stratum not containing s (class of the extension
// by zero off the branch closure Y_s), back in the IC basis.
KClass restrict_off_branch(const KClass& x, int s);

// Shriek terms with stratum not containing J0 (extension by zero off Y_J0).
KClass restrict_off_stratum(const KClass& x, const Stratum& J0);

// Shriek terms with stratum containing J0 (complementary closed part).
KClass restrict_to_stratum(const KClass& x, const Stratum& J0);

}  // namespace psicalc
