#include "psicalc/vanishing.hpp"

#include <algorithm>

#include "psicalc/kgroup.hpp"

namespace psicalc {

DegreeInterval DegreeInterval::closed(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("interval bounds out of order");
  DegreeInterval out;
  out.is_empty = false;
  out.lo = lo;
  out.hi = hi;
  return out;
}

std::string DegreeInterval::to_string() const {
  if (is_empty) return "empty";
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

CharacterDatum::CharacterDatum(Stratum s, bool g) : support(std::move(s)), generic(g) {
  if (generic != (support.size() == 1))
    throw std::domain_error("a character is generic exactly when its support is one branch");
}

CharacterDatum CharacterDatum::with_support(Stratum s) {
  const bool g = s.size() == 1;
  return CharacterDatum(std::move(s), g);
}

std::vector<Stratum> chi_support_strata(int r, const CharacterDatum& chi) {
  if (chi.support.r() != r) throw std::domain_error("support branch count does not match r");
  return substrata_of(chi.support);
}

KClass psi_chi_class(int r, const CharacterDatum& chi) {
  if (chi.support.r() != r) throw std::domain_error("support branch count does not match r");
  KClass out(r);
  const KClass psi = psi_class(r);
  for (const auto& [c, m] : psi.terms())
    if (c.stratum.subset_of(chi.support)) out.add(c, m);
  return out;
}

IntervalMap run_vanishing_induction(int r, const CharacterDatum& chi) {
  check_branch_count(r);
  if (chi.support.r() != r) throw std::domain_error("support branch count does not match r");
  const Stratum& I = chi.support;

  IntervalMap intervals;
  for (const Stratum& J : all_strata(r)) intervals[J] = DegreeInterval::empty();

  // Strata of the support, deepest first; everything off the support stays
  // empty (the twisted local system vanishes there identically).
  std::vector<Stratum> supported = substrata_of(I);
  std::sort(supported.begin(), supported.end(),
            [](const Stratum& a, const Stratum& b) { return a.size() > b.size(); });

  const int bound = r + 1;
  for (const Stratum& J0 : supported) {
    // Degrees at which the intermediate-extension piece of J0 can survive
    // on the page computing its extension by zero: either inside the
    // abutment floor (no negative degrees, strata behave as if affine) or
    // reachable by a differential from an already settled deeper piece
    // (total degree moves by exactly one on every page). The dual page
    // for the direct image gives the mirrored condition.
    auto deeper_partner = [&](int n) {
      for (const Stratum& H : supported) {
        if (!J0.proper_subset_of(H)) continue;
        const DegreeInterval& iv = intervals[H];
        if (iv.contains(n - 1) || iv.contains(n + 1)) return true;
      }
      return false;
    };

    int lo = 0, hi = 0;
    bool any = false;
    for (int n = -bound; n <= bound; ++n) {
      const bool shriek_side = (n >= 0) || deeper_partner(n);
      const bool star_side = (n <= 0) || deeper_partner(n);
      if (shriek_side && star_side) {
        if (!any) lo = n;
        hi = n;
        any = true;
      }
    }
    intervals[J0] = any ? DegreeInterval::closed(lo, hi) : DegreeInterval::empty();
  }
  return intervals;
}

DegreeInterval psi_chi_concentration(int r, const CharacterDatum& chi) {
  const IntervalMap intervals = run_vanishing_induction(r, chi);
  // Hull of the graded pieces of the twisted class: every first-page term
  // of the graded spectral sequence lives inside its piece's interval.
  DegreeInterval hull = DegreeInterval::empty();
  const KClass twisted = psi_chi_class(r, chi);
  for (const auto& [c, m] : twisted.terms()) {
    const DegreeInterval& iv = intervals.at(c.stratum);
    if (iv.is_empty) continue;
    if (hull.is_empty)
      hull = iv;
    else
      hull = DegreeInterval::closed(std::min(hull.lo, iv.lo), std::max(hull.hi, iv.hi));
  }
  return hull;
}

}  // namespace psicalc
