#include "psicalc/kgroup.hpp"

namespace psicalc {

namespace {

void check_index(const Stratum& I, int r) {
  check_branch_count(r);
  if (I.r() != r)
    throw std::domain_error("stratum branch count " + std::to_string(I.r()) +
                            " does not match r = " + std::to_string(r));
}

// Enumerate all J with I <= J <= {1..r} by iterating over subsets of the
// complement mask.
template <typename F>
void for_each_superset(const Stratum& I, int r, F&& f) {
  const std::uint32_t full = (1u << r) - 1u;
  const std::uint32_t comp = full & ~I.bits();
  std::uint32_t extra = 0;
  while (true) {
    f(Stratum(I.bits() | extra, r));
    if (extra == comp) break;
    extra = (extra - comp) & comp;  // next subset of comp
  }
}

}  // namespace

KClass shriek_to_ic(const Stratum& I, int a, int r) {
  check_index(I, r);
  KClass out(r);
  const int nI = I.size();
  for_each_superset(I, r, [&](const Stratum& J) {
    out.add(ICClass{J, a + (J.size() - nI)});
  });
  return out;
}

ShKClass ic_to_shriek(const Stratum& I, int a, int r) {
  check_index(I, r);
  ShKClass out(r);
  const int nI = I.size();
  for_each_superset(I, r, [&](const Stratum& J) {
    const int k = J.size() - nI;
    out.add(ICClass{J, a + k}, (k % 2 == 0) ? 1 : -1);
  });
  return out;
}

KClass star_to_ic(const Stratum& I, int a, int r) {
  check_index(I, r);
  KClass out(r);
  const int nI = I.size();
  for_each_superset(I, r, [&](const Stratum& J) {
    out.add(ICClass{J, a - (J.size() - nI)});
  });
  return out;
}

KClass expand_shriek(const ShKClass& x) {
  KClass out(x.r());
  for (const auto& [c, m] : x.terms())
    out += m * shriek_to_ic(c.stratum, c.twist, x.r());
  return out;
}

ShKClass to_shriek_basis(const KClass& x) {
  ShKClass out(x.r());
  for (const auto& [c, m] : x.terms())
    out += m * ic_to_shriek(c.stratum, c.twist, x.r());
  return out;
}

KClass psi_class(int r) {
  check_branch_count(r);
  KClass out(r);
  for (const Stratum& J : all_strata(r)) {
    const int h = J.size();
    for (int k = 1; k <= h; ++k) out.add(ICClass{J, h - 1 - 2 * (k - 1)});
  }
  return out;
}

KClass dual(const KClass& x) {
  KClass out(x.r());
  for (const auto& [c, m] : x.terms()) out.add(ICClass{c.stratum, -c.twist}, m);
  return out;
}

KClass pI_class(const Stratum& I, int r) {
  KClass out = shriek_to_ic(I, 0, r);
  out.add(ICClass{I, 0}, -1);
  return out;
}

KClass keep_shriek_terms(const KClass& x, bool (*keep)(const Stratum&, const Stratum&),
                         const Stratum& arg) {
  ShKClass sh = to_shriek_basis(x);
  ShKClass kept(x.r());
  for (const auto& [c, m] : sh.terms())
    if (keep(c.stratum, arg)) kept.add(c, m);
  return expand_shriek(kept);
}

KClass restrict_off_branch(const KClass& x, int s) {
  ShKClass sh = to_shriek_basis(x);
  ShKClass kept(x.r());
  for (const auto& [c, m] : sh.terms())
    if (!c.stratum.contains(s)) kept.add(c, m);
  return expand_shriek(kept);
}

KClass restrict_off_stratum(const KClass& x, const Stratum& J0) {
  ShKClass sh = to_shriek_basis(x);
  ShKClass kept(x.r());
  for (const auto& [c, m] : sh.terms())
    if (!J0.subset_of(c.stratum)) kept.add(c, m);
  return expand_shriek(kept);
}

KClass restrict_to_stratum(const KClass& x, const Stratum& J0) {
  ShKClass sh = to_shriek_basis(x);
  ShKClass kept(x.r());
  for (const auto& [c, m] : sh.terms())
    if (J0.subset_of(c.stratum)) kept.add(c, m);
  return expand_shriek(kept);
}

}  // namespace psicalc
