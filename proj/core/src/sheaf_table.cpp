#include "psicalc/sheaf_table.hpp"

#include "psicalc/kgroup.hpp"

namespace psicalc {

SheafTable::SheafTable(int r, int d) : r_(r), d_(d) {
  check_branch_count(r);
  if (d < r)
    throw std::domain_error("ambient dimension parameter d must be >= r, got d = " +
                            std::to_string(d) + ", r = " + std::to_string(r));
}

void SheafTable::add(const Stratum& stratum, int codegree, int twist, long long mult) {
  if (mult == 0) return;
  auto& slot = rows_[stratum];
  auto [it, inserted] = slot.try_emplace(twist, SheafEntry{codegree, 0});
  if (codegree < it->second.lead_codegree) it->second.lead_codegree = codegree;
  it->second.euler += (codegree % 2 == 0) ? mult : -mult;
  if (it->second.euler == 0) {
    slot.erase(it);
    if (slot.empty()) rows_.erase(stratum);
  }
}

const SheafTable::TwistMap* SheafTable::row(const Stratum& stratum) const {
  auto it = rows_.find(stratum);
  return it == rows_.end() ? nullptr : &it->second;
}

SheafTable SheafTable::restricted_to(const Stratum& I) const {
  SheafTable out(r_, d_);
  for (const auto& [stratum, twists] : rows_) {
    if (!I.subset_of(stratum)) continue;
    for (const auto& [twist, entry] : twists)
      out.add(stratum, entry.lead_codegree, twist, entry.display_mult());
  }
  return out;
}

bool SheafTable::operator==(const SheafTable& o) const {
  if (r_ != o.r_ || d_ != o.d_) return false;
  if (rows_.size() != o.rows_.size()) return false;
  auto a = rows_.begin();
  auto b = o.rows_.begin();
  for (; a != rows_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    if (a->second.size() != b->second.size()) return false;
    auto ta = a->second.begin();
    auto tb = b->second.begin();
    for (; ta != a->second.end(); ++ta, ++tb) {
      if (ta->first != tb->first || ta->second.euler != tb->second.euler) return false;
    }
  }
  return true;
}

SheafTable to_sheaf_table(const KClass& x, int d) {
  SheafTable out(x.r(), d);
  const std::uint32_t full = (1u << x.r()) - 1u;
  for (const auto& [c, m] : x.terms()) {
    const int nJ = c.stratum.size();
    const std::uint32_t comp = full & ~c.stratum.bits();
    std::uint32_t extra = 0;
    while (true) {
      out.add(Stratum(c.stratum.bits() | extra, x.r()), nJ, d - nJ + c.twist, m);
      if (extra == comp) break;
      extra = (extra - comp) & comp;
    }
  }
  return out;
}

KClass from_sheaf_table(const SheafTable& t) {
  // Table slot (K, w) carries the shriek coefficient of Sh(K; w - d + #K)
  // with the sign (-1)^#K.
  ShKClass sh(t.r());
  for (const auto& [stratum, twists] : t.rows()) {
    const int nK = stratum.size();
    for (const auto& [twist, entry] : twists) {
      const long long coeff = (nK % 2 == 0) ? entry.euler : -entry.euler;
      sh.add(ICClass{stratum, twist - t.d() + nK}, coeff);
    }
  }
  return expand_shriek(sh);
}

}  // namespace psicalc
