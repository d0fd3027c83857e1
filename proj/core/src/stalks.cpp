#include "psicalc/stalks.hpp"

#include <algorithm>
#include <bit>

namespace psicalc {

StalkTable::StalkTable(Stratum I, int d) : I_(std::move(I)), d_(d) {
  if (d < I_.r())
    throw std::domain_error("ambient dimension parameter d must be >= r, got d = " +
                            std::to_string(d) + ", r = " + std::to_string(I_.r()));
}

void StalkTable::add(int q, int twist, long long mult) {
  if (mult == 0) return;
  if (q < 0) throw std::domain_error("stalk degree index q must be >= 0");
  auto [it, inserted] = entries_.try_emplace(twist, StalkEntry{q, 0});
  if (q < it->second.lead_q) it->second.lead_q = q;
  it->second.euler += (q % 2 == 0) ? mult : -mult;
  if (it->second.euler == 0) entries_.erase(it);
}

bool StalkTable::operator==(const StalkTable& o) const {
  if (I_ != o.I_ || d_ != o.d_) return false;
  if (entries_.size() != o.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end(); ++a, ++b)
    if (a->first != b->first || a->second.euler != b->second.euler) return false;
  return true;
}

StalkTable ic_stalk(const ICClass& c, const Stratum& I, int d) {
  StalkTable out(I, d);
  if (c.stratum.r() != I.r()) throw std::domain_error("mismatched branch counts");
  if (!c.stratum.subset_of(I)) return out;
  const int nJ = c.stratum.size();
  out.add(nJ - 1, d - nJ + c.twist, 1);
  return out;
}

StalkTable kclass_stalk(const KClass& x, const Stratum& I, int d) {
  StalkTable out(I, d);
  for (const auto& [c, m] : x.terms()) {
    if (!c.stratum.subset_of(I)) continue;
    const int nJ = c.stratum.size();
    out.add(nJ - 1, d - nJ + c.twist, m);
  }
  return out;
}

StalkTable psi_stalk_oracle(const Stratum& I, int d) {
  StalkTable out(I, d);
  const int n = I.size();
  for (int q = 0; q <= n - 1; ++q) out.add(q, d - 1 - 2 * q, binomial(n - 1, q));
  return out;
}

namespace {

// Size-p subsets of {0..m-1} as bitmasks, in lexicographic member order.
std::vector<std::uint32_t> lex_subsets(int m, int p) {
  std::vector<std::uint32_t> out;
  std::vector<int> idx(p);
  if (p == 0) {
    out.push_back(0);
    return out;
  }
  if (p > m) return out;
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= (1u << i);
    out.push_back(mask);
    int i = p - 1;
    while (i >= 0 && idx[i] == m - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  // Bitmask lists generated this way are already in lexicographic member
  // order; keep them as the canonical bases.
  return out;
}

int inclusion_sign(std::uint32_t J, std::uint32_t K) {
  const std::uint32_t added = K & ~J;
  const int pos = std::countr_zero(added);
  const int below = std::popcount(J & ((1u << pos) - 1u));
  return (below % 2 == 0) ? 1 : -1;
}

ChainComplex build_subset_complex(int m, int k) {
  ChainComplex c;
  c.m = m;
  c.k = k;
  std::vector<std::vector<std::uint32_t>> bases;
  for (int p = k; p <= m; ++p) {
    bases.push_back(lex_subsets(m, p));
    c.dims.push_back(static_cast<int>(bases.back().size()));
  }
  for (int p = k; p < m; ++p) {
    const auto& from = bases[p - k];
    const auto& to = bases[p - k + 1];
    IntMatrix D(static_cast<int>(to.size()), static_cast<int>(from.size()));
    std::map<std::uint32_t, int> row_of;
    for (int i = 0; i < static_cast<int>(to.size()); ++i) row_of[to[i]] = i;
    for (int j = 0; j < static_cast<int>(from.size()); ++j) {
      const std::uint32_t J = from[j];
      for (int b = 0; b < m; ++b) {
        if (J & (1u << b)) continue;
        const std::uint32_t K = J | (1u << b);
        D.at(row_of.at(K), j) = inclusion_sign(J, K);
      }
    }
    c.diffs.push_back(std::move(D));
  }
  return c;
}

}  // namespace

ChainComplex koszul_complex(int m, int k) {
  if (k < 1 || k > m) throw std::domain_error("koszul_complex requires 1 <= k <= m");
  if (m > kMaxBranches) throw std::domain_error("m too large");
  return build_subset_complex(m, k);
}

ChainComplex full_subset_complex(int m) {
  if (m < 1 || m > kMaxBranches) throw std::domain_error("full_subset_complex requires m >= 1");
  return build_subset_complex(m, 0);
}

CohomologyProfile complex_cohomology(const ChainComplex& c, long long characteristic) {
  check_characteristic(characteristic);
  CohomologyProfile profile;
  profile.characteristic = characteristic;
  const int n = c.positions();
  std::vector<int> ranks(n, 0);  // ranks[i] = rank of the differential leaving position i
  for (int i = 0; i + 1 < n; ++i) ranks[i] = rank(c.diffs[i], characteristic);
  for (int i = 0; i < n; ++i) {
    const int incoming = (i == 0) ? 0 : ranks[i - 1];
    profile.dims.push_back(c.dims[i] - ranks[i] - incoming);
  }
  return profile;
}

E1Page e1_page(int r, const Stratum& I, int d) {
  check_branch_count(r);
  if (I.r() != r) throw std::domain_error("stratum branch count does not match r");
  if (d < r) throw std::domain_error("d must be >= r");
  E1Page page(I, r, d);
  const int n = I.size();
  for (int k = 1; k <= n; ++k)
    page.rows.push_back(E1Row{k, d - 1 - 2 * (k - 1), koszul_complex(n, k)});
  return page;
}

StalkTable e2_abutment(int r, const Stratum& I, int d, long long characteristic) {
  const E1Page page = e1_page(r, I, d);
  StalkTable out(I, d);
  for (const E1Row& row : page.rows) {
    const CohomologyProfile profile = complex_cohomology(row.complex, characteristic);
    for (int i = 0; i < static_cast<int>(profile.dims.size()); ++i) {
      if (profile.dims[i] == 0) continue;
      // Position k+i of row k lands at degree index (k+i)-1.
      out.add(row.k + i - 1, row.twist, profile.dims[i]);
    }
  }
  return out;
}

}  // namespace psicalc
