#include "psicalc/stratum.hpp"

#include <algorithm>
#include <bit>

namespace psicalc {

void check_branch_count(int r) {
  if (r < 1 || r > kMaxBranches)
    throw std::domain_error("branch count r must satisfy 1 <= r <= " +
                            std::to_string(kMaxBranches) + ", got " + std::to_string(r));
}

Stratum::Stratum(std::uint32_t bits, int r) : bits_(bits), r_(r) {
  check_branch_count(r);
  const std::uint32_t mask = (r == 32) ? ~0u : ((1u << r) - 1u);
  if (bits == 0) throw std::domain_error("stratum must be nonempty");
  if ((bits & ~mask) != 0)
    throw std::domain_error("stratum members must lie in {1,..," + std::to_string(r) + "}");
}

Stratum Stratum::from_members(const std::vector<int>& members, int r) {
  check_branch_count(r);
  std::uint32_t bits = 0;
  for (int i : members) {
    if (i < 1 || i > r)
      throw std::domain_error("stratum member " + std::to_string(i) + " out of range");
    bits |= (1u << (i - 1));
  }
  return Stratum(bits, r);
}

Stratum Stratum::single(int i, int r) { return from_members({i}, r); }

Stratum Stratum::full(int r) {
  check_branch_count(r);
  return Stratum((1u << r) - 1u, r);
}

int Stratum::size() const { return std::popcount(bits_); }

std::vector<int> Stratum::members() const {
  std::vector<int> out;
  for (int i = 1; i <= r_; ++i)
    if (bits_ & (1u << (i - 1))) out.push_back(i);
  return out;
}

bool Stratum::contains(int i) const {
  return i >= 1 && i <= r_ && (bits_ & (1u << (i - 1)));
}

bool Stratum::subset_of(const Stratum& other) const {
  return (bits_ & ~other.bits_) == 0;
}

bool Stratum::proper_subset_of(const Stratum& other) const {
  return subset_of(other) && bits_ != other.bits_;
}

bool Stratum::adjacent_to(const Stratum& other) const {
  return std::popcount(bits_ ^ other.bits_) == 1;
}

Stratum Stratum::with(int i) const {
  if (i < 1 || i > r_) throw std::domain_error("branch index out of range");
  return Stratum(bits_ | (1u << (i - 1)), r_);
}

std::string Stratum::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

bool StratumLess::operator()(const Stratum& a, const Stratum& b) const {
  const auto ma = a.members();
  const auto mb = b.members();
  if (ma != mb)
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  return a.r() < b.r();
}

std::vector<Stratum> all_strata(int r) {
  check_branch_count(r);
  std::vector<Stratum> out;
  out.reserve((1u << r) - 1);
  for (std::uint32_t bits = 1; bits < (1u << r); ++bits) out.emplace_back(bits, r);
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    return StratumLess{}(a, b);
  });
  return out;
}

std::vector<Stratum> strata_of_size(int r, int h) {
  std::vector<Stratum> out;
  for (const Stratum& s : all_strata(r))
    if (s.size() == h) out.push_back(s);
  return out;
}

std::vector<Stratum> substrata_of(const Stratum& s) {
  std::vector<Stratum> out;
  for (const Stratum& j : all_strata(s.r()))
    if (j.subset_of(s)) out.push_back(j);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

}  // namespace psicalc
