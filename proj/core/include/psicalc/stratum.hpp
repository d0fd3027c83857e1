#pragma once

// Strata of a simple normal crossings special fiber with r smooth branches.
// A stratum is a nonempty subset I of {1,..,r}, stored as a characteristic
// bitmask; Y_I is the intersection of the branches in I, Y_I^0 the locus
// lying on exactly those branches.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace psicalc {

// Bitmask width. The CLI enforces a lower default cap (16) since most
// operations enumerate 2^r subsets.
inline constexpr int kMaxBranches = 30;

void check_branch_count(int r);

class Stratum {
 public:
  Stratum(std::uint32_t bits, int r);
  static Stratum from_members(const std::vector<int>& members, int r);
  static Stratum single(int i, int r);
  static Stratum full(int r);

  std::uint32_t bits() const { return bits_; }
  int r() const { return r_; }
  int size() const;
  std::vector<int> members() const;

  bool contains(int i) const;
  bool subset_of(const Stratum& other) const;
  bool proper_subset_of(const Stratum& other) const;
  bool adjacent_to(const Stratum& other) const;  // symmetric difference of size 1
  Stratum with(int i) const;

  bool operator==(const Stratum& other) const {
    return bits_ == other.bits_ && r_ == other.r_;
  }
  bool operator!=(const Stratum& other) const { return !(*this == other); }

  std::string to_string() const;  // "{1,3}"

 private:
  std::uint32_t bits_;
  int r_;
};

// Strict ordering by member sequence, lexicographically:
// {1} < {1,2} < {1,2,3} < {1,3} < {2}. Used everywhere a deterministic
// subset order is required (maps, serialization, matrix bases).
struct StratumLess {
  bool operator()(const Stratum& a, const Stratum& b) const;
};

// All nonempty subsets of {1..r} in lexicographic member order.
std::vector<Stratum> all_strata(int r);
// All subsets of size h in lexicographic member order.
std::vector<Stratum> strata_of_size(int r, int h);
// All nonempty subsets of a fixed member set, lexicographic.
std::vector<Stratum> substrata_of(const Stratum& s);

long long binomial(int n, int k);

}  // namespace psicalc
