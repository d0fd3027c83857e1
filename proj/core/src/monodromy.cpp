#include "psicalc/monodromy.hpp"

namespace psicalc {

MonodromyGrid::MonodromyGrid(int r) : r_(r) {
  check_branch_count(r);
  for (int h = 1; h <= r; ++h)
    for (int k = 1; k <= h; ++k) cells_.push_back(GridCell{h, k});
}

bool MonodromyGrid::contains(const GridCell& c) const {
  return 1 <= c.k && c.k <= c.h && c.h <= r_;
}

void MonodromyGrid::require(const GridCell& c) const {
  if (!contains(c))
    throw std::domain_error("cell (" + std::to_string(c.h) + "," + std::to_string(c.k) +
                            ") is not in the grid for r = " + std::to_string(r_));
}

KClass MonodromyGrid::cell_class(const GridCell& c) const {
  require(c);
  KClass out(r_);
  for (const Stratum& J : strata_of_size(r_, c.h)) out.add(ICClass{J, cell_twist(c)});
  return out;
}

KClass MonodromyGrid::total_class() const {
  KClass out(r_);
  for (const GridCell& c : cells_) out += cell_class(c);
  return out;
}

MonodromyGrid grid(int r) { return MonodromyGrid(r); }

std::optional<GridCell> apply_N(const MonodromyGrid& g, const GridCell& c) {
  g.require(c);
  if (c.k <= 1) return std::nullopt;
  return GridCell{c.h, c.k - 1};
}

std::map<GridCell, std::optional<GridCell>> power_N(const MonodromyGrid& g, int j) {
  if (j < 0) throw std::domain_error("power must be >= 0");
  std::map<GridCell, std::optional<GridCell>> out;
  for (const GridCell& c : g.cells()) {
    if (c.k - j >= 1)
      out[c] = GridCell{c.h, c.k - j};
    else
      out[c] = std::nullopt;
  }
  return out;
}

long long rank_of_power(const MonodromyGrid& g, int j) {
  long long n = 0;
  for (const auto& [c, image] : power_N(g, j))
    if (image.has_value()) ++n;
  return n;
}

std::vector<GridCell> kernel_N(const MonodromyGrid& g) {
  std::vector<GridCell> out;
  for (const GridCell& c : g.cells())
    if (c.k == 1) out.push_back(c);
  return out;
}

std::vector<JordanString> jordan_type(int r) {
  check_branch_count(r);
  std::vector<JordanString> out;
  for (int h = 1; h <= r; ++h) out.push_back(JordanString{h, h});
  return out;
}

}  // namespace psicalc
