#pragma once

// The nilpotent monodromy operator on the graded grid of the
// nearby-cycles class. Cell (h, k) stands for the level-h aggregate
// IC^(h) at twist h-1-2(k-1); the operator moves (h, k) to (h, k-1),
// raising the twist numerator by 2 (one Tate twist), and kills k = 1.
// All transition scalars are taken to be 1: kernel and Jordan data are
// insensitive to rescaling.

#include <map>
#include <optional>
#include <vector>

#include "psicalc/kclass.hpp"

namespace psicalc {

struct GridCell {
  int h = 0;  // level: stratum size, 1..r
  int k = 0;  // block index, 1..h

  bool operator==(const GridCell& o) const { return h == o.h && k == o.k; }
  bool operator<(const GridCell& o) const { return h != o.h ? h < o.h : k < o.k; }
};

inline int cell_twist(const GridCell& c) { return c.h - 1 - 2 * (c.k - 1); }

class MonodromyGrid {
 public:
  explicit MonodromyGrid(int r);

  int r() const { return r_; }
  const std::vector<GridCell>& cells() const { return cells_; }
  bool contains(const GridCell& c) const;
  void require(const GridCell& c) const;

  // Class carried by one cell: the level aggregate at the cell's twist.
  KClass cell_class(const GridCell& c) const;
  KClass total_class() const;

 private:
  int r_;
  std::vector<GridCell> cells_;
};

MonodromyGrid grid(int r);

// One application of the operator: (h, k) -> (h, k-1), or nothing for k = 1.
std::optional<GridCell> apply_N(const MonodromyGrid& g, const GridCell& c);

// j-fold application on every cell.
std::map<GridCell, std::optional<GridCell>> power_N(const MonodromyGrid& g, int j);

// Number of cells with nonzero image under the j-th power.
long long rank_of_power(const MonodromyGrid& g, int j);

// Cells killed by one application: exactly the first filtration block.
std::vector<GridCell> kernel_N(const MonodromyGrid& g);

struct JordanString {
  int length = 0;  // string length
  int level = 0;   // the level h whose cells the string traverses
};

// One string per level h, of length h; lengths partition the cell count.
std::vector<JordanString> jordan_type(int r);

}  // namespace psicalc
