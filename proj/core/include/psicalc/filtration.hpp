#pragma once

// Filtrations as explicit graded data. A Filtration lists its graded
// layers from the deepest subobject (socle side, index 1) to the top
// quotient; display front ends flip the order when a figure reads
// top-down. Layers are multisets of IC classes. Non-splitness of the
// extensions between consecutive graded pieces is modeled as a set of
// order constraints: the earlier piece must sit strictly closer to the
// socle than the later piece in any admissible filtration.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psicalc/kclass.hpp"

namespace psicalc {

using GradedLayer = std::map<ICClass, long long, ICClassLess>;

struct FiltrationBlock {
  std::string name;
  int from = 0;  // 1-based layer indices, inclusive
  int to = 0;
};

class Filtration {
 public:
  Filtration(int r, std::string label);

  int r() const { return r_; }
  const std::string& label() const { return label_; }
  const std::vector<GradedLayer>& layers() const { return layers_; }
  const std::vector<FiltrationBlock>& blocks() const { return blocks_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }

  void push_layer(GradedLayer layer);           // rejects empty layers
  void push_block(const std::string& name, int from, int to);
  void set_label(std::string label) { label_ = std::move(label); }

  bool operator==(const Filtration& o) const {
    return r_ == o.r_ && label_ == o.label_ && layers_ == o.layers_;
  }

 private:
  int r_;
  std::string label_;
  std::vector<GradedLayer> layers_;
  std::vector<FiltrationBlock> blocks_;
};

struct Constraint {
  ICClass earlier;
  ICClass later;

  Constraint(ICClass e, ICClass l);  // validates adjacency and twist step

  bool operator==(const Constraint& o) const {
    return earlier == o.earlier && later == o.later;
  }
};

struct ConstraintLess {
  bool operator()(const Constraint& a, const Constraint& b) const {
    ICClassLess less;
    if (less(a.earlier, b.earlier)) return true;
    if (less(b.earlier, a.earlier)) return false;
    return less(a.later, b.later);
  }
};

struct AdmissibilityViolation {
  Constraint constraint;
  int earlier_layer = 0;  // 1-based positions found in the filtration
  int later_layer = 0;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<AdmissibilityViolation> violations;
};

// Weight filtration of the extension by zero from the open stratum of I:
// socle first, one layer per size k = r down to #I, the layer holding all
// IC(J; k - #I) with J of size k containing I.
Filtration weight_filtration_shriek(const Stratum& I, int r);

// Its dual for the direct image: layers k = #I up to r with twists
// negated; equals the layerwise dual of the above in reversed order.
Filtration weight_cofiltration_star(const Stratum& I, int r);

// The doubly indexed filtration of the nearby-cycles class: blocks
// k = 1..r socle-first, block k holding layers h = r down to k with the
// level-h aggregate at twist h-1-2(k-1). First layer is the socle
// IC({1..r}; r-1), last the top IC({1..r}; -(r-1)).
Filtration psi_filtration(int r);

// The dual cofiltration: equals the layer-reversed dual of
// psi_filtration. Blocks are listed socle-first with layers h ascending;
// the block containing level h carries twist 1-h+2(r-k) where k is the
// block's position from the top end, matching the block naming.
Filtration psi_cofiltration(int r);

// Kernel of the canonical epimorphism from the level-k shriek aggregate
// (twisted to block h) onto the corresponding partial filtration of the
// nearby-cycles class: layers i = r down to k+1 with the level-i
// aggregate at twist i-1-2(h-1) and multiplicity C(i,k) - 1. Empty when
// k = r.
Filtration kernel_K(int k, int h, int r);

// Partial filtration class: levels i = k..r at twist i-1-2(h-1). The
// class identity  [level-k shriek aggregate twisted] = [this] + [kernel_K]
// holds exactly.
KClass partial_psi_block_class(int k, int h, int r);

KClass class_of(const Filtration& f);

// All order constraints between constituents of the nearby-cycles class:
// for adjacent strata I inside J and every twist step delta present, the
// piece on the deeper stratum at twist delta precedes the shallower piece
// at delta-1, and symmetrically with the roles of I and J exchanged.
std::vector<Constraint> constraints(int r);

// Checks the strict order demanded by every constraint whose two pieces
// both occur. Requires multiplicity-one flattening: each IC class occurs
// in exactly one layer with multiplicity one, otherwise a
// std::invalid_argument is thrown.
AdmissibilityReport check_admissible(const Filtration& f, const std::vector<Constraint>& cs);

}  // namespace psicalc
