#include "psicalc/filtration.hpp"

#include <algorithm>
#include <cstdlib>

#include "psicalc/kgroup.hpp"

namespace psicalc {

Filtration::Filtration(int r, std::string label) : r_(r), label_(std::move(label)) {
  check_branch_count(r);
}

void Filtration::push_layer(GradedLayer layer) {
  if (layer.empty()) throw std::invalid_argument("filtration layers must be nonempty");
  for (const auto& [c, m] : layer) {
    if (m < 1) throw std::invalid_argument("layer multiplicities must be >= 1");
    if (c.stratum.r() != r_) throw std::invalid_argument("layer piece has wrong branch count");
  }
  layers_.push_back(std::move(layer));
}

void Filtration::push_block(const std::string& name, int from, int to) {
  if (from < 1 || to < from || to > layer_count())
    throw std::invalid_argument("block range out of bounds");
  blocks_.push_back(FiltrationBlock{name, from, to});
}

Constraint::Constraint(ICClass e, ICClass l) : earlier(std::move(e)), later(std::move(l)) {
  if (!earlier.stratum.adjacent_to(later.stratum))
    throw std::invalid_argument("constraint pieces must live on adjacent strata");
  if (earlier.twist != later.twist + 1)
    throw std::invalid_argument("constraint twists must step down by exactly 1");
}

namespace {

GradedLayer level_layer(const Stratum& I, int size, int twist, int r) {
  GradedLayer layer;
  for (const Stratum& J : all_strata(r))
    if (J.size() == size && I.subset_of(J)) layer[ICClass{J, twist}] = 1;
  return layer;
}

}  // namespace

Filtration weight_filtration_shriek(const Stratum& I, int r) {
  if (I.r() != r) throw std::domain_error("stratum branch count does not match r");
  Filtration f(r, "weight_filtration_shriek(" + I.to_string() + ")");
  const int nI = I.size();
  for (int k = r; k >= nI; --k) f.push_layer(level_layer(I, k, k - nI, r));
  return f;
}

Filtration weight_cofiltration_star(const Stratum& I, int r) {
  if (I.r() != r) throw std::domain_error("stratum branch count does not match r");
  Filtration f(r, "weight_cofiltration_star(" + I.to_string() + ")");
  const int nI = I.size();
  for (int k = nI; k <= r; ++k) f.push_layer(level_layer(I, k, -(k - nI), r));
  return f;
}

Filtration psi_filtration(int r) {
  check_branch_count(r);
  Filtration f(r, "psi_filtration(r=" + std::to_string(r) + ")");
  int next = 1;
  for (int k = 1; k <= r; ++k) {
    const int from = next;
    for (int h = r; h >= k; --h) {
      GradedLayer layer;
      for (const Stratum& J : strata_of_size(r, h)) layer[ICClass{J, h - 1 - 2 * (k - 1)}] = 1;
      f.push_layer(std::move(layer));
      ++next;
    }
    f.push_block("gr^" + std::to_string(k) + "_!", from, next - 1);
  }
  return f;
}

Filtration psi_cofiltration(int r) {
  check_branch_count(r);
  Filtration f(r, "psi_cofiltration(r=" + std::to_string(r) + ")");
  int next = 1;
  // Socle-first traversal of the quotient tower: the deepest graded part
  // of the cofiltration is the single socle layer.
  for (int k = 1; k <= r; ++k) {
    const int from = next;
    for (int h = r - k + 1; h <= r; ++h) {
      GradedLayer layer;
      for (const Stratum& J : strata_of_size(r, h)) layer[ICClass{J, 1 - h + 2 * (r - k)}] = 1;
      f.push_layer(std::move(layer));
      ++next;
    }
    f.push_block("cogr_{*," + std::to_string(k) + "}", from, next - 1);
  }
  return f;
}

Filtration kernel_K(int k, int h, int r) {
  check_branch_count(r);
  if (h < 1 || h > k || k > r)
    throw std::domain_error("kernel_K indices must satisfy 1 <= h <= k <= r");
  Filtration f(r, "kernel_K(k=" + std::to_string(k) + ",h=" + std::to_string(h) + ")");
  for (int i = r; i >= k + 1; --i) {
    const long long mult = binomial(i, k) - 1;
    GradedLayer layer;
    for (const Stratum& J : strata_of_size(r, i)) layer[ICClass{J, i - 1 - 2 * (h - 1)}] = mult;
    f.push_layer(std::move(layer));
  }
  return f;
}

KClass partial_psi_block_class(int k, int h, int r) {
  check_branch_count(r);
  if (h < 1 || h > k || k > r)
    throw std::domain_error("block indices must satisfy 1 <= h <= k <= r");
  KClass out(r);
  for (int i = k; i <= r; ++i)
    for (const Stratum& J : strata_of_size(r, i)) out.add(ICClass{J, i - 1 - 2 * (h - 1)});
  return out;
}

KClass class_of(const Filtration& f) {
  KClass out(f.r());
  for (const GradedLayer& layer : f.layers())
    for (const auto& [c, m] : layer) out.add(c, m);
  return out;
}

namespace {

// Twist numerators appearing at level h in the nearby-cycles class.
bool is_psi_constituent(int level, int twist) {
  return std::abs(twist) <= level - 1 && ((twist - (level - 1)) % 2 == 0);
}

}  // namespace

std::vector<Constraint> constraints(int r) {
  check_branch_count(r);
  std::vector<Constraint> out;
  for (const Stratum& I : all_strata(r)) {
    for (int x = 1; x <= r; ++x) {
      if (I.contains(x)) continue;
      const Stratum J = I.with(x);
      const int nI = I.size();
      const int nJ = nI + 1;
      for (int delta = -(r - 1); delta <= r - 1; ++delta) {
        // Deeper piece at delta precedes shallower piece at delta-1.
        if (is_psi_constituent(nJ, delta) && is_psi_constituent(nI, delta - 1))
          out.emplace_back(ICClass{J, delta}, ICClass{I, delta - 1});
        // Shallower piece at delta precedes deeper piece at delta-1.
        if (is_psi_constituent(nI, delta) && is_psi_constituent(nJ, delta - 1))
          out.emplace_back(ICClass{I, delta}, ICClass{J, delta - 1});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Constraint& a, const Constraint& b) {
    return ConstraintLess{}(a, b);
  });
  return out;
}

AdmissibilityReport check_admissible(const Filtration& f, const std::vector<Constraint>& cs) {
  std::map<ICClass, int, ICClassLess> position;
  for (int i = 0; i < f.layer_count(); ++i) {
    for (const auto& [c, m] : f.layers()[i]) {
      if (m != 1 || position.count(c))
        throw std::invalid_argument(
            "check_admissible requires multiplicity-one flattening; piece " + c.to_string() +
            " is duplicated");
      position[c] = i + 1;
    }
  }
  AdmissibilityReport report;
  for (const Constraint& c : cs) {
    auto e = position.find(c.earlier);
    auto l = position.find(c.later);
    if (e == position.end() || l == position.end()) continue;
    if (e->second >= l->second) {
      report.admissible = false;
      report.violations.push_back(AdmissibilityViolation{c, e->second, l->second});
    }
  }
  return report;
}

}  // namespace psicalc
