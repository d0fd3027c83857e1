#include "render.hpp"

#include <algorithm>
#include <sstream>

#include "psicalc/kgroup.hpp"

namespace psicalc::render {

namespace {

std::string piece(const ICClass& c, const char* symbol = "IC") {
  return std::string(symbol) + "(" + c.stratum.to_string() + "; " + twist_to_string(c.twist) +
         ")";
}

std::string cell_name(const GridCell& c) {
  return "c" + std::to_string(c.h) + "_" + std::to_string(c.k);
}

std::string stalk_entries_by_degree(const StalkTable& t) {
  std::ostringstream out;
  std::vector<std::pair<int, StalkEntry>> entries(t.entries().begin(), t.entries().end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.second.lead_q < b.second.lead_q; });
  for (const auto& [twist, entry] : entries)
    out << "  q = " << entry.lead_q << "  twist " << twist_to_string(twist) << "  mult "
        << entry.display_mult() << "\n";
  return out.str();
}

GridCell cell_of(const ICClass& c) {
  const int h = c.stratum.size();
  return GridCell{h, (h - 1 - c.twist) / 2 + 1};
}

}  // namespace

std::string kclass(const KClass& x) {
  std::ostringstream out;
  out << "r = " << x.r() << ", " << x.term_count() << " constituents\n";
  for (const auto& [c, m] : x.terms()) out << "  " << m << " * " << piece(c) << "\n";
  return out.str();
}

std::string shkclass(const ShKClass& x) {
  std::ostringstream out;
  out << "r = " << x.r() << ", shriek basis\n";
  for (const auto& [c, m] : x.terms()) out << "  " << m << " * " << piece(c, "Sh") << "\n";
  return out.str();
}

std::string sheaf_table(const SheafTable& t) {
  std::ostringstream out;
  out << "sheaf table, r = " << t.r() << ", d = " << t.d() << "\n";
  for (const auto& [stratum, twists] : t.rows()) {
    out << "  stratum " << stratum.to_string() << ":";
    for (const auto& [twist, entry] : twists)
      out << "  [codeg " << entry.lead_codegree << ", twist " << twist_to_string(twist)
          << "] " << entry.display_mult();
    out << "\n";
  }
  return out.str();
}

std::string filtration(const Filtration& f) {
  std::ostringstream out;
  out << f.label() << ": " << f.layer_count() << " layers, socle first\n";
  for (int i = 0; i < f.layer_count(); ++i) {
    out << "  " << (i + 1) << ":";
    for (const auto& [c, m] : f.layers()[i]) {
      out << " ";
      if (m != 1) out << m << "*";
      out << piece(c);
    }
    out << "\n";
  }
  for (const FiltrationBlock& b : f.blocks())
    out << "  block " << b.name << " = layers " << b.from << ".." << b.to << "\n";
  return out.str();
}

std::string stalk_table(const StalkTable& t) {
  std::ostringstream out;
  out << "stalk table at " << t.point_stratum().to_string() << ", d = " << t.d() << "\n"
      << stalk_entries_by_degree(t);
  return out.str();
}

std::string e1_page(const E1Page& page, const std::vector<CohomologyProfile>& cohomology,
                    const StalkTable& abutment, long long characteristic) {
  std::ostringstream out;
  out << "stalk spectral sequence at " << page.I.to_string() << ", r = " << page.r
      << ", d = " << page.d << ", char " << characteristic << "\n";
  for (size_t i = 0; i < page.rows.size(); ++i) {
    const E1Row& row = page.rows[i];
    out << "  k = " << row.k << "  twist " << twist_to_string(row.twist) << "  dims";
    for (int dim : row.complex.dims) out << " " << dim;
    out << "  cohomology";
    for (int dim : cohomology[i].dims) out << " " << dim;
    out << "\n";
  }
  out << "abutment:\n" << stalk_entries_by_degree(abutment);
  return out.str();
}

std::string monodromy(const MonodromyGrid& g, int power) {
  std::ostringstream out;
  out << "monodromy grid, r = " << g.r() << ", " << g.cells().size() << " cells\n";
  out << "cells (h,k,twist):";
  for (const GridCell& c : g.cells())
    out << " (" << c.h << "," << c.k << "," << twist_to_string(cell_twist(c)) << ")";
  out << "\narcs:";
  for (const GridCell& c : g.cells()) {
    const auto image = apply_N(g, c);
    if (image)
      out << " (" << c.h << "," << c.k << ")->(" << image->h << "," << image->k << ")";
  }
  out << "\nkernel:";
  for (const GridCell& c : kernel_N(g)) out << " (" << c.h << "," << c.k << ")";
  out << "\njordan type:";
  for (const JordanString& s : jordan_type(g.r()))
    out << " (length " << s.length << ", level " << s.level << ")";
  out << "\n";
  if (power >= 0) {
    out << "power " << power << ":";
    for (const auto& [c, image] : power_N(g, power)) {
      out << " (" << c.h << "," << c.k << ")->";
      if (image)
        out << "(" << image->h << "," << image->k << ")";
      else
        out << "0";
    }
    out << "\n";
  }
  return out.str();
}

std::string constraints(const std::vector<Constraint>& cs) {
  std::ostringstream out;
  out << cs.size() << " constraints (earlier -> later)\n";
  for (const Constraint& c : cs) out << "  " << piece(c.earlier) << " -> " << piece(c.later) << "\n";
  return out.str();
}

std::string admissibility(const AdmissibilityReport& rep) {
  std::ostringstream out;
  out << (rep.admissible ? "admissible" : "NOT admissible") << "\n";
  for (const AdmissibilityViolation& v : rep.violations)
    out << "  violated: " << piece(v.constraint.earlier) << " (layer " << v.earlier_layer
        << ") must precede " << piece(v.constraint.later) << " (layer " << v.later_layer
        << ")\n";
  return out.str();
}

std::string vanishing(const CharacterDatum& chi, const IntervalMap& intervals,
                      const DegreeInterval& concentration) {
  std::ostringstream out;
  out << "character support " << chi.support.to_string() << (chi.generic ? " (generic)" : "")
      << "\n";
  for (const auto& [stratum, iv] : intervals)
    out << "  " << stratum.to_string() << ": " << iv.to_string() << "\n";
  out << "concentration: " << concentration.to_string() << "\n";
  return out.str();
}

std::string identity_reports(const std::vector<IdentityReport>& reps) {
  std::ostringstream out;
  for (const IdentityReport& rep : reps) {
    out << (rep.pass ? "PASS" : "FAIL") << " " << rep.name << " (instances="
        << rep.instances << ")";
    if (!rep.pass) out << " counterexample: " << rep.counterexample;
    out << "\n";
  }
  return out.str();
}

std::string diagram_dot(int r) {
  const MonodromyGrid g(r);
  std::ostringstream out;
  out << "digraph nearby_cycles {\n";
  out << "  rankdir=BT;\n";
  for (const GridCell& c : g.cells())
    out << "  " << cell_name(c) << " [label=\"(" << c.h << "," << c.k << ") "
        << twist_to_string(cell_twist(c)) << "\"];\n";
  for (const Constraint& c : psicalc::constraints(r)) {
    const GridCell from = cell_of(c.earlier);
    const GridCell to = cell_of(c.later);
    out << "  " << cell_name(from) << " -> " << cell_name(to) << " [style=solid, label=\""
        << c.earlier.stratum.to_string() << ">" << c.later.stratum.to_string() << "\"];\n";
  }
  for (const GridCell& c : g.cells()) {
    const auto image = apply_N(g, c);
    if (image)
      out << "  " << cell_name(c) << " -> " << cell_name(*image) << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace psicalc::render
