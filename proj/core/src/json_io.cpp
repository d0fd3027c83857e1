#include "psicalc/json_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace psicalc {

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Stratum& s) {
  Json arr = Json::array();
  for (int i : s.members()) arr.push_back(i);
  return arr;
}

namespace {

template <Basis B>
Json terms_json(const LinearClass<B>& x) {
  Json terms = Json::array();
  for (const auto& [c, m] : x.terms()) {
    Json t;
    t["stratum"] = to_json(c.stratum);
    t["twist"] = c.twist;
    t["coeff"] = m;
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

Json to_json(const KClass& x) {
  Json j;
  j["r"] = x.r();
  j["terms"] = terms_json(x);
  return j;
}

Json to_json(const ShKClass& x) {
  Json j;
  j["r"] = x.r();
  j["basis"] = "shriek";
  j["terms"] = terms_json(x);
  return j;
}

Json to_json(const SheafTable& t) {
  Json j;
  j["r"] = t.r();
  j["d"] = t.d();
  Json terms = Json::array();
  for (const auto& [stratum, twists] : t.rows()) {
    for (const auto& [twist, entry] : twists) {
      Json e;
      e["stratum"] = to_json(stratum);
      e["codegree"] = entry.lead_codegree;
      e["twist"] = twist;
      e["coeff"] = entry.display_mult();
      terms.push_back(std::move(e));
    }
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Filtration& f) {
  Json j;
  j["r"] = f.r();
  j["label"] = f.label();
  Json layers = Json::array();
  for (const GradedLayer& layer : f.layers()) {
    Json pieces = Json::array();
    for (const auto& [c, m] : layer) {
      Json p;
      p["stratum"] = to_json(c.stratum);
      p["twist"] = c.twist;
      p["mult"] = m;
      pieces.push_back(std::move(p));
    }
    layers.push_back(std::move(pieces));
  }
  j["layers"] = std::move(layers);
  Json blocks = Json::array();
  for (const FiltrationBlock& b : f.blocks()) {
    Json bj;
    bj["name"] = b.name;
    bj["from"] = b.from;
    bj["to"] = b.to;
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const StalkTable& t) {
  Json j;
  j["r"] = t.r();
  j["I"] = to_json(t.point_stratum());
  j["d"] = t.d();
  Json entries = Json::array();
  for (const auto& [twist, entry] : t.entries()) {
    Json e;
    e["q"] = entry.lead_q;
    e["twist"] = twist;
    e["mult"] = entry.display_mult();
    entries.push_back(std::move(e));
  }
  // Entries keyed by twist descend in degree; present them by ascending q.
  std::sort(entries.begin(), entries.end(),
            [](const Json& a, const Json& b) { return a["q"] < b["q"]; });
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const ChainComplex& c) {
  Json j;
  j["m"] = c.m;
  j["k"] = c.k;
  j["terms"] = c.dims;
  Json diffs = Json::array();
  for (const IntMatrix& d : c.diffs) {
    Json dj;
    dj["rows"] = d.rows();
    dj["cols"] = d.cols();
    Json entries = Json::array();
    for (int i = 0; i < d.rows(); ++i)
      for (int jx = 0; jx < d.cols(); ++jx)
        if (d.at(i, jx) != 0) entries.push_back(Json::array({i, jx, d.at(i, jx)}));
    dj["entries"] = std::move(entries);
    diffs.push_back(std::move(dj));
  }
  j["differentials"] = std::move(diffs);
  return j;
}

Json to_json(const CohomologyProfile& p) {
  Json j;
  j["char"] = p.characteristic;
  j["dims"] = p.dims;
  return j;
}

Json to_json(int r, const std::vector<Constraint>& cs) {
  Json j;
  j["r"] = r;
  Json arr = Json::array();
  for (const Constraint& c : cs) {
    Json cj;
    cj["earlier"] = Json{{"stratum", to_json(c.earlier.stratum)}, {"twist", c.earlier.twist}};
    cj["later"] = Json{{"stratum", to_json(c.later.stratum)}, {"twist", c.later.twist}};
    arr.push_back(std::move(cj));
  }
  j["constraints"] = std::move(arr);
  return j;
}

Json to_json(const AdmissibilityReport& rep, int r) {
  Json j;
  j["r"] = r;
  j["admissible"] = rep.admissible;
  Json arr = Json::array();
  for (const AdmissibilityViolation& v : rep.violations) {
    Json vj;
    vj["earlier"] =
        Json{{"stratum", to_json(v.constraint.earlier.stratum)}, {"twist", v.constraint.earlier.twist}};
    vj["later"] =
        Json{{"stratum", to_json(v.constraint.later.stratum)}, {"twist", v.constraint.later.twist}};
    vj["earlier_layer"] = v.earlier_layer;
    vj["later_layer"] = v.later_layer;
    arr.push_back(std::move(vj));
  }
  j["violations"] = std::move(arr);
  return j;
}

Json to_json(const IdentityReport& rep) {
  Json j;
  j["identity"] = rep.name;
  j["pass"] = rep.pass;
  j["instances"] = rep.instances;
  if (!rep.pass) j["counterexample"] = rep.counterexample;
  return j;
}

Json e1_page_json(const E1Page& page, long long characteristic,
                  const std::vector<CohomologyProfile>& row_cohomology,
                  const StalkTable& abutment) {
  Json j;
  j["r"] = page.r;
  j["I"] = to_json(page.I);
  j["d"] = page.d;
  j["char"] = characteristic;
  Json rows = Json::array();
  for (size_t i = 0; i < page.rows.size(); ++i) {
    Json row;
    row["k"] = page.rows[i].k;
    row["twist"] = page.rows[i].twist;
    row["complex"] = to_json(page.rows[i].complex);
    row["cohomology"] = row_cohomology[i].dims;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["abutment"] = to_json(abutment);
  return j;
}

Json monodromy_json(const MonodromyGrid& g, int power) {
  Json j;
  j["r"] = g.r();
  Json cells = Json::array();
  for (const GridCell& c : g.cells())
    cells.push_back(Json{{"h", c.h}, {"k", c.k}, {"twist", cell_twist(c)}});
  j["cells"] = std::move(cells);
  Json arcs = Json::array();
  for (const GridCell& c : g.cells()) {
    const auto image = apply_N(g, c);
    if (!image) continue;
    arcs.push_back(Json{{"from", Json{{"h", c.h}, {"k", c.k}}},
                        {"to", Json{{"h", image->h}, {"k", image->k}}}});
  }
  j["arcs"] = std::move(arcs);
  Json kernel = Json::array();
  for (const GridCell& c : kernel_N(g)) kernel.push_back(Json{{"h", c.h}, {"k", c.k}});
  j["kernel"] = std::move(kernel);
  Json jordan = Json::array();
  for (const JordanString& s : jordan_type(g.r()))
    jordan.push_back(Json{{"length", s.length}, {"level", s.level}});
  j["jordan"] = std::move(jordan);
  if (power >= 0) {
    Json pw = Json::array();
    for (const auto& [c, image] : power_N(g, power)) {
      Json e;
      e["from"] = Json{{"h", c.h}, {"k", c.k}};
      if (image)
        e["to"] = Json{{"h", image->h}, {"k", image->k}};
      else
        e["to"] = nullptr;
      pw.push_back(std::move(e));
    }
    j["power"] = power;
    j["power_map"] = std::move(pw);
  }
  return j;
}

Json vanishing_json(int r, const CharacterDatum& chi, const IntervalMap& intervals,
                    const DegreeInterval& concentration) {
  Json j;
  j["r"] = r;
  j["support"] = to_json(chi.support);
  j["generic"] = chi.generic;
  Json arr = Json::array();
  for (const auto& [stratum, iv] : intervals) {
    Json e;
    e["stratum"] = to_json(stratum);
    if (iv.is_empty) {
      e["empty"] = true;
    } else {
      e["lo"] = iv.lo;
      e["hi"] = iv.hi;
    }
    arr.push_back(std::move(e));
  }
  j["intervals"] = std::move(arr);
  if (concentration.is_empty)
    j["concentration"] = Json{{"empty", true}};
  else
    j["concentration"] = Json{{"lo", concentration.lo}, {"hi", concentration.hi}};
  return j;
}

Stratum parse_stratum(const Json& j, int r) {
  std::vector<int> members;
  for (const auto& v : j) members.push_back(v.get<int>());
  return Stratum::from_members(members, r);
}

KClass parse_kclass(const Json& j) {
  KClass out(j.at("r").get<int>());
  for (const auto& t : j.at("terms"))
    out.add(ICClass{parse_stratum(t.at("stratum"), out.r()), t.at("twist").get<int>()},
            t.at("coeff").get<long long>());
  return out;
}

ShKClass parse_shkclass(const Json& j) {
  if (j.at("basis").get<std::string>() != "shriek")
    throw std::invalid_argument("expected a shriek-basis class");
  ShKClass out(j.at("r").get<int>());
  for (const auto& t : j.at("terms"))
    out.add(ICClass{parse_stratum(t.at("stratum"), out.r()), t.at("twist").get<int>()},
            t.at("coeff").get<long long>());
  return out;
}

SheafTable parse_sheaf_table(const Json& j) {
  SheafTable out(j.at("r").get<int>(), j.at("d").get<int>());
  for (const auto& t : j.at("terms"))
    out.add(parse_stratum(t.at("stratum"), out.r()), t.at("codegree").get<int>(),
            t.at("twist").get<int>(), t.at("coeff").get<long long>());
  return out;
}

Filtration parse_filtration(const Json& j) {
  Filtration out(j.at("r").get<int>(), j.at("label").get<std::string>());
  for (const auto& lj : j.at("layers")) {
    GradedLayer layer;
    for (const auto& p : lj)
      layer[ICClass{parse_stratum(p.at("stratum"), out.r()), p.at("twist").get<int>()}] =
          p.at("mult").get<long long>();
    out.push_layer(std::move(layer));
  }
  for (const auto& b : j.at("blocks"))
    out.push_block(b.at("name").get<std::string>(), b.at("from").get<int>(),
                   b.at("to").get<int>());
  return out;
}

StalkTable parse_stalk_table(const Json& j) {
  const int r = j.at("r").get<int>();
  StalkTable out(parse_stratum(j.at("I"), r), j.at("d").get<int>());
  for (const auto& e : j.at("entries"))
    out.add(e.at("q").get<int>(), e.at("twist").get<int>(), e.at("mult").get<long long>());
  return out;
}

ChainComplex parse_chain_complex(const Json& j) {
  ChainComplex c;
  c.m = j.at("m").get<int>();
  c.k = j.at("k").get<int>();
  for (const auto& d : j.at("terms")) c.dims.push_back(d.get<int>());
  for (const auto& dj : j.at("differentials")) {
    IntMatrix mat(dj.at("rows").get<int>(), dj.at("cols").get<int>());
    for (const auto& e : dj.at("entries"))
      mat.at(e.at(0).get<int>(), e.at(1).get<int>()) = e.at(2).get<long long>();
    c.diffs.push_back(std::move(mat));
  }
  return c;
}

std::vector<Constraint> parse_constraints(const Json& j) {
  const int r = j.at("r").get<int>();
  std::vector<Constraint> out;
  for (const auto& cj : j.at("constraints")) {
    ICClass earlier{parse_stratum(cj.at("earlier").at("stratum"), r),
                    cj.at("earlier").at("twist").get<int>()};
    ICClass later{parse_stratum(cj.at("later").at("stratum"), r),
                  cj.at("later").at("twist").get<int>()};
    out.emplace_back(std::move(earlier), std::move(later));
  }
  return out;
}

}  // namespace psicalc
