#pragma once

// Canonical JSON shapes for every value the CLI emits. Key order is fixed
// by insertion, term order by the lexicographic subset order, so identical
// inputs serialize to identical bytes. Every shape parses back to the
// identical in-memory value.
//
//   KClass      {r, terms:[{stratum:[ints], twist, coeff}]}
//   ShKClass    {r, basis:"shriek", terms:[...]}
//   SheafTable  {r, d, terms:[{stratum, codegree, twist, coeff}]}
//   Filtration  {r, label, layers:[[{stratum,twist,mult}..]..],
//                blocks:[{name,from,to}]}
//   StalkTable  {r, I:[ints], d, entries:[{q,twist,mult}]}
//   ChainComplex {m, k, terms:[dims],
//                differentials:[{rows,cols,entries:[[row,col,value]..]}]}

#include <nlohmann/json_fwd.hpp>

#include "psicalc/filtration.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/kclass.hpp"
#include "psicalc/monodromy.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"
#include "psicalc/vanishing.hpp"

namespace psicalc {

using Json = nlohmann::ordered_json;

// Canonical byte rendering: two-space indent and a trailing newline.
std::string dump_canonical(const Json& j);

Json to_json(const Stratum& s);
Json to_json(const KClass& x);
Json to_json(const ShKClass& x);
Json to_json(const SheafTable& t);
Json to_json(const Filtration& f);
Json to_json(const StalkTable& t);
Json to_json(const ChainComplex& c);
Json to_json(const CohomologyProfile& p);
Json to_json(int r, const std::vector<Constraint>& cs);
Json to_json(const AdmissibilityReport& rep, int r);
Json to_json(const IdentityReport& rep);

Json e1_page_json(const E1Page& page, long long characteristic,
                  const std::vector<CohomologyProfile>& row_cohomology,
                  const StalkTable& abutment);
Json monodromy_json(const MonodromyGrid& g, int power);
Json vanishing_json(int r, const CharacterDatum& chi, const IntervalMap& intervals,
                    const DegreeInterval& concentration);

Stratum parse_stratum(const Json& j, int r);
KClass parse_kclass(const Json& j);
ShKClass parse_shkclass(const Json& j);
SheafTable parse_sheaf_table(const Json& j);
Filtration parse_filtration(const Json& j);
StalkTable parse_stalk_table(const Json& j);
ChainComplex parse_chain_complex(const Json& j);
std::vector<Constraint> parse_constraints(const Json& j);

}  // namespace psicalc
