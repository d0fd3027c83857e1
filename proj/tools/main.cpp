// Command line front end. Exit codes: 0 success or verification pass,
// 1 failed verification or inadmissible filtration, 2 usage errors.
// JSON output is byte-stable for identical inputs: fixed key order,
// lexicographic subset order, two-space indent, trailing newline.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "psicalc/identities.hpp"
#include "psicalc/json_io.hpp"
#include "psicalc/kgroup.hpp"
#include "psicalc/monodromy.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"
#include "psicalc/vanishing.hpp"
#include "render.hpp"

namespace {

using namespace psicalc;

constexpr int kDefaultMaxR = 16;

struct CommonFlags {
  int r = 0;
  int d = -1;  // default d = r
  int twist = 0;
  long long characteristic = 0;
  int max_r = kDefaultMaxR;
  std::string format = "table";
  std::vector<int> I;
  std::vector<int> chi_support;
  bool generic = false;
};

void check_r(const CommonFlags& f) {
  if (f.r < 1) throw CLI::ValidationError("--r must be >= 1");
  if (f.r > f.max_r)
    throw CLI::ValidationError("--r exceeds the cap of " + std::to_string(f.max_r) +
                               " (raise with --max-r; subset enumeration is 2^r)");
}

int effective_d(const CommonFlags& f) { return f.d < 0 ? f.r : f.d; }

Stratum stratum_arg(const CommonFlags& f) {
  if (f.I.empty()) throw CLI::ValidationError("--I is required for this command");
  return Stratum::from_members(f.I, f.r);
}

void add_common(CLI::App* cmd, CommonFlags& f, bool with_format = true) {
  cmd->add_option("--r", f.r, "branch count")->required();
  cmd->add_option("--max-r", f.max_r, "cap on r (default 16)");
  if (with_format)
    cmd->add_option("--format", f.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
}

void emit(const std::string& table_text, const Json& json_value, const std::string& format) {
  if (format == "json")
    std::cout << dump_canonical(json_value);
  else
    std::cout << table_text;
}

int run_class(const CommonFlags& f, const std::string& subject, bool sheaf) {
  check_r(f);
  KClass value(f.r);
  if (subject == "psi") {
    value = psi_class(f.r);
  } else if (subject == "shriek") {
    value = shriek_to_ic(stratum_arg(f), f.twist, f.r);
  } else if (subject == "star") {
    value = star_to_ic(stratum_arg(f), f.twist, f.r);
  } else if (subject == "pI") {
    value = pI_class(stratum_arg(f), f.r);
  } else if (subject == "ic") {
    if (sheaf) throw CLI::ValidationError("--sheaf-table needs an IC-basis result");
    const ShKClass sh = ic_to_shriek(stratum_arg(f), f.twist, f.r);
    emit(render::shkclass(sh), to_json(sh), f.format);
    return 0;
  } else {
    throw CLI::ValidationError("unknown class subject '" + subject + "'");
  }
  if (sheaf) {
    const SheafTable t = to_sheaf_table(value, effective_d(f));
    emit(render::sheaf_table(t), to_json(t), f.format);
  } else {
    emit(render::kclass(value), to_json(value), f.format);
  }
  return 0;
}

int run_filtration(const CommonFlags& f, const std::string& subject, int k, int h) {
  check_r(f);
  Filtration out(f.r, "");
  if (subject == "psi")
    out = psi_filtration(f.r);
  else if (subject == "copsi")
    out = psi_cofiltration(f.r);
  else if (subject == "shriek")
    out = weight_filtration_shriek(stratum_arg(f), f.r);
  else if (subject == "star")
    out = weight_cofiltration_star(stratum_arg(f), f.r);
  else if (subject == "kernel")
    out = kernel_K(k, h, f.r);
  else
    throw CLI::ValidationError("unknown filtration subject '" + subject + "'");
  emit(render::filtration(out), to_json(out), f.format);
  return 0;
}

int run_constraints(const CommonFlags& f) {
  check_r(f);
  const auto cs = constraints(f.r);
  emit(render::constraints(cs), to_json(f.r, cs), f.format);
  return 0;
}

int run_check(const CommonFlags& f, const std::string& file) {
  check_r(f);
  std::string text;
  if (file.empty() || file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("cannot open '" + file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const Filtration filt = parse_filtration(Json::parse(text));
  if (filt.r() != f.r) throw CLI::ValidationError("filtration r does not match --r");
  const AdmissibilityReport rep = check_admissible(filt, constraints(f.r));
  emit(render::admissibility(rep), to_json(rep, f.r), f.format);
  return rep.admissible ? 0 : 1;
}

int run_stalk(const CommonFlags& f, const std::string& subject) {
  check_r(f);
  const Stratum I = stratum_arg(f);
  const int d = effective_d(f);
  const StalkTable t =
      (subject == "psi") ? kclass_stalk(psi_class(f.r), I, d) : psi_stalk_oracle(I, d);
  emit(render::stalk_table(t), to_json(t), f.format);
  return 0;
}

int run_ss(const CommonFlags& f) {
  check_r(f);
  const Stratum I = stratum_arg(f);
  const int d = effective_d(f);
  const E1Page page = e1_page(f.r, I, d);
  std::vector<CohomologyProfile> cohomology;
  for (const E1Row& row : page.rows)
    cohomology.push_back(complex_cohomology(row.complex, f.characteristic));
  const StalkTable abutment = e2_abutment(f.r, I, d, f.characteristic);
  emit(render::e1_page(page, cohomology, abutment, f.characteristic),
       e1_page_json(page, f.characteristic, cohomology, abutment), f.format);
  return 0;
}

int run_monodromy(const CommonFlags& f, int power) {
  check_r(f);
  const MonodromyGrid g = grid(f.r);
  emit(render::monodromy(g, power), monodromy_json(g, power), f.format);
  return 0;
}

int run_vanishing(const CommonFlags& f) {
  check_r(f);
  if (f.chi_support.empty())
    throw CLI::ValidationError(
        f.generic ? "--generic needs --chi-support with a single branch"
                  : "--chi-support is required");
  const Stratum support = Stratum::from_members(f.chi_support, f.r);
  if (f.generic && support.size() != 1)
    throw CLI::ValidationError("--generic requires a single-branch support");
  const CharacterDatum chi = CharacterDatum::with_support(support);
  const IntervalMap intervals = run_vanishing_induction(f.r, chi);
  const DegreeInterval concentration = psi_chi_concentration(f.r, chi);
  emit(render::vanishing(chi, intervals, concentration),
       vanishing_json(f.r, chi, intervals, concentration), f.format);
  return 0;
}

int run_verify(const CommonFlags& f, const std::string& identity) {
  check_r(f);
  std::vector<IdentityReport> reps;
  if (identity == "all")
    reps = verify_all_identities(f.r);
  else
    reps.push_back(verify_identity(identity, f.r));
  bool all_pass = true;
  Json results = Json::array();
  for (const IdentityReport& rep : reps) {
    all_pass = all_pass && rep.pass;
    results.push_back(to_json(rep));
  }
  Json j;
  j["r"] = f.r;
  j["results"] = std::move(results);
  emit(render::identity_reports(reps), j, f.format);
  return all_pass ? 0 : 1;
}

int run_diagram(const CommonFlags& f) {
  check_r(f);
  std::cout << render::diagram_dot(f.r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus for nearby-cycles perverse sheaf combinatorics"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string class_subject = "psi";
  std::string filtration_subject = "psi";
  std::string stalk_subject = "oracle";
  std::string identity = "all";
  std::string check_file;
  bool sheaf = false;
  int kernel_k = 1, kernel_h = 1;
  int power = -1;

  CLI::App* c_class = app.add_subcommand("class", "Grothendieck-group classes");
  c_class->add_option("subject", class_subject, "psi | shriek | star | ic | pI");
  add_common(c_class, f);
  c_class->add_option("--I", f.I, "stratum members, comma separated")->delimiter(',');
  c_class->add_option("--twist", f.twist, "twist numerator (default 0)");
  c_class->add_option("--d", f.d, "ambient dimension parameter (default r)");
  c_class->add_flag("--sheaf-table", sheaf, "emit the stratum-wise sheaf table");

  CLI::App* c_filt = app.add_subcommand("filtration", "graded filtrations");
  c_filt->add_option("subject", filtration_subject, "psi | copsi | shriek | star | kernel");
  add_common(c_filt, f);
  c_filt->add_option("--I", f.I, "stratum members")->delimiter(',');
  c_filt->add_option("--k", kernel_k, "kernel level index");
  c_filt->add_option("--block", kernel_h, "kernel block index");

  CLI::App* c_cons = app.add_subcommand("constraints", "order constraints");
  add_common(c_cons, f);

  CLI::App* c_check = app.add_subcommand("check", "check a filtration JSON for admissibility");
  add_common(c_check, f);
  c_check->add_option("--file", check_file, "filtration JSON file (default stdin)");

  CLI::App* c_stalk = app.add_subcommand("stalk", "stalk tables at a stratum point");
  c_stalk->add_option("subject", stalk_subject, "oracle | psi");
  add_common(c_stalk, f);
  c_stalk->add_option("--I", f.I, "stratum members")->delimiter(',');
  c_stalk->add_option("--d", f.d, "ambient dimension parameter (default r)");

  CLI::App* c_ss = app.add_subcommand("ss", "stalk spectral sequence");
  add_common(c_ss, f);
  c_ss->add_option("--I", f.I, "stratum members")->delimiter(',');
  c_ss->add_option("--d", f.d, "ambient dimension parameter (default r)");
  c_ss->add_option("--char", f.characteristic, "coefficient characteristic: 0 or a prime");

  CLI::App* c_mono = app.add_subcommand("monodromy", "monodromy grid and arcs");
  add_common(c_mono, f);
  c_mono->add_option("--power", power, "also show the map of the j-th power");

  CLI::App* c_van = app.add_subcommand("vanishing", "degree-interval induction");
  add_common(c_van, f);
  c_van->add_option("--chi-support", f.chi_support, "branches the character is trivial on")
      ->delimiter(',');
  c_van->add_flag("--generic", f.generic, "assert the character is generic");

  CLI::App* c_ver = app.add_subcommand("verify", "exact identity catalog");
  add_common(c_ver, f);
  c_ver->add_option("--identity", identity, "catalog key or 'all'");

  CLI::App* c_diag = app.add_subcommand("diagram", "DOT diagram of grid, constraints, arcs");
  add_common(c_diag, f, /*with_format=*/false);
  c_diag->add_option("--format", f.format, "dot")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_class)) return run_class(f, class_subject, sheaf);
    if (app.got_subcommand(c_filt)) return run_filtration(f, filtration_subject, kernel_k, kernel_h);
    if (app.got_subcommand(c_cons)) return run_constraints(f);
    if (app.got_subcommand(c_check)) return run_check(f, check_file);
    if (app.got_subcommand(c_stalk)) return run_stalk(f, stalk_subject);
    if (app.got_subcommand(c_ss)) return run_ss(f);
    if (app.got_subcommand(c_mono)) return run_monodromy(f, power);
    if (app.got_subcommand(c_van)) return run_vanishing(f);
    if (app.got_subcommand(c_ver)) return run_verify(f, identity);
    if (app.got_subcommand(c_diag)) return run_diagram(f);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
