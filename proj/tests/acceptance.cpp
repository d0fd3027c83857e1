// Acceptance suite: every contract of the calculus is checked exactly, one
// line per criterion. Exits nonzero if any criterion fails. The CLI binary
// path is passed with --cli so the determinism and spectral-sequence
// criteria can drive the real executable.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "psicalc/filtration.hpp"
#include "psicalc/identities.hpp"
#include "psicalc/json_io.hpp"
#include "psicalc/kgroup.hpp"
#include "psicalc/monodromy.hpp"
#include "psicalc/sheaf_table.hpp"
#include "psicalc/stalks.hpp"
#include "psicalc/vanishing.hpp"

using namespace psicalc;

namespace {

std::string g_cli_path;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = "\"" + g_cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

bool fail(std::string& detail, const std::string& msg) {
  if (detail.empty()) detail = msg;
  return false;
}

// 1. Figure-like spectral sequence at r = 4, full stratum, d = 4: row
// dimensions (4,6,4,1),(6,4,1),(4,1),(1), twists 3,1,-1,-3, abutment
// (1,3,3,1), in characteristic 0 and 2, 3, 5 — both via the library and
// via the CLI's JSON output.
bool criterion_figure(std::string& detail) {
  const std::vector<std::vector<int>> want_dims = {{4, 6, 4, 1}, {6, 4, 1}, {4, 1}, {1}};
  const std::vector<int> want_twists = {3, 1, -1, -3};
  const std::vector<long long> want_abutment = {1, 3, 3, 1};

  for (long long ch : {0LL, 2LL, 3LL, 5LL}) {
    const E1Page page = e1_page(4, Stratum::full(4), 4);
    if (page.rows.size() != 4) return fail(detail, "row count");
    for (int i = 0; i < 4; ++i) {
      if (page.rows[i].complex.dims != want_dims[i]) return fail(detail, "row dims");
      if (page.rows[i].twist != want_twists[i]) return fail(detail, "row twists");
    }
    const StalkTable ab = e2_abutment(4, Stratum::full(4), 4, ch);
    if (ab.entries().size() != 4) return fail(detail, "abutment size");
    for (int q = 0; q < 4; ++q) {
      auto it = ab.entries().find(want_twists[q]);
      if (it == ab.entries().end()) return fail(detail, "abutment twist");
      if (it->second.lead_q != q) return fail(detail, "abutment degree");
      if (it->second.display_mult() != want_abutment[q]) return fail(detail, "abutment mult");
    }

    const CliResult res =
        run_cli("ss --r 4 --I 1,2,3,4 --d 4 --char " + std::to_string(ch) + " --format json");
    if (res.exit_code != 0) return fail(detail, "cli exit code");
    const Json j = Json::parse(res.output);
    for (int i = 0; i < 4; ++i) {
      if (j["rows"][i]["complex"]["terms"].get<std::vector<int>>() != want_dims[i])
        return fail(detail, "cli row dims");
      if (j["rows"][i]["twist"].get<int>() != want_twists[i])
        return fail(detail, "cli row twists");
    }
    const StalkTable cli_ab = parse_stalk_table(j["abutment"]);
    if (cli_ab != e2_abutment(4, Stratum::full(4), 4, ch)) return fail(detail, "cli abutment");
  }
  return true;
}

// 2. Spectral-sequence route equals the stalk oracle for every stratum,
// r <= 6, d in {r, r+1}, characteristic in {0, 2, 3, 5}.
bool criterion_oracle(std::string& detail) {
  for (int r = 1; r <= 6; ++r)
    for (const Stratum& I : all_strata(r))
      for (int d : {r, r + 1})
        for (long long ch : {0LL, 2LL, 3LL, 5LL})
          if (e2_abutment(r, I, d, ch) != psi_stalk_oracle(I, d))
            return fail(detail, "mismatch at r=" + std::to_string(r) + " I=" + I.to_string());
  return true;
}

// 3. Truncated subset complexes: squared differential is zero over the
// integers and cohomology is C(m-1,k-1) at the left end, zero elsewhere,
// over Q and F_2, F_3, F_5, F_7, for 1 <= k <= m <= 8.
bool criterion_koszul(std::string& detail) {
  for (int m = 1; m <= 8; ++m) {
    for (int k = 1; k <= m; ++k) {
      const ChainComplex c = koszul_complex(m, k);
      for (size_t i = 0; i + 1 < c.diffs.size(); ++i)
        if (!multiply(c.diffs[i + 1], c.diffs[i]).is_zero())
          return fail(detail, "d^2 != 0 at m=" + std::to_string(m));
      for (long long ch : {0LL, 2LL, 3LL, 5LL, 7LL}) {
        const CohomologyProfile p = complex_cohomology(c, ch);
        if (p.dims[0] != binomial(m - 1, k - 1))
          return fail(detail, "kernel dim at m=" + std::to_string(m) + " k=" + std::to_string(k));
        for (size_t i = 1; i < p.dims.size(); ++i)
          if (p.dims[i] != 0) return fail(detail, "nonzero higher cohomology");
      }
    }
  }
  return true;
}

// 4. K-group round trips: both basis conversions invert each other on all
// basis elements for r <= 8; the nearby-cycles class is self-dual for
// r <= 10 and has r * 2^(r-1) constituents.
bool criterion_roundtrip(std::string& detail) {
  for (int r = 1; r <= 8; ++r)
    for (const Stratum& I : all_strata(r))
      for (int a = -2; a <= 2; ++a) {
        KClass ic(r);
        ic.add(ICClass{I, a});
        if (expand_shriek(ic_to_shriek(I, a, r)) != ic)
          return fail(detail, "shriek expansion round trip");
        ShKClass sh(r);
        sh.add(ICClass{I, a});
        if (to_shriek_basis(shriek_to_ic(I, a, r)) != sh)
          return fail(detail, "ic conversion round trip");
      }
  for (int r = 1; r <= 10; ++r) {
    const KClass psi = psi_class(r);
    if (dual(psi) != psi) return fail(detail, "self-duality");
    if (psi.term_count() != static_cast<long long>(r) * (1LL << (r - 1)))
      return fail(detail, "constituent count");
  }
  return true;
}

// 5. The identity catalog passes for r <= 6.
bool criterion_identities(std::string& detail) {
  for (int r = 1; r <= 6; ++r)
    for (const IdentityReport& rep : verify_all_identities(r))
      if (!rep.pass)
        return fail(detail, rep.name + " failed at r=" + std::to_string(r) + ": " +
                                rep.counterexample);
  return true;
}

// 6. Admissibility: all constructed filtrations pass the constraints for
// r <= 6; every adjacent transposition of the nearby-cycles filtration
// touching a constrained pair is rejected, exhaustively for r <= 5.
bool criterion_admissibility(std::string& detail) {
  for (int r = 1; r <= 6; ++r) {
    const auto cs = constraints(r);
    if (!check_admissible(psi_filtration(r), cs).admissible)
      return fail(detail, "psi filtration r=" + std::to_string(r));
    if (!check_admissible(psi_cofiltration(r), cs).admissible)
      return fail(detail, "psi cofiltration r=" + std::to_string(r));
    for (const Stratum& I : all_strata(r)) {
      if (!check_admissible(weight_filtration_shriek(I, r), cs).admissible)
        return fail(detail, "weight filtration " + I.to_string());
      if (!check_admissible(weight_cofiltration_star(I, r), cs).admissible)
        return fail(detail, "weight cofiltration " + I.to_string());
    }
  }
  for (int r = 2; r <= 5; ++r) {
    const Filtration f = psi_filtration(r);
    const auto cs = constraints(r);
    for (int i = 0; i + 1 < f.layer_count(); ++i) {
      Filtration g(r, "perturbed");
      for (int j = 0; j < f.layer_count(); ++j) {
        if (j == i)
          g.push_layer(f.layers()[i + 1]);
        else if (j == i + 1)
          g.push_layer(f.layers()[i]);
        else
          g.push_layer(f.layers()[j]);
      }
      bool touches = false;
      for (const Constraint& c : cs)
        if (f.layers()[i].count(c.earlier) && f.layers()[i + 1].count(c.later)) touches = true;
      if (touches && check_admissible(g, cs).admissible)
        return fail(detail, "transposition accepted at r=" + std::to_string(r) + " layer " +
                                std::to_string(i + 1));
    }
  }
  return true;
}

// 7. Monodromy for r <= 12: nilpotency order exactly r, kernel equals the
// first block, one Jordan string per length 1..r, twist numerator +2 per arc.
bool criterion_monodromy(std::string& detail) {
  for (int r = 1; r <= 12; ++r) {
    const MonodromyGrid g = grid(r);
    if (rank_of_power(g, r) != 0) return fail(detail, "N^r != 0");
    if (rank_of_power(g, r - 1) == 0) return fail(detail, "N^(r-1) == 0");
    const auto kernel = kernel_N(g);
    if (kernel.size() != static_cast<size_t>(r)) return fail(detail, "kernel size");
    for (const GridCell& c : kernel)
      if (c.k != 1) return fail(detail, "kernel cell outside first block");
    // Kernel classes match the first block of the filtration.
    const Filtration f = psi_filtration(r);
    KClass block(r);
    for (int i = f.blocks()[0].from; i <= f.blocks()[0].to; ++i)
      for (const auto& [c, m] : f.layers()[i - 1]) block.add(c, m);
    KClass kc(r);
    for (const GridCell& c : kernel) kc += g.cell_class(c);
    if (kc != block) return fail(detail, "kernel class vs first block");

    const auto jordan = jordan_type(r);
    if (jordan.size() != static_cast<size_t>(r)) return fail(detail, "jordan string count");
    for (int h = 1; h <= r; ++h)
      if (jordan[h - 1].length != h) return fail(detail, "jordan lengths");

    for (const GridCell& c : g.cells()) {
      const auto image = apply_N(g, c);
      if (image && cell_twist(*image) != cell_twist(c) + 2)
        return fail(detail, "twist increment");
    }
  }
  return true;
}

// 8. Vanishing: the induction equals the closed form on subsets of the
// support and is empty elsewhere (r <= 6, every support); generic
// characters concentrate in [0,0]; every concentration lies within
// [-(#I-1), #I-1].
bool criterion_vanishing(std::string& detail) {
  for (int r = 1; r <= 6; ++r) {
    for (const Stratum& I : all_strata(r)) {
      const CharacterDatum chi = CharacterDatum::with_support(I);
      const IntervalMap out = run_vanishing_induction(r, chi);
      for (const auto& [J, iv] : out) {
        if (!J.subset_of(I)) {
          if (!iv.is_empty) return fail(detail, "nonempty off support");
          continue;
        }
        const int w = I.size() - J.size();
        if (iv != DegreeInterval::closed(-w, w))
          return fail(detail, "closed form at I=" + I.to_string() + " J=" + J.to_string());
      }
      const DegreeInterval conc = psi_chi_concentration(r, chi);
      if (chi.generic && !(conc == DegreeInterval::closed(0, 0)))
        return fail(detail, "generic concentration");
      if (!conc.subset_of(DegreeInterval::closed(-(I.size() - 1), I.size() - 1)))
        return fail(detail, "concentration bound");
    }
  }
  return true;
}

// 9. Determinism: repeated CLI runs are byte-identical, JSON re-parses to
// the identical value and re-serializes to identical bytes.
bool criterion_determinism(std::string& detail) {
  const std::vector<std::string> commands = {
      "class psi --r 4 --format json",
      "class shriek --r 3 --I 1 --format json",
      "class psi --r 3 --sheaf-table --format json",
      "filtration psi --r 4 --format json",
      "filtration copsi --r 3 --format json",
      "constraints --r 3 --format json",
      "stalk oracle --r 4 --I 1,2,3 --format json",
      "ss --r 4 --I 1,2,3,4 --format json",
      "monodromy --r 5 --format json",
      "vanishing --r 4 --chi-support 1,2 --format json",
      "verify --identity all --r 4 --format json",
      "diagram --r 4",
  };
  for (const std::string& cmd : commands) {
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    if (a.exit_code != 0 || b.exit_code != 0) return fail(detail, "exit code for: " + cmd);
    if (a.output != b.output || a.output.empty())
      return fail(detail, "outputs differ for: " + cmd);
  }

  // Round trips through the parsers.
  {
    const CliResult res = run_cli("class psi --r 3 --format json");
    if (parse_kclass(Json::parse(res.output)) != psi_class(3))
      return fail(detail, "class json round trip");
  }
  {
    const CliResult res = run_cli("filtration psi --r 3 --format json");
    if (!(parse_filtration(Json::parse(res.output)) == psi_filtration(3)))
      return fail(detail, "filtration json round trip");
    if (dump_canonical(to_json(parse_filtration(Json::parse(res.output)))) != res.output)
      return fail(detail, "filtration reserialization");
  }
  {
    const CliResult res = run_cli("stalk oracle --r 4 --I 1,2 --format json");
    if (parse_stalk_table(Json::parse(res.output)) != psi_stalk_oracle(Stratum::from_members({1, 2}, 4), 4))
      return fail(detail, "stalk json round trip");
  }
  {
    const CliResult res = run_cli("class psi --r 3 --sheaf-table --format json");
    if (parse_sheaf_table(Json::parse(res.output)) != to_sheaf_table(psi_class(3), 3))
      return fail(detail, "sheaf table json round trip");
  }

  // Verification failures surface in the exit code: an inadmissible
  // filtration read back through `check`.
  {
    const Filtration f = psi_filtration(2);
    Filtration swapped(2, f.label());
    swapped.push_layer(f.layers()[2]);
    swapped.push_layer(f.layers()[1]);
    swapped.push_layer(f.layers()[0]);
    const std::string path = "/tmp/psicalc_swapped_filtration.json";
    {
      std::ofstream out(path);
      out << dump_canonical(to_json(swapped));
    }
    if (run_cli("check --r 2 --file " + path).exit_code != 1)
      return fail(detail, "inadmissible check exit code");
    const std::string good = "/tmp/psicalc_good_filtration.json";
    {
      std::ofstream out(good);
      out << dump_canonical(to_json(f));
    }
    if (run_cli("check --r 2 --file " + good).exit_code != 0)
      return fail(detail, "admissible check exit code");
  }

  // Usage errors exit with 2.
  if (run_cli("class psi --bogus-flag 1").exit_code != 2)
    return fail(detail, "usage error exit code");
  if (run_cli("verify --identity no-such-identity --r 3").exit_code != 2)
    return fail(detail, "unknown identity exit code");
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) g_cli_path = argv[i + 1];
  }
  if (g_cli_path.empty()) {
    std::cerr << "usage: psicalc_acceptance --cli <path-to-psicalc-binary>\n";
    return 2;
  }

  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 spectral sequence at r=4 reproduced (rows 4641/641/41/1, abutment 1331)",
       criterion_figure},
      {"2 abutment equals stalk oracle (r<=6, d in {r,r+1}, char in {0,2,3,5})",
       criterion_oracle},
      {"3 subset-complex cohomology law (m<=8, char in {0,2,3,5,7}, d^2=0)", criterion_koszul},
      {"4 K-group round trips, self-duality, constituent count", criterion_roundtrip},
      {"5 identity catalog passes (r<=6)", criterion_identities},
      {"6 filtration admissibility and transposition rejection", criterion_admissibility},
      {"7 monodromy nilpotency, kernel, Jordan type (r<=12)", criterion_monodromy},
      {"8 vanishing induction closed form and concentration bounds", criterion_vanishing},
      {"9 CLI determinism and JSON round trips", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << c.name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
