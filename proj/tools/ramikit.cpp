#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ramikit/errors.hpp"
#include "ramikit/harness.hpp"
#include "ramikit/pd_code.hpp"
#include "ramikit/report.hpp"
#include "ramikit/validation.hpp"

using namespace ramikit;

namespace {

enum Exit { kPass = 0, kSuiteFailure = 1, kInputError = 2, kResourceLimit = 3, kSpecError = 4 };

struct Common {
  std::string file;
  bool strict = false;
};

KnotGroupData load(const Common &c) {
  std::vector<std::string> warnings;
  ParseOptions opts;
  opts.validation = c.strict ? Validation::Enforce : Validation::Advisory;
  auto k = load_presentation(c.file, opts, &warnings);
  for (const auto &w : warnings)
    std::cerr << "warning: " << w << "\n";
  return k;
}

void emit(const std::string &text, const std::string &out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw Error("cannot write " + out);
  f << text;
}

// "a=(1 2);b=(2 3)", points 1-based; unnamed generators act trivially
PermRep parse_perm_spec(const std::string &text, const KnotGroupData &k, std::size_t point) {
  std::map<std::string, std::string> cycles;
  std::size_t degree = 1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidSubgroupSpec("expected <generator>=<cycles> in '" + item + "'");
    std::string name = item.substr(0, eq);
    std::erase(name, ' ');
    if (k.presentation.find_generator(name) < 0)
      throw InvalidSubgroupSpec("unknown generator '" + name + "'");
    const std::string cyc = item.substr(eq + 1);
    std::string digits;
    for (char ch : cyc + " ") {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        digits += ch;
      } else if (!digits.empty()) {
        degree = std::max<std::size_t>(degree, std::stoul(digits));
        digits.clear();
      }
    }
    cycles[name] = cyc;
  }
  degree = std::max(degree, point);
  PermRep rep;
  for (const auto &g : k.presentation.generators) {
    auto it = cycles.find(g);
    rep.images.push_back(it == cycles.end() ? Perm(degree) : Perm::from_cycles(it->second, degree));
  }
  if (point == 0)
    throw InvalidSubgroupSpec("points are numbered from 1");
  rep.point = point - 1;
  return rep;
}

GeneratorWords parse_gens_spec(const std::string &text, const KnotGroupData &k) {
  GeneratorWords gw;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      gw.words.push_back(parse_word(item, k.presentation.generators));
    } catch (const ParseError &e) {
      throw InvalidSubgroupSpec(std::string("bad subgroup generator: ") + e.what());
    }
  }
  return gw;
}

int cmd_info(const Common &c, bool json) {
  const auto k = load(c);
  const auto v = validate_knot_group(k);
  if (json) {
    std::cout << to_json(k, v).dump(2) << "\n";
  } else {
    const auto &g = k.presentation.generators;
    std::cout << "label: " << k.label << "\n";
    std::cout << "generators:";
    for (const auto &x : g)
      std::cout << " " << x;
    std::cout << "\nrelators:";
    for (const auto &r : k.presentation.relators)
      std::cout << " " << format_word(r, g);
    std::cout << "\nabelianization: " << v.abelianization.to_string() << "\n";
    for (const auto &check : v.checks) {
      if (check.name == kCheckMeridian)
        std::cout << "meridian: " << format_word(k.meridian, g) << ", "
                  << (check.passed ? "generates" : "does not generate") << "\n";
      else if (check.name == kCheckLongitude)
        std::cout << "longitude: " << format_word(*k.longitude, g) << ", "
                  << (check.passed ? "null-homologous" : "not null-homologous") << "\n";
    }
    if (!k.longitude)
      std::cout << "longitude: none\n";
  }
  if (!v.passed()) {
    std::cerr << "error: " << v.first_failure()->name << ": " << v.first_failure()->detail << "\n";
    return kInputError;
  }
  return kPass;
}

struct RamifyArgs {
  std::optional<std::size_t> cyclic;
  std::string perm;
  std::size_t point = 1;
  std::string gens;
  std::vector<std::uint32_t> primes;
  std::size_t max_cosets = 0;
  std::string format = "text";
  std::string out;
};

int cmd_ramify(const Common &c, const RamifyArgs &a) {
  const auto k = load(c);
  for (auto p : a.primes)
    require_prime(p);
  SubgroupSpec spec;
  if (a.cyclic)
    spec = CyclicCover{*a.cyclic};
  else if (!a.perm.empty())
    spec = parse_perm_spec(a.perm, k, a.point);
  else
    spec = parse_gens_spec(a.gens, k);

  const auto cover = ramify(k, spec, a.max_cosets);
  std::vector<CheckReport> checks;
  for (auto p : a.primes)
    checks.push_back(inflation_check(cover.subgroup, cover.report.quotient_presentation,
                                     cover.report.inertia, p));
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckReport &r) {
    return r.inflation_bijective && r.dim_unramified == r.dim_h1_quotient;
  });

  if (a.format == "json") {
    nlohmann::json j = {{"knot", k.label}, {"cover", to_json(cover, k)}};
    j["cohomology"] = nlohmann::json::array();
    for (const auto &r : checks)
      j["cohomology"].push_back(to_json(r));
    if (!checks.empty())
      j["note"] = kProfiniteNote;
    emit(j.dump(2) + "\n", a.out);
  } else {
    std::string text = ramification_text(cover, k);
    for (const auto &r : checks)
      text += "p=" + std::to_string(r.p) + ": dim H1(U)=" + std::to_string(r.dim_h1_U) +
              ", unramified=" + std::to_string(r.dim_unramified) +
              ", dim H1(U/M_U)=" + std::to_string(r.dim_h1_quotient) + ", inflation " +
              (r.inflation_bijective ? "bijective" : "NOT bijective") + "\n";
    emit(text, a.out);
  }
  return ok ? kPass : kSuiteFailure;
}

struct VerifyArgs {
  std::size_t max_index = 2;
  std::size_t max_sym = 4;
  std::vector<std::uint32_t> primes{2, 3};
  std::uint64_t seed = 0;
  std::size_t max_cosets = 0;
  std::string out;
};

int cmd_verify(const Common &c, const VerifyArgs &a) {
  const auto k = load(c);
  for (auto p : a.primes)
    require_prime(p);
  if (a.max_sym < 1 || a.max_sym > 7)
    throw Error("--max-sym must be in 1..7");
  const auto census = build_census(k, {.max_index = a.max_index, .max_sym_degree = a.max_sym,
                                       .max_cosets = a.max_cosets});
  for (const auto &w : census.warnings)
    std::cerr << "warning: " << w << "\n";
  const auto report = run_suites(census, {.primes = a.primes, .seed = a.seed});
  emit(to_json(report).dump(2) + "\n", a.out);
  return report.passed() ? kPass : kSuiteFailure;
}

struct CensusArgs {
  std::size_t max_index = 3;
  std::vector<std::uint32_t> primes{2, 3};
  std::string format = "csv";
  std::size_t max_cosets = 0;
  std::string out;
};

int cmd_census(const Common &c, const CensusArgs &a) {
  const auto k = load(c);
  for (auto p : a.primes)
    require_prime(p);
  const auto census =
      build_census(k, {.max_index = a.max_index, .max_sym_degree = 1, .max_cosets = a.max_cosets});
  for (const auto &w : census.warnings)
    std::cerr << "warning: " << w << "\n";
  if (!k.longitude)
    std::cerr << "warning: no longitude given; boundary_tori left empty\n";
  if (a.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &cc : census.covers) {
      nlohmann::json row = to_json(cc.cover, k);
      row["label"] = cc.label;
      nlohmann::json dims = nlohmann::json::object();
      for (auto p : a.primes)
        dims[std::to_string(p)] = unramified_subspace(cc.cover.subgroup, cc.cover.report.inertia, p).dim();
      row["unramified_h1"] = std::move(dims);
      rows.push_back(std::move(row));
    }
    emit(nlohmann::json{{"knot", k.label}, {"covers", std::move(rows)}}.dump(2) + "\n", a.out);
  } else {
    std::string text = census_csv_header(a.primes) + "\n";
    for (const auto &cc : census.covers)
      text += census_csv_row(cc, a.primes) + "\n";
    emit(text, a.out);
  }
  return census.partial ? kResourceLimit : kPass;
}

int cmd_wirtinger(const std::string &pd, bool drop, const std::string &label, const std::string &out) {
  auto k = wirtinger_from_pd(parse_pd_code(pd), {.drop_redundant_relator = drop});
  if (!label.empty())
    k.label = label;
  emit(format_knot(k), out);
  return kPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"ramikit: ramification in finite covers of knot complements"};
  app.require_subcommand(1);
  Common common;
  const std::size_t env_max = default_max_cosets();

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("file", common.file, "presentation file")->required();
    sub->add_flag("--strict", common.strict, "reject inputs failing knot-group validation");
  };

  bool info_json = false;
  auto *info = app.add_subcommand("info", "parse and validate a presentation");
  add_common(info);
  info->add_flag("--json", info_json, "JSON output");

  RamifyArgs ra;
  ra.max_cosets = env_max;
  auto *ram = app.add_subcommand("ramify", "inertia and unramified quotient of one cover");
  add_common(ram);
  auto *o_cyc = ram->add_option("--cyclic", ra.cyclic, "n-fold cyclic cover")->check(CLI::PositiveNumber);
  auto *o_perm = ram->add_option("--perm", ra.perm, "permutation action, e.g. \"a=(1 2);b=(2 3)\"");
  auto *o_gens = ram->add_option("--gens", ra.gens, "subgroup generators, e.g. \"aa,bA\"");
  o_cyc->excludes(o_perm, o_gens);
  o_perm->excludes(o_gens);
  ram->add_option("--point", ra.point, "stabilized point for --perm (1-based)");
  ram->add_option("-p,--primes", ra.primes, "primes for the inflation check")->delimiter(',');
  ram->add_option("--max-cosets", ra.max_cosets, "coset enumeration limit");
  ram->add_option("--format", ra.format)->check(CLI::IsMember({"json", "text"}));
  ram->add_option("--out", ra.out, "output path");

  VerifyArgs va;
  va.max_cosets = env_max;
  auto *ver = app.add_subcommand("verify", "run every check over a census of covers and quotients");
  add_common(ver);
  ver->add_option("--max-index", va.max_index)->check(CLI::PositiveNumber);
  ver->add_option("--max-sym", va.max_sym)->check(CLI::Range(1, 7));
  ver->add_option("-p,--primes", va.primes)->delimiter(',');
  ver->add_option("--seed", va.seed);
  ver->add_option("--max-cosets", va.max_cosets);
  ver->add_option("--out", va.out);

  CensusArgs ca;
  ca.max_cosets = env_max;
  auto *cen = app.add_subcommand("census", "tabulate invariants of all covers up to an index");
  add_common(cen);
  cen->add_option("--max-index", ca.max_index)->check(CLI::PositiveNumber);
  cen->add_option("-p,--primes", ca.primes)->delimiter(',');
  cen->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}));
  cen->add_option("--max-cosets", ca.max_cosets);
  cen->add_option("--out", ca.out);

  std::string pd, wlabel, wout;
  bool drop = false;
  auto *wir = app.add_subcommand("wirtinger", "presentation from a PD code");
  wir->add_option("--pd", pd, "PD code, e.g. \"[[1,4,2,5],[3,6,4,1],[5,2,6,3]]\"")->required();
  wir->add_flag("--drop-redundant", drop, "omit one crossing relator");
  wir->add_option("--label", wlabel);
  wir->add_option("--out", wout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*info)
      return cmd_info(common, info_json);
    if (*ram) {
      if (!ra.cyclic && ra.perm.empty() && ra.gens.empty()) {
        std::cerr << "error: one of --cyclic, --perm, --gens is required\n";
        return kSpecError;
      }
      return cmd_ramify(common, ra);
    }
    if (*ver)
      return cmd_verify(common, va);
    if (*cen)
      return cmd_census(common, ca);
    if (*wir)
      return cmd_wirtinger(pd, drop, wlabel, wout);
  } catch (const CosetLimitExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InvalidSubgroupSpec &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSpecError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
