#include "ramikit/report.hpp"

#include <sstream>

namespace ramikit {

using nlohmann::json;

namespace {

json integer(const Integer &x) {
  if (x.fits_slong_p())
    return x.get_si();
  return x.get_str();
}

std::string inverse_name(const std::string &g) {
  std::string s = g;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string joined(const std::vector<std::size_t> &v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

} // namespace

json to_json(const CosetTable &table, const std::vector<std::string> &generators) {
  json action = json::object();
  for (std::size_t g = 0; g < table.generator_count(); ++g) {
    json fwd = json::array(), inv = json::array();
    for (std::size_t c = 0; c < table.index(); ++c) {
      fwd.push_back(table.act(c, 2 * g) + 1);
      inv.push_back(table.act(c, 2 * g + 1) + 1);
    }
    action[generators.at(g)] = std::move(fwd);
    action[inverse_name(generators.at(g))] = std::move(inv);
  }
  return {{"index", table.index()}, {"action", std::move(action)}};
}

json to_json(const AbelianInvariants &a) {
  json torsion = json::array();
  for (const auto &t : a.torsion)
    torsion.push_back(integer(t));
  json out = {{"free_rank", a.free_rank}, {"torsion", std::move(torsion)}, {"group", a.to_string()}};
  if (auto o = a.order())
    out["order"] = integer(*o);
  else
    out["order"] = nullptr;
  return out;
}

json to_json(const Cover &cover, const KnotGroupData &knot) {
  const auto &gg = knot.presentation.generators;
  const auto &ug = cover.subgroup.presentation.generators;
  const auto &r = cover.report;
  json inertia = json::array();
  for (const auto &d : r.inertia)
    inertia.push_back({{"coset", d.rep_coset + 1},
                       {"ramification_index", d.ramification_index},
                       {"generator_in_G", format_word(d.generator_in_G, gg)},
                       {"generator_in_U", format_word(d.generator_in_U, ug)}});
  json relators = json::array();
  for (const auto &w : r.quotient_presentation.relators)
    relators.push_back(format_word(w, r.quotient_presentation.generators));
  json out = {{"index", r.index},
              {"subgroup", describe(cover.table.spec(), gg)},
              {"inertia", std::move(inertia)},
              {"ramification_indices", r.ramification_indices()},
              {"h1_U", to_json(r.h1_U)},
              {"h1_quotient", to_json(r.h1_quotient)},
              {"quotient_presentation",
               {{"generators", r.quotient_presentation.generators}, {"relators", std::move(relators)}}},
              {"coset_table", to_json(cover.table, gg)}};
  if (r.boundary) {
    json comps = json::array();
    for (const auto &b : *r.boundary) {
      std::vector<std::size_t> cosets;
      for (auto c : b.cosets)
        cosets.push_back(c + 1);
      comps.push_back({{"cosets", cosets}, {"inertia", b.inertia}});
    }
    out["boundary"] = std::move(comps);
    out["boundary_tori"] = r.boundary->size();
  } else {
    out["boundary"] = nullptr;
    out["boundary_tori"] = nullptr;
  }
  return out;
}

json to_json(const CheckReport &r) {
  return {{"p", r.p},
          {"dim_h1_U", r.dim_h1_U},
          {"dim_unramified", r.dim_unramified},
          {"dim_h1_quotient", r.dim_h1_quotient},
          {"inflation_bijective", r.inflation_bijective}};
}

json to_json(const SuiteReport &r) {
  json suites = json::array();
  for (const auto &s : r.suites) {
    json failures = json::array();
    for (const auto &f : s.failures) {
      json j = {{"detail", f.detail}};
      if (!f.cover.empty())
        j["cover"] = f.cover;
      if (f.quotient)
        j["quotient"] = *f.quotient;
      if (f.prime)
        j["p"] = *f.prime;
      failures.push_back(std::move(j));
    }
    json j = {{"name", s.name},
              {"theorem", s.theorem},
              {"status", s.status()},
              {"checked", s.checked},
              {"skipped", s.skipped},
              {"failures", std::move(failures)}};
    if (!s.note.empty())
      j["note"] = s.note;
    suites.push_back(std::move(j));
  }
  return {{"knot", r.knot}, {"covers", r.covers}, {"quotients", r.quotients}, {"suites", std::move(suites)}};
}

json to_json(const KnotGroupData &knot, const ValidationReport &v) {
  const auto &g = knot.presentation.generators;
  json relators = json::array();
  for (const auto &w : knot.presentation.relators)
    relators.push_back(format_word(w, g));
  json checks = json::array();
  for (const auto &c : v.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"label", knot.label},
          {"generators", g},
          {"relators", std::move(relators)},
          {"meridian", format_word(knot.meridian, g)},
          {"longitude", knot.longitude ? json(format_word(*knot.longitude, g)) : json(nullptr)},
          {"invariants", to_json(v.abelianization)},
          {"checks", std::move(checks)},
          {"valid", v.passed()}};
}

std::string ramification_text(const Cover &cover, const KnotGroupData &knot) {
  const auto &gg = knot.presentation.generators;
  const auto &r = cover.report;
  std::ostringstream out;
  out << "subgroup: " << describe(cover.table.spec(), gg) << "\n";
  out << "index: " << r.index << "\n";
  out << "inertia classes: " << r.inertia.size() << "\n";
  for (const auto &d : r.inertia)
    out << "  coset " << d.rep_coset + 1 << ": e=" << d.ramification_index << ", generator "
        << format_word(d.generator_in_G, gg) << " = "
        << format_word(d.generator_in_U, cover.subgroup.presentation.generators) << "\n";
  out << "H1(U): " << r.h1_U.to_string() << "\n";
  out << "H1(U/M_U): " << r.h1_quotient.to_string() << "\n";
  if (r.boundary)
    out << "boundary tori: " << r.boundary->size() << "\n";
  return out.str();
}

std::string census_csv_header(const std::vector<std::uint32_t> &primes) {
  std::string out = "label,index,ramification_indices,h1_U,h1_U_torsion_order,h1_quotient,"
                    "h1_quotient_order,boundary_tori";
  for (auto p : primes)
    out += ",unramified_h1_p" + std::to_string(p);
  return out;
}

std::string census_csv_row(const CensusCover &cc, const std::vector<std::uint32_t> &primes) {
  const auto &r = cc.cover.report;
  std::string out = csv_field(cc.label) + "," + std::to_string(r.index) + "," +
                    joined(r.ramification_indices(), ' ') + "," + csv_field(r.h1_U.to_string()) + "," +
                    r.h1_U.torsion_order().get_str() + "," + csv_field(r.h1_quotient.to_string()) + ",";
  if (auto o = r.h1_quotient.order())
    out += o->get_str();
  else
    out += "inf";
  out += ",";
  if (auto t = r.boundary_tori())
    out += std::to_string(*t);
  for (auto p : primes)
    out += "," + std::to_string(unramified_subspace(cc.cover.subgroup, r.inertia, p).dim());
  return out;
}

} // namespace ramikit
