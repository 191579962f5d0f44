#pragma once

// Command-line front end. run() takes the argument list without the program
// name and writes one JSON (or CSV) document to `out`.
//
// Exit codes: 0 success, 1 verification failure or internal inconsistency,
// 2 usage error.

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "CLI11.hpp"
#include "json.hpp"
#include "reemobius/reemobius.hpp"

namespace reemobius::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json rational_json(const Rational& r) {
  return Json{{"num", r.num().str()}, {"den", r.den().str()}};
}

/// Display-only decimal rendering with 12 significant digits.
inline std::string decimal_string(const Rational& r) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec value = Dec(r.num()) / Dec(r.den());
  return value.str(12);
}

struct Options {
  std::string command;
  unsigned n = 0;
  std::string target;
  std::string spec;
  bool d = false;
  bool deep = false;
  std::string group;
  std::string format = "json";
  std::size_t bound = oracle::kDefaultBound;
};

inline TargetGroup require_target(const std::string& id) {
  const auto t = parse_target(id);
  if (!t) {
    throw UsageError("unknown target '" + id +
                     "' (expected f2, c2-inf, c3-inf, c6-inf, c9-inf, c2c2c2, "
                     "c3c3, hecke3, hecke6 or hecke9)");
  }
  return *t;
}

inline void require_n(unsigned n) {
  if (n < 3 || n % 2 == 0) {
    throw UsageError("--n must be an odd integer >= 3");
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---- mobius ---------------------------------------------------------------

inline Json class_json(const catalog::ClassInstance& inst, unsigned n) {
  const catalog::ClassRecord rec = catalog::class_record(inst, n);
  Json counts = Json::object();
  for (const auto& [k, v] : rec.elem_counts) counts[std::to_string(k)] = v.str();
  return Json{{"class", inst.str()},
              {"tag", std::string(catalog::tag_name(inst.tag))},
              {"h", inst.h},
              {"type", catalog::isomorphism_type(inst)},
              {"subgroup_order", rec.subgroup_order.str()},
              {"mobius", rec.mobius},
              {"normaliser_order", rec.normaliser_order.str()},
              {"class_size", rec.class_size.str()},
              {"element_counts", counts}};
}

inline int cmd_mobius(const Options& o, std::ostream& out) {
  require_n(o.n);
  const auto instances = catalog::class_instances(o.n);
  if (o.format == "csv") {
    out << "class,tag,h,type,subgroup_order,mobius,normaliser_order,class_size\n";
    for (const auto& inst : instances) {
      const auto rec = catalog::class_record(inst, o.n);
      out << inst.str() << ',' << catalog::tag_name(inst.tag) << ',' << inst.h
          << ',' << csv_field(catalog::isomorphism_type(inst)) << ','
          << rec.subgroup_order << ',' << rec.mobius << ','
          << rec.normaliser_order << ',' << rec.class_size << '\n';
    }
    return kOk;
  }
  Json classes = Json::array();
  std::size_t nonzero = 0;
  for (const auto& inst : instances) {
    classes.push_back(class_json(inst, o.n));
    if (catalog::mobius_value(inst, o.n) != 0) ++nonzero;
  }
  Json doc{{"schema_version", kSchemaVersion},
           {"command", "mobius"},
           {"params", {{"n", o.n}}},
           {"results",
            {{"group_order", catalog::group_order(o.n).str()},
             {"aut_order", catalog::aut_order(o.n).str()},
             {"nonzero_classes", nonzero},
             {"classes", classes}}}};
  out << doc.dump(2) << '\n';
  return kOk;
}

// ---- count ----------------------------------------------------------------

inline int cmd_count(const Options& o, std::ostream& out) {
  require_n(o.n);
  const TargetGroup t = require_target(o.target);
  const auto r = inversion::epi_count_report(t, o.n, o.d);
  if (o.format == "csv") {
    out << "target,n,phi_class_sum,phi_closed_form,agree,d\n";
    out << target_id(t) << ',' << o.n << ',' << r.phi_class_sum << ','
        << r.phi_closed_form << ',' << (r.agree ? "true" : "false") << ','
        << (r.d ? r.d->str() : "") << '\n';
    return kOk;
  }
  Json results{{"target", std::string(target_id(t))},
               {"n", o.n},
               {"phi_class_sum", r.phi_class_sum.str()},
               {"phi_closed_form", r.phi_closed_form.str()},
               {"agree", r.agree}};
  if (r.d) {
    results["d"] = r.d->str();
    results["aut_order"] = catalog::aut_order(o.n).str();
    if (r.extended) results["d_note"] = "extension beyond the core targets";
  }
  Json params{{"n", o.n}, {"target", o.target}, {"d", o.d}};
  out << Json{{"schema_version", kSchemaVersion},
              {"command", "count"},
              {"params", params},
              {"results", results}}
             .dump(2)
      << '\n';
  return kOk;
}

// ---- prob -----------------------------------------------------------------

inline int cmd_prob(const Options& o, std::ostream& out) {
  require_n(o.n);
  inversion::ProbabilitySpec spec;
  try {
    spec = inversion::ProbabilitySpec::parse(o.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Rational p = inversion::generation_probability(spec, o.n);
  out << Json{{"schema_version", kSchemaVersion},
              {"command", "prob"},
              {"params", {{"n", o.n}, {"spec", spec.str()}}},
              {"results",
               {{"probability", rational_json(p)},
                {"decimal", decimal_string(p)}}}}
             .dump(2)
      << '\n';
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void record(bool ok) { ok ? ++passed : ++failed; }
};

inline Json verify_catalog(unsigned n, VerifyTally& tally) {
  Json relations = Json::array();
  for (const auto& inst : catalog::class_instances(n)) {
    const Integer s = inversion::defining_relation_sum(inst, n);
    const bool ok = inversion::verify_defining_relation(inst, n);
    tally.record(ok);
    relations.push_back(
        {{"class", inst.str()}, {"sum", s.str()}, {"status", ok ? "pass" : "fail"}});
  }
  const Integer trivial = inversion::trivial_mobius_value(n);
  const bool trivial_ok = trivial == 0;
  tally.record(trivial_ok);

  Json corollaries = Json::array();
  for (const auto& c : inversion::cross_check_corollaries(n).checks) {
    std::string status = "agree";
    if (!c.agree) {
      status = inversion::is_core_d_target(c.target) ? "fail" : "suspected_typo";
      if (status == "fail") tally.record(false);
    } else {
      tally.record(true);
    }
    corollaries.push_back({{"target", std::string(target_id(c.target))},
                           {"class_sum", c.class_sum.str()},
                           {"closed_form", c.closed_form.str()},
                           {"discrepancy", c.discrepancy.str()},
                           {"status", status}});
  }

  bool aut_ok = true;
  for (TargetGroup t : {TargetGroup::F2, TargetGroup::Hecke3}) {
    aut_ok = aut_ok && catalog::aut_order(n).divides(inversion::phi_class_sum(t, n));
  }
  tally.record(aut_ok);

  return Json{{"n", n},
              {"defining_relations", relations},
              {"trivial_mobius",
               {{"value", trivial.str()}, {"status", trivial_ok ? "pass" : "fail"}}},
              {"aut_divides_phi", aut_ok ? "pass" : "fail"},
              {"corollaries", corollaries}};
}

inline Json verify_lemma(unsigned n, VerifyTally& tally) {
  Json rows = Json::array();
  for (std::uint64_t l : numtheory::divisors(n)) {
    const auto r = numtheory::route_hall_divisibility(static_cast<unsigned>(l), n);
    const bool ok = numtheory::verify_unique_divisibility(static_cast<unsigned>(l), n);
    tally.record(ok);
    rows.push_back({{"l", l},
                    {"n", n},
                    {"targets", {r.target_of_a1, r.target_of_a2, r.target_of_a3}},
                    {"status", ok ? "pass" : "fail"}});
  }
  return rows;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  require_n(o.n);
  VerifyTally tally;
  Json catalogs = Json::array();
  Json lemma = Json::array();
  std::vector<unsigned> ns{o.n};
  if (o.deep) {
    ns.clear();
    for (unsigned m = 3; m <= o.n; m += 2) ns.push_back(m);
  }
  for (unsigned m : ns) catalogs.push_back(verify_catalog(m, tally));
  const unsigned lemma_top = o.deep ? std::max(o.n, 99u) : o.n;
  for (unsigned m = o.deep ? 1 : o.n; m <= lemma_top; m += 2) {
    for (auto& row : verify_lemma(m, tally)) lemma.push_back(std::move(row));
  }
  const bool ok = tally.failed == 0;
  out << Json{{"schema_version", kSchemaVersion},
              {"command", "verify"},
              {"params", {{"n", o.n}, {"deep", o.deep}}},
              {"results",
               {{"status", ok ? "pass" : "fail"},
                {"checks_passed", tally.passed},
                {"checks_failed", tally.failed},
                {"catalog", catalogs},
                {"hall_routing", lemma}}}}
             .dump(2)
      << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---- oracle ---------------------------------------------------------------

inline int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.group.empty()) throw UsageError("oracle needs --group FILE");
  const TargetGroup t = require_target(o.target);
  std::vector<oracle::Permutation> gens;
  try {
    gens = oracle::parse_group_file(o.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  oracle::FiniteGroup G;
  oracle::SubgroupLattice lat;
  try {
    G = oracle::FiniteGroup::closure(gens, o.bound);
    lat = oracle::lattice_mobius(oracle::enumerate_subgroups(G, o.bound));
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  const auto check = oracle::verify_hall_inversion(G, lat, t, o.bound);
  const bool hall11 = oracle::verify_maximal_intersection(lat);

  std::map<std::pair<std::size_t, long long>, std::size_t> buckets;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    ++buckets[{lat.order_of(i), lat.mu[i]}];
  }
  Json mu_table = Json::array();
  for (const auto& [key, count] : buckets) {
    mu_table.push_back(
        {{"order", key.first}, {"mu", key.second}, {"subgroups", count}});
  }
  Json generators = Json::array();
  for (const auto& g : gens) generators.push_back(g.str());

  const bool ok = check.agree && hall11;
  out << Json{{"schema_version", kSchemaVersion},
              {"command", "oracle"},
              {"params",
               {{"group", o.group}, {"target", o.target}, {"bound", o.bound}}},
              {"results",
               {{"degree", G.degree()},
                {"group_order", G.order()},
                {"generators", generators},
                {"subgroups", lat.size()},
                {"maximal_subgroups", lat.maximal().size()},
                {"mu_table", mu_table},
                {"inversion_sum", check.inversion_sum.str()},
                {"brute_force", check.brute_force.str()},
                {"inversion_agrees", check.agree},
                {"nonzero_mu_are_maximal_intersections", hall11},
                {"status", ok ? "pass" : "fail"}}}}
             .dump(2)
      << '\n';
  return ok ? kOk : kVerifyFailed;
}

// ---- dispatch -------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Möbius function, epimorphism counts and generation "
               "probabilities for the small Ree groups R(3^n)",
               "reemobius"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "field exponent (odd, >= 3)")->required();
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* mobius = app.add_subcommand("mobius", "Möbius table of R(3^n)");
  add_n(mobius);
  add_format(mobius);

  auto* count = app.add_subcommand("count", "epimorphism counts by inversion");
  add_n(count);
  count->add_option("--target", o.target, "source presentation id")->required();
  count->add_flag("--d", o.d, "divide by |Aut(G)|");
  add_format(count);

  auto* prob = app.add_subcommand("prob", "exact generation probability");
  add_n(prob);
  prob->add_option("--spec", o.spec, "a,b with a,b in {2,3,6,9,inf}, or 2,2,2")
      ->required();

  auto* verify = app.add_subcommand("verify", "consistency checks");
  add_n(verify);
  verify->add_flag("--deep", o.deep, "also check every odd m <= n and Hall "
                                     "routing for odd m <= max(n, 99)");

  auto* orc = app.add_subcommand("oracle", "brute-force lattice oracle");
  orc->add_option("--group", o.group, "group file (1-based cycles per line)")
      ->required();
  orc->add_option("--target", o.target, "source presentation id")->required();
  orc->add_option("--bound", o.bound, "largest group order to enumerate");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (mobius->parsed()) return cmd_mobius(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (prob->parsed()) return cmd_prob(o, out);
    if (verify->parsed()) {
      if (o.format != "json") throw UsageError("verify emits JSON only");
      return cmd_verify(o, out);
    }
    return cmd_oracle(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace reemobius::cli
