#include "excoh/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "excoh/error.hpp"
#include "excoh/exec.hpp"
#include "excoh/integral.hpp"
#include "excoh/liedata.hpp"
#include "excoh/modp.hpp"
#include "excoh/verify.hpp"
#include "excoh/weyl.hpp"
#include "json.hpp"

namespace excoh {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group;
  int prime = 0;
  bool chow = false, free = false, torsion = false;
  bool bockstein = false, image = false;
  std::string format = "text";
  std::string system;
  std::int64_t cap = kDefaultWeylCap;
  bool heavy = false;
  std::string suite = "all";
  std::uint64_t seed = 42;
  int trials = 100;
};

LieGroupData parse_group(const std::string& name) {
  try {
    return group_data(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void require_prime(int p) {
  if (!is_prime(p)) throw UsageError("--prime must be a prime, got " + std::to_string(p));
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int cmd_present(const Options& o, std::ostream& out) {
  LieGroupData g = parse_group(o.group);
  int kinds = int(o.chow) + int(o.free) + int(o.torsion);
  if (kinds > 1) throw UsageError("choose at most one of --chow, --free, --torsion");
  bool torsion = o.torsion || (kinds == 0 && o.prime != 0);
  if (torsion && o.prime == 0) throw UsageError("--torsion requires --prime");
  if (!torsion && o.prime != 0) throw UsageError("--prime applies to --torsion only");
  if (o.prime) require_prime(o.prime);
  if (g.family == Family::Spin && torsion)
    throw UsageError("torsion presentations are not supported for Spin(n)");

  RingPresentation pres;
  ordered_json extra;
  if (o.free) {
    FreePart fp = free_part(g);
    pres = fp.presentation(g.name);
    extra = ordered_json::array();
    for (const auto& s : fp.squares) extra.push_back({{"generator", s.generator}, {"square", s.square}});
  } else if (torsion) {
    pres = torsion_presentation(g, o.prime);
  } else {
    pres = chow_ring(g);
  }
  if (o.format == "json") {
    ordered_json j = pres.to_json();
    if (o.free) j["square_annotations"] = extra;
    emit_json(out, j);
  } else {
    out << pres.to_text() << "\n";
    if (o.free)
      for (const auto& s : extra)
        out << s["generator"].get<std::string>() << "^2 = " << s["square"].get<std::string>() << "\n";
    out << "graded dims: " << pres.graded_dims.to_string() << "\n";
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  LieGroupData g = parse_group(o.group);
  if (g.family == Family::Spin) throw UsageError("integral tables are not supported for Spin(n)");
  CohomologyGroupTable t = assemble(g);
  if (o.format == "json") emit_json(out, t.to_json());
  else out << t.to_text();
  return 0;
}

int cmd_dims(const Options& o, std::ostream& out) {
  LieGroupData g = parse_group(o.group);
  if (o.prime == 0) throw UsageError("dims requires --prime");
  require_prime(o.prime);
  if (o.bockstein && o.image) throw UsageError("choose at most one of --bockstein, --image");
  if (g.family == Family::Spin) throw UsageError("mod-p models are not supported for Spin(n)");
  ModPModel m = build_model(g, o.prime);
  std::string kind = o.bockstein ? "bockstein" : o.image ? "image" : "cohomology";
  GradedDims d = o.bockstein ? bockstein_cohomology_dims(m)
               : o.image     ? im_delta_dims(m)
                             : m.algebra().poincare();
  if (o.format == "json") {
    ordered_json j;
    j["group"] = g.name;
    j["prime"] = o.prime;
    j["kind"] = kind;
    j["total"] = d.total();
    j["graded_dims"] = dims_to_json(d);
    emit_json(out, j);
  } else {
    out << g.name << " mod " << o.prime << " " << kind << ": " << d.to_string() << " (total "
        << d.total() << ")\n";
  }
  return 0;
}

int cmd_weyl(const Options& o, std::ostream& out) {
  RootSystemData r;
  try {
    r = root_system(o.system);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if ((r.name == "E6" || r.name == "E7") && !o.heavy)
    throw UsageError(r.name + " enumeration is opt-in; pass --heavy");
  if (o.cap <= 0) throw UsageError("--cap must be positive");
  LieGroupData g = group_data(r.group);
  std::int64_t cap = o.cap;
  if (o.heavy && cap == kDefaultWeylCap) cap = 4'000'000;
  LengthHistogram h = enumerate_weyl(r, cap);
  auto fp = flag_poincare(g);
  bool match = fp.size() == 2 * h.counts.size() - 1;
  for (std::size_t i = 0; match && i < fp.size(); ++i)
    match = fp[i] == (i % 2 == 0 ? h.counts[i / 2] : 0);
  bool maxlen = 2 * h.max_length() == g.dim - g.rank;
  if (o.format == "json") {
    ordered_json j;
    j["system"] = r.name;
    j["group"] = r.group;
    j["order"] = h.order();
    j["max_length"] = h.max_length();
    j["counts"] = h.counts;
    j["matches_flag_poincare"] = match;
    j["max_length_is_positive_roots"] = maxlen;
    j["palindromic"] = h.palindromic();
    emit_json(out, j);
  } else {
    out << r.name << " (" << r.group << "): |W| = " << h.order() << ", max length "
        << h.max_length() << "\ncounts:";
    for (auto c : h.counts) out << " " << c;
    out << "\nflag Poincare polynomial " << (match ? "matches" : "DIFFERS") << "\n";
  }
  if (!match || !maxlen || !h.palindromic())
    throw InvariantViolation("weyl", "enumerate_weyl",
                             "length histogram equals the flag manifold Poincare polynomial", r.name);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto names = verify_suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite: " + o.suite);
  if (o.trials < 0) throw UsageError("--trials must be nonnegative");
  auto results = run_verify_suite(o.suite, o.seed, o.trials);
  std::size_t failed = 0;
  ordered_json failures = ordered_json::array();
  for (const auto& r : results) {
    if (!r.ok) {
      ++failed;
      failures.push_back({{"suite", r.suite}, {"check", r.name}, {"invariant", r.invariant},
                          {"detail", r.detail}});
    }
    if (o.format == "text")
      out << (r.ok ? "PASS " : "FAIL ") << r.suite << " | " << r.name << " | " << r.invariant
          << (r.ok ? "" : " | " + r.detail) << "\n";
  }
  if (o.format == "json") {
    ordered_json j;
    j["suite"] = o.suite;
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    j["checks"] = results.size();
    j["failed"] = failed;
    j["failures"] = failures;
    emit_json(out, j);
  } else {
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();
  CLI::App app{"Exact cohomology of compact Lie groups"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* present = app.add_subcommand("present", "Ring presentations (Chow ring, free part, torsion ideal)");
  present->add_option("group", o.group)->required();
  present->add_option("--prime", o.prime, "Prime for the torsion ideal (implies --torsion)");
  present->add_flag("--chow", o.chow, "Chow ring (default)");
  present->add_flag("--free", o.free, "Free part with its 2-torsion squares");
  present->add_flag("--torsion", o.torsion, "p-torsion ideal; needs --prime");
  add_format(present);

  auto* table = app.add_subcommand("table", "Integral cohomology group in every degree");
  table->add_option("group", o.group)->required();
  add_format(table);

  auto* dims = app.add_subcommand("dims", "Graded dimensions of the mod-p model");
  dims->add_option("group", o.group)->required();
  dims->add_option("--prime", o.prime, "Coefficient prime");
  dims->add_flag("--bockstein", o.bockstein, "Bockstein cohomology");
  dims->add_flag("--image", o.image, "Image of the Bockstein");
  add_format(dims);

  auto* weyl = app.add_subcommand("weyl", "Enumerate a Weyl group and compare with the flag manifold");
  weyl->add_option("system", o.system)->required();
  weyl->add_option("--cap", o.cap, "Refuse groups larger than this");
  weyl->add_flag("--heavy", o.heavy, "Allow E6/E7 enumeration");
  add_format(weyl);

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("suite", o.suite)->check(CLI::IsMember({"all", "liedata", "koszul", "modp", "integral", "weyl"}));
  verify->add_option("--seed", o.seed, "Seed for the randomized suites");
  verify->add_option("--trials", o.trials, "Random complexes per randomized check");
  add_format(verify);

  auto* dump = app.add_subcommand("dump-tables", "Print the embedded group tables as JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*present) return cmd_present(o, out);
    if (*table) return cmd_table(o, out);
    if (*dims) return cmd_dims(o, out);
    if (*weyl) return cmd_weyl(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*dump) {
      emit_json(out, tables_json());
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    ordered_json j;
    j["status"] = "failure";
    j["module"] = e.module();
    j["operation"] = e.operation();
    j["invariant"] = e.invariant();
    j["degree"] = e.degree() ? ordered_json(*e.degree()) : ordered_json(nullptr);
    j["detail"] = e.detail();
    err << j.dump(2) << "\n";
    return 1;
  } catch (const std::length_error& e) {
    ordered_json j{{"status", "failure"}, {"module", "weyl"}, {"operation", "enumerate_weyl"},
                   {"invariant", "|W| within the enumeration cap"}, {"detail", e.what()}};
    err << j.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    ordered_json j{{"status", "failure"}, {"detail", e.what()}};
    err << j.dump(2) << "\n";
    return 1;
  }
  return 2;
}

}  // namespace excoh
