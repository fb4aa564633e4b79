#include "curvegroup/report/cli.hpp"

#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "curvegroup/report/report.hpp"

namespace curvegroup::report {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::int64_t q = 0;
  std::int64_t k = 0;
  std::uint64_t max_cosets = enumeration::kDefaultCosetCap;
  std::string strategy = "felsch";
  bool abelianize = false;
  std::string emit;
  std::string emit_audit;
  std::uint64_t seed = 7;
  std::uint64_t prime = polycore::kDefaultPrime;
  bool audit = false;
  std::string fixture;
  bool json = false;
  bool grid = false;
  bool deep = false;
  bool timings = false;
};

void add_qk(CLI::App* cmd, Flags& f) {
  cmd->add_option("-q", f.q, "odd integer >= 3");
  cmd->add_option("-k", f.k, "positive integer");
}

void add_output(CLI::App* cmd, Flags& f) { cmd->add_flag("--json", f.json, "print the JSON document"); }

void add_enumeration(CLI::App* cmd, Flags& f) {
  cmd->add_option("--max-cosets", f.max_cosets, "live coset cap")->check(CLI::PositiveNumber);
  cmd->add_option("--strategy", f.strategy, "hlt or felsch")->check(CLI::IsMember({"hlt", "felsch"}));
}

void add_curve(CLI::App* cmd, Flags& f) {
  cmd->add_option("--seed", f.seed, "seed for the random forms and the chart");
  cmd->add_option("--prime", f.prime, "prime for the audit");
  cmd->add_flag("--audit", f.audit, "audit the singular locus mod p");
}

void require_qk(const Flags& f) {
  if (f.q < 3 || f.q % 2 == 0) throw UsageError("-q must be an odd integer >= 3");
  if (f.k < 1) throw UsageError("-k must be a positive integer");
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << doc.dump(2) << '\n';
  if (!file) throw std::runtime_error("failed writing " + path);
}

int finish(const Section& s, const Flags& f, std::ostream& out) {
  if (f.json) {
    out << s.doc.dump(2) << '\n';
  } else {
    for (const auto& line : s.summary) out << line << '\n';
  }
  return exit_code(s);
}

CurveOptions curve_options(const Flags& f) {
  polycore::PrimeField check(f.prime);
  (void)check;
  return CurveOptions{.seed = f.seed, .prime = f.prime, .audit = f.audit, .zariski = f.fixture == "zariski"};
}

GroupOptions group_options(const Flags& f, bool abelianize) {
  return GroupOptions{.max_cosets = f.max_cosets,
                      .strategy = *enumeration::parse_strategy(f.strategy),
                      .abelianize = abelianize};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifies orders, representations and singular loci for the C(q,k) curve family", "curvegroup"};
  app.require_subcommand(1);
  Flags f;

  auto* group = app.add_subcommand("group", "coset enumeration of H(q;k)");
  add_qk(group, f);
  add_enumeration(group, f);
  group->add_flag("--abelianize", f.abelianize, "also compute the abelianization");
  add_output(group, f);

  auto* rep = app.add_subcommand("rep", "matrix representation and its closure");
  add_qk(rep, f);
  rep->add_option("--emit", f.emit, "write the element list as JSON");
  add_output(rep, f);

  auto* curve = app.add_subcommand("curve", "build C(q,k) and optionally audit it");
  add_qk(curve, f);
  add_curve(curve, f);
  curve->add_option("--fixture", f.fixture, "named fixture curve")->check(CLI::IsMember({"zariski"}));
  curve->add_option("--emit", f.emit, "write the curve as JSON");
  curve->add_option("--emit-audit", f.emit_audit, "write the audit as JSON (with --audit)");
  add_output(curve, f);

  auto* report = app.add_subcommand("report", "group, representation and curve checks together");
  add_qk(report, f);
  add_enumeration(report, f);
  add_curve(report, f);
  report->add_flag("--grid", f.grid, "run the (q, k) grid");
  report->add_flag("--deep", f.deep, "audit curves at every grid point");
  report->add_flag("--timings", f.timings, "include stage timings in the JSON");
  report->add_option("--emit", f.emit, "write the JSON document");
  add_output(report, f);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (group->parsed()) {
      require_qk(f);
      return finish(group_section(f.q, f.k, group_options(f, f.abelianize)), f, out);
    }
    if (rep->parsed()) {
      require_qk(f);
      Json elements;
      const Section s = rep_section(f.q, f.k, RepOptions{.elements = f.emit.empty() ? nullptr : &elements});
      if (!f.emit.empty() && !elements.is_null()) write_json(f.emit, elements);
      return finish(s, f, out);
    }
    if (curve->parsed()) {
      if (f.fixture.empty()) require_qk(f);
      const Section s = curve_section(f.q, f.k, curve_options(f));
      if (!f.emit.empty()) write_json(f.emit, s.doc.at("curve"));
      if (!f.emit_audit.empty()) {
        if (!s.doc.contains("audit")) throw UsageError("--emit-audit requires --audit");
        write_json(f.emit_audit, s.doc.at("audit"));
      }
      return finish(s, f, out);
    }
    ReportOptions options{.group = group_options(f, true), .curve = curve_options(f), .timings = f.timings};
    Section s;
    if (f.grid) {
      if (f.q != 0 || f.k != 0) throw UsageError("--grid takes no -q or -k");
      s = grid_report(GridOptions{.deep = f.deep, .base = options});
    } else {
      if (f.deep) throw UsageError("--deep requires --grid");
      require_qk(f);
      s = full_report(f.q, f.k, options);
    }
    if (!f.emit.empty()) write_json(f.emit, s.doc);
    return finish(s, f, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}

}  // namespace curvegroup::report
