#include "curvegroup/report/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "curvegroup/enumeration/smith.hpp"
#include "curvegroup/polycore/poly_text.hpp"

namespace curvegroup::report {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t expected_order(std::int64_t q, std::int64_t k) { return static_cast<std::uint64_t>(2 * q * (q - 1) * k); }

std::string group_label(std::int64_t q, std::int64_t k) {
  return "H(" + std::to_string(q) + ";" + std::to_string(k) + ")";
}

Json optional_json(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string yes_no(bool b) { return b ? "ok" : "FAIL"; }

}  // namespace

Json to_json(const cyclo::CycNumber& z) {
  Json terms = Json::array();
  for (const auto& [coeff, power] : z.terms()) terms.push_back(Json::array({coeff.get_str(), power}));
  return Json{{"conductor", z.conductor()}, {"terms", std::move(terms)}};
}

Json to_json(const dihedralrep::Mat2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const dihedralrep::ExtensionStructure& e) {
  return Json{{"scalar_order", e.scalar_order},
              {"pgl_order", e.pgl_order},
              {"dihedral", e.dihedral},
              {"central", e.central},
              {"c_order", e.c_order},
              {"scalars_generated_by_c", e.scalars_generated_by_c}};
}

Json to_json(const curvelab::CurveInstance& curve) {
  const auto& names = polycore::xi_names();
  Json params = nullptr;
  if (curve.params) {
    const auto& p = *curve.params;
    params = Json{{"p", p.p()}, {"q", p.q()}, {"m", p.m()}, {"k", p.k()}, {"l", p.l()}};
  }
  Json forms = Json::object();
  static const char* const kFormNames[] = {"S", "T", "X", "Y"};
  for (std::size_t i = 0; i < curve.forms.size() && i < 4; ++i) {
    forms[kFormNames[i]] = polycore::to_text(curve.forms[i], names);
  }
  return Json{{"name", curve.name},
              {"params", std::move(params)},
              {"seed", curve.seed},
              {"base_seed", curve.base_seed},
              {"resample", curve.resample},
              {"forms", std::move(forms)},
              {"equation", polycore::to_text(curve.equation, names)},
              {"degree", curve.degree}};
}

Json to_json(const curvelab::SingularityAudit& audit, std::optional<std::uint64_t> expected_points,
             std::optional<std::uint64_t> expected_tjurina) {
  Json chart = Json::array();
  for (const auto& row : audit.chart) chart.push_back(Json::array({row[0], row[1], row[2]}));
  const auto& e = audit.eliminants;
  return Json{{"prime", audit.prime},
              {"chart", std::move(chart)},
              {"chart_seed", audit.chart_seed},
              {"chart_attempts", audit.chart_attempts},
              {"N", audit.points},
              {"T", optional_json(audit.tjurina)},
              {"expected_N", optional_json(expected_points)},
              {"expected_T", optional_json(expected_tjurina)},
              {"charpoly_points", audit.charpoly_points},
              {"euler_consistent", audit.euler_consistent},
              {"eliminants",
               {{"res_partials_degree", e.res_partials_degree},
                {"res_curve_degree", e.res_curve_degree},
                {"res_partials_squarefree", e.res_partials_squarefree},
                {"res_curve_squarefree", e.res_curve_squarefree},
                {"gcd_degree", e.gcd_degree}}},
              {"pass", audit.matches(expected_points, expected_tjurina)}};
}

Section group_section(std::int64_t q, std::int64_t k, const GroupOptions& options) {
  const auto start = Clock::now();
  Section s;
  const auto pres = fpcore::presentation_H(q, k);
  const auto result = enumeration::todd_coxeter(pres, options.max_cosets, options.strategy);
  const std::uint64_t expected = expected_order(q, k);
  s.doc["group"] = group_label(q, k);
  s.doc["order"] = optional_json(result.order);
  s.doc["cosets_defined"] = result.cosets_defined;
  s.doc["strategy"] = std::string(enumeration::to_string(result.strategy));
  s.doc["expected_order"] = expected;
  s.cap_exceeded = result.cap_exceeded();
  s.pass = result.order == expected;
  std::ostringstream line;
  line << "group " << group_label(q, k) << ": order ";
  if (result.order) {
    line << *result.order;
  } else {
    line << "unknown (cap " << options.max_cosets << " exceeded)";
  }
  line << ", expected " << expected << ", " << result.cosets_defined << " cosets defined ("
       << enumeration::to_string(result.strategy) << ")";
  s.summary.push_back(line.str());

  if (options.abelianize) {
    const auto ab = enumeration::abelianization(pres);
    Json torsion = Json::array();
    for (const auto& t : ab.torsion) torsion.push_back(t.get_str());
    const std::string want = "Z/" + std::to_string(2 * (q - 1) * k);
    const bool ok = ab.to_string() == want;
    s.doc["abelianization"] = Json{{"torsion", std::move(torsion)},
                                   {"free_rank", ab.free_rank},
                                   {"text", ab.to_string()},
                                   {"expected", want},
                                   {"pass", ok}};
    s.pass = s.pass && ok;
    s.summary.push_back("abelianization " + ab.to_string() + ", expected " + want + " " + yes_no(ok));
  }
  s.doc["pass"] = s.pass;
  s.seconds = seconds_since(start);
  return s;
}

Section rep_section(std::int64_t q, std::int64_t k, const RepOptions& options) {
  const auto start = Clock::now();
  Section s;
  const auto rep = dihedralrep::build_rep(q, k);
  const auto relations = dihedralrep::verify_relations(rep.A, rep.B, q, k);
  bool relators_ok = true;
  const auto pres = fpcore::presentation_H(q, k);
  for (const auto& relator : pres.relators()) {
    if (!dihedralrep::rep_eval(relator, rep).is_identity()) relators_ok = false;
  }
  const std::uint64_t expected = expected_order(q, k);
  s.doc["conductor"] = rep.conductor;
  s.doc["A"] = to_json(rep.A);
  s.doc["B"] = to_json(rep.B);
  s.doc["relations"] = Json{{"alpha_squared", relations.alpha_squared},
                            {"beta_power", relations.beta_power},
                            {"scalar", relations.scalar},
                            {"relators_map_to_identity", relators_ok}};
  s.pass = relations.all() && relators_ok;
  s.summary.push_back("rep conductor " + std::to_string(rep.conductor) + ": relations " +
                      yes_no(relations.all() && relators_ok));

  const auto group = dihedralrep::closure(rep, options.closure_cap);
  if (!group) {
    s.cap_exceeded = true;
    s.pass = false;
    s.doc["closure_order"] = nullptr;
    s.doc["expected_order"] = expected;
    s.summary.push_back("closure: cap " + std::to_string(options.closure_cap) + " exceeded");
    s.doc["pass"] = false;
    s.seconds = seconds_since(start);
    return s;
  }
  const auto ext = dihedralrep::extension_structure(*group, q, k);
  const auto want_scalars = static_cast<std::uint64_t>(k * (q - 1));
  const auto want_pgl = static_cast<std::uint64_t>(2 * q);
  const bool order_ok = group->order() == expected;
  const bool ext_ok = ext.scalar_order == want_scalars && ext.pgl_order == want_pgl && ext.dihedral && ext.central &&
                      ext.scalars_generated_by_c;
  s.doc["closure_order"] = group->order();
  s.doc["expected_order"] = expected;
  Json extension = to_json(ext);
  extension["expected_scalar_order"] = want_scalars;
  extension["expected_pgl_order"] = want_pgl;
  extension["pass"] = ext_ok;
  s.doc["extension"] = std::move(extension);
  s.pass = s.pass && order_ok && ext_ok;
  s.doc["pass"] = s.pass;
  s.summary.push_back("closure order " + std::to_string(group->order()) + ", expected " + std::to_string(expected) +
                      " " + yes_no(order_ok));
  s.summary.push_back("scalars " + std::to_string(ext.scalar_order) + ", pgl " + std::to_string(ext.pgl_order) +
                      (ext.dihedral ? " dihedral" : " not dihedral") + (ext.central ? ", central " : ", not central ") +
                      yes_no(ext_ok));

  if (options.elements) {
    Json elements = Json::array();
    for (std::size_t i = 0; i < group->order(); ++i) {
      elements.push_back(Json{{"word", group->witnesses[i].to_string()}, {"matrix", to_json(group->elements[i])}});
    }
    *options.elements = Json{{"q", q},
                             {"k", k},
                             {"conductor", rep.conductor},
                             {"generators", Json{{"a", to_json(rep.A)}, {"b", to_json(rep.B)}}},
                             {"order", group->order()},
                             {"elements", std::move(elements)},
                             {"extension", s.doc["extension"]}};
  }
  s.seconds = seconds_since(start);
  return s;
}

Section curve_section(std::int64_t q, std::int64_t k, const CurveOptions& options) {
  const auto start = Clock::now();
  Section s;
  curvelab::CurveInstance curve;
  std::optional<curvelab::SingularityAudit> audit;
  if (options.zariski) {
    curve = curvelab::zariski_quartic();
    if (options.audit) audit = curvelab::singularity_audit(curve, options.prime, options.seed);
  } else if (options.audit) {
    auto audited = curvelab::build_and_audit(q, k, options.seed, options.prime, options.seed);
    curve = std::move(audited.curve);
    audit = audited.audit;
  } else {
    curve = curvelab::curve_build(q, k, options.seed);
  }
  s.doc["curve"] = to_json(curve);
  s.summary.push_back("curve " + curve.name + ": degree " + std::to_string(curve.degree) + ", seed " +
                      std::to_string(curve.seed));

  const std::int64_t delta = options.zariski ? 1 : (q - 1) / 2;
  const std::int64_t predicted_points =
      curve.expected_points ? static_cast<std::int64_t>(*curve.expected_points) : 0;
  Json genus = Json::object();
  bool genus_ok = true;
  if (!options.zariski) {
    const std::int64_t formula = curvelab::genus_theorem(q, k);
    const std::int64_t oracle = curvelab::genus_degree_oracle(curve.degree, predicted_points, delta);
    genus["genus_formula"] = formula;
    genus["genus_oracle"] = oracle;
    genus_ok = formula == oracle;
  } else {
    genus["genus_oracle"] = curvelab::genus_degree_oracle(curve.degree, predicted_points, delta);
  }
  if (audit) {
    const std::int64_t measured =
        curvelab::genus_degree_oracle(curve.degree, static_cast<std::int64_t>(audit->points), delta);
    genus["genus_measured"] = measured;
    if (genus.contains("genus_formula")) genus_ok = genus_ok && measured == genus["genus_formula"].get<std::int64_t>();
  }
  genus["pass"] = genus_ok;
  s.doc["genus"] = std::move(genus);
  s.pass = genus_ok;

  if (audit) {
    const bool ok = audit->matches(curve.expected_points, curve.expected_tjurina);
    s.doc["audit"] = to_json(*audit, curve.expected_points, curve.expected_tjurina);
    s.pass = s.pass && ok;
    std::ostringstream line;
    line << "audit mod " << audit->prime << ": N=" << audit->points << " T=";
    if (audit->tjurina) {
      line << *audit->tjurina;
    } else {
      line << "inf";
    }
    if (curve.expected_points) line << ", expected N=" << *curve.expected_points;
    if (curve.expected_tjurina) line << " T=" << *curve.expected_tjurina;
    line << " " << yes_no(ok);
    s.summary.push_back(line.str());
  }
  s.summary.push_back(std::string("genus ") + yes_no(genus_ok));
  s.doc["pass"] = s.pass;
  s.seconds = seconds_since(start);
  return s;
}

Section full_report(std::int64_t q, std::int64_t k, const ReportOptions& options) {
  Section s;
  const Section group = group_section(q, k, options.group);
  const Section rep = rep_section(q, k, RepOptions{});
  const Section curve = curve_section(q, k, options.curve);

  const bool orders_ok = group.doc["order"] == rep.doc["closure_order"] && group.doc["order"].is_number() &&
                         group.doc["order"] == group.doc["expected_order"];
  Json checks{{"tc_order", group.doc["order"] == group.doc["expected_order"]},
              {"closure_order", rep.doc["closure_order"] == rep.doc["expected_order"]},
              {"orders_agree", orders_ok},
              {"abelianization", group.doc.contains("abelianization") && group.doc["abelianization"]["pass"] == true},
              {"relations", rep.doc["relations"]["alpha_squared"] == true && rep.doc["relations"]["beta_power"] == true &&
                                rep.doc["relations"]["scalar"] == true &&
                                rep.doc["relations"]["relators_map_to_identity"] == true},
              {"extension", rep.doc.contains("extension") && rep.doc["extension"]["pass"] == true},
              {"genus", curve.doc["genus"]["pass"] == true}};
  if (curve.doc.contains("audit")) checks["audit"] = curve.doc["audit"]["pass"] == true;
  if (!options.group.abelianize) checks.erase("abelianization");

  s.pass = std::all_of(checks.begin(), checks.end(), [](const Json& v) { return v.get<bool>(); });
  s.cap_exceeded = group.cap_exceeded || rep.cap_exceeded;
  s.doc["params"] = Json{{"q", q}, {"k", k}, {"l", k}, {"p", 2}, {"m", 2}};
  s.doc["group"] = Json{{"tc_order", group.doc["order"]},
                        {"closure_order", rep.doc["closure_order"]},
                        {"expected_order", group.doc["expected_order"]},
                        {"enumeration", group.doc},
                        {"representation", rep.doc}};
  if (group.doc.contains("abelianization")) s.doc["group"]["abelianization"] = group.doc["abelianization"]["text"];
  if (rep.doc.contains("extension")) s.doc["group"]["extension"] = rep.doc["extension"];
  Json curve_doc{{"degree", curve.doc["curve"]["degree"]}};
  if (curve.doc.contains("audit")) {
    curve_doc["N"] = curve.doc["audit"]["N"];
    curve_doc["T"] = curve.doc["audit"]["T"];
  }
  for (const char* key : {"genus_formula", "genus_oracle", "genus_measured"}) {
    if (curve.doc["genus"].contains(key)) curve_doc[key] = curve.doc["genus"][key];
  }
  curve_doc["detail"] = curve.doc;
  s.doc["curve"] = std::move(curve_doc);
  s.doc["checks"] = std::move(checks);
  s.doc["pass"] = s.pass;
  if (options.timings) {
    s.doc["timing_seconds"] = Json{{"group", group.seconds}, {"rep", rep.seconds}, {"curve", curve.seconds}};
  }

  const std::string head = "report q=" + std::to_string(q) + " k=" + std::to_string(k) + ": ";
  s.summary.push_back(head + (s.pass ? "PASS" : "FAIL"));
  const std::pair<const char*, const Section*> stages[] = {{"group", &group}, {"rep", &rep}, {"curve", &curve}};
  for (const auto& [name, section] : stages) {
    for (const auto& line : section->summary) s.summary.push_back("  " + line);
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(3);
    t << "  " << name << " stage " << section->seconds << " s";
    s.summary.push_back(t.str());
  }
  s.seconds = group.seconds + rep.seconds + curve.seconds;
  return s;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CURVEGROUP_THREADS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min<unsigned long>(n, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Section grid_report(const GridOptions& options) {
  const auto start = Clock::now();
  struct Job {
    std::int64_t q, k;
    ReportOptions options;
  };
  std::vector<Job> jobs;
  for (const auto q : options.qs) {
    for (const auto k : options.ks) {
      ReportOptions o = options.base;
      o.curve.zariski = false;
      o.curve.audit = options.deep || (q <= 5 && k == 1);
      jobs.push_back({q, k, o});
    }
  }
  std::vector<Section> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = full_report(jobs[i].q, jobs[i].k, jobs[i].options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      std::min<unsigned>(options.threads ? options.threads : worker_count(), static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Section s;
  Json reports = Json::array();
  for (auto& r : results) {
    s.pass = s.pass && r.pass;
    s.cap_exceeded = s.cap_exceeded || r.cap_exceeded;
    reports.push_back(std::move(r.doc));
    for (auto& line : r.summary) s.summary.push_back(std::move(line));
  }
  s.doc["grid"] = Json{{"q", options.qs}, {"k", options.ks}, {"deep", options.deep}};
  s.doc["reports"] = std::move(reports);
  s.doc["pass"] = s.pass;
  s.seconds = seconds_since(start);
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(3);
  t << "grid " << (s.pass ? "PASS" : "FAIL") << " in " << s.seconds << " s on " << threads << " worker(s)";
  s.summary.push_back(t.str());
  return s;
}

int exit_code(const Section& s) {
  if (s.cap_exceeded) return kExitCapExceeded;
  return s.pass ? kExitPass : kExitVerificationFailure;
}

}  // namespace curvegroup::report
