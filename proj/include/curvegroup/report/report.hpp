#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvegroup/curvelab/audit.hpp"
#include "curvegroup/cyclo/cyc_number.hpp"
#include "curvegroup/dihedralrep/representation.hpp"
#include "curvegroup/enumeration/coset_enumeration.hpp"
#include "curvegroup/polycore/field.hpp"

namespace curvegroup::report {

using Json = nlohmann::ordered_json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

Json to_json(const cyclo::CycNumber& z);
Json to_json(const dihedralrep::Mat2& m);
Json to_json(const dihedralrep::ExtensionStructure& e);
Json to_json(const curvelab::CurveInstance& curve);
Json to_json(const curvelab::SingularityAudit& audit, std::optional<std::uint64_t> expected_points,
             std::optional<std::uint64_t> expected_tjurina);

/// Outcome of one stage: its JSON fragment, a human summary, and flags.
struct Section {
  Json doc = Json::object();
  std::vector<std::string> summary;
  bool pass = true;
  bool cap_exceeded = false;
  double seconds = 0;
};

struct GroupOptions {
  std::uint64_t max_cosets = enumeration::kDefaultCosetCap;
  enumeration::Strategy strategy = enumeration::Strategy::Felsch;
  bool abelianize = false;
};

struct RepOptions {
  std::uint64_t closure_cap = dihedralrep::kDefaultClosureCap;
  /// When set, receives the full element list (the matrices.json document).
  Json* elements = nullptr;
};

struct CurveOptions {
  std::uint64_t seed = 7;
  std::uint64_t prime = polycore::kDefaultPrime;
  bool audit = false;
  bool zariski = false;
};

Section group_section(std::int64_t q, std::int64_t k, const GroupOptions& options);
Section rep_section(std::int64_t q, std::int64_t k, const RepOptions& options);
Section curve_section(std::int64_t q, std::int64_t k, const CurveOptions& options);

struct ReportOptions {
  GroupOptions group{.abelianize = true};
  CurveOptions curve;
  /// Adds per-stage wall times to the document, which then differs run to run.
  bool timings = false;
};

/// group + rep + curve for one (q, k), with the overall pass flag.
Section full_report(std::int64_t q, std::int64_t k, const ReportOptions& options);

struct GridOptions {
  std::vector<std::int64_t> qs{3, 5, 7, 9};
  std::vector<std::int64_t> ks{1, 2, 3};
  bool deep = false;
  ReportOptions base;
  /// Worker count; 0 means CURVEGROUP_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// Reports for every grid point, run on a worker pool and merged in (q, k)
/// order. Without `deep`, curves are audited only for q <= 5, k = 1.
Section grid_report(const GridOptions& options);

/// Worker count from CURVEGROUP_THREADS, else the hardware concurrency.
unsigned worker_count();

/// Exit code implied by a section: cap first, then verification failure.
int exit_code(const Section& s);

}  // namespace curvegroup::report
