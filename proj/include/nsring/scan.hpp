#ifndef NSRING_SCAN_HPP_
#define NSRING_SCAN_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nsring/degrees.hpp"

namespace nsring {

enum class ScanFormat { kCsv, kJsonl };

// Named optional checks. The base degree invariants (Gorenstein equivalences,
// cdeg >= type - 1, rho != 1, the multiplicity-3 and almost-Gorenstein rho
// facts) are always evaluated.
inline const std::vector<std::string> kScanChecks = {
    "conjecture", "tdeg_eq_bideg", "tcdeg", "ngens", "sally", "roots"};

struct ScanConfig {
  Int max_genus = 10;
  std::vector<std::string> checks = {"conjecture", "tdeg_eq_bideg", "tcdeg", "ngens",
                                     "sally"};  // roots is off by default
  std::string out_path;
  ScanFormat format = ScanFormat::kCsv;
  bool strict = false;
  Int roots_guard = 16;
};

struct ScanRecord {
  std::vector<Int> generators;
  Int genus;
  Int frobenius;
  Int multiplicity;
  Int type;
  Int cdeg;
  Int bideg;
  Int tdeg;
  Int rho;
  Int e1;
  Int s0;
  bool gorenstein;
  bool almost_gorenstein;
  bool nearly_gorenstein;
  bool goto_ring;
  bool conjecture_ok;
  std::vector<std::string> check_failures;
};

// One row of the scan; check_failures lists every violated identity among the
// enabled checks (failures are data, not exceptions).
ScanRecord scan_record(NumericalSemigroup const& h, std::vector<std::string> const& checks,
                       Int roots_guard = 16);

inline constexpr char kCsvHeader[] =
    "generators,genus,frobenius,multiplicity,type,cdeg,bideg,tdeg,rho,e1,s0,"
    "gorenstein,almost_gorenstein,nearly_gorenstein,goto,conjecture_ok,check_failures";

std::string to_csv_row(ScanRecord const& r);
std::string to_jsonl_row(ScanRecord const& r);

struct ScanSummary {
  Int rows_written = 0;
  std::map<std::string, Int> violations_by_check;
  std::vector<std::string> conjecture_counterexamples;  // generator strings

  // 0 normally; 2 under strict with an identity violation; 3 under strict
  // with a conjecture counterexample.
  int exit_code(bool strict) const;
};

// Writes one record per semigroup of genus <= max_genus in deterministic
// order and prints a summary to the given stream. Throws IoError.
ScanSummary run_scan(ScanConfig const& config, std::ostream& log);

}  // namespace nsring

#endif  // NSRING_SCAN_HPP_
