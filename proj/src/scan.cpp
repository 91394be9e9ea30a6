#include "nsring/scan.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "nsring/derived.hpp"
#include "nsring/enumerate.hpp"
#include "nsring/roots.hpp"

namespace nsring {

namespace {

bool enabled(std::vector<std::string> const& checks, std::string const& name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end();
}

std::string join(std::vector<Int> const& v, char sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      os << sep;
    }
    os << v[i];
  }
  return os.str();
}

}  // namespace

ScanRecord scan_record(NumericalSemigroup const& h, std::vector<std::string> const& checks,
                       Int roots_guard) {
  DegreeReport const rep = degree_report(h);
  ScanRecord r{};
  r.generators = h.generators();
  r.genus = h.genus();
  r.frobenius = h.frobenius();
  r.multiplicity = h.multiplicity();
  r.type = rep.type;
  r.cdeg = rep.cdeg;
  r.bideg = rep.bideg;
  r.tdeg = rep.tdeg;
  r.rho = rep.rho;
  r.e1 = rep.e1;
  r.s0 = rep.s0;
  r.gorenstein = rep.flags.gorenstein;
  r.almost_gorenstein = rep.flags.almost_gorenstein;
  r.nearly_gorenstein = rep.flags.nearly_gorenstein;
  r.goto_ring = rep.flags.goto_ring;
  r.conjecture_ok = rep.cdeg >= rep.bideg;

  auto fail = [&r](std::string const& name) { r.check_failures.push_back(name); };

  // Base invariants, always evaluated.
  bool const deg_zero_iff_gor =
      (r.gorenstein == (r.cdeg == 0)) && (r.gorenstein == (r.bideg == 0)) &&
      (r.gorenstein == (r.tdeg == 0)) && (r.gorenstein == (r.rho == 0));
  if (!deg_zero_iff_gor) {
    fail("gorenstein_iff_zero_degrees");
  }
  if (r.cdeg < r.type - 1) {
    fail("cdeg_ge_type_minus_1");
  }
  if (r.rho == 1) {
    fail("rho_ne_1");
  }
  if (r.multiplicity == 3 && !r.gorenstein && r.rho != 2) {
    fail("mult3_rho2");
  }
  if (r.almost_gorenstein && !r.gorenstein && (r.bideg != 1 || r.rho != 2)) {
    fail("almost_gorenstein_shape");
  }
  if (r.s0 < 0) {
    fail("s0_nonnegative");
  }

  if (enabled(checks, "tdeg_eq_bideg") && r.tdeg != r.bideg) {
    fail("tdeg_eq_bideg");
  }
  if (enabled(checks, "tcdeg") && !tcdeg_identity(h).ok) {
    fail("tcdeg");
  }
  if (enabled(checks, "ngens") && !endo_checks(h).nu_ok) {
    fail("ngens");
  }
  if (enabled(checks, "sally") && r.type == 2) {
    RelativeIdeal const k = canonical_ideal(h);
    Int const step0 = length_between(k, RelativeIdeal::unit(h));
    Int const step1 = length_between(multiply(k, k), k);
    bool ok = step1 == step0;
    ok = ok && r.e1 <= r.rho * r.cdeg;
    ok = ok && ((r.rho == 2) == (r.e1 == 2 * r.cdeg));
    if (!ok) {
      fail("sally");
    }
  }
  if (enabled(checks, "roots") && !r.gorenstein && h.genus() <= roots_guard) {
    bool ok = true;
    try {
      std::vector<RootWitness> const roots = rootset(h, roots_guard);
      ok = static_cast<Int>(roots.size()) < r.type;
      // No proper canonical power is canonical.
      RelativeIdeal const k = canonical_ideal(h);
      RelativeIdeal pw = k;
      for (Int n = 2; n <= 6 && ok; ++n) {
        pw = multiply(pw, k);
        ok = !is_isomorphic(pw, k);
      }
    } catch (InternalInconsistency const&) {
      ok = false;
    }
    if (!ok) {
      fail("roots");
    }
  }
  return r;
}

std::string to_csv_row(ScanRecord const& r) {
  std::ostringstream os;
  os << join(r.generators, '|') << ',' << r.genus << ',' << r.frobenius << ','
     << r.multiplicity << ',' << r.type << ',' << r.cdeg << ',' << r.bideg << ',' << r.tdeg
     << ',' << r.rho << ',' << r.e1 << ',' << r.s0 << ',' << int{r.gorenstein} << ','
     << int{r.almost_gorenstein} << ',' << int{r.nearly_gorenstein} << ','
     << int{r.goto_ring} << ',' << int{r.conjecture_ok} << ',';
  for (size_t i = 0; i < r.check_failures.size(); ++i) {
    if (i > 0) {
      os << ';';
    }
    os << r.check_failures[i];
  }
  return os.str();
}

std::string to_jsonl_row(ScanRecord const& r) {
  std::ostringstream os;
  os << "{\"generators\":[" << join(r.generators, ',') << "],\"genus\":" << r.genus
     << ",\"frobenius\":" << r.frobenius << ",\"multiplicity\":" << r.multiplicity
     << ",\"type\":" << r.type << ",\"cdeg\":" << r.cdeg << ",\"bideg\":" << r.bideg
     << ",\"tdeg\":" << r.tdeg << ",\"rho\":" << r.rho << ",\"e1\":" << r.e1
     << ",\"s0\":" << r.s0 << ",\"gorenstein\":" << (r.gorenstein ? "true" : "false")
     << ",\"almost_gorenstein\":" << (r.almost_gorenstein ? "true" : "false")
     << ",\"nearly_gorenstein\":" << (r.nearly_gorenstein ? "true" : "false")
     << ",\"goto\":" << (r.goto_ring ? "true" : "false")
     << ",\"conjecture_ok\":" << (r.conjecture_ok ? "true" : "false")
     << ",\"check_failures\":[";
  for (size_t i = 0; i < r.check_failures.size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << '"' << r.check_failures[i] << '"';
  }
  os << "]}";
  return os.str();
}

int ScanSummary::exit_code(bool strict) const {
  if (!strict) {
    return 0;
  }
  if (!violations_by_check.empty()) {
    return 2;
  }
  if (!conjecture_counterexamples.empty()) {
    return 3;
  }
  return 0;
}

ScanSummary run_scan(ScanConfig const& config, std::ostream& log) {
  std::ofstream out(config.out_path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open output path: " + config.out_path);
  }
  if (config.format == ScanFormat::kCsv) {
    out << kCsvHeader << '\n';
  }
  ScanSummary summary;
  bool const monitor_conjecture = enabled(config.checks, "conjecture");
  for (NumericalSemigroup const& h : enumerate_semigroups(config.max_genus)) {
    ScanRecord const r = scan_record(h, config.checks, config.roots_guard);
    out << (config.format == ScanFormat::kCsv ? to_csv_row(r) : to_jsonl_row(r)) << '\n';
    ++summary.rows_written;
    for (std::string const& name : r.check_failures) {
      ++summary.violations_by_check[name];
    }
    if (monitor_conjecture && !r.conjecture_ok) {
      summary.conjecture_counterexamples.push_back(h.to_string());
    }
  }
  out.flush();
  if (!out) {
    throw IoError("write failed: " + config.out_path);
  }
  log << "rows written: " << summary.rows_written << '\n';
  if (summary.violations_by_check.empty()) {
    log << "identity violations: none\n";
  } else {
    log << "identity violations:\n";
    for (auto const& [name, count] : summary.violations_by_check) {
      log << "  " << name << ": " << count << '\n';
    }
  }
  if (monitor_conjecture) {
    log << "conjecture counterexamples (cdeg < bideg): "
        << summary.conjecture_counterexamples.size() << '\n';
    for (std::string const& s : summary.conjecture_counterexamples) {
      log << "  " << s << '\n';
    }
  }
  return summary;
}

}  // namespace nsring
