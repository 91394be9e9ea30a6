// Command line calculator for canonical-degree invariants of numerical
// semigroup rings.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsring/derived.hpp"
#include "nsring/enumerate.hpp"
#include "nsring/herzog.hpp"
#include "nsring/roots.hpp"
#include "nsring/scan.hpp"

namespace {

using nsring::Int;
using nlohmann::json;

std::vector<Int> parse_int_list(std::string const& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(std::stoll(item));
    }
  }
  return out;
}

json ideal_json(nsring::RelativeIdeal const& e) {
  return json{{"sporadic", e.small_values()}, {"conductor", e.conductor()}};
}

json report_json(nsring::NumericalSemigroup const& h, nsring::DegreeReport const& r) {
  return json{{"generators", h.generators()},
              {"genus", h.genus()},
              {"frobenius", h.frobenius()},
              {"multiplicity", h.multiplicity()},
              {"type", r.type},
              {"cdeg", r.cdeg},
              {"bideg", r.bideg},
              {"tdeg", r.tdeg},
              {"rho", r.rho},
              {"e1", r.e1},
              {"s0", r.s0},
              {"e0_of_C", r.e0_of_c},
              {"gorenstein", r.flags.gorenstein},
              {"almost_gorenstein", r.flags.almost_gorenstein},
              {"nearly_gorenstein", r.flags.nearly_gorenstein},
              {"goto", r.flags.goto_ring},
              {"conjecture_ok", r.conjecture_ok}};
}

void print_report_table(nsring::NumericalSemigroup const& h, nsring::DegreeReport const& r) {
  std::cout << "H = " << h.to_string() << "  (genus " << h.genus() << ", F = "
            << h.frobenius() << ", e0 = " << h.multiplicity() << ", type " << r.type
            << ")\n";
  std::cout << "  cdeg  = " << r.cdeg << "\n  bideg = " << r.bideg
            << "\n  tdeg  = " << r.tdeg << "\n  rho   = " << r.rho << "\n  e1    = " << r.e1
            << "\n  s0    = " << r.s0 << "\n  e0(C) = " << r.e0_of_c << "\n";
  std::cout << "  gorenstein=" << r.flags.gorenstein
            << " almost_gorenstein=" << r.flags.almost_gorenstein
            << " nearly_gorenstein=" << r.flags.nearly_gorenstein
            << " goto=" << r.flags.goto_ring << " dvr=" << r.flags.dvr << "\n";
  std::cout << "  cdeg >= bideg: " << (r.conjecture_ok ? "yes" : "NO (counterexample)")
            << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"invariants of numerical semigroup rings"};
  app.require_subcommand(1);

  std::string gens_arg;
  std::string ideal_arg;
  std::string op_arg;
  bool as_json = false;
  Int guard = nsring::kDefaultRootGuard;
  Int ha = 0, hb = 0, hc = 0;

  auto* info = app.add_subcommand("info", "semigroup data: gaps, Frobenius, type");
  info->add_option("gens", gens_arg, "generators, comma separated")->required();
  info->add_flag("--json", as_json);

  auto* ideal = app.add_subcommand("ideal", "relative ideal arithmetic");
  ideal->add_option("gens", gens_arg, "generators of H, comma separated")->required();
  std::string ideal_gens;
  ideal->add_option("--ideal", ideal_gens, "ideal generators (value shifts)")->required();
  ideal
      ->add_option("--op", op_arg,
                   "bidual | trace | colon:<w1,...> | power:<n> | mingens | normalize")
      ->required();
  ideal->add_flag("--json", as_json);

  auto* degrees = app.add_subcommand("degrees", "the full degree report of one ring");
  degrees->add_option("gens", gens_arg)->required();
  degrees->add_flag("--json", as_json);

  auto* roots = app.add_subcommand("roots", "rootset of the canonical ideal");
  roots->add_option("gens", gens_arg)->required();
  roots->add_option("--guard", guard, "genus guard for the 2^genus search");
  roots->add_flag("--json", as_json);

  auto* endo = app.add_subcommand("endo", "the ring A = m:m and its identities");
  endo->add_option("gens", gens_arg)->required();
  endo->add_flag("--json", as_json);

  auto* herzog = app.add_subcommand("herzog", "Herzog matrix and closed-form degrees");
  herzog->add_option("a", ha)->required();
  herzog->add_option("b", hb)->required();
  herzog->add_option("c", hc)->required();
  herzog->add_flag("--json", as_json);

  auto* scan = app.add_subcommand("scan", "enumerate semigroups and emit degree reports");
  nsring::ScanConfig config;
  std::string checks_arg = "conjecture,tdeg_eq_bideg,tcdeg,ngens,sally";
  std::string format_arg = "csv";
  scan->add_option("--max-genus", config.max_genus, "enumerate genus 0..G");
  scan->add_option("--checks", checks_arg, "comma list from: conjecture, tdeg_eq_bideg, "
                                           "tcdeg, ngens, sally, roots");
  scan->add_option("--format", format_arg)->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_option("--out", config.out_path, "output file")->required();
  scan->add_flag("--strict", config.strict);
  scan->add_option("--guard", config.roots_guard, "genus guard for the roots check");

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) {
    auto const h = nsring::NumericalSemigroup::from_generators(parse_int_list(gens_arg));
    if (as_json) {
      std::cout << json{{"generators", h.generators()},
                        {"F", h.frobenius()},
                        {"c", h.conductor()},
                        {"genus", h.genus()},
                        {"gaps", h.gaps()},
                        {"PF", h.pseudo_frobenius()},
                        {"type", h.type()},
                        {"multiplicity", h.multiplicity()},
                        {"symmetric", h.is_symmetric()}}
                       .dump()
                << "\n";
      return 0;
    }
    std::cout << "H = " << h.to_string() << "\n";
    std::cout << "frobenius:    " << h.frobenius() << "\n";
    std::cout << "conductor:    " << h.conductor() << "\n";
    std::cout << "genus:        " << h.genus() << "\n";
    std::cout << "gaps:        ";
    for (Int z : h.gaps()) {
      std::cout << ' ' << z;
    }
    std::cout << "\npseudo-frobenius:";
    for (Int z : h.pseudo_frobenius()) {
      std::cout << ' ' << z;
    }
    std::cout << "\ntype:         " << h.type() << "\n";
    std::cout << "multiplicity: " << h.multiplicity() << "\n";
    std::cout << "symmetric:    " << (h.is_symmetric() ? "yes" : "no") << "\n";
    return 0;
  }

  if (ideal->parsed()) {
    auto const h = nsring::NumericalSemigroup::from_generators(parse_int_list(gens_arg));
    auto const e = nsring::RelativeIdeal::from_generators(h, parse_int_list(ideal_gens));
    if (op_arg == "mingens") {
      auto const gens = nsring::minimal_generators(e);
      if (as_json) {
        std::cout << json{{"op", "mingens"}, {"generators", gens}, {"nu", nsring::nu(e)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << '{';
        for (size_t i = 0; i < gens.size(); ++i) {
          std::cout << (i ? "," : "") << gens[i];
        }
        std::cout << "}  (nu = " << gens.size() << ")\n";
      }
      return 0;
    }
    nsring::RelativeIdeal result = e;
    if (op_arg == "bidual") {
      result = nsring::bidual(e);
    } else if (op_arg == "trace") {
      result = nsring::trace(e);
    } else if (op_arg == "normalize") {
      result = nsring::normalize(e);
    } else if (op_arg.rfind("colon:", 0) == 0) {
      auto const f =
          nsring::RelativeIdeal::from_generators(h, parse_int_list(op_arg.substr(6)));
      result = nsring::colon(e, f);
    } else if (op_arg.rfind("power:", 0) == 0) {
      result = nsring::power(e, std::stoll(op_arg.substr(6)));
    } else {
      throw CLI::ValidationError("--op", "unknown operation: " + op_arg);
    }
    if (as_json) {
      json j = ideal_json(result);
      j["op"] = op_arg;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << result.to_string() << "\n";
    }
    return 0;
  }

  if (degrees->parsed()) {
    auto const h = nsring::NumericalSemigroup::from_generators(parse_int_list(gens_arg));
    auto const r = nsring::degree_report(h);
    if (as_json) {
      std::cout << report_json(h, r).dump() << "\n";
    } else {
      print_report_table(h, r);
    }
    return 0;
  }

  if (roots->parsed()) {
    auto const h = nsring::NumericalSemigroup::from_generators(parse_int_list(gens_arg));
    auto const witnesses = nsring::rootset(h, guard);
    if (as_json) {
      json arr = json::array();
      for (auto const& w : witnesses) {
        json j = ideal_json(w.witness);
        j["tau"] = w.exponent;
        j["red"] = w.red_witness;
        arr.push_back(j);
      }
      std::cout << json{{"rootset", arr}}.dump() << "\n";
    } else {
      for (auto const& w : witnesses) {
        std::cout << "tau = " << w.exponent << "  witness " << w.witness.to_string()
                  << "  red(L) = " << w.red_witness << "\n";
      }
    }
    return 0;
  }

  if (endo->parsed()) {
    auto const h = nsring::NumericalSemigroup::from_generators(parse_int_list(gens_arg));
    auto const endo_h = nsring::endo_semigroup(h);
    auto const rep = nsring::degree_report(endo_h);
    auto const identity = nsring::tcdeg_identity(h);
    auto const checks = nsring::endo_checks(h);
    if (as_json) {
      json j = report_json(endo_h, rep);
      std::cout << json{{"endo", j},
                        {"tcdeg", {{"lhs", identity.lhs},
                                   {"rhs", identity.rhs},
                                   {"ok", identity.ok}}},
                        {"nu_A", checks.nu_a},
                        {"nu_ok", checks.nu_ok},
                        {"canonical_of_endo_ok", checks.canonical_of_endo_ok},
                        {"red_D", checks.red_d}}
                       .dump()
                << "\n";
    } else {
      std::cout << "A = m:m has semigroup " << endo_h.to_string() << "\n";
      print_report_table(endo_h, rep);
      std::cout << "tcdeg identity: cdeg(A) = " << identity.lhs << " vs cdeg(R)+e0-2r = "
                << identity.rhs << (identity.ok ? "  (ok)" : "  (VIOLATED)") << "\n";
      std::cout << "nu(A) = " << checks.nu_a << (checks.nu_ok ? " = r+1" : "  (exception)")
                << "\n";
      std::cout << "mC is the canonical class of A: "
                << (checks.canonical_of_endo_ok ? "yes" : "NO") << "\n";
      std::cout << "red of canonical class of A: " << checks.red_d << "\n";
    }
    return 0;
  }

  if (herzog->parsed()) {
    auto const r = nsring::closed_form_degrees(ha, hb, hc);
    auto const& e = r.data.primary();
    if (as_json) {
      std::cout << json{{"generators", {r.data.a, r.data.b, r.data.c}},
                        {"exponents",
                         {{"a1", e.a1},
                          {"a2", e.a2},
                          {"b1", e.b1},
                          {"b2", e.b2},
                          {"c1", e.c1},
                          {"c2", e.c2}}},
                        {"multiple_solutions", r.data.multiple_solutions},
                        {"cdeg_formula", r.cdeg_formula},
                        {"cdeg_engine", r.cdeg_engine},
                        {"cdeg_match", r.cdeg_match},
                        {"bideg_formula", r.bideg_formula},
                        {"bideg_engine", r.bideg_engine},
                        {"bideg_match", r.bideg_match}}
                       .dump()
                << "\n";
    } else {
      std::cout << "Herzog exponents of <" << r.data.a << ',' << r.data.b << ',' << r.data.c
                << ">: a1=" << e.a1 << " a2=" << e.a2 << " b1=" << e.b1 << " b2=" << e.b2
                << " c1=" << e.c1 << " c2=" << e.c2
                << (r.data.multiple_solutions ? "  (multiple solutions)" : "") << "\n";
      std::cout << "cdeg:  formula a2*b2*c2 = " << r.cdeg_formula << ", engine "
                << r.cdeg_engine << (r.cdeg_match ? "  (match)" : "  (MISMATCH)") << "\n";
      std::cout << "bideg: formula a1*b2*c2 = " << r.bideg_formula << ", engine "
                << r.bideg_engine << (r.bideg_match ? "  (match)" : "  (MISMATCH)") << "\n";
    }
    return 0;
  }

  if (scan->parsed()) {
    config.checks = [&checks_arg] {
      std::vector<std::string> out;
      std::stringstream ss(checks_arg);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }();
    for (std::string const& name : config.checks) {
      if (std::find(nsring::kScanChecks.begin(), nsring::kScanChecks.end(), name) ==
          nsring::kScanChecks.end()) {
        throw CLI::ValidationError("--checks", "unknown check: " + name);
      }
    }
    config.format = format_arg == "jsonl" ? nsring::ScanFormat::kJsonl
                                          : nsring::ScanFormat::kCsv;
    auto const summary = nsring::run_scan(config, std::cout);
    return summary.exit_code(config.strict);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (nsring::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
