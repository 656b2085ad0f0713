// Command-line front end: closed-form bounds, certified constructions,
// k-filling verification, ideal-polygon systole reports, and brute-force
// cross-checks.  JSON is the canonical output; --format table is
// presentation only.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fillset/bounds.hpp"
#include "fillset/constructions.hpp"
#include "fillset/homotopy.hpp"
#include "fillset/hyperbolic.hpp"
#include "fillset/json_io.hpp"
#include "fillset/oracle.hpp"

namespace {

using fillset::ordered_json;

struct OutputOptions {
  std::string format = "json";
  std::string out_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--out", opts.out_file, "write output to FILE instead of stdout");
}

void emit(const OutputOptions& opts, const ordered_json& json, const std::string& table) {
  std::string text = opts.format == "table" ? table : json.dump(2) + "\n";
  if (opts.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opts.out_file);
    if (!f) throw std::runtime_error("cannot open output file " + opts.out_file);
    f << text;
  }
}

std::string bound_table(const fillset::BoundReport& r) {
  std::ostringstream t;
  t << "formula      " << fillset::formula_name(r.formula) << "\n"
    << "surface      (" << r.sig.genus << "," << r.sig.punctures << ")\n";
  if (r.k) t << "k            " << r.k << "\n";
  if (r.m_cap) t << "m_cap        " << r.m_cap << "\n";
  t << "threshold    " << r.threshold.str() << "\n";
  if (r.formula == fillset::Formula::GenusWindow) {
    t << "window       [" << r.interval_lo << ", " << r.interval_hi << ")\n" << "candidates  ";
    for (auto c : r.candidates) t << " " << c;
    t << "\n";
  } else {
    t << "minimal N    " << r.minimal_n << "\n";
  }
  for (const auto& n : r.notes) t << "note         " << n << "\n";
  return t.str();
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

fillset::Arrangement parse_arrangement_payload(const std::string& text) {
  auto j = ordered_json::parse(text);
  if (j.contains("arrangement")) return fillset::arrangement_from_json(j.at("arrangement"));
  return fillset::arrangement_from_json(j);
}

int run_crosscheck(int max_n, std::ostream& log) {
  using namespace fillset;
  int mismatches = 0;
  for (int bound = 2; bound <= 8; ++bound) {
    auto result = torus_max_ksystem(1, bound);
    if (result.size != 3) {
      ++mismatches;
      log << "MISMATCH torus_max_ksystem(1," << bound << ") = " << result.size << ", expected 3\n";
    }
  }
  for (int g = 0; g <= 3; ++g)
    for (int n = 1; n <= max_n; ++n) {
      SurfaceSig sig{g, n};
      for (int k : {2, 4}) {
        if (euler_char(sig) >= 0) continue;
        auto closed = min_filling_even(sig, k);
        auto scanned = brute_min_n(Formula::EvenLower, {sig, k, 0});
        if (closed.minimal_n != scanned) {
          ++mismatches;
          log << "MISMATCH EVEN_LOWER g=" << g << " n=" << n << " k=" << k << "\n";
        }
      }
      for (int k : {1, 3}) {
        if (g < 1) continue;
        for (int m_cap : {3, 6, 12}) {
          auto closed = min_filling_odd(sig, k, m_cap);
          auto scanned = brute_min_n(Formula::OddLower, {sig, k, m_cap});
          if (closed.minimal_n != scanned) {
            ++mismatches;
            log << "MISMATCH ODD_LOWER g=" << g << " n=" << n << " k=" << k << " M=" << m_cap << "\n";
          }
        }
      }
      if (g == 1) {
        auto closed = torus_k1_bound(n);
        auto scanned = brute_min_n(Formula::TorusK1, {sig, 1, 0});
        if (closed.minimal_n != scanned) {
          ++mismatches;
          log << "MISMATCH TORUS_K1 n=" << n << "\n";
        }
      }
    }
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k : {1, 3})
        if (n % m == 0) {
          auto brute = brute_partition_max(n, m, k);
          auto cap = odd_cap_value(n, m, k);
          if (fillset::Rational(brute.value) != cap) {
            ++mismatches;
            log << "MISMATCH partition cap N=" << n << " M=" << m << " k=" << k << "\n";
          }
        }
  log << (mismatches == 0 ? "crosscheck: all grids agree\n"
                          : "crosscheck: " + std::to_string(mismatches) + " mismatches\n");
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filling sets of curves on punctured surfaces"};
  app.require_subcommand(1);

  // --- bounds -------------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound");
  int b_genus = 0, b_punctures = 0, b_k = 2, b_mcap = 3;
  double b_ell = 1.0;
  bool b_even = false, b_odd = false, b_torus_k1 = false, b_window = false, b_systoles = false;
  OutputOptions b_out;
  bounds_cmd->add_flag("--even", b_even, "minimal N with N(N-1) >= 2|chi|/k (k even)");
  bounds_cmd->add_flag("--odd", b_odd, "minimal N for odd k with family cap M");
  bounds_cmd->add_flag("--torus-k1", b_torus_k1, "minimal N for pairwise-once filling of the punctured torus");
  bounds_cmd->add_flag("--genus-window", b_window, "size window for the genus >= 2 construction");
  bounds_cmd->add_flag("--systoles", b_systoles, "lower bound on a filling set of systoles");
  bounds_cmd->add_option("-g,--genus", b_genus, "genus");
  bounds_cmd->add_option("-n,--punctures", b_punctures, "punctures");
  bounds_cmd->add_option("-k", b_k, "pairwise intersection bound");
  bounds_cmd->add_option("--m-cap", b_mcap, "cap on closed-surface k-system size (odd k)");
  bounds_cmd->add_option("--ell", b_ell, "systole length");
  add_output_flags(bounds_cmd, b_out);

  // --- construct ----------------------------------------------------------
  auto* construct_cmd = app.add_subcommand("construct", "emit a certified filling arrangement");
  std::string c_kind;
  int c_punctures = 4, c_k = 2, c_curves = 2;
  OutputOptions c_out;
  construct_cmd->add_option("kind", c_kind, "sphere | torus | torus-k1 | cylinder")
      ->required()
      ->check(CLI::IsMember({"sphere", "torus", "torus-k1", "cylinder", "genus-plan"}));
  construct_cmd->add_option("-n,--punctures", c_punctures, "punctures (or genus-plan punctures)");
  construct_cmd->add_option("-k", c_k, "pairwise intersection bound (even)");
  construct_cmd->add_option("--curves", c_curves, "curve count (cylinder only)");
  int c_genus = 2;
  construct_cmd->add_option("-g,--genus", c_genus, "genus (genus-plan only)");
  std::string c_dot;
  construct_cmd->add_option("--dot", c_dot, "also write the region-adjacency graph to FILE");
  add_output_flags(construct_cmd, c_out);

  // --- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "check the k-filling certificate of an arrangement");
  std::string v_file = "-";
  int v_k = 2;
  std::string v_dot;
  OutputOptions v_out;
  verify_cmd->add_option("file", v_file, "arrangement JSON (default: stdin)");
  verify_cmd->add_option("-k", v_k, "pairwise intersection bound");
  verify_cmd->add_option("--dot", v_dot, "also write the region-adjacency graph to FILE");
  add_output_flags(verify_cmd, v_out);

  // --- ngon -----------------------------------------------------------------
  auto* ngon_cmd = app.add_subcommand("ngon", "ideal n-gon systole geometry and arrangement");
  int g_n = 6;
  bool g_with_arrangement = false;
  OutputOptions g_out;
  ngon_cmd->add_option("-n", g_n, "number of ideal vertices (>= 5)")->required();
  ngon_cmd->add_flag("--arrangement", g_with_arrangement, "include the doubled-polygon arrangement");
  add_output_flags(ngon_cmd, g_out);

  // --- oracle -----------------------------------------------------------------
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force computations");
  std::string o_kind;
  int o_k = 1, o_bound = 5, o_n = 6, o_parts = 3;
  OutputOptions o_out;
  oracle_cmd->add_option("kind", o_kind, "ksystem | partition")->required()->check(CLI::IsMember({"ksystem", "partition"}));
  oracle_cmd->add_option("-k", o_k, "intersection bound / objective parameter");
  oracle_cmd->add_option("--bound,-B", o_bound, "slope window |p|,|q| <= B");
  oracle_cmd->add_option("-n", o_n, "partition total N");
  oracle_cmd->add_option("--parts,-M", o_parts, "partition parts M");
  add_output_flags(oracle_cmd, o_out);

  // --- crosscheck -----------------------------------------------------------
  auto* cross_cmd = app.add_subcommand("crosscheck", "oracle vs closed-form grid; nonzero exit on mismatch");
  int x_max_n = 100;
  cross_cmd->add_option("--max-n", x_max_n, "puncture grid upper end");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      using namespace fillset;
      SurfaceSig sig{b_genus, b_punctures};
      if (b_even + b_odd + b_torus_k1 + b_window + b_systoles != 1)
        throw std::invalid_argument("bounds: pick exactly one of --even --odd --torus-k1 --genus-window --systoles");
      if (b_systoles) {
        auto bound = systole_count_lower(sig, b_ell);
        std::ostringstream t;
        t << "bound  " << bound.value << "\nceil   " << bound.ceiling
          << (bound.degenerate ? "\n(degenerate numerator)" : "") << "\n";
        emit(b_out, systole_bound_to_json(sig, b_ell, bound), t.str());
        return 0;
      }
      BoundReport report = b_even        ? min_filling_even(sig, b_k)
                           : b_odd       ? min_filling_odd(sig, b_k, b_mcap)
                           : b_torus_k1  ? torus_k1_bound(b_punctures)
                                         : genus_window(sig, b_k);
      emit(b_out, bound_report_to_json(report), bound_table(report));
      return 0;
    }

    if (construct_cmd->parsed()) {
      using namespace fillset;
      if (c_kind == "genus-plan") {
        auto plan = plan_genus_fill(c_genus, c_punctures, c_k);
        std::ostringstream t;
        t << "x " << plan.x << "\ny " << plan.y << "\nwindow [" << plan.window_lo << ", "
          << plan.window_hi_proof << ") (stated: " << plan.window_hi_stated << ")\n";
        emit(c_out, genus_plan_to_json(plan), t.str());
        return 0;
      }
      Arrangement arr = c_kind == "sphere"     ? sphere_fill(c_punctures, c_k)
                        : c_kind == "torus"    ? torus_fill(c_punctures, c_k)
                        : c_kind == "torus-k1" ? torus_k1_fill(c_punctures)
                                               : sine_cylinder(c_curves, c_k);
      ordered_json payload;
      payload["arrangement"] = arrangement_to_json(arr);
      if (c_kind != "cylinder") {
        int used_k = c_kind == "torus-k1" ? 1 : c_k;
        payload["certificate"] = certificate_to_json(verify_k_filling(arr, used_k));
      }
      if (!c_dot.empty()) {
        std::ofstream f(c_dot);
        f << arrangement_to_dot(arr);
      }
      std::ostringstream t;
      t << c_kind << ": curves=" << arr.curves.size() << " crossings=" << arr.crossings.size()
        << " regions=" << arr.regions.size() << "\n";
      emit(c_out, payload, t.str());
      return 0;
    }

    if (verify_cmd->parsed()) {
      using namespace fillset;
      Arrangement arr = parse_arrangement_payload(read_input(v_file));
      auto validation = validate_arrangement(arr);
      ordered_json payload;
      payload["validation"] = validation;
      bool pass = false;
      if (validation.empty()) {
        auto cert = verify_k_filling(arr, v_k);
        payload["certificate"] = certificate_to_json(cert);
        pass = cert.pass;
      }
      if (!v_dot.empty()) {
        std::ofstream f(v_dot);
        f << arrangement_to_dot(arr);
      }
      std::ostringstream t;
      t << (validation.empty() ? (pass ? "PASS" : "FAIL") : "INVALID") << "\n";
      for (const auto& item : validation) t << "  " << item << "\n";
      emit(v_out, payload, t.str());
      return pass ? 0 : 1;
    }

    if (ngon_cmd->parsed()) {
      using namespace fillset;
      auto report = ngon_arrangement(g_n);
      ordered_json payload = ngon_report_to_json(report);
      if (g_with_arrangement) {
        payload["arrangement"] = arrangement_to_json(report.arrangement);
        payload["certificate"] = certificate_to_json(verify_k_filling(report.arrangement, 2));
      }
      std::ostringstream t;
      t << "n " << g_n << "\nsystole_length " << report.geometry.systole_length << "\n";
      emit(g_out, payload, t.str());
      return 0;
    }

    if (oracle_cmd->parsed()) {
      using namespace fillset;
      ordered_json payload;
      std::ostringstream t;
      if (o_kind == "ksystem") {
        auto result = torus_max_ksystem(o_k, o_bound);
        payload["size"] = result.size;
        payload["witness"] = ordered_json::array();
        for (const auto& s : result.witness) payload["witness"].push_back({s.p, s.q});
        t << "size " << result.size << "\n";
      } else {
        auto result = brute_partition_max(o_n, o_parts, o_k);
        payload["value"] = result.value;
        payload["witness"] = result.witness;
        t << "value " << result.value << "\n";
      }
      emit(o_out, payload, t.str());
      return 0;
    }

    if (cross_cmd->parsed()) return run_crosscheck(x_max_n, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
