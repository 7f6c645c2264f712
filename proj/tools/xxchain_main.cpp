#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxchain/fidelity.hpp"
#include "xxchain/kernel.hpp"
#include "xxchain/pairstate.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/table.hpp"
#include "xxchain/thermo.hpp"
#include "xxchain/validate.hpp"

namespace {

using namespace xxchain;

constexpr const char* kTieNote =
    "ties at B = B_k resolve to the higher-field region k-1";

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "Write output to PATH instead of stdout");
}

void emit(const SweepTable& table, const OutputOptions& opts) {
  const std::string text =
      opts.format == "json" ? to_json(table) : to_csv(table);
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.out);
  file << text;
}

std::vector<double> field_grid(double b_min, double b_max, int steps) {
  if (steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (b_max < b_min)
    throw std::invalid_argument("--b-max must be >= --b-min");
  std::vector<double> grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(b_min);
    return grid;
  }
  for (int i = 0; i < steps; ++i)
    grid.push_back(b_min + (b_max - b_min) * i / (steps - 1.0));
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xxchain: exact solver for the open-boundary spin-1/2 XX chain in a "
      "transverse field (couplings in units of J = 1).\n"
      "Observables are piecewise constant between the level-crossing fields "
      "B_k = cos(k pi/(N+1)). Comparisons are plain IEEE: at B = B_k exactly "
      "the higher-field region (k-1) is reported; offset B by -epsilon to "
      "select the other branch."};
  app.require_subcommand(1);
  int exit_code = 0;

  // crossings
  OutputOptions cr_out;
  int cr_n = 0;
  auto* cr = app.add_subcommand("crossings",
                                "Level-crossing fields B_k = cos(k pi/(n+1))");
  cr->add_option("--n", cr_n, "Number of sites (>= 1)")->required();
  add_output_flags(cr, cr_out);
  cr->callback([&] {
    const auto fields = crossing_fields(cr_n);
    SweepTable t;
    t.command = "crossings";
    t.n = cr_n;
    t.observable = "crossing_field";
    t.notes = kTieNote;
    t.columns = {"k", "B_k"};
    for (int k = 1; k <= cr_n; ++k)
      t.rows.push_back({static_cast<double>(k), fields[k - 1]});
    emit(t, cr_out);
  });

  // energy
  OutputOptions en_out;
  int en_n = 0, en_steps = 0;
  double en_b = 0.0, en_bmin = 0.0, en_bmax = 0.0;
  bool en_per_spin = false;
  auto* en = app.add_subcommand("energy", "Ground-state energy vs field");
  en->add_option("--n", en_n, "Number of sites (>= 1)")->required();
  auto* en_b_opt = en->add_option("--b", en_b, "Single field value");
  auto* en_bmin_opt = en->add_option("--b-min", en_bmin, "Grid start");
  auto* en_bmax_opt = en->add_option("--b-max", en_bmax, "Grid end");
  auto* en_steps_opt = en->add_option("--steps", en_steps, "Grid points");
  en->add_flag("--per-spin", en_per_spin, "Report energy per spin");
  en_b_opt->excludes(en_bmin_opt)->excludes(en_bmax_opt)->excludes(
      en_steps_opt);
  add_output_flags(en, en_out);
  en->callback([&] {
    std::vector<double> grid;
    if (en_b_opt->count()) {
      grid = {en_b};
    } else if (en_bmin_opt->count() && en_bmax_opt->count() &&
               en_steps_opt->count()) {
      grid = field_grid(en_bmin, en_bmax, en_steps);
    } else {
      throw std::invalid_argument(
          "energy: give --b or all of --b-min/--b-max/--steps");
    }
    SweepTable t;
    t.command = "energy";
    t.n = en_n;
    t.observable = en_per_spin ? "ground_energy_per_spin" : "ground_energy";
    t.notes = kTieNote;
    t.columns = {"B", en_per_spin ? "energy_per_spin" : "energy"};
    for (double b : grid) {
      const double e = ground_energy({en_n, b});
      t.rows.push_back({b, en_per_spin ? e / en_n : e});
    }
    emit(t, en_out);
  });

  // corr
  OutputOptions co_out;
  int co_n = 0, co_k = 0, co_l = 0, co_m = 0;
  double co_b = 0.0;
  std::string co_kind;
  auto* co = app.add_subcommand(
      "corr", "Kernel entries and spin correlation functions");
  co->add_option("--n", co_n, "Number of sites (>= 1)")->required();
  auto* co_b_opt = co->add_option("--b", co_b, "Field value");
  auto* co_k_opt = co->add_option("--k", co_k, "Region index 0..n");
  co_b_opt->excludes(co_k_opt);
  co->add_option("--l", co_l, "First site")->required();
  auto* co_m_opt = co->add_option("--m", co_m, "Second site");
  co->add_option("--kind", co_kind, "Observable: kernel | z | zz | xx")
      ->check(CLI::IsMember({"kernel", "z", "zz", "xx"}))
      ->required();
  add_output_flags(co, co_out);
  co->callback([&] {
    if (!co_b_opt->count() && !co_k_opt->count())
      throw std::invalid_argument("corr: give --b or --k");
    const int k = co_k_opt->count() ? co_k : region_index({co_n, co_b});
    const CorrelationKernel kern = kernel_matrix(co_n, k);
    double value = 0.0;
    std::vector<int> sites{co_l};
    if (co_kind == "z") {
      value = magnetization(kern, co_l);
    } else {
      if (!co_m_opt->count())
        throw std::invalid_argument("corr: --m is required for kind " +
                                    co_kind);
      sites.push_back(co_m);
      if (co_kind == "kernel") {
        value = kernel_entry(co_n, k, co_l, co_m);
      } else if (co_kind == "zz") {
        value = zz_corr(kern, co_l, co_m);
      } else {
        value = co_l < co_m ? xx_corr(kern, co_l, co_m)
                            : xx_corr(kern, co_m, co_l);
      }
    }
    SweepTable t;
    t.command = "corr";
    t.n = co_n;
    t.sites = sites;
    t.observable = co_kind;
    t.notes = kTieNote;
    if (co_b_opt->count()) {
      t.columns = {"B", "value"};
      t.rows.push_back({co_b, value});
    } else {
      t.columns = {"k", "value"};
      t.rows.push_back({static_cast<double>(k), value});
    }
    emit(t, co_out);
  });

  // tangle / concurrence
  struct MeasureCli {
    OutputOptions out;
    int n = 0, l = 0, m = 0;
    double b = 0.0;
    bool sweep = false;
    CLI::Option* b_opt = nullptr;
    CLI::Option* sweep_opt = nullptr;
  };
  MeasureCli ta, cc;

  auto* ta_cmd = app.add_subcommand(
      "tangle", "One-tangle 1 - <sigma^z_l>^2 of a single site");
  ta_cmd->add_option("--n", ta.n, "Number of sites (>= 1)")->required();
  ta_cmd->add_option("--l", ta.l, "Site index")->required();
  ta.sweep_opt = ta_cmd->add_flag("--sweep", ta.sweep,
                                  "One point per region, at region midpoints");
  ta.b_opt = ta_cmd->add_option("--b", ta.b, "Single field value");
  ta.sweep_opt->excludes(ta.b_opt);
  add_output_flags(ta_cmd, ta.out);
  ta_cmd->callback([&] {
    SweepTable t;
    t.command = "tangle";
    t.n = ta.n;
    t.sites = {ta.l};
    t.observable = "one_tangle";
    t.notes = kTieNote;
    if (ta.sweep) {
      t.columns = {"B", "k", "value"};
      for (const auto& p : measure_sweep(ta.n, ta.l, 0, Measure::tangle))
        t.rows.push_back({p.b, static_cast<double>(p.k), p.value});
    } else if (ta.b_opt->count()) {
      const int k = region_index({ta.n, ta.b});
      const CorrelationKernel kern = kernel_matrix(ta.n, k);
      t.columns = {"B", "k", "value"};
      t.rows.push_back(
          {ta.b, static_cast<double>(k), one_tangle(kern, ta.l)});
    } else {
      throw std::invalid_argument("tangle: give --sweep or --b");
    }
    emit(t, ta.out);
  });

  auto* cc_cmd = app.add_subcommand(
      "concurrence", "Pairwise concurrence between two sites");
  cc_cmd->add_option("--n", cc.n, "Number of sites (>= 1)")->required();
  cc_cmd->add_option("--l", cc.l, "First site")->required();
  cc_cmd->add_option("--m", cc.m, "Second site")->required();
  cc.sweep_opt = cc_cmd->add_flag("--sweep", cc.sweep,
                                  "One point per region, at region midpoints");
  cc.b_opt = cc_cmd->add_option("--b", cc.b, "Single field value");
  cc.sweep_opt->excludes(cc.b_opt);
  add_output_flags(cc_cmd, cc.out);
  cc_cmd->callback([&] {
    SweepTable t;
    t.command = "concurrence";
    t.n = cc.n;
    t.sites = {cc.l, cc.m};
    t.observable = "concurrence";
    t.notes = kTieNote;
    if (cc.sweep) {
      t.columns = {"B", "k", "value"};
      for (const auto& p :
           measure_sweep(cc.n, cc.l, cc.m, Measure::concurrence))
        t.rows.push_back({p.b, static_cast<double>(p.k), p.value});
    } else if (cc.b_opt->count()) {
      const int k = region_index({cc.n, cc.b});
      const CorrelationKernel kern = kernel_matrix(cc.n, k);
      t.columns = {"B", "k", "value"};
      t.rows.push_back({cc.b, static_cast<double>(k),
                        pair_concurrence(kern, cc.l, cc.m)});
    } else {
      throw std::invalid_argument("concurrence: give --sweep or --b");
    }
    emit(t, cc.out);
  });

  // fidelity
  OutputOptions fi_out;
  int fi_n = 0, fi_site = 0;
  auto* fi = app.add_subcommand(
      "fidelity",
      "Coarse-grained single-spin fidelity and susceptibility per crossing");
  fi->add_option("--n", fi_n, "Number of sites (>= 1)")->required();
  fi->add_option("--site", fi_site, "Site index")->required();
  add_output_flags(fi, fi_out);
  fi->callback([&] {
    SweepTable t;
    t.command = "fidelity";
    t.n = fi_n;
    t.sites = {fi_site};
    t.observable = "partial_state_fidelity";
    t.notes = "chi at k = 1 uses spacing B_1 - B_2";
    t.columns = {"k", "B_k", "F", "chi"};
    for (const auto& p : fidelity_sweep(fi_n, fi_site))
      t.rows.push_back({static_cast<double>(p.k), p.b_k, p.fid, p.chi});
    emit(t, fi_out);
  });

  // thermo
  OutputOptions th_out;
  std::string th_obs;
  int th_r = 0, th_steps = 0;
  double th_b = 0.0, th_bmin = 0.0, th_bmax = 0.0;
  auto* th = app.add_subcommand("thermo", "Thermodynamic-limit closed forms");
  th->add_option("--observable", th_obs,
                 "energy | mag | zz | xx | xx-asymptote | concurrence | "
                 "k-fraction")
      ->check(CLI::IsMember({"energy", "mag", "zz", "xx", "xx-asymptote",
                             "concurrence", "k-fraction"}))
      ->required();
  auto* th_r_opt = th->add_option("--r", th_r, "Spin separation (>= 1)");
  auto* th_b_opt = th->add_option("--b", th_b, "Single field value");
  auto* th_bmin_opt = th->add_option("--b-min", th_bmin, "Grid start");
  auto* th_bmax_opt = th->add_option("--b-max", th_bmax, "Grid end");
  auto* th_steps_opt = th->add_option("--steps", th_steps, "Grid points");
  th_b_opt->excludes(th_bmin_opt)->excludes(th_bmax_opt)->excludes(
      th_steps_opt);
  add_output_flags(th, th_out);
  th->callback([&] {
    SweepTable t;
    t.command = "thermo";
    t.observable = th_obs;
    const bool needs_r = th_obs == "zz" || th_obs == "xx" ||
                         th_obs == "concurrence" || th_obs == "xx-asymptote";
    if (needs_r && !th_r_opt->count())
      throw std::invalid_argument("thermo: --r is required for observable " +
                                  th_obs);
    if (th_obs == "xx-asymptote") {
      if (th_b_opt->count() || th_bmin_opt->count() || th_bmax_opt->count() ||
          th_steps_opt->count())
        throw std::invalid_argument(
            "thermo: xx-asymptote depends only on --r");
      t.columns = {"r", "value"};
      t.rows.push_back({static_cast<double>(th_r), xx_asymptote(th_r)});
      emit(t, th_out);
      return;
    }
    std::vector<double> grid;
    if (th_b_opt->count()) {
      grid = {th_b};
    } else if (th_bmin_opt->count() && th_bmax_opt->count() &&
               th_steps_opt->count()) {
      grid = field_grid(th_bmin, th_bmax, th_steps);
    } else {
      throw std::invalid_argument(
          "thermo: give --b or all of --b-min/--b-max/--steps");
    }
    if (needs_r)
      t.notes = "r = " + std::to_string(th_r);
    t.columns = {"B", "value"};
    for (double b : grid) {
      double value = 0.0;
      if (th_obs == "energy")
        value = energy_per_spin(b);
      else if (th_obs == "mag")
        value = bulk_magnetization(b);
      else if (th_obs == "k-fraction")
        value = k_fraction(b);
      else if (th_obs == "zz")
        value = bulk_zz(bulk_params(b), th_r);
      else if (th_obs == "xx")
        value = bulk_xx(bulk_params(b), th_r);
      else
        value = bulk_concurrence(bulk_params(b), th_r);
      t.rows.push_back({b, value});
    }
    emit(t, th_out);
  });

  // validate
  OutputOptions va_out;
  int va_nmax = 10, va_cases = 3;
  auto* va = app.add_subcommand(
      "validate",
      "Cross-check every analytic observable against the brute-force "
      "state vector");
  va->add_option("--n-max", va_nmax, "Largest chain length (2..14)")
      ->capture_default_str();
  va->add_option("--cases-per-region", va_cases, "Fields sampled per region")
      ->capture_default_str();
  add_output_flags(va, va_out);
  va->callback([&] {
    const auto results = run_validation(va_nmax, va_cases);
    for (const auto& r : results)
      std::fprintf(stderr, "%s %-22s max_err=%.3e  tol=%.0e  cases=%zu\n",
                   r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_error,
                   r.tolerance, r.cases);
    SweepTable t;
    t.command = "validate";
    t.n = va_nmax;
    t.observable = "validation_report";
    std::string ids = "check ids:";
    for (std::size_t i = 0; i < results.size(); ++i)
      ids += " " + std::to_string(i) + "=" + results[i].name;
    t.notes = ids;
    t.columns = {"check_id", "max_abs_error", "tolerance", "passed"};
    for (std::size_t i = 0; i < results.size(); ++i)
      t.rows.push_back({static_cast<double>(i), results[i].max_error,
                        results[i].tolerance,
                        results[i].passed ? 1.0 : 0.0});
    emit(t, va_out);
    if (!all_passed(results)) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
