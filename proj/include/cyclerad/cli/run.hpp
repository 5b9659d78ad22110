#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cyclerad/cli/config.hpp"
#include "cyclerad/cli/report.hpp"
#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/io.hpp"
#include "cyclerad/optimize.hpp"
#include "cyclerad/oracle.hpp"
#include "cyclerad/shorten.hpp"

namespace cyclerad::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kValidationFailure = 3 };

namespace detail {

inline Filtration load_filtration(const RunConfig& cfg) {
  if (cfg.rips_scale) {
    return rips_filtration(io::read_points(cfg.points_path), *cfg.rips_scale, cfg.rips_max_dim);
  }
  if (!cfg.lower_star_path.empty()) {
    EmbeddedComplex k = io::read_off(cfg.complex_path);
    const std::vector<double> f = io::read_scalars(cfg.lower_star_path, cfg.scalar_column);
    if (f.size() != k.cloud().size()) {
      throw InputError(cfg.lower_star_path + ": " + std::to_string(f.size()) + " scalars for " +
                       std::to_string(k.cloud().size()) + " vertices");
    }
    return lower_star_filtration(std::move(k), f);
  }
  const PointCloud cloud = cfg.points_path.empty() ? io::read_off(cfg.complex_path).cloud()
                                                   : io::read_points(cfg.points_path);
  return io::read_filtration(cfg.filtration_path, cloud);
}

/// Bars to localize: all, or the k longest (ties to the earlier birth), in
/// barcode order.
inline std::vector<Interval> select_bars(const Barcode& barcode, std::optional<Index> top) {
  std::vector<Index> idx(barcode.intervals.size());
  for (Index i = 0; i < idx.size(); ++i) idx[i] = i;
  if (top && *top < idx.size()) {
    std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) {
      const Interval& x = barcode.intervals[a];
      const Interval& y = barcode.intervals[b];
      if (x.is_essential() != y.is_essential()) return x.is_essential();
      if (x.persistence() != y.persistence()) return x.persistence() > y.persistence();
      return x.birth < y.birth;
    });
    idx.resize(*top);
    std::sort(idx.begin(), idx.end());
  }
  std::vector<Interval> out;
  for (Index i : idx) out.push_back(barcode.intervals[i]);
  return out;
}

inline SiteOptions site_options(const RunConfig& cfg, const EmbeddedComplex& k, Json& report) {
  SiteOptions opts;
  opts.threads = cfg.threads;
  const bool subsampled = cfg.site_fraction < 1.0;
  if (subsampled) opts.sites = subsample_sites(k, cfg.site_fraction);
  report["sites"] = {{"count", subsampled ? opts.sites.size() : k.vertices().size()},
                     {"fraction", cfg.site_fraction},
                     {"subsampled", subsampled},
                     {"guarantee", subsampled ? "none (sites subsampled)" : "2-approximation"}};
  return opts;
}

struct Check {
  Json log = Json::array();
  bool passed = true;

  void add(const std::string& name, bool ok, Json detail = Json::object()) {
    detail["check"] = name;
    detail["passed"] = ok;
    log.push_back(std::move(detail));
    passed = passed && ok;
  }
};

inline bool le(double a, double b) { return a <= b * (1.0 + 1e-9) + 1e-12; }

inline double ratio(double alg, double exact) {
  if (exact > 0) return alg / exact;
  return alg == 0 ? 1.0 : std::numeric_limits<double>::infinity();
}

}  // namespace detail

/// Executes one configured run and writes the JSON report. Returns the
/// process exit code.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    cfg.validate();
    const Mode mode = cfg.effective_mode();
    const bool verify = cfg.mode == Mode::verify;
    if (cfg.shorten && (mode == Mode::persistent || cfg.p != 1)) {
      throw std::invalid_argument("--shorten applies to localize and basis with p = 1");
    }
    Json report;
    report["problem"] = verify ? "verify" : mode == Mode::localize ? "localize"
                                          : mode == Mode::basis    ? "basis"
                                                                   : "persistent";
    report["dim"] = cfg.p;
    oracle::OracleBudget budget;
    budget.max_vertices = cfg.budget;
    detail::Check checks;
    std::vector<OptimalCycleResult> results;
    std::optional<EmbeddedComplex> complex;
    std::optional<Filtration> filtration;

    if (mode == Mode::persistent) {
      filtration = detail::load_filtration(cfg);
      const EmbeddedComplex& k = filtration->complex();
      const SiteOptions opts = detail::site_options(cfg, k, report);
      const PersistenceResult pers = compute_persistence(*filtration, cfg.p);
      report["barcode"] = barcode_json(pers.barcode);
      for (const Interval& bar : detail::select_bars(pers.barcode, cfg.top_bars)) {
        results.push_back(opt_pers_hom_rep(*filtration, bar, opts));
        if (!verify) continue;
        const OptimalCycleResult& alg = results.back();
        const auto site = oracle::exact_min_persistent_rep(*filtration, bar,
                                                           oracle::Measure::site_restricted, budget);
        const auto exact = oracle::exact_min_persistent_rep(*filtration, bar,
                                                            oracle::Measure::exact, budget);
        Json info{{"birth_index", bar.birth},
                  {"algorithm_r_v", alg.r_v},
                  {"oracle_r_site", site.radius},
                  {"oracle_r_exact", exact.radius},
                  {"ratio", detail::ratio(alg.r_v, exact.radius)}};
        checks.add("represents_bar", represents(*filtration, bar, alg.cycle), info);
        if (opts.sites.empty()) {
          checks.add("site_optimal", std::abs(alg.r_v - site.radius) <= 1e-9 * std::max(1.0, site.radius), info);
          checks.add("two_approximation",
                     detail::le(exact.radius, alg.r_v) && detail::le(alg.r_v, 2 * exact.radius), info);
        }
      }
    } else {
      complex = io::read_off(cfg.complex_path);
      const EmbeddedComplex& k = *complex;
      const SiteOptions opts = detail::site_options(cfg, k, report);
      if (mode == Mode::localize) {
        const ChainVector zeta = io::read_cycle(cfg.cycle_path, k, cfg.p);
        results.push_back(opt_homologous_cycle(k, zeta, cfg.p, opts));
        if (verify) {
          const OptimalCycleResult& alg = results.back();
          const auto exact = oracle::exact_optimal_homologous_cycle(k, zeta, cfg.p, budget);
          const auto site = oracle::exact_site_restricted_cycle(k, zeta, cfg.p, budget);
          Json info{{"algorithm_r_v", alg.r_v},
                    {"oracle_r_site", site.radius},
                    {"oracle_r_exact", exact.radius},
                    {"ratio", detail::ratio(alg.r_v, exact.radius)}};
          Z2Matrix b(k.size(cfg.p));
          for (Index i = 0; i < k.size(cfg.p + 1); ++i) b.push_back(k.facets(cfg.p + 1, i));
          checks.add("homologous", in_span(b, alg.cycle + zeta), info);
          if (opts.sites.empty()) {
            checks.add("site_optimal", std::abs(alg.r_v - site.radius) <= 1e-9 * std::max(1.0, site.radius), info);
            checks.add("two_approximation",
                       detail::le(exact.radius, alg.r_v) && detail::le(alg.r_v, 2 * exact.radius), info);
          }
        }
      } else {
        HomologyBasisResult basis = opt_homology_basis(k, cfg.p, opts);
        report["total_weight"] = basis.total_weight;
        results = std::move(basis.cycles);
        if (verify) {
          const auto site = oracle::exact_min_basis(k, cfg.p, oracle::Measure::site_restricted, budget);
          const auto exact = oracle::exact_min_basis(k, cfg.p, oracle::Measure::exact, budget);
          std::vector<double> weights;
          for (const auto& r : results) weights.push_back(r.r_v);
          std::sort(weights.begin(), weights.end());
          double total = 0.0;
          for (double w : weights) total += w;
          Json info{{"algorithm_weights", weights},
                    {"oracle_site_weights", site.weights},
                    {"oracle_exact_weights", exact.weights},
                    {"ratio", detail::ratio(total, exact.total)}};
          checks.add("basis_size", weights.size() == site.weights.size(), info);
          if (opts.sites.empty() && weights.size() == site.weights.size()) {
            checks.add("site_optimal", detail::le(total, site.total), info);
            bool two = true;
            for (Index j = 0; j < weights.size(); ++j) {
              two = two && detail::le(exact.weights[j], weights[j]) &&
                    detail::le(weights[j], 2 * exact.weights[j]);
            }
            checks.add("two_approximation", two, info);
          }
        }
      }
      if (cfg.shorten) {
        for (auto& r : results) r = shorten_cycle(k, std::move(r));
      }
    }

    const EmbeddedComplex& k = complex ? *complex : filtration->complex();
    report["results"] = Json::array();
    for (const auto& r : results) report["results"].push_back(result_json(k, r));
    if (verify) report["verify"] = {{"passed", checks.passed}, {"checks", checks.log}};

    const std::string text = report.dump(2) + "\n";
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      const std::filesystem::path parent = std::filesystem::path(cfg.out_path).parent_path();
      std::error_code ec;
      if (!parent.empty()) std::filesystem::create_directories(parent, ec);
      std::ofstream file(cfg.out_path);
      if (!file) throw InputError(cfg.out_path + ": cannot write report");
      file << text;
    }
    if (!cfg.obj_dir.empty()) export_cycles(cfg.obj_dir, k, results);
    if (verify && !checks.passed) {
      err << "verify: oracle comparison failed\n";
      return kValidationFailure;
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cyclerad::cli
