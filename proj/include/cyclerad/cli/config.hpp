#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclerad/errors.hpp"
#include "cyclerad/z2.hpp"

namespace cyclerad::cli {

enum class Mode { localize, basis, persistent, verify };

struct RunConfig {
  Mode mode = Mode::localize;
  Index p = 1;

  std::string complex_path;
  std::string points_path;
  std::string cycle_path;

  // persistent filtration sources; exactly one is set
  std::optional<double> rips_scale;
  Index rips_max_dim = 2;
  std::string filtration_path;
  std::string lower_star_path;
  Index scalar_column = 0;
  std::optional<Index> top_bars;

  double site_fraction = 1.0;
  unsigned threads = 1;
  bool shorten = false;
  std::string out_path;
  std::string obj_dir;
  Index budget = 12;

  Index filtration_sources() const {
    return static_cast<Index>(rips_scale.has_value()) + !filtration_path.empty() +
           !lower_star_path.empty();
  }
  bool persistent_inputs() const { return filtration_sources() > 0; }

  /// For verify: which problem the flags describe.
  Mode effective_mode() const {
    if (mode != Mode::verify) return mode;
    if (persistent_inputs()) return Mode::persistent;
    if (!cycle_path.empty()) return Mode::localize;
    return Mode::basis;
  }

  void validate() const {
    if (p < 1) throw std::invalid_argument("-p must be at least 1");
    if (!(site_fraction > 0.0 && site_fraction <= 1.0)) {
      throw std::invalid_argument("--sites must lie in (0, 1]");
    }
    if (threads < 1) throw std::invalid_argument("--threads must be at least 1");
    switch (effective_mode()) {
      case Mode::localize:
        if (complex_path.empty() || cycle_path.empty()) {
          throw std::invalid_argument("localize needs --complex and --cycle");
        }
        break;
      case Mode::basis:
        if (complex_path.empty()) throw std::invalid_argument("basis needs --complex");
        break;
      case Mode::persistent:
        if (filtration_sources() != 1) {
          throw std::invalid_argument(
              "persistent needs exactly one of --rips, --filtration, --lower-star");
        }
        if (rips_scale && points_path.empty()) throw std::invalid_argument("--rips needs --points");
        if (!filtration_path.empty() && points_path.empty() && complex_path.empty()) {
          throw std::invalid_argument("--filtration needs --points or --complex for coordinates");
        }
        if (!lower_star_path.empty() && complex_path.empty()) {
          throw std::invalid_argument("--lower-star needs --complex");
        }
        break;
      case Mode::verify:
        break;
    }
  }
};

inline std::optional<Index> parse_bars(const std::string& text) {
  if (text.empty() || text == "all") return std::nullopt;
  const std::string prefix = "top:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("--bars expects 'top:k' or 'all'");
  const std::string digits = text.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("--bars expects 'top:k' with a non-negative integer k");
  }
  return static_cast<Index>(std::stoull(digits));
}

/// Parses a command line into a RunConfig. Throws CLI::ParseError for
/// malformed flags (and for --help, which CLI11 reports the same way).
inline RunConfig parse_args(CLI::App& app, int argc, const char* const* argv) {
  RunConfig cfg;
  std::string bars;
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-p", cfg.p, "homology dimension")->default_val(1);
    sub->add_option("--complex", cfg.complex_path, "OFF file");
    sub->add_option("--points", cfg.points_path, "CSV point cloud");
    sub->add_option("--cycle", cfg.cycle_path, "cycle file, one simplex per line");
    sub->add_option("--rips", cfg.rips_scale, "Rips filtration up to this scale");
    sub->add_option("--maxdim", cfg.rips_max_dim, "largest Rips simplex dimension")->default_val(2);
    sub->add_option("--filtration", cfg.filtration_path, "filtration file");
    sub->add_option("--lower-star", cfg.lower_star_path, "CSV of vertex scalars");
    sub->add_option("--scalar-column", cfg.scalar_column, "column of the scalar CSV")->default_val(0);
    sub->add_option("--bars", bars, "which bars to localize: all or top:k");
    sub->add_option("--sites", cfg.site_fraction, "fraction of vertices used as sites")->default_val(1.0);
    sub->add_option("--threads", cfg.threads, "worker threads")->default_val(1);
    sub->add_flag("--shorten", cfg.shorten, "shorten 1-cycles afterwards");
    sub->add_option("--out", cfg.out_path, "JSON report path (default stdout)");
    sub->add_option("--export-obj", cfg.obj_dir, "directory for OBJ and cycle exports");
  };
  CLI::App* localize = app.add_subcommand("localize", "optimal cycle homologous to a given cycle");
  CLI::App* basis = app.add_subcommand("basis", "minimum homology basis");
  CLI::App* persistent = app.add_subcommand("persistent", "optimal representatives of bars");
  CLI::App* verify = app.add_subcommand("verify", "compare against the exhaustive oracle");
  for (CLI::App* sub : {localize, basis, persistent, verify}) add_common(sub);
  verify->add_option("--budget", cfg.budget, "oracle vertex budget")->default_val(12);

  app.parse(argc, argv);
  if (localize->parsed()) cfg.mode = Mode::localize;
  if (basis->parsed()) cfg.mode = Mode::basis;
  if (persistent->parsed()) cfg.mode = Mode::persistent;
  if (verify->parsed()) cfg.mode = Mode::verify;
  cfg.top_bars = parse_bars(bars);
  return cfg;
}

}  // namespace cyclerad::cli
