#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclerad/complex.hpp"
#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "cyclerad/optimize.hpp"

namespace cyclerad::cli {

using Json = nlohmann::ordered_json;

inline Json value_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

inline Json interval_json(const Interval& bar) {
  Json j;
  j["birth_index"] = bar.birth;
  j["death_index"] = bar.death ? Json(*bar.death) : Json("inf");
  j["birth_value"] = value_or_inf(bar.birth_value);
  j["death_value"] = value_or_inf(bar.death_value);
  return j;
}

inline Json cycle_json(const EmbeddedComplex& k, const ChainVector& cycle, Index p) {
  Json out = Json::array();
  for (Index i : cycle.support()) out.push_back(k.simplex(p, i));
  return out;
}

inline Json result_json(const EmbeddedComplex& k, const OptimalCycleResult& r) {
  Json j;
  j["problem"] = to_string(r.problem);
  j["dim"] = r.dim;
  j["interval"] = r.interval ? interval_json(*r.interval) : Json(nullptr);
  j["site"] = r.site ? Json(*r.site) : Json(nullptr);
  j["site_point"] = r.site_point;
  j["r_v"] = r.r_v;
  j["r_exact"] = r.r_exact;
  j["sphere"] = {{"center", r.certificate.center},
                 {"radius", r.certificate.radius},
                 {"support", r.certificate.support}};
  j["cycle"] = cycle_json(k, r.cycle, r.dim);
  j["edges_before"] = r.edges_before ? Json(*r.edges_before) : Json(nullptr);
  j["edges_after"] = r.edges_after ? Json(*r.edges_after) : Json(nullptr);
  return j;
}

inline Json barcode_json(const Barcode& barcode) {
  Json out = Json::array();
  for (const Interval& bar : barcode.intervals) out.push_back(interval_json(bar));
  return out;
}

/// Writes cycle_<i>.txt (re-readable cycle file) for every result, plus
/// cycle_<i>.obj polylines for 1-cycles.
inline void export_cycles(const std::string& dir, const EmbeddedComplex& k,
                          const std::vector<OptimalCycleResult>& results) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError(dir + ": cannot create directory (" + ec.message() + ")");
  for (Index i = 0; i < results.size(); ++i) {
    const OptimalCycleResult& r = results[i];
    const fs::path base = fs::path(dir) / ("cycle_" + std::to_string(i));
    std::ofstream txt(base.string() + ".txt");
    if (!txt) throw InputError(base.string() + ".txt: cannot write");
    for (Index s : r.cycle.support()) {
      const Simplex& simplex = k.simplex(r.dim, s);
      for (Index t = 0; t < simplex.size(); ++t) txt << (t ? " " : "") << simplex[t];
      txt << '\n';
    }
    if (r.dim != 1) continue;
    std::ofstream obj(base.string() + ".obj");
    if (!obj) throw InputError(base.string() + ".obj: cannot write");
    const std::vector<Index> verts = chain_vertices(k, r.cycle, 1);
    obj << "# 1-cycle, " << r.cycle.weight() << " edges\n";
    for (Index v : verts) {
      const Point& pt = k.point(v);
      obj << "v";
      for (Index c = 0; c < 3; ++c) obj << ' ' << (c < pt.size() ? pt[c] : 0.0);
      obj << '\n';
    }
    for (Index e : r.cycle.support()) {
      const Simplex& s = k.simplex(1, e);
      const auto a = std::lower_bound(verts.begin(), verts.end(), s[0]) - verts.begin();
      const auto b = std::lower_bound(verts.begin(), verts.end(), s[1]) - verts.begin();
      obj << "l " << a + 1 << ' ' << b + 1 << '\n';
    }
  }
}

}  // namespace cyclerad::cli
