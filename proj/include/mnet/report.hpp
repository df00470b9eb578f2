#pragma once

// Whole-arrangement analysis and its report: a plain data tree with a JSON
// form (stable key order, round-trips) and a human-readable table form.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mnet/arrangement.hpp"
#include "mnet/criteria.hpp"
#include "mnet/multinet.hpp"
#include "mnet/osalgebra.hpp"
#include "mnet/pencil.hpp"

namespace mnet {

using Json = nlohmann::ordered_json;

struct PencilSummary {
  bool collinear = false;
  bool connected = false;
  bool vanishes_on_base = false;
  std::string verdict;
  std::vector<std::string> fibers;
  std::vector<std::string> relations;  // "C3 = a*C1 + b*C2"
  friend bool operator==(const PencilSummary&, const PencilSummary&) = default;
};

struct RHSummary {
  long lhs = 0;
  long rhs = 0;
  long deficit = 0;
  bool complete = false;
  long fiber_euler = 0;
  std::vector<long> class_euler;
  friend bool operator==(const RHSummary&, const RHSummary&) = default;
};

struct LocalSummary {
  bool passed = false;
  std::vector<std::string> failing_points;
  friend bool operator==(const LocalSummary&, const LocalSummary&) = default;
};

struct MultinetSummary {
  std::size_t k = 0;
  long d = 0;
  bool net = false;
  std::vector<std::vector<std::string>> classes;
  std::vector<long> multiplicity;
  std::vector<std::string> base;
  std::vector<long> weights;
  bool axioms_ok = false;
  std::vector<std::vector<std::string>> resonance;
  bool isotropic = false;
  std::vector<long> exponents;
  bool exponents_ok = false;
  std::optional<PencilSummary> pencil;
  RHSummary rh;
  LocalSummary local_test;
  friend bool operator==(const MultinetSummary&, const MultinetSummary&) = default;
};

struct AnalysisReport {
  std::string source;
  std::size_t line_count = 0;
  unsigned order = 1;
  bool abstract = false;
  std::vector<std::string> labels;
  std::size_t lattice_points = 0;
  std::size_t multiple_points = 0;
  std::map<std::size_t, std::size_t> multiplicity_histogram;  // m_p -> count
  std::vector<MultinetSummary> multinets;
  std::vector<std::string> warnings;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline void to_json(Json& j, const PencilSummary& p) {
  j = Json{{"collinear", p.collinear}, {"connected", p.connected}, {"vanishes_on_base", p.vanishes_on_base},
           {"verdict", p.verdict},       {"fibers", p.fibers},       {"relations", p.relations}};
}

inline void from_json(const Json& j, PencilSummary& p) {
  j.at("collinear").get_to(p.collinear);
  j.at("connected").get_to(p.connected);
  j.at("vanishes_on_base").get_to(p.vanishes_on_base);
  j.at("verdict").get_to(p.verdict);
  j.at("fibers").get_to(p.fibers);
  j.at("relations").get_to(p.relations);
}

inline void to_json(Json& j, const RHSummary& r) {
  j = Json{{"lhs", r.lhs},           {"rhs", r.rhs},
           {"deficit", r.deficit},   {"complete", r.complete},
           {"fiber_euler", r.fiber_euler}, {"class_euler", r.class_euler}};
}

inline void from_json(const Json& j, RHSummary& r) {
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("deficit").get_to(r.deficit);
  j.at("complete").get_to(r.complete);
  j.at("fiber_euler").get_to(r.fiber_euler);
  j.at("class_euler").get_to(r.class_euler);
}

inline void to_json(Json& j, const LocalSummary& l) {
  j = Json{{"passed", l.passed}, {"failing_points", l.failing_points}};
}

inline void from_json(const Json& j, LocalSummary& l) {
  j.at("passed").get_to(l.passed);
  j.at("failing_points").get_to(l.failing_points);
}

inline void to_json(Json& j, const MultinetSummary& m) {
  j = Json{{"k", m.k},
           {"d", m.d},
           {"net", m.net},
           {"classes", m.classes},
           {"multiplicity", m.multiplicity},
           {"base", m.base},
           {"weights", m.weights},
           {"axioms_ok", m.axioms_ok},
           {"resonance", m.resonance},
           {"isotropic", m.isotropic},
           {"exponents", m.exponents},
           {"exponents_ok", m.exponents_ok},
           {"pencil", nullptr},
           {"rh", m.rh},
           {"local_test", m.local_test}};
  if (m.pencil) j["pencil"] = *m.pencil;
}

inline void from_json(const Json& j, MultinetSummary& m) {
  j.at("k").get_to(m.k);
  j.at("d").get_to(m.d);
  j.at("net").get_to(m.net);
  j.at("classes").get_to(m.classes);
  j.at("multiplicity").get_to(m.multiplicity);
  j.at("base").get_to(m.base);
  j.at("weights").get_to(m.weights);
  j.at("axioms_ok").get_to(m.axioms_ok);
  j.at("resonance").get_to(m.resonance);
  j.at("isotropic").get_to(m.isotropic);
  j.at("exponents").get_to(m.exponents);
  j.at("exponents_ok").get_to(m.exponents_ok);
  if (j.at("pencil").is_null())
    m.pencil.reset();
  else
    m.pencil = j.at("pencil").get<PencilSummary>();
  j.at("rh").get_to(m.rh);
  j.at("local_test").get_to(m.local_test);
}

inline void to_json(Json& j, const AnalysisReport& r) {
  Json hist = Json::object();
  for (const auto& [m, c] : r.multiplicity_histogram) hist[std::to_string(m)] = c;
  j = Json{{"source", r.source},
           {"arrangement", {{"lines", r.line_count}, {"order", r.order}, {"abstract", r.abstract}, {"labels", r.labels}}},
           {"lattice", {{"points", r.lattice_points}, {"multiple_points", r.multiple_points}, {"histogram", hist}}},
           {"multinets", r.multinets},
           {"warnings", r.warnings}};
}

inline void from_json(const Json& j, AnalysisReport& r) {
  j.at("source").get_to(r.source);
  const auto& a = j.at("arrangement");
  a.at("lines").get_to(r.line_count);
  a.at("order").get_to(r.order);
  a.at("abstract").get_to(r.abstract);
  a.at("labels").get_to(r.labels);
  const auto& l = j.at("lattice");
  l.at("points").get_to(r.lattice_points);
  l.at("multiple_points").get_to(r.multiple_points);
  r.multiplicity_histogram.clear();
  for (const auto& [key, value] : l.at("histogram").items())
    r.multiplicity_histogram[std::stoul(key)] = value.get<std::size_t>();
  j.at("multinets").get_to(r.multinets);
  j.at("warnings").get_to(r.warnings);
}

inline std::string to_machine(const AnalysisReport& r) { return Json(r).dump(2) + "\n"; }

inline AnalysisReport from_machine(const std::string& text) { return Json::parse(text).get<AnalysisReport>(); }

inline std::string relation_str(const PencilRelation& rel) {
  auto bracket = [](const Cyclo& c) {
    std::string s = c.str();
    for (auto& ch : s)
      if (ch == 'z') ch = 'w';
    return c.as_rational() ? s : "(" + s + ")";
  };
  return "C" + std::to_string(rel.fiber + 1) + " = " + bracket(rel.a) + "*C1 + " + bracket(rel.b) + "*C2";
}

/// Every analysis for one discovered (or supplied) multinet.
inline MultinetSummary summarize(const Multinet& mn, const MultiArrangement& arr, const IncidenceLattice& lat) {
  MultinetSummary s;
  s.k = mn.k();
  s.d = mn.degree;
  s.net = mn.is_net();
  for (const auto& c : mn.classes) {
    std::vector<std::string> names;
    for (std::size_t l : c) names.push_back(arr.labels()[l]);
    s.classes.push_back(std::move(names));
  }
  s.multiplicity = mn.multiplicity;
  for (std::size_t p : mn.base) {
    s.base.push_back(lat.point(p).str());
    s.weights.push_back(mn.weights.at(p));
  }
  s.axioms_ok = verify(mn, lat).ok();
  const auto res = resonance_from_multinet(mn, lat);
  for (const auto& v : res) {
    std::vector<std::string> coords;
    for (const auto& x : v) coords.push_back(x.get_str());
    s.resonance.push_back(std::move(coords));
  }
  s.isotropic = isotropic_check(res, lat);
  const auto ex = exponents(mn);
  s.exponents = ex.exponents;
  s.exponents_ok = ex.ok();
  if (!arr.is_abstract()) {
    const auto pr = ceva_verdict(mn, arr, lat);
    PencilSummary ps{pr.collinear, pr.connected, pr.vanishes_on_base, pr.verdict, {}, {}};
    for (const auto& f : pr.fibers) ps.fibers.push_back(f.str());
    for (const auto& r : pr.relations) ps.relations.push_back(relation_str(r));
    s.pencil = std::move(ps);
  }
  const auto rh = euler_sides(mn, lat);
  s.rh = {rh.lhs, rh.rhs, rh.deficit, rh.complete, rh.fiber_euler, rh.class_euler};
  const auto lt = local_test(mn, lat);
  s.local_test.passed = lt.passed();
  for (std::size_t p : lt.failing_points()) s.local_test.failing_points.push_back(lat.point(p).str());
  return s;
}

/// build_lattice, discover, then every per-multinet analysis.
inline AnalysisReport analyze(const MultiArrangement& arr, const std::string& source = {},
                              std::uint64_t cap = kDefaultCap) {
  AnalysisReport r;
  r.source = source;
  r.line_count = arr.size();
  r.order = arr.order();
  r.abstract = arr.is_abstract();
  r.labels = arr.labels();
  const auto lat = build_lattice(arr);
  r.lattice_points = lat.size();
  r.multiple_points = multiple_points(lat).size();
  for (const auto& p : lat.points()) ++r.multiplicity_histogram[p.multiplicity()];
  for (const auto& d : discover(lat, cap)) r.multinets.push_back(summarize(d.multinet, arr, lat));
  if (r.multinets.empty()) r.warnings.push_back("no global multinets");
  if (arr.is_abstract()) r.warnings.push_back("abstract arrangement: pencil realization skipped");
  return r;
}

inline std::string to_human(const AnalysisReport& r) {
  std::ostringstream os;
  if (!r.source.empty()) os << "source: " << r.source << "\n";
  os << "lines: " << r.line_count << (r.abstract ? " (abstract)" : "") << ", field Q(z_" << r.order << ")\n";
  os << "lattice: " << r.lattice_points << " points, " << r.multiple_points << " multiple;";
  for (const auto& [m, c] : r.multiplicity_histogram) os << " m=" << m << ":" << c;
  os << "\n";
  for (std::size_t i = 0; i < r.multinets.size(); ++i) {
    const auto& m = r.multinets[i];
    os << "\nmultinet " << i << ": (" << m.k << "," << m.d << ")-" << (m.net ? "net" : "multinet") << "\n";
    for (std::size_t c = 0; c < m.classes.size(); ++c) {
      os << "  class " << c + 1 << ":";
      for (const auto& l : m.classes[c]) {
        os << " " << l;
        for (std::size_t j = 0; j < r.labels.size(); ++j)
          if (r.labels[j] == l && m.multiplicity[j] != 1) os << "^" << m.multiplicity[j];
      }
      os << "\n";
    }
    os << "  base locus (" << m.base.size() << " points):";
    for (std::size_t p = 0; p < m.base.size(); ++p) os << " " << m.base[p] << "x" << m.weights[p];
    os << "\n";
    os << "  axioms: " << (m.axioms_ok ? "pass" : "FAIL") << "\n";
    os << "  resonance: " << m.resonance.size() << " vectors, " << (m.isotropic ? "isotropic" : "NOT isotropic")
       << "\n";
    os << "  exponents:";
    for (long e : m.exponents) os << " " << e;
    os << (m.exponents_ok ? "" : " (violates coprimality)") << "\n";
    if (m.pencil) {
      os << "  pencil: " << m.pencil->verdict << "\n";
      for (std::size_t f = 0; f < m.pencil->fibers.size(); ++f)
        os << "    C" << f + 1 << " = " << m.pencil->fibers[f] << "\n";
      for (const auto& rel : m.pencil->relations) os << "    " << rel << "\n";
    }
    os << "  euler: lhs " << m.rh.lhs << ", rhs " << m.rh.rhs << ", deficit " << m.rh.deficit
       << (m.rh.complete ? " (complete)" : " (not complete)") << "\n";
    os << "  local test: " << (m.local_test.passed ? "pass" : "fails at");
    for (const auto& p : m.local_test.failing_points) os << " " << p;
    os << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace mnet
