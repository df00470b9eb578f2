#pragma once

// Command-line front end.  `run` is the whole program; main only forwards.
//
// Exit codes: 0 ok, 2 parse error in an arrangement file, 3 search cap
// exceeded, 4 invalid input (including bad command-line usage).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mnet/arrangement_io.hpp"
#include "mnet/cartan.hpp"
#include "mnet/corpus.hpp"
#include "mnet/criteria.hpp"
#include "mnet/multinet.hpp"
#include "mnet/osalgebra.hpp"
#include "mnet/pencil.hpp"
#include "mnet/render.hpp"
#include "mnet/report.hpp"

namespace mnet::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kCap = 3, kInvalid = 4 };

struct Options {
  std::string format = "human";
  std::uint64_t cap = kDefaultCap;
  unsigned order = 1;
  std::string file;
  std::string classes;
  bool weak = false;
  std::size_t multinet_index = 0;
  std::vector<std::string> extra_lines;
  std::string base;
  std::string output;
  double window = 3.0;
  std::string corpus_name;
};

namespace detail {

/// "corpus:<name>" reads a built-in entry, "-" reads stdin, anything else a file.
inline MultiArrangement load(const Options& o, std::istream& in) {
  if (o.file.rfind("corpus:", 0) == 0) return corpus::entry(o.file.substr(7)).arrangement;
  std::string text;
  if (o.file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.file);
    if (!f) throw InvalidInput("cannot read '" + o.file + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_arrangement(text, o.order);
}

inline bool machine(const Options& o) { return o.format == "machine"; }

inline void emit(std::ostream& out, const Options& o, const Json& j, const std::string& human) {
  if (machine(o))
    out << j.dump(2) << "\n";
  else
    out << human;
}

inline Multinet pick(const std::vector<Discovery>& found, std::size_t index) {
  if (found.empty()) throw InvalidInput("no global multinets");
  if (index >= found.size())
    throw InvalidInput("multinet index " + std::to_string(index) + " out of range (found " +
                       std::to_string(found.size()) + ")");
  return found[index].multinet;
}

inline std::string class_line(const WeakMultinet& mn, const MultiArrangement& arr, std::size_t i) {
  std::string s;
  for (std::size_t l : mn.classes[i]) {
    s += (s.empty() ? "" : " ") + arr.labels()[l];
    if (mn.multiplicity[l] != 1) s += "^" + std::to_string(mn.multiplicity[l]);
  }
  return s;
}

/// "a,b^2;c,d;e" -> classes by label with optional multiplicities.
inline WeakMultinet parse_classes(const std::string& spec, const MultiArrangement& arr, const IncidenceLattice& lat) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<long> mult = arr.multiplicities();
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::size_t> cls;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
      if (a == std::string::npos) continue;
      item = item.substr(a, b - a + 1);
      std::string label = item;
      long m = -1;
      if (const auto caret = item.rfind('^'); caret != std::string::npos && arr.index_of(item) == std::nullopt) {
        label = item.substr(0, caret);
        try {
          m = std::stol(item.substr(caret + 1));
        } catch (const std::exception&) {
          throw InvalidInput("bad multiplicity in '" + item + "'");
        }
        if (m < 1) throw InvalidInput("bad multiplicity in '" + item + "'");
      }
      const auto idx = arr.index_of(label);
      if (!idx) throw InvalidInput("unknown line '" + label + "' in --classes");
      if (m > 0) mult[*idx] = m;
      cls.push_back(*idx);
    }
    classes.push_back(std::move(cls));
  }
  return make_weak(lat, std::move(classes), std::move(mult));
}

inline ProjLine parse_line_spec(const std::string& spec, unsigned order) {
  const auto fields = mnet::detail::split_fields(spec, ',', 1);
  if (fields.size() != 3) throw InvalidInput("--line needs three comma-separated coefficients");
  Triple t;
  for (int i = 0; i < 3; ++i) t[i] = parse_scalar(fields[i].text, order, 1, fields[i].column);
  if (is_zero(t)) throw InvalidInput("--line coefficients are all zero");
  return ProjLine(t, "extra");
}

inline Json verify_json(const VerifyReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return {{"ok", rep.ok()}, {"weak_ok", rep.weak_ok()}, {"checks", checks}};
}

inline std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks)
    os << "  " << (c.passed ? "pass " : "FAIL ") << c.name << (c.passed ? "" : ": " + c.witness) << "\n";
  return os.str();
}

inline Json multinet_json(const WeakMultinet& mn, const MultiArrangement& arr, const IncidenceLattice& lat) {
  Json classes = Json::array();
  for (const auto& c : mn.classes) {
    Json names = Json::array();
    for (std::size_t l : c) names.push_back(arr.labels()[l]);
    classes.push_back(names);
  }
  Json base = Json::array();
  for (std::size_t p : mn.base) base.push_back({{"point", lat.point(p).str()}, {"weight", mn.weights.at(p)}});
  return {{"k", mn.k()}, {"d", mn.degree}, {"classes", classes}, {"multiplicity", mn.multiplicity}, {"base", base}};
}

inline std::string multinet_text(const WeakMultinet& mn, const MultiArrangement& arr, const IncidenceLattice& lat) {
  std::ostringstream os;
  os << "(" << mn.k() << "," << mn.degree << ")-" << (mn.is_net() ? "net" : "multinet") << ", |X| = " << mn.base.size()
     << "\n";
  for (std::size_t i = 0; i < mn.k(); ++i) os << "  class " << i + 1 << ": " << class_line(mn, arr, i) << "\n";
  os << "  X:";
  for (std::size_t p : mn.base) os << " " << lat.point(p).str() << "x" << mn.weights.at(p);
  os << "\n";
  return os.str();
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  Options o;
  CLI::App app{"Multinets, resonance and pencils of line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--cap", o.cap, "Maximum number of base-locus subsets to search");
  app.add_option("--order", o.order, "Cyclotomic order for files without an 'order' header")
      ->check(CLI::Range(1u, 1000u));

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Arrangement file, '-' for stdin, or corpus:<name>")->required();
  };
  auto index_arg = [&](CLI::App* sub) {
    sub->add_option("--multinet-index", o.multinet_index, "Which discovered multinet (0-based)");
  };

  auto* analyze = app.add_subcommand("analyze", "Lattice, multinets, resonance, pencils and criteria");
  file_arg(analyze);
  auto* discover_cmd = app.add_subcommand("discover", "List all global multinets");
  file_arg(discover_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Check the multinet axioms for a given partition");
  file_arg(verify_cmd);
  verify_cmd->add_option("--classes", o.classes, "Classes as 'a,b;c,d^2;...' (labels, optional ^multiplicity)")
      ->required();
  verify_cmd->add_flag("--weak", o.weak, "Accept a weak multinet and report its refinement");
  auto* resonance = app.add_subcommand("resonance", "Isotropic subspace of a multinet");
  file_arg(resonance);
  index_arg(resonance);
  auto* pencil = app.add_subcommand("pencil", "Realize a multinet as a pencil of curves");
  file_arg(pencil);
  index_arg(pencil);
  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz count and completeness");
  file_arg(rh);
  index_arg(rh);
  auto* localtest = app.add_subcommand("localtest", "Local test at every base point");
  file_arg(localtest);
  index_arg(localtest);
  auto* transverse = app.add_subcommand("transverse", "Transversality of extra lines");
  file_arg(transverse);
  index_arg(transverse);
  transverse->add_option("--line", o.extra_lines, "Extra line 'a,b,c' (repeatable)")->required();
  auto* cartan = app.add_subcommand("cartan", "Q(X), its blocks and their types");
  file_arg(cartan);
  cartan->add_option("--base", o.base, "Comma-separated lattice point indices (default: all multiple points)");
  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in arrangements");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List entries");
  auto* corpus_emit = corpus_cmd->add_subcommand("emit", "Write an entry in the file format");
  corpus_emit->add_option("name", o.corpus_name)->required();
  corpus_emit->add_option("-o,--output", o.output, "Output file (default stdout)");
  auto* render = app.add_subcommand("render", "Draw the real lines as SVG");
  file_arg(render);
  index_arg(render);
  render->add_option("-o,--output", o.output, "SVG file (default stdout)");
  render->add_option("--window", o.window, "Half-width of the square window")->check(CLI::PositiveNumber);
  render->add_flag("--classes-from-multinet", "Colour lines by the chosen multinet");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (corpus_list->parsed()) {
      Json j = Json::array();
      std::ostringstream h;
      for (const auto& name : corpus::names()) {
        const auto e = corpus::entry(name);
        j.push_back({{"name", name}, {"lines", e.arrangement.size()}, {"note", e.note}});
        h << name << "  (" << e.arrangement.size() << " lines)  " << e.note << "\n";
      }
      detail::emit(out, o, j, h.str());
      return kOk;
    }
    if (corpus_emit->parsed()) {
      const auto e = corpus::entry(o.corpus_name);
      const std::string text = emit_arrangement(e.arrangement, e.name + ": " + e.note);
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream f(o.output);
        if (!f) throw InvalidInput("cannot write '" + o.output + "'");
        f << text;
      }
      return kOk;
    }

    const MultiArrangement arr = detail::load(o, in);
    const IncidenceLattice lat = build_lattice(arr);

    if (analyze->parsed()) {
      const auto rep = mnet::analyze(arr, o.file, o.cap);
      out << (detail::machine(o) ? to_machine(rep) : to_human(rep));
      return kOk;
    }
    if (discover_cmd->parsed()) {
      const auto found = discover(lat, o.cap);
      Json j = Json::array();
      std::ostringstream h;
      if (found.empty()) h << "no global multinets\n";
      for (std::size_t i = 0; i < found.size(); ++i) {
        j.push_back(detail::multinet_json(found[i].multinet, arr, lat));
        h << "multinet " << i << ": " << detail::multinet_text(found[i].multinet, arr, lat);
      }
      detail::emit(out, o, j, h.str());
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const WeakMultinet wm = detail::parse_classes(o.classes, arr, lat);
      const auto rep = verify(wm, lat);
      Json j = {{"multinet", detail::multinet_json(wm, arr, lat)}, {"report", detail::verify_json(rep)}};
      std::ostringstream h;
      h << detail::multinet_text(wm, arr, lat) << detail::verify_text(rep);
      h << (rep.ok() ? "multinet: yes\n" : rep.weak_ok() ? "weak multinet: yes, multinet: no\n" : "multinet: no\n");
      if (o.weak && rep.weak_ok()) {
        const Multinet refined = refine_weak(wm, lat);
        j["refinement"] = detail::multinet_json(refined, arr, lat);
        h << "refinement: " << detail::multinet_text(refined, arr, lat);
        if (!arr.is_abstract()) {
          const auto col = collinear([&] {
            std::vector<CurveVec> fs;
            for (const auto& c : wm.classes) fs.push_back(expand_class(arr, c, wm.multiplicity));
            return fs;
          }());
          j["fibers_collinear"] = col.collinear;
          h << "fibers of the given classes " << (col.collinear ? "lie" : "do not lie") << " on one pencil\n";
        }
      }
      detail::emit(out, o, j, h.str());
      return kOk;
    }
    if (cartan->parsed()) {
      std::vector<std::size_t> X;
      if (o.base.empty()) {
        X = multiple_points(lat);
      } else {
        std::stringstream ss(o.base);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            X.push_back(std::stoul(item));
          } catch (const std::exception&) {
            throw InvalidInput("bad point index '" + item + "' in --base");
          }
        }
      }
      const auto dec = cartan_decompose(lat, X);
      std::ostringstream h;
      h << "X:";
      for (std::size_t p : dec.J.points) h << " " << p << "=" << lat.point(p).str();
      h << "\nQ (rows/columns:";
      for (std::size_t l : dec.J.lines) h << " " << arr.labels()[l];
      h << ")\n" << dec.Q;
      Json blocks = Json::array();
      for (const auto& b : dec.blocks) {
        Json names = Json::array();
        std::string ns;
        for (std::size_t l : b.lines) {
          names.push_back(arr.labels()[l]);
          ns += (ns.empty() ? "" : " ") + arr.labels()[l];
        }
        Json ker = Json::array();
        std::string ks;
        for (const auto& x : b.classification.kernel) {
          ker.push_back(x.get_str());
          ks += (ks.empty() ? "" : ",") + x.get_str();
        }
        blocks.push_back({{"lines", names}, {"type", to_string(b.classification.type)}, {"kernel", ker}});
        h << "block {" << ns << "}: " << to_string(b.classification.type) << (ks.empty() ? "" : " u=(" + ks + ")")
          << "\n";
      }
      Json q = Json::array();
      for (std::size_t r = 0; r < dec.Q.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < dec.Q.cols(); ++c) row.push_back(dec.Q(r, c).get_si());
        q.push_back(row);
      }
      Json cols = Json::array();
      for (std::size_t l : dec.J.lines) cols.push_back(arr.labels()[l]);
      detail::emit(out, o, {{"base", dec.J.points}, {"lines", cols}, {"Q", q}, {"blocks", blocks}}, h.str());
      return kOk;
    }
    if (render->parsed()) {
      std::optional<Multinet> mn;
      if (render->count("--classes-from-multinet")) mn = detail::pick(discover(lat, o.cap), o.multinet_index);
      const auto res = render_svg(arr, o.window, mn ? &*mn : nullptr);
      if (o.output.empty()) {
        out << res.svg;
      } else {
        std::ofstream f(o.output);
        if (!f) throw InvalidInput("cannot write '" + o.output + "'");
        f << res.svg;
        out << "drew " << res.drawn_lines << " lines, marked " << res.marked_points << " multiple points\n";
      }
      for (const auto& w : res.warnings) err << "warning: " << w << "\n";
      return kOk;
    }

    // The remaining commands work on one discovered multinet.
    const Multinet mn = detail::pick(discover(lat, o.cap), o.multinet_index);
    if (resonance->parsed()) {
      const auto vs = resonance_from_multinet(mn, lat);
      const bool iso = isotropic_check(vs, lat);
      Json jv = Json::array();
      std::ostringstream h;
      h << "basis of the resonance component (" << vs.size() << " vectors, labels:";
      for (const auto& l : arr.labels()) h << " " << l;
      h << ")\n";
      for (const auto& v : vs) {
        Json row = Json::array();
        h << " ";
        for (const auto& x : v) {
          row.push_back(x.get_str());
          h << " " << x.get_str();
        }
        h << "\n";
        jv.push_back(row);
      }
      h << (iso ? "isotropic: yes\n" : "isotropic: NO\n");
      detail::emit(out, o, {{"vectors", jv}, {"isotropic", iso}, {"dimension", span_dimension(vs)}}, h.str());
      return kOk;
    }
    if (pencil->parsed()) {
      const auto pr = ceva_verdict(mn, arr, lat);
      Json fibers = Json::array(), rels = Json::array();
      std::ostringstream h;
      for (std::size_t i = 0; i < pr.fibers.size(); ++i) {
        fibers.push_back(pr.fibers[i].str());
        h << "C" << i + 1 << " = " << pr.fibers[i].str() << "\n";
      }
      for (const auto& r : pr.relations) {
        rels.push_back(relation_str(r));
        h << relation_str(r) << "\n";
      }
      h << pr.verdict << "\n";
      detail::emit(out, o,
                   {{"fibers", fibers},
                    {"relations", rels},
                    {"collinear", pr.collinear},
                    {"connected", pr.connected},
                    {"vanishes_on_base", pr.vanishes_on_base},
                    {"verdict", pr.verdict}},
                   h.str());
      return kOk;
    }
    if (rh->parsed()) {
      const auto r = euler_sides(mn, lat);
      std::ostringstream h;
      h << "lhs 3+|X| = " << r.lhs << "\nrhs = " << r.rhs << "\ndeficit = " << r.deficit
        << (r.complete ? " (complete)\n" : " (not complete)\n") << "fiber euler number = " << r.fiber_euler
        << "\nclass euler numbers:";
      for (long e : r.class_euler) h << " " << e;
      h << "\n";
      detail::emit(out, o,
                   {{"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"rhs_rewritten", r.rhs_rewritten},
                    {"deficit", r.deficit},
                    {"complete", r.complete},
                    {"fiber_euler", r.fiber_euler},
                    {"class_euler", r.class_euler}},
                   h.str());
      return kOk;
    }
    if (localtest->parsed()) {
      const auto rep = local_test(mn, lat);
      Json pts = Json::array();
      std::ostringstream h;
      for (const auto& e : rep.entries) {
        pts.push_back({{"point", lat.point(e.point).str()}, {"n_p", e.weight}, {"lhs", e.lhs}, {"rhs", e.rhs},
                       {"passed", e.passed}});
        h << lat.point(e.point).str() << "  n_p=" << e.weight << "  " << e.lhs << (e.passed ? " = " : " != ")
          << e.rhs << (e.passed ? "" : "  FAIL") << "\n";
      }
      h << (rep.passed() ? "local test passes\n" : "local test fails: multinet is not complete\n");
      detail::emit(out, o, {{"points", pts}, {"passed", rep.passed()}}, h.str());
      return kOk;
    }
    if (transverse->parsed()) {
      std::vector<ProjLine> extras;
      for (const auto& s : o.extra_lines) extras.push_back(detail::parse_line_spec(s, arr.order() > o.order ? arr.order() : o.order));
      const auto chain = transversality_chain(mn, arr, lat, extras);
      Json steps = Json::array();
      std::ostringstream h;
      for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& s = chain.steps[i];
        steps.push_back({{"line", o.extra_lines[i]}, {"outside_points", s.outside_points}, {"lhs", s.lhs},
                         {"rhs", s.rhs}, {"transverse", s.transverse}});
        h << o.extra_lines[i] << ": |points off X| = " << s.outside_points << ", 2-2d = " << s.lhs
          << ", points-kd = " << s.rhs << (s.transverse ? "  transverse\n" : "  not transverse\n");
      }
      if (!chain.meets_inside) h << chain.witness << "\n";
      h << (chain.transverse() ? "verdict: transverse\n" : "verdict: not transverse\n");
      detail::emit(out, o, {{"steps", steps}, {"meets_inside", chain.meets_inside}, {"transverse", chain.transverse()}},
                   h.str());
      return kOk;
    }
    err << "no command\n";
    return kInvalid;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
    return kParse;
  } catch (const SearchSpaceTooLarge& e) {
    err << "error: " << e.what() << " (raise --cap)\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace mnet::cli
