#pragma once

/// @file cli.hpp
/// @brief Command-line driver, kept in a header so tests can call run()
/// in-process.
///
/// Exit status: 0 success / all checks passed, 1 a check failed, 2 usage or
/// input error. Reports go to @p out, diagnostics to @p err.

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evenchi/euler.hpp"
#include "evenchi/facet_io.hpp"
#include "evenchi/generators.hpp"
#include "evenchi/relations.hpp"
#include "evenchi/report_json.hpp"

namespace evenchi::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  bool json = false;
  std::optional<std::string> input;
  std::optional<std::string> family;
  std::optional<int> dim;
  int max_n = 8;
  std::optional<std::string> face;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> kCommands = {
      "fvector", "hvector", "euler",  "check-ds", "check-lemma1", "check-semi-eulerian",
      "link",    "boundary", "double", "generate", "beta-table",   "verify"};
  return kCommands;
}

inline const std::vector<std::string>& families() {
  static const std::vector<std::string> kFamilies = {"simplex-boundary", "cross-polytope", "simplex", "ball",
                                                     "torus7",           "rp2-6",          "bowtie"};
  return kFamilies;
}

inline SimplicialComplex generate(const std::string& family, std::optional<int> dim) {
  auto need_dim = [&](int lo) {
    if (!dim) throw UsageError("family '" + family + "' needs --dim");
    if (*dim < lo) throw UsageError("family '" + family + "' needs --dim >= " + std::to_string(lo));
    return *dim;
  };
  if (family == "simplex-boundary") return simplex_boundary(need_dim(0));
  if (family == "cross-polytope") return cross_polytope_boundary(need_dim(0));
  if (family == "simplex") return simplex(need_dim(0));
  if (family == "ball") return cone(simplex_boundary(need_dim(1) - 1));
  if (family == "torus7") return torus_7();
  if (family == "rp2-6") return projective_plane_6();
  if (family == "bowtie") return bowtie();
  throw UsageError("unknown generator family '" + family + "'");
}

inline SimplicialComplex load_input(const RunConfig& cfg) {
  if (cfg.input && cfg.family) throw UsageError("give either --input or --family, not both");
  if (cfg.family) return generate(*cfg.family, cfg.dim);
  if (!cfg.input) throw UsageError("command '" + cfg.command + "' needs --input <path> or --family <name>");
  std::ifstream in(*cfg.input);
  if (!in) throw UsageError("cannot open '" + *cfg.input + "'");
  try {
    return read_complex(in);
  } catch (const FacetParseError& e) {
    throw UsageError(*cfg.input + ":" + e.what());
  }
}

inline std::string join_counts(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

inline void print_report(std::ostream& out, const CheckReport& r) {
  out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << '\n';
  for (const auto& it : r.items) {
    out << "  [" << (it.ok ? "ok" : "FAIL") << "] " << it.description << ": expected " << it.expected
        << ", actual " << it.actual << '\n';
  }
}

inline void print_comparison(std::ostream& out, const EulerComparison& c) {
  out << "classical: " << c.classical << '\n';
  if (c.even_formula) out << "even-face formula: " << *c.even_formula << '\n';
  if (c.boundary_formula) out << "boundary formula: " << *c.boundary_formula << '\n';
  out << "agree: " << (c.agree ? "yes" : "no") << '\n';
}

struct VerifyResult {
  std::string mode;  // "closed" or "with-boundary"
  std::vector<CheckReport> checks;
  EulerComparison euler;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

/// The full identity suite. Closed complexes get the link condition,
/// Dehn-Sommerville, the reflection identity and (in even dimension) the
/// even-face formula. Pure complexes with boundary get the relative link
/// condition, the boundary's own link condition, the boundary formula, and
/// the double identities when the double can be built.
inline VerifyResult verify_complex(const SimplicialComplex& c) {
  VerifyResult res;
  const int d = c.dimension();
  const bool pure = is_pure(c);
  const bool has_boundary = pure && d >= 1 && !boundary(c).empty();
  res.euler = cross_validate(c);

  CheckReport purity{"purity", true, {}};
  purity.add("all facets have dimension " + std::to_string(d), Rational(1), Rational(pure ? 1 : 0));
  res.checks.push_back(purity);

  if (!has_boundary) {
    res.mode = "closed";
    res.checks.push_back(is_semi_eulerian(c));
    res.checks.push_back(check_dehn_sommerville(c));
    res.checks.push_back(check_lemma1(c));
    if (d % 2 == 0) {
      CheckReport even{"even-face-formula", true, {}};
      even.add("sum beta_n f_n equals classical chi", Rational(res.euler.classical), euler_even(c));
      res.checks.push_back(even);
    } else {
      res.notes.push_back("odd dimension " + std::to_string(d) + ": even-face formula not applicable");
    }
    return res;
  }

  res.mode = "with-boundary";
  const SimplicialComplex bd = boundary(c);
  res.checks.push_back(check_relative_semi_eulerian(c));
  CheckReport bd_check = is_semi_eulerian(bd);
  bd_check.name = "boundary-semi-eulerian";
  res.checks.push_back(bd_check);
  if (d % 2 == 0) {
    CheckReport corollary{"boundary-formula", true, {}};
    corollary.add("sum beta_n (f_n(M) - f_n(dM)/2) equals classical chi", Rational(res.euler.classical),
                  euler_with_boundary(c));
    res.checks.push_back(corollary);
    res.notes.push_back("closed-manifold formula on this complex gives " + euler_even(c).str() +
                        " against classical " + std::to_string(res.euler.classical) +
                        " (not applicable: the complex has a boundary)");
  } else {
    res.notes.push_back("odd dimension " + std::to_string(d) + ": boundary formula not applicable");
  }

  std::optional<SimplicialComplex> dbl;
  try {
    dbl = double_along_boundary(c);
  } catch (const std::invalid_argument& e) {
    res.notes.push_back(std::string("double skipped: ") + e.what());
  }
  if (dbl) {
    CheckReport dcheck{"double", true, {}};
    const FVector fm = f_vector(c);
    const FVector fd = f_vector(*dbl);
    for (int n = 0; n <= d; ++n) {
      const auto expected = 2 * static_cast<std::int64_t>(fm[n]) - static_cast<std::int64_t>(bd.num_faces(n));
      dcheck.add("f_" + std::to_string(n) + "(double) = 2 f_" + std::to_string(n) + "(M) - f_" +
                     std::to_string(n) + "(dM)",
                 Rational(expected), Rational(static_cast<std::int64_t>(fd[n])));
    }
    dcheck.add("double is semi-Eulerian", Rational(1), Rational(is_semi_eulerian(*dbl).passed ? 1 : 0));
    if (d % 2 == 0)
      dcheck.add("even-face formula on double equals 2 chi(M)", Rational(2) * euler_with_boundary(c),
                 euler_even(*dbl));
    res.checks.push_back(dcheck);
  }
  return res;
}

namespace detail {

inline std::optional<Face> parse_face(const std::string& text) {
  std::istringstream in(text);
  try {
    auto facets = parse_facets(in);
    if (facets.size() != 1) return std::nullopt;
    return Face::from_unsorted(facets.front());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline int emit_complex(const RunConfig& cfg, const SimplicialComplex& c, std::ostream& out) {
  if (cfg.json) {
    out << facets_to_json(c).dump(2) << '\n';
  } else if (c.empty()) {
    out << "# empty complex\n";
  } else {
    write_facets(out, c);
  }
  return kOk;
}

inline int emit_check(const RunConfig& cfg, const CheckReport& r, std::ostream& out) {
  if (cfg.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    print_report(out, r);
  }
  return r.passed ? kOk : kCheckFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
  const std::string& cmd = cfg.command;

  if (cmd == "beta-table") {
    const BetaTable table = beta_table(cfg.max_n);
    if (cfg.json) {
      Json rows = Json::array();
      for (const auto& [n, b] : table.values) rows.push_back(Json{{"n", n}, {"beta", b.str()}});
      out << Json{{"beta", std::move(rows)}}.dump(2) << '\n';
    } else {
      for (const auto& [n, b] : table.values) out << n << ": " << b << '\n';
    }
    return kOk;
  }

  if (cmd == "generate") {
    if (!cfg.family) throw UsageError("generate needs --family <name>");
    return emit_complex(cfg, generate(*cfg.family, cfg.dim), out);
  }

  const SimplicialComplex c = load_input(cfg);

  if (cmd == "fvector") {
    const FVector fv = f_vector(c);
    if (cfg.json) {
      out << to_json(fv).dump(2) << '\n';
    } else {
      std::vector<std::string> parts;
      for (auto v : fv.counts()) parts.push_back(std::to_string(v));
      out << "f = " << join_counts(parts) << '\n';
    }
    return kOk;
  }
  if (cmd == "hvector") {
    const HVector h = h_vector(f_vector(c));
    if (cfg.json) {
      out << to_json(h).dump(2) << '\n';
    } else {
      std::vector<std::string> parts;
      for (const auto& v : h.entries) parts.push_back(v.str());
      out << "h = " << join_counts(parts) << '\n';
    }
    return kOk;
  }
  if (cmd == "euler") {
    const EulerComparison cmp = cross_validate(c);
    if (cfg.json) {
      out << to_json(cmp).dump(2) << '\n';
    } else {
      print_comparison(out, cmp);
    }
    return cmp.agree ? kOk : kCheckFailed;
  }
  if (cmd == "check-ds") return emit_check(cfg, check_dehn_sommerville(c), out);
  if (cmd == "check-lemma1") return emit_check(cfg, check_lemma1(c), out);
  if (cmd == "check-semi-eulerian") return emit_check(cfg, is_semi_eulerian(c), out);

  if (cmd == "link") {
    if (!cfg.face) throw UsageError("link needs --face \"v0 v1 ...\"");
    auto sigma = parse_face(*cfg.face);
    if (!sigma) throw UsageError("malformed --face '" + *cfg.face + "'");
    if (!c.contains(*sigma)) throw UsageError("face " + sigma->str() + " is not in the complex");
    return emit_complex(cfg, link(c, *sigma), out);
  }
  if (cmd == "boundary") {
    if (!is_pure(c) || c.dimension() < 1) throw UsageError("boundary needs a pure complex of dimension >= 1");
    return emit_complex(cfg, boundary(c), out);
  }
  if (cmd == "double") {
    try {
      return emit_complex(cfg, double_along_boundary(c), out);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  // verify
  const VerifyResult res = verify_complex(c);
  if (cfg.json) {
    Json checks = Json::array();
    for (const auto& r : res.checks) checks.push_back(to_json(r));
    Json doc{{"command", "verify"},
             {"dimension", c.dimension()},
             {"mode", res.mode},
             {"passed", res.passed()},
             {"checks", std::move(checks)},
             {"euler", to_json(res.euler)},
             {"notes", res.notes}};
    out << doc.dump(2) << '\n';
  } else {
    out << "dimension: " << c.dimension() << " (" << res.mode << ")\n";
    for (const auto& r : res.checks) print_report(out, r);
    print_comparison(out, res.euler);
    for (const auto& n : res.notes) out << "note: " << n << '\n';
    out << "verdict: " << (res.passed() ? "PASS" : "FAIL") << '\n';
  }
  return res.passed() ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Euler characteristic and Dehn-Sommerville checks for simplicial complexes", "evenchi"};
  app.add_option("command", cfg.command, "Command to run")->required()->check(CLI::IsMember(commands()));
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--input", cfg.input, "Facet file");
  app.add_option("--family", cfg.family, "Generator family")->check(CLI::IsMember(families()));
  app.add_option("--dim", cfg.dim, "Dimension parameter for the generator");
  app.add_option("--max-n", cfg.max_n, "Largest index for beta-table")->check(CLI::Range(-1, 1000));
  app.add_option("--face", cfg.face, "Face for 'link', as space-separated vertex ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    return detail::dispatch(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"evenchi"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace evenchi::cli
