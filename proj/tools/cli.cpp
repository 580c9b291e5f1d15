#include "cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "donaldson/catalog.hpp"
#include "donaldson/error.hpp"
#include "donaldson/json_io.hpp"

namespace donaldson::cli {

namespace {

/// Bad flags or inputs the user can fix; exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Format {
  bool table = false;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---- table renderers -------------------------------------------------------

void print_exp_table(std::ostream& out, const ExpPolynomial& f) {
  out << "marker " << exp_to_json(f).at("marker").get<std::string>();
  if (f.marker().sign != QuadSign::None) out << " (D^2 = " << to_string(f.marker().square) << ")";
  out << "\n";
  for (const auto& [lambda, c] : f.terms()) {
    out << std::left << std::setw(16) << to_string(c) << " e^(" << to_string(lambda) << " t)\n";
  }
}

void print_entry_table(std::ostream& out, const CatalogEntry& e) {
  const Lattice& l = *e.lattice();
  out << e.name << "  (" << e.recipe << ")  " << e.provenance << "\n";
  out << "lattice " << l.name() << ", rank " << l.rank() << ", b+ = " << l.b_plus()
      << ", b1 = " << l.b_one() << "\n";
  for (const auto& s : e.surfaces) {
    out << "surface " << s.label << ": genus " << s.surface.genus() << ", w = " << s.w_label
        << "\n";
  }
  for (const auto& entry : e.series.entries()) {
    out << std::left << std::setw(12) << to_string(entry.a) << " "
        << coords_to_json(entry.k.coords()).dump() << "\n";
  }
}

void print_glued_table(std::ostream& out, const GluedSeries& gs) {
  out << to_string(gs.kind) << " gluing of " << gs.spec.left.entry.recipe << " and "
      << gs.spec.right.entry.recipe << " along genus " << gs.spec.genus << ", "
      << gs.entries.size() << " entries\n";
  for (const auto& e : gs.entries) {
    out << std::setw(4) << e.j << " " << std::setw(4) << e.k << "  " << to_string(e.sector)
        << "  " << to_string(e.coeff) << "\n";
  }
}

// ---- shared helpers --------------------------------------------------------

GluingSide side_for(const CatalogEntry& entry, const std::string& label, int genus) {
  return make_side(entry, label.empty() ? entry.surface_of_genus(genus).label : label);
}

// ---- check suites ----------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

std::string describe(const std::vector<SeriesEntry>& bad) {
  std::string s;
  for (std::size_t i = 0; i < bad.size() && i < 3; ++i) {
    if (!s.empty()) s += ", ";
    s += coords_to_json(bad[i].k.coords()).dump();
  }
  if (bad.size() > 3) s += ", ...";
  return s;
}

std::vector<SuiteResult> run_suites(const CatalogEntry& entry) {
  using Task = std::function<SuiteResult()>;
  std::vector<Task> tasks;
  const DonaldsonSeries& series = entry.series;

  tasks.push_back([&] {
    auto bad = non_characteristic_entries(series);
    return SuiteResult{"characteristic basic classes", bad.empty(),
                       bad.empty() ? "" : "not characteristic: " + describe(bad)};
  });
  tasks.push_back([&] {
    auto bad = involution_violations(series);
    return SuiteResult{"K -> -K involution sign rule", bad.empty(),
                       bad.empty() ? "" : "mirror coefficient wrong for " + describe(bad)};
  });
  for (const auto& s : entry.surfaces) {
    tasks.push_back([&] {
      auto rep = check_adjunction(series, s.surface);
      return SuiteResult{"adjunction inequality on " + s.label, rep.holds,
                         rep.holds ? "" : "violated by " + describe(rep.violators)};
    });
    tasks.push_back([&] {
      const HClass w = entry.w_for(s);
      const auto probes = default_probes(entry.lattice(), s.surface);
      const int expected = series.empty() ? 0 : 1;
      SuiteResult r{"simple type, (x^2-4) annihilation on " + s.label, true, ""};
      try {
        const int order = finite_type_order(series, w, s.surface, probes);
        if (order != expected) {
          r.passed = false;
          r.detail = "finite type order " + std::to_string(order);
        }
      } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
      }
      return r;
    });
    tasks.push_back([&] {
      const HClass w = entry.w_for(s);
      SuiteResult r{"series parity matches d0 on " + s.label, true, ""};
      const long d0 = d_zero(w);
      for (const auto& d : default_probes(entry.lattice(), s.surface)) {
        if (!has_parity(eval_insert(series, w, s.surface, d, 0, 0), d0)) {
          r.passed = false;
          r.detail = "parity broken at D = " + coords_to_json(d.coords()).dump();
          break;
        }
      }
      return r;
    });
    if (s.surface.genus() >= 2) {
      tasks.push_back([&] {
        SuiteResult r{"genus relation polynomial on " + s.label, true, ""};
        const RelationPoly z = relation_poly(s.surface.genus());
        const HClass w = entry.w_for(s);
        for (const HClass& tw : {w, w + s.surface.cls()}) {
          for (const auto& d : default_probes(entry.lattice(), s.surface)) {
            if (pairing(d, s.surface.cls()) != 1) continue;
            if (!apply_relation(series, tw, s.surface, z, d).value.is_zero()) {
              r.passed = false;
              r.detail = "non-zero at D = " + coords_to_json(d.coords()).dump();
              return r;
            }
          }
        }
        return r;
      });
    }
  }

  std::vector<std::future<SuiteResult>> futures;
  futures.reserve(tasks.size());
  for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
  std::vector<SuiteResult> results;
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

// ---- fit references --------------------------------------------------------

std::vector<ReferenceTriple> default_references(const CatalogStore& store, int g) {
  std::vector<ReferenceTriple> refs;
  const CatalogEntry b = store.get("bg:" + std::to_string(g));
  const CatalogEntry c = store.get("cg:" + std::to_string(g));
  const GluingSpec spec = make_spec(b, b, g);
  const SplitClass d{unit_probe(b, b.surface("Sigma")), unit_probe(b, b.surface("Sigma")),
                     Rational(1)};
  refs.push_back(target_reference(spec, d, c, "Sigma", unit_probe(c, c.surface("Sigma"))));
  for (int gp = 1; gp < g; ++gp) {
    const CatalogEntry x = store.get("dia2:" + std::to_string(gp) + ":" + std::to_string(g));
    const GluingSpec s2 = make_spec(x, x, g);
    const HClass p = unit_probe(x, x.surface_of_genus(g));
    refs.push_back(glued_reference(s2, {p, p, Rational(1)}));
  }
  return refs;
}

ReferenceTriple parse_reference(const CatalogStore& store, const std::string& text, int g) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ',');) parts.push_back(trim(p));
  if (parts.size() != 2 && parts.size() != 3) {
    throw UsageError("reference must be LEFT,RIGHT or LEFT,RIGHT,TARGET: " + text);
  }
  const CatalogEntry l = store.get(parts[0]);
  const CatalogEntry r = store.get(parts[1]);
  const GluingSpec spec = make_spec(l, r, g);
  const SplitClass d{unit_probe(l, l.surface_of_genus(g)), unit_probe(r, r.surface_of_genus(g)),
                     Rational(1)};
  if (parts.size() == 2) return glued_reference(spec, d);
  const CatalogEntry t = store.get(parts[2]);
  const LabeledSurface& ts = t.surface_of_genus(g);
  return target_reference(spec, d, t, ts.label, unit_probe(t, ts));
}

}  // namespace

HClass parse_class(const std::string& text, const LatticePtr& lattice) {
  const std::string s = trim(text);
  if (s.empty()) throw UsageError("empty class expression");
  if (s.front() == '[') {
    try {
      return HClass(lattice, coords_from_json(Json::parse(s)));
    } catch (const Json::exception& e) {
      throw UsageError("bad coordinate array '" + s + "': " + e.what());
    }
  }

  HClass acc = HClass::zero(lattice);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || s[pos] == ' ')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = trim(s.substr(pos, end - pos));
    if (term.empty()) throw UsageError("dangling sign in class expression '" + s + "'");
    pos = end;

    Rational coeff(sign);
    std::string label = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coeff *= parse_rational(trim(term.substr(0, star)));
      label = trim(term.substr(star + 1));
    } else if (!std::isalpha(static_cast<unsigned char>(term.front()))) {
      if (sgn(parse_rational(term)) != 0) {
        throw UsageError("bare number '" + term + "' in class expression; use N*LABEL");
      }
      continue;
    }
    if (lattice->find(label) == nullptr) {
      throw UsageError("lattice " + lattice->name() + " has no class named '" + label + "'");
    }
    acc += coeff * HClass::named(lattice, label);
  }
  return acc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Donaldson series, fibre-sum gluing and catalog manifolds", "donaldson"};
  app.require_subcommand(1);
  app.fallthrough();
  Format fmt;
  auto* table = app.add_flag("--table", fmt.table, "Plain-text table output");
  app.add_flag("--json", "JSON output (default)")->excludes(table);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List, show or export catalog entries");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "Recipes stored in the catalog directory");
  auto* cat_show = catalog->add_subcommand("show", "Show an entry by name or recipe");
  std::string show_name;
  cat_show->add_option("name", show_name, "K3, S4, B3, C3, dia2_1_3, or a recipe")->required();
  auto* cat_export = catalog->add_subcommand("export", "Write canonical entry files");
  std::vector<std::string> export_names;
  std::string export_dir;
  cat_export->add_option("names", export_names, "Entries to export (default: standard set)");
  cat_export->add_option("--dir", export_dir, "Target directory (default: catalog directory)");

  // build
  auto* build = app.add_subcommand("build", "Derive an entry from its recipe");
  std::string build_recipe_text;
  build->add_option("recipe", build_recipe_text, "elliptic:n | bg:g | dia2:g':g | cg:g")
      ->required();

  // glue
  auto* glue_cmd = app.add_subcommand("glue", "Fibre sum of two entries along genus-g surfaces");
  std::string glue_left, glue_right, glue_ls, glue_rs;
  int glue_g = 0;
  std::optional<long> glue_wsq;
  bool glue_torus_flag = false;
  glue_cmd->add_option("--left", glue_left, "Left entry")->required();
  glue_cmd->add_option("--right", glue_right, "Right entry")->required();
  glue_cmd->add_option("--g", glue_g, "Genus of the gluing surface")->required();
  glue_cmd->add_option("--w-sq", glue_wsq, "w^2 of the glued w (default w1^2 + w2^2)");
  glue_cmd->add_flag("--torus", glue_torus_flag, "Genus-1 variant");
  glue_cmd->add_option("--left-surface", glue_ls, "Surface label on the left entry");
  glue_cmd->add_option("--right-surface", glue_rs, "Surface label on the right entry");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a glued series on a split class");
  std::string eval_file, eval_d1, eval_d2, eval_sd;
  std::optional<unsigned> eval_order;
  bool eval_float = false;
  eval->add_option("--glued", eval_file, "Output file of `glue`")->required();
  eval->add_option("--d1", eval_d1, "D1 on the left lattice")->required();
  eval->add_option("--d2", eval_d2, "D2 on the right lattice")->required();
  eval->add_option("--sigma-d", eval_sd, "Sigma.D (rational)")->required();
  eval->add_option("--expand-order", eval_order, "Also print Taylor coefficients up to t^N");
  eval->add_flag("--float", eval_float, "Add floating-point values of the expansion");

  // check
  auto* check = app.add_subcommand("check", "Run the identity suites on an entry");
  std::string check_entry;
  check->add_option("--entry", check_entry, "Entry name, recipe or entry JSON file")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "Fit the diagonal pairing matrix from reference data");
  int fit_g = 0;
  std::vector<std::string> fit_refs;
  fit->add_option("--g", fit_g, "Genus")->required()->check(CLI::Range(2, 64));
  fit->add_option("--references", fit_refs, "LEFT,RIGHT[,TARGET] triples");

  // conjecture
  auto* conj = app.add_subcommand(
      "conjecture", "EXPERIMENTAL: conjectural gluing of stabilized series");
  std::string conj_left, conj_right;
  int conj_g = 0;
  std::optional<long> conj_wsq;
  conj->add_option("--left", conj_left, "Entry JSON file of the stabilized left side")->required();
  conj->add_option("--right", conj_right, "Entry JSON file of the stabilized right side")
      ->required();
  conj->add_option("--g", conj_g, "Genus")->required();
  conj->add_option("--w-sq", conj_wsq, "w^2 of the glued w (default w1^2 + w2^2)");

  std::vector<std::string> argv_store{"donaldson"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const CatalogStore store;

    if (*catalog) {
      if (*cat_list) {
        const auto recipes = store.list();
        if (fmt.table) {
          for (const auto& r : recipes) out << r << "\n";
        } else {
          emit(out, Json(recipes));
        }
      } else if (*cat_show) {
        const CatalogEntry e = store.get(show_name);
        if (fmt.table) print_entry_table(out, e);
        else emit(out, entry_to_json(e));
      } else if (*cat_export) {
        const CatalogStore target(export_dir.empty() ? store.dir()
                                                     : std::filesystem::path(export_dir));
        const auto names = export_names.empty() ? standard_recipes() : export_names;
        Json written = Json::array();
        for (const auto& n : names) {
          written.push_back(target.export_entry(build_recipe(n)).string());
        }
        if (fmt.table) {
          for (const auto& w : written) out << w.get<std::string>() << "\n";
        } else {
          emit(out, written);
        }
      }
      return kOk;
    }

    if (*build) {
      const CatalogEntry e = build_recipe(build_recipe_text);
      if (fmt.table) print_entry_table(out, e);
      else emit(out, entry_to_json(e));
      return kOk;
    }

    if (*glue_cmd) {
      const CatalogEntry l = store.get(glue_left);
      const CatalogEntry r = store.get(glue_right);
      GluingSpec spec{side_for(l, glue_ls, glue_g), side_for(r, glue_rs, glue_g), glue_g, 0};
      spec.w_square = glue_wsq ? Rational(*glue_wsq) : square(spec.left.w) + square(spec.right.w);
      const GluedSeries gs = glue_torus_flag ? glue_torus(spec) : glue(spec);
      if (fmt.table) print_glued_table(out, gs);
      else emit(out, glued_to_json(gs));
      return kOk;
    }

    if (*eval) {
      const GluedSeries gs = glued_from_json(
          read_json_file(eval_file), [&](const std::string& n) { return store.get(n); });
      const SplitClass d{parse_class(eval_d1, gs.spec.left.series().lattice()),
                         parse_class(eval_d2, gs.spec.right.series().lattice()),
                         parse_rational(eval_sd)};
      const ExpPolynomial value = eval_glued(gs, d);
      Json result{{"value", exp_to_json(value)}};
      if (eval_order) {
        const auto coeffs = expand(value, *eval_order);
        Json exact = Json::array(), approx = Json::array();
        for (const auto& c : coeffs) {
          exact.push_back(to_json(c));
          approx.push_back(Json::array({c.re().get_d(), c.im().get_d()}));
        }
        result["expansion"] = exact;
        if (eval_float) result["expansion_float"] = approx;
      }
      if (fmt.table) {
        print_exp_table(out, value);
        if (eval_order) {
          for (std::size_t n = 0; n < result["expansion"].size(); ++n) {
            out << "t^" << n << ": " << result["expansion"][n].get<std::string>();
            if (eval_float) {
              out << "  (" << result["expansion_float"][n][0].get<double>() << ", "
                  << result["expansion_float"][n][1].get<double>() << ")";
            }
            out << "\n";
          }
        }
      } else {
        emit(out, result);
      }
      return kOk;
    }

    if (*check) {
      // An entry file is checked as is; names and recipes are re-derived.
      const CatalogEntry e = std::filesystem::is_regular_file(check_entry)
                                 ? entry_from_json(read_json_file(check_entry))
                                 : store.get(check_entry);
      const auto results = run_suites(e);
      bool all = true;
      Json suites = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        Json s{{"name", r.name}, {"passed", r.passed}};
        if (!r.passed) s["detail"] = r.detail;
        suites.push_back(s);
        if (!r.passed) err << "FAILED " << r.name << ": " << r.detail << "\n";
      }
      if (fmt.table) {
        for (const auto& r : results) {
          out << (r.passed ? "PASS " : "FAIL ") << r.name;
          if (!r.passed) out << ": " << r.detail;
          out << "\n";
        }
      } else {
        emit(out, Json{{"entry", e.recipe}, {"passed", all}, {"suites", suites}});
      }
      return all ? kOk : kVerificationFailed;
    }

    if (*fit) {
      std::vector<ReferenceTriple> refs;
      if (fit_refs.empty()) {
        refs = default_references(store, fit_g);
      } else {
        for (const auto& r : fit_refs) refs.push_back(parse_reference(store, r, fit_g));
      }
      std::vector<int> alphas;
      for (int a = 1; a <= 2 * fit_g - 1; ++a) alphas.push_back(a);
      const PairingDiagonal m = fit_diagonal(refs, alphas);
      if (fmt.table) {
        for (const auto& [alpha, f] : m) {
          out << "M_" << alpha << alpha << ": ";
          print_exp_table(out, f);
        }
      } else {
        emit(out, fit_to_json(m));
      }
      return kOk;
    }

    if (*conj) {
      CatalogEntry l = entry_from_json(read_json_file(conj_left));
      CatalogEntry r = entry_from_json(read_json_file(conj_right));
      validate_entry(l);
      validate_entry(r);
      GluingSpec spec{side_for(l, "", conj_g), side_for(r, "", conj_g), conj_g, 0};
      spec.w_square = conj_wsq ? Rational(*conj_wsq) : square(spec.left.w) + square(spec.right.w);
      err << "note: conjectural gluing formula, experimental output\n";
      const GluedSeries gs = glue_conjectural(spec);
      if (fmt.table) print_glued_table(out, gs);
      else emit(out, glued_to_json(gs));
      return kOk;
    }
  } catch (const InexactDivision& e) {
    err << "verification failed (pairing matrix fit): " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const InsufficientData& e) {
    err << "verification failed (pairing matrix fit): " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownEntry& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const LatticeMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace donaldson::cli
