#include "sepcat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "sepcat/errors.hpp"
#include "sepcat/io.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kMalformed = 2;
constexpr int kInternal = 3;

struct Options {
  std::string file;
  std::string category;
  std::string field = "Q";
  std::string output;
  std::string certificate;
  std::string certificate_out;
  std::string bimodule = "canonical";
  std::string ses = "kernel-comp";
  std::string module;
  int max_degree = 2;
  Index budget = kDefaultCochainBudget;
  std::uint64_t seed = 0;
  Index dim_cap = 2;
};

template <class S>
std::string format_vector(const FinLinCat<S>& c, ObjectId from, ObjectId to, const Vector<S>& v) {
  std::string s;
  const auto& basis = c.hom(from, to);
  for (Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    if (!s.empty()) s += " + ";
    const std::string coeff = format_scalar(v(i), c.field());
    if (coeff != "1") s += coeff + " ";
    s += c.label(basis[static_cast<std::size_t>(i)]).name;
  }
  return s.empty() ? "0" : s;
}

template <class S>
void print_family(std::ostream& out, const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      const Matrix<S>& a = fam.block(x, y);
      if (is_zero_matrix(a)) continue;
      std::string terms;
      for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
          if (is_zero(a(i, k))) continue;
          if (!terms.empty()) terms += " + ";
          const std::string coeff = format_scalar(a(i, k), c.field());
          if (coeff != "1") terms += coeff + " ";
          terms += c.label(c.hom(y, x)[static_cast<std::size_t>(i)]).name + " (x) " +
                   c.label(c.hom(x, y)[static_cast<std::size_t>(k)]).name;
        }
      }
      out << "  a[" << c.object_name(x) << "][" << c.object_name(y) << "] = " << terms << "\n";
    }
  }
}

void print_violations(std::ostream& out, const std::string& what, const ValidationReport& r) {
  if (r.ok) {
    out << what << ": ok\n";
    return;
  }
  out << what << ": " << r.violations.size() << " violation(s)\n";
  for (const auto& v : r.violations) out << "  - " << v << "\n";
}

template <class S>
void require_valid(const FinLinCat<S>& c) {
  const ValidationReport r = validate_category(c);
  if (!r.ok) throw InvalidInput("invalid category: " + r.violations.front());
}

/// Loads a category file and calls fn(c) with the scalar type of its field.
template <class Fn>
int with_category(const std::string& path, Fn&& fn) {
  const Json j = read_json_file(path);
  return visit_field(category_field(j), [&]<class S>() {
    const FinLinCat<S> c = category_from_json<S>(j);
    return fn(c);
  });
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Options& o, std::ostream& out) {
  const Json j = read_json_file(o.file);
  if (j.is_object() && j.contains("morphisms")) {
    const FiniteCatPresentation p = presentation_from_json(j);
    const ValidationReport r = validate_presentation(p);
    print_violations(out, "presentation", r);
    if (r.ok) {
      const PresentationFlags f = classify_presentation(p);
      out << "groupoid: " << yes_no(f.is_groupoid) << "\ndelta: " << yes_no(f.is_delta)
          << "\ndiscrete: " << yes_no(f.is_discrete) << "\n";
    }
    return r.ok ? kYes : kNo;
  }
  if (j.is_object() && j.contains("homs")) {
    return visit_field(category_field(j), [&]<class S>() {
      const FinLinCat<S> c = category_from_json<S>(j);
      const ValidationReport r = validate_category(c);
      print_violations(out, "category", r);
      if (r.ok) out << "objects: " << c.object_count() << "\ntotal dimension: " << c.total_dim() << "\n";
      return r.ok ? kYes : kNo;
    });
  }
  if (o.category.empty()) throw InvalidInput("validating a module file needs --category");
  return with_category(o.category, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    ValidationReport r;
    std::string what;
    if (j.is_object() && j.contains("M")) {
      what = "short exact sequence";
      r = validate_module(c, ses_from_json(c, j));
    } else if (j.is_object() && j.contains("action")) {
      what = "left module";
      r = validate_module(c, left_module_from_json(c, j));
    } else if (j.is_object() && (j.contains("left_action") || j.contains("right_action") || j.contains("spaces"))) {
      what = "bimodule";
      r = validate_module(c, bimodule_from_json(c, j));
    } else {
      throw InvalidInput("unrecognized document: expected a category, presentation, module or sequence");
    }
    print_violations(out, what, r);
    return r.ok ? kYes : kNo;
  });
}

int cmd_linearize(const Options& o, std::ostream& out) {
  const FiniteCatPresentation p = presentation_from_json(read_json_file(o.file));
  const FieldSpec field = parse_field_flag(o.field);
  return visit_field(field, [&]<class S>() {
    const FinLinCat<S> c = linearize<S>(p, field);
    const Json j = category_to_json(c);
    if (o.output.empty()) {
      out << dump_json(j);
    } else {
      write_json_file(o.output, j);
      out << "linearized " << c.object_count() << " objects, total dimension " << c.total_dim() << " over "
          << field.to_string() << "\n";
    }
    return kYes;
  });
}

int cmd_separability_check(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const SeparabilitySolution<S> sol = solve_separability(c);
    out << "field: " << c.field().to_string() << "\nunknowns: " << sol.unknowns << "\nequations: " << sol.equations
        << "\nrank: " << sol.rank << "\nseparable: " << yes_no(sol.family.has_value()) << "\n";
    if (!sol.family) return kNo;
    if (!verify_family(c, *sol.family).ok) throw InternalError("solver returned a family that does not verify");
    out << "solution space dimension: " << *sol.solution_dim << "\ncertificate:\n";
    print_family(out, c, *sol.family);
    if (!o.certificate_out.empty()) write_json_file(o.certificate_out, certificate_to_json(c, *sol.family));
    return kYes;
  });
}

int cmd_separability_verify(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const SeparabilityFamily<S> fam = certificate_from_json(c, read_json_file(o.certificate));
    const FamilyVerification<S> v = verify_family(c, fam);
    for (const auto& u : v.unit_failures) {
      out << "unit condition fails at " << c.object_name(u.x) << ": residual "
          << format_vector(c, u.x, u.x, u.residual) << "\n";
    }
    for (const auto& n : v.naturality_failures) {
      std::size_t nonzero = 0;
      for (Index i = 0; i < n.residual.size(); ++i) nonzero += !is_zero(n.residual.data()[i]);
      out << "naturality fails for " << c.label(n.f).name << " at " << c.object_name(n.y) << ": " << nonzero
          << " nonzero residual coefficient(s)\n";
    }
    out << "certificate: " << (v.ok ? "valid" : "rejected") << "\n";
    return v.ok ? kYes : kNo;
  });
}

template <class S>
int report_prediction(const Options& o, std::ostream& out, const FiniteCatPresentation& p, const FieldSpec& field,
                      const PredictedVerdict<S>& predicted, const char* criterion) {
  const FinLinCat<S> c = linearize<S>(p, field);
  const bool solver = solve_separability(c).family.has_value();
  out << "field: " << field.to_string() << "\npredicted separable: " << yes_no(predicted.separable)
      << "\nsolver separable: " << yes_no(solver) << "\n";
  if (predicted.witness) {
    const auto& w = *predicted.witness;
    out << "witness: |hom(" << p.objects[w.x] << ", " << p.objects[w.y] << ")| = " << w.count
        << " vanishes in the field\n";
  }
  if (predicted.separable != solver) throw InternalError(std::string(criterion) + " prediction disagrees with the solver");
  if (predicted.family) {
    if (!verify_family(c, *predicted.family).ok) {
      throw InternalError(std::string(criterion) + " certificate does not verify");
    }
    out << "certificate verified: yes\ncertificate:\n";
    print_family(out, c, *predicted.family);
    if (!o.certificate_out.empty()) write_json_file(o.certificate_out, certificate_to_json(c, *predicted.family));
  }
  return predicted.separable ? kYes : kNo;
}

int cmd_maschke(const Options& o, std::ostream& out) {
  const FiniteCatPresentation p = presentation_from_json(read_json_file(o.file));
  const FieldSpec field = parse_field_flag(o.field);
  return visit_field(field, [&]<class S>() {
    return report_prediction<S>(o, out, p, field, maschke_predict<S>(p, field), "groupoid criterion");
  });
}

int cmd_delta(const Options& o, std::ostream& out) {
  const FiniteCatPresentation p = presentation_from_json(read_json_file(o.file));
  const FieldSpec field = parse_field_flag(o.field);
  return visit_field(field, [&]<class S>() {
    return report_prediction<S>(o, out, p, field, delta_predict<S>(p, field), "delta criterion");
  });
}

template <class S>
Bimodule<S> load_bimodule(const Options& o, const FinLinCat<S>& c) {
  if (o.bimodule == "canonical") return canonical_bimodule(c);
  if (o.bimodule == "kernel-comp") return kernel_comp_sequence(c).m;
  if (o.bimodule == "random") return random_bimodule(c, o.seed, o.dim_cap);
  return bimodule_from_json(c, read_json_file(o.bimodule));
}

template <class S>
ShortExactSeq<S> load_ses(const Options& o, const FinLinCat<S>& c) {
  if (o.ses == "kernel-comp") return kernel_comp_sequence(c);
  if (o.ses == "random") return random_short_exact_sequence(c, o.seed);
  return ses_from_json(c, read_json_file(o.ses));
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const Bimodule<S> m = load_bimodule(o, c);
    if (const ValidationReport r = validate_module(c, m); !r.ok) {
      throw InvalidInput("invalid bimodule: " + r.violations.front());
    }
    std::vector<DegreeInfo> degrees;
    try {
      degrees = cohomology_dims(build_hm_complex(c, m, o.max_degree, o.budget));
    } catch (const BudgetExceeded&) {
      if (!o.output.empty()) write_json_file(o.output, cohomology_to_json({}, true));
      throw;
    }
    out << "bimodule: " << o.bimodule << "\nn  dim C^n  rank d^n  dim H^n\n";
    for (const DegreeInfo& d : degrees) {
      out << d.n << "  " << d.dim_cochain << "  " << d.rank_d << "  " << d.dim_h << "\n";
    }
    if (!o.output.empty()) write_json_file(o.output, cohomology_to_json(degrees, false));
    return kYes;
  });
}

int cmd_obstruction(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const ObstructionResult<S> r = obstruction_cocycle<S>(c, std::nullopt, o.budget);
    if (!r.is_cocycle) throw InternalError("obstruction class is not a cocycle");
    Index nonzero = 0;
    for (Index i = 0; i < r.cocycle.size(); ++i) nonzero += !is_zero(r.cocycle(i));
    out << "cochain dimension: " << r.cocycle.size() << "\nnonzero cocycle coordinates: " << nonzero
        << "\ncoboundary: " << yes_no(r.is_coboundary) << "\nseparable: " << yes_no(r.is_coboundary) << "\n";
    if (r.family) {
      if (!verify_family(c, *r.family).ok) throw InternalError("splitting read off the coboundary does not verify");
      out << "certificate:\n";
      print_family(out, c, *r.family);
    }
    if (!o.output.empty()) {
      Json j = Json::object();
      Json cocycle = Json::array();
      for (Index i = 0; i < r.cocycle.size(); ++i) cocycle.push_back(format_scalar(r.cocycle(i), c.field()));
      j["cocycle"] = std::move(cocycle);
      j["is_coboundary"] = r.is_coboundary;
      if (r.family) j["certificate"] = certificate_to_json(c, *r.family);
      write_json_file(o.output, j);
    }
    return r.is_coboundary ? kYes : kNo;
  });
}

int cmd_les(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const ShortExactSeq<S> ses = load_ses(o, c);
    if (const ValidationReport r = validate_module(c, ses); !r.ok) {
      throw InvalidInput("not a short exact sequence: " + r.violations.front());
    }
    const LesReport r = les_analysis(c, ses, o.max_degree, o.budget);
    out << "n  dim H^n(M)  dim H^n(N)  dim H^n(P)  rank connecting\n";
    for (std::size_t k = 0; k < r.m.size(); ++k) {
      out << k << "  " << r.m[k].dim_h << "  " << r.n[k].dim_h << "  " << r.p[k].dim_h << "  "
          << r.connecting_ranks[k] << "\n";
    }
    out << "position  incoming rank  kernel dim  exact\n";
    for (const LesPosition& p : r.positions) {
      out << p.position << "  " << p.incoming_rank << "  " << p.kernel_dim << "  " << yes_no(p.exact) << "\n";
    }
    if (!o.output.empty()) write_json_file(o.output, les_to_json(r));
    if (!r.exact) throw InternalError("long exact sequence fails to be exact");
    out << "exact: yes\n";
    return kYes;
  });
}

template <class S>
ReducedFamily<S> load_reduced(const Options& o, const FinLinCat<S>& c) {
  const SeparabilityFamily<S> fam = certificate_from_json(c, read_json_file(o.certificate));
  if (!verify_family(c, fam).ok) throw InvalidInput("certificate does not satisfy the separability conditions");
  return reduce_family(c, fam);
}

int cmd_module_split(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const ReducedFamily<S> red = load_reduced(o, c);
    LeftModule<S> m;
    if (o.module == "regular") {
      m = regular_left_module(c);
    } else if (o.module == "random") {
      m = random_left_module(c, o.seed, o.dim_cap);
    } else {
      m = left_module_from_json(c, read_json_file(o.module));
    }
    if (const ValidationReport r = validate_module(c, m); !r.ok) {
      throw InvalidInput("invalid left module: " + r.violations.front());
    }
    const SectionResult<S> s = module_section(c, red, m);
    out << "module dimensions:";
    for (ObjectId x = 0; x < c.object_count(); ++x) out << " " << c.object_name(x) << "=" << m.dim(x);
    out << "\nsection: " << yes_no(s.section_ok) << "\nlinear: " << yes_no(s.linear_ok) << "\n";
    if (!o.output.empty()) {
      Json j = Json::object();
      j["section_ok"] = s.section_ok;
      j["linear_ok"] = s.linear_ok;
      Json psi = Json::array();
      for (ObjectId x = 0; x < c.object_count(); ++x) {
        for (ObjectId y = 0; y < c.object_count(); ++y) {
          if (s.block(x, y).size() == 0) continue;
          Json b = Json::object();
          b["x"] = c.object_name(x);
          b["y"] = c.object_name(y);
          b["matrix"] = matrix_to_json(s.block(x, y), c.field());
          psi.push_back(std::move(b));
        }
      }
      j["psi"] = std::move(psi);
      write_json_file(o.output, j);
    }
    if (!s.section_ok || !s.linear_ok) throw InternalError("module section fails its defining identities");
    return kYes;
  });
}

int cmd_zelinsky(const Options& o, std::ostream& out) {
  return with_category(o.file, [&]<class S>(const FinLinCat<S>& c) {
    require_valid(c);
    const auto pairs = zelinsky_report(c, load_reduced(o, c));
    out << "x  z  dim hom  bound  rank  injective\n";
    Json js = Json::array();
    bool all = true;
    for (const auto& p : pairs) {
      out << c.object_name(p.x) << "  " << c.object_name(p.z) << "  " << p.hom_dim << "  " << p.bound << "  "
          << p.rank << "  " << yes_no(p.injective) << "\n";
      all = all && p.injective && p.bound >= p.hom_dim;
      Json e = Json::object();
      e["x"] = c.object_name(p.x);
      e["z"] = c.object_name(p.z);
      e["hom_dim"] = p.hom_dim;
      Json support = Json::array();
      for (const auto& s : p.support) {
        Json v = Json::object();
        v["y"] = c.object_name(s.y);
        v["source_dim"] = s.source_dim;
        v["target_dim"] = s.target_dim;
        support.push_back(std::move(v));
      }
      e["support"] = std::move(support);
      e["rank"] = p.rank;
      e["injective"] = p.injective;
      e["bound"] = p.bound;
      js.push_back(std::move(e));
    }
    if (!o.output.empty()) {
      Json j = Json::object();
      j["pairs"] = std::move(js);
      write_json_file(o.output, j);
    }
    if (!all) throw InternalError("embedding of a hom space is not injective");
    return kYes;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separable linear categories: separability certificates, Hochschild-Mitchell cohomology and the "
               "constructions around them.",
               "sepcat"};
  app.require_subcommand(1);
  Options o;
  const auto existing = CLI::ExistingFile;
  auto builtin_or_file = [](std::vector<std::string> names) {
    return CLI::Validator(
        [names](std::string& v) -> std::string {
          if (std::find(names.begin(), names.end(), v) != names.end()) return {};
          return CLI::ExistingFile(v);
        },
        "FILE|builtin");
  };
  auto category_arg = [&](CLI::App* cmd) { cmd->add_option("file", o.file, "Category file")->required()->check(existing); };
  auto budget_opt = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "Largest cochain space dimension to build")->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Check a category, presentation, module or sequence file");
  validate->add_option("file", o.file)->required()->check(existing);
  validate->add_option("--category", o.category, "Category for module files")->check(existing);

  auto* lin = app.add_subcommand("linearize", "Linear category spanned by a finite category presentation");
  lin->add_option("file", o.file, "Presentation file")->required()->check(existing);
  lin->add_option("--field", o.field, "Q or Fp:P");
  lin->add_option("-o,--output", o.output);

  auto* sep = app.add_subcommand("separability", "Separability families");
  sep->require_subcommand(1);
  auto* check = sep->add_subcommand("check", "Solve for a separability family");
  category_arg(check);
  check->add_option("--certificate-out", o.certificate_out);
  auto* verify = sep->add_subcommand("verify", "Check a certificate");
  category_arg(verify);
  verify->add_option("--certificate", o.certificate)->required()->check(existing);

  auto* maschke = app.add_subcommand("maschke", "Groupoid criterion checked against the solver");
  maschke->add_option("file", o.file, "Presentation file")->required()->check(existing);
  maschke->add_option("--field", o.field, "Q or Fp:P");
  maschke->add_option("--certificate-out", o.certificate_out);

  auto* delta = app.add_subcommand("delta", "Delta-category criterion checked against the solver");
  delta->add_option("file", o.file, "Presentation file")->required()->check(existing);
  delta->add_option("--field", o.field, "Q or Fp:P");
  delta->add_option("--certificate-out", o.certificate_out);

  auto* coh = app.add_subcommand("cohomology", "Hochschild-Mitchell cohomology dimensions");
  category_arg(coh);
  coh->add_option("--bimodule", o.bimodule, "FILE, canonical, kernel-comp or random")
      ->check(builtin_or_file({"canonical", "kernel-comp", "random"}));
  coh->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 16));
  coh->add_option("--seed", o.seed);
  coh->add_option("--dim-cap", o.dim_cap)->check(CLI::PositiveNumber);
  coh->add_option("-o,--output", o.output);
  budget_opt(coh);

  auto* obs = app.add_subcommand("obstruction", "Class of the extension ker comp -> C (x) C -> C");
  category_arg(obs);
  obs->add_option("-o,--output", o.output);
  budget_opt(obs);

  auto* les = app.add_subcommand("les", "Long exact cohomology sequence of a short exact sequence");
  category_arg(les);
  les->add_option("--ses", o.ses, "FILE, kernel-comp or random")->check(builtin_or_file({"kernel-comp", "random"}));
  les->add_option("--max-degree", o.max_degree)->check(CLI::Range(0, 16));
  les->add_option("--seed", o.seed);
  les->add_option("-o,--output", o.output);
  budget_opt(les);

  auto* mod = app.add_subcommand("module", "Left modules");
  mod->require_subcommand(1);
  auto* split = mod->add_subcommand("split", "Section of the evaluation map of a left module");
  category_arg(split);
  split->add_option("--module", o.module, "FILE, regular or random")
      ->required()
      ->check(builtin_or_file({"regular", "random"}));
  split->add_option("--certificate", o.certificate)->required()->check(existing);
  split->add_option("--seed", o.seed);
  split->add_option("--dim-cap", o.dim_cap)->check(CLI::PositiveNumber);
  split->add_option("-o,--output", o.output);

  auto* zel = app.add_subcommand("zelinsky", "Embedding of hom spaces into finite-dimensional matrix spaces");
  category_arg(zel);
  zel->add_option("--certificate", o.certificate)->required()->check(existing);
  zel->add_option("-o,--output", o.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformed;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*lin) return cmd_linearize(o, out);
    if (*check) return cmd_separability_check(o, out);
    if (*verify) return cmd_separability_verify(o, out);
    if (*maschke) return cmd_maschke(o, out);
    if (*delta) return cmd_delta(o, out);
    if (*coh) return cmd_cohomology(o, out);
    if (*obs) return cmd_obstruction(o, out);
    if (*les) return cmd_les(o, out);
    if (*split) return cmd_module_split(o, out);
    if (*zel) return cmd_zelinsky(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InvalidInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const PreconditionFailed& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DimensionMismatch& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const FieldMismatch& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const DivisionByZero& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kMalformed;
}

}  // namespace sepcat
