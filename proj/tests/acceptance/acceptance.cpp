#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sepcat/cli.hpp"
#include "sepcat/cohomology.hpp"
#include "sepcat/errors.hpp"
#include "sepcat/io.hpp"
#include "sepcat/presentations.hpp"
#include "sepcat/separability.hpp"

namespace fs = std::filesystem;
using namespace sepcat;

namespace {

using Clock = std::chrono::steady_clock;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF3 = FieldSpec::prime_field(3);
const FieldSpec kF5 = FieldSpec::prime_field(5);

struct Instance {
  std::string name;
  FiniteCatPresentation p;
  FieldSpec k;
  /// Set for one-object cyclic groups of even order.
  std::optional<FiniteGroup> cyclic;
};

std::string label(const Instance& in) { return in.name + " over " + in.k.to_string(); }

/// Collects failure messages for one criterion.
struct Tally {
  std::vector<std::string> failures;
  std::string detail;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

bool report(int number, const std::string& title, const Tally& t) {
  const bool ok = t.failures.empty();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  if (!t.detail.empty()) std::cout << " (" << t.detail << ")";
  std::cout << "\n";
  for (std::size_t i = 0; i < t.failures.size() && i < 10; ++i) std::cout << "    " << t.failures[i] << "\n";
  return ok;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// |hom(x, y)| invertible in K for every nonempty hom set, counted on the presentation.
bool counts_invertible(const FiniteCatPresentation& p, const FieldSpec& k) {
  for (ObjectId x = 0; x < p.objects.size(); ++x) {
    for (ObjectId y = 0; y < p.objects.size(); ++y) {
      const std::size_t count = p.arrows_between(x, y).size();
      if (count != 0 && k.characteristic() != 0 && count % k.characteristic() == 0) return false;
    }
  }
  return true;
}

template <class S>
LeftModule<S> sign_module(const FinLinCat<S>& c, const FiniteGroup& g, const FieldSpec& k) {
  LeftModule<S> m(c, {1});
  for (std::size_t i = 0; i < g.order(); ++i) {
    Matrix<S> a(1, 1);
    a(0, 0) = make_scalar<S>(i % 2 == 0 ? 1 : -1, k);
    m.action(c.label_id(g.names[i])) = a;
  }
  return m;
}

std::vector<Instance> groupoid_cases() {
  std::vector<Instance> out;
  const std::vector<std::pair<std::string, FiniteCatPresentation>> shapes{
      {"Z/2", group_category(cyclic_group(2))},
      {"Z/3", group_category(cyclic_group(3))},
      {"Z/4", group_category(cyclic_group(4))},
      {"Z/2 x Z/2", group_category(klein_four_group())},
      {"connected groupoid on 2 objects with vertex group Z/2", connected_groupoid({"p", "q"}, cyclic_group(2))}};
  for (const FieldSpec& k : {kQ, kF2, kF3, kF5}) {
    for (const auto& [name, p] : shapes) {
      std::optional<FiniteGroup> cyc;
      if (name == "Z/2") cyc = cyclic_group(2);
      if (name == "Z/4") cyc = cyclic_group(4);
      out.push_back({name, p, k, cyc});
    }
  }
  return out;
}

std::vector<Instance> delta_cases() {
  std::vector<Instance> out;
  for (const FieldSpec& k : {kQ, kF2, kF3}) {
    out.push_back({"chain A2", chain_poset(2), k, {}});
    out.push_back({"chain A3", chain_poset(3), k, {}});
    out.push_back({"poset x < z > y", poset_category({"x", "z", "y"}, {{0, 1}, {2, 1}}), k, {}});
    for (std::size_t n = 1; n <= 3; ++n) {
      out.push_back({"discrete on " + std::to_string(n) + " objects", discrete_category(n), k, {}});
    }
  }
  return out;
}

std::vector<Instance> random_cases() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (const FieldSpec& k : {kQ, kF2, kF3}) {
      out.push_back({"random presentation seed " + std::to_string(seed), random_presentation(seed), k, {}});
    }
  }
  return out;
}

template <class Fn>
void on_instance(const Instance& in, Fn&& fn) {
  visit_field(in.k, [&]<class S>() { fn(linearize<S>(in.p, in.k)); });
}

template <class S>
bool separable(const FinLinCat<S>& c) {
  return solve_separability(c).family.has_value();
}

template <class S>
std::optional<ReducedFamily<S>> reduced_certificate(const FinLinCat<S>& c) {
  const auto fam = solve_separability(c).family;
  if (!fam) return std::nullopt;
  return reduce_family(c, *fam);
}

bool criterion1(std::vector<Instance>& separable_instances) {
  Tally t;
  double worst = 0;
  const auto cases = groupoid_cases();
  for (const Instance& in : cases) {
    const auto t0 = Clock::now();
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const bool expected = counts_invertible(in.p, in.k);
      const bool solved = separable(c);
      t.expect(solved == expected, label(in) + ": solver says " + (solved ? "separable" : "not separable"));
      if (!expected) return;
      const auto predicted = maschke_predict<S>(in.p, in.k);
      if (!predicted.family) {
        t.fail(label(in) + ": no formula certificate");
        return;
      }
      const auto v = verify_family(c, *predicted.family);
      t.expect(v.ok && v.unit_failures.empty() && v.naturality_failures.empty(),
               label(in) + ": formula certificate leaves residuals");
      if (solved) separable_instances.push_back(in);
    });
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    t.expect(s < 1.0, label(in) + ": took " + std::to_string(s) + " s");
  }
  t.expect(cases.size() == 20, "expected 20 cases");
  std::ostringstream d;
  d << cases.size() << " cases, slowest " << worst << " s";
  t.detail = d.str();
  return report(1, "groupoid separability matches invertibility of hom-set sizes", t);
}

bool criterion2(std::vector<Instance>& separable_instances) {
  Tally t;
  std::size_t n = 0;
  for (const Instance& in : delta_cases()) {
    ++n;
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const bool discrete = classify_presentation(in.p).is_discrete;
      const bool solved = separable(c);
      t.expect(solved == discrete, label(in) + ": solver says " + (solved ? "separable" : "not separable"));
      if (!discrete) return;
      SeparabilityFamily<S> fam = zero_family(c);
      for (ObjectId x = 0; x < c.object_count(); ++x) fam.block(x, x)(0, 0) = make_scalar<S>(1, in.k);
      t.expect(verify_family(c, fam).ok, label(in) + ": identity certificate rejected");
      const auto predicted = delta_predict<S>(in.p, in.k);
      t.expect(predicted.family && *predicted.family == fam, label(in) + ": predicted certificate differs");
      if (solved) separable_instances.push_back(in);
    });
  }
  t.detail = std::to_string(n) + " cases";
  return report(2, "delta categories are separable exactly when discrete", t);
}

template <class S>
void expect_vanishing(Tally& t, const FinLinCat<S>& c, const Bimodule<S>& m, const std::string& what) {
  const auto dims = cohomology_dims(build_hm_complex(c, m, 2));
  t.expect(dims.at(1).dim_h == 0 && dims.at(2).dim_h == 0,
           what + ": dim H^1 = " + std::to_string(dims.at(1).dim_h) + ", dim H^2 = " + std::to_string(dims.at(2).dim_h));
}

bool criterion3(const std::vector<Instance>& separable_instances) {
  Tally t;
  const auto t0 = Clock::now();
  std::size_t complexes = 0;
  for (const Instance& in : separable_instances) {
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      expect_vanishing(t, c, canonical_bimodule(c), label(in) + " canonical");
      expect_vanishing(t, c, kernel_comp_sequence(c).m, label(in) + " ker comp");
      complexes += 2;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Bimodule<S> m = random_bimodule(c, seed, 2);
        t.expect(m.max_component_dim() <= 2, label(in) + ": random bimodule exceeds the cap");
        expect_vanishing(t, c, m, label(in) + " random seed " + std::to_string(seed));
        ++complexes;
      }
    });
  }
  const double s = seconds_since(t0);
  t.expect(s < 30.0, "took " + std::to_string(s) + " s");
  std::ostringstream d;
  d << separable_instances.size() << " separable instances, " << complexes << " complexes, " << s << " s";
  t.detail = d.str();
  return report(3, "H^1 and H^2 vanish on separable instances", t);
}

/// dim of the derivation space of F2[Z/2], counted by enumerating all 16 linear maps.
std::size_t f2_group_algebra_derivation_dim() {
  // basis e, g; products e*e = e, e*g = g*e = g, g*g = e, coordinates mod 2.
  auto mul = [](std::array<int, 2> a, std::array<int, 2> b) {
    return std::array<int, 2>{(a[0] * b[0] + a[1] * b[1]) % 2, (a[0] * b[1] + a[1] * b[0]) % 2};
  };
  const std::array<std::array<int, 2>, 2> basis{{{1, 0}, {0, 1}}};
  std::size_t count = 0;
  for (int bits = 0; bits < 16; ++bits) {
    auto apply = [&](std::array<int, 2> v) {
      const int m00 = bits & 1, m01 = (bits >> 1) & 1, m10 = (bits >> 2) & 1, m11 = (bits >> 3) & 1;
      return std::array<int, 2>{(m00 * v[0] + m01 * v[1]) % 2, (m10 * v[0] + m11 * v[1]) % 2};
    };
    bool leibniz = true;
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        const auto lhs = apply(mul(a, b));
        const auto r1 = mul(a, apply(b));
        const auto r2 = mul(apply(a), b);
        leibniz = leibniz && lhs[0] == (r1[0] + r2[0]) % 2 && lhs[1] == (r1[1] + r2[1]) % 2;
      }
    }
    count += leibniz;
  }
  // Commutative algebra: inner derivations vanish, so H^1 is the derivation space.
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < count) ++dim;
  return dim;
}

bool criterion4() {
  Tally t;
  const std::size_t oracle = f2_group_algebra_derivation_dim();
  const auto z2 = linearize<Zp>(group_category(cyclic_group(2)), kF2);
  const auto dims = cohomology_dims(build_hm_complex(z2, canonical_bimodule(z2), 1));
  t.expect(dims.at(1).dim_h == 2, "F2[Z/2]: dim H^1 = " + std::to_string(dims.at(1).dim_h));
  t.expect(oracle == 2, "derivation count oracle gives " + std::to_string(oracle));

  const auto a2 = linearize<Rational>(chain_poset(2), kQ);
  const auto obs = obstruction_cocycle<Rational>(a2);
  t.expect(obs.is_cocycle && !obs.is_coboundary, "Q[A2]: obstruction class vanishes");
  const auto les = les_analysis(a2, kernel_comp_sequence(a2), 2);
  t.expect(les.connecting_ranks.at(0) >= 1,
           "Q[A2]: connecting map H^0 -> H^1 has rank " + std::to_string(les.connecting_ranks.at(0)));
  t.detail = "dim H^1 = " + std::to_string(dims.at(1).dim_h) + ", oracle " + std::to_string(oracle) +
             ", connecting rank " + std::to_string(les.connecting_ranks.at(0));
  return report(4, "non-vanishing witnesses", t);
}

bool criterion5() {
  Tally t;
  std::vector<Instance> corpus = groupoid_cases();
  for (auto& in : delta_cases()) corpus.push_back(in);
  for (auto& in : random_cases()) corpus.push_back(in);
  std::size_t separable_count = 0;
  for (const Instance& in : corpus) {
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const bool solved = separable(c);
      separable_count += solved;
      const auto obs = obstruction_cocycle<S>(c);
      t.expect(obs.is_cocycle, label(in) + ": obstruction is not a cocycle");
      t.expect(obs.is_coboundary == solved, label(in) + ": solver and obstruction disagree");
      if (obs.family) t.expect(verify_family(c, *obs.family).ok, label(in) + ": coboundary splitting rejected");
    });
  }
  t.expect(corpus.size() >= 30, "corpus too small");
  t.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(separable_count) + " separable";
  return report(5, "solver feasibility equals the obstruction being a coboundary", t);
}

bool criterion6(const std::vector<Instance>& separable_instances) {
  Tally t;
  std::size_t checked = 0;
  for (const Instance& in : separable_instances) {
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const auto red = reduced_certificate(c);
      if (!red) {
        t.fail(label(in) + ": no certificate");
        return;
      }
      std::vector<std::pair<std::string, LeftModule<S>>> modules{{"regular", regular_left_module(c)}};
      if (in.cyclic) modules.emplace_back("sign", sign_module(c, *in.cyclic, in.k));
      for (std::uint64_t seed = 0; modules.size() < 5; ++seed) {
        modules.emplace_back("random seed " + std::to_string(seed), random_left_module(c, seed, 2));
      }
      for (const auto& [name, m] : modules) {
        const auto s = module_section(c, *red, m);
        t.expect(s.section_ok && s.linear_ok, label(in) + " " + name + ": section fails");
        ++checked;
      }
    });
  }
  t.detail = std::to_string(checked) + " modules";
  return report(6, "every module admits a linear section of its evaluation map", t);
}

bool criterion7(const std::vector<Instance>& separable_instances) {
  Tally t;
  std::size_t pairs = 0;
  for (const Instance& in : separable_instances) {
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const auto red = reduced_certificate(c);
      if (!red) {
        t.fail(label(in) + ": no certificate");
        return;
      }
      for (const auto& p : zelinsky_report(c, *red)) {
        ++pairs;
        const std::string where = label(in) + " (" + c.object_name(p.x) + ", " + c.object_name(p.z) + ")";
        t.expect(p.injective && p.rank == p.hom_dim, where + ": embedding not injective");
        t.expect(p.bound >= p.hom_dim, where + ": bound below hom dimension");
      }
    });
  }
  t.detail = std::to_string(pairs) + " hom spaces";
  return report(7, "hom spaces embed into finite matrix spaces", t);
}

template <class S>
void expect_square_zero(Tally& t, const CochainComplex<S>& cx, const std::string& what) {
  for (int n = 0; n + 1 <= cx.max_degree; ++n) {
    t.expect(is_zero_matrix(multiply(cx.d(n + 1), cx.d(n))), what + ": d^" + std::to_string(n + 1) + " d^" +
                                                                  std::to_string(n) + " != 0");
  }
}

template <class S>
void expect_exact(Tally& t, const FinLinCat<S>& c, const ShortExactSeq<S>& ses, const std::string& what) {
  const LesReport r = les_analysis(c, ses, 2);
  t.expect(r.exact, what + ": not exact");
  for (const auto& p : r.positions) t.expect(p.exact, what + ": inexact at " + p.position);
}

bool criterion8() {
  Tally t;
  std::size_t complexes = 0;
  std::vector<Instance> corpus = groupoid_cases();
  for (auto& in : delta_cases()) corpus.push_back(in);
  for (const Instance& in : corpus) {
    on_instance(in, [&]<class S>(const FinLinCat<S>& c) {
      const Index budget = 1 << 16;
      expect_square_zero(t, build_hm_complex(c, canonical_bimodule(c), 3, budget), label(in) + " canonical");
      expect_square_zero(t, build_hm_complex(c, kernel_comp_sequence(c).m, 3, budget), label(in) + " ker comp");
      expect_square_zero(t, build_hm_complex(c, random_bimodule(c, 0, 2), 3, budget), label(in) + " random");
      complexes += 3;
    });
  }
  const auto z2 = linearize<Rational>(group_category(cyclic_group(2)), kQ);
  const auto a2 = linearize<Rational>(chain_poset(2), kQ);
  expect_exact(t, z2, kernel_comp_sequence(z2), "Q[Z/2] ker comp");
  expect_exact(t, a2, kernel_comp_sequence(a2), "Q[A2] ker comp");
  const auto random_ses = random_short_exact_sequence(a2, 0);
  t.expect(validate_module(a2, random_ses).ok, "random sequence is not short exact");
  expect_exact(t, a2, random_ses, "Q[A2] random seed 0");
  t.detail = std::to_string(complexes) + " complexes to degree 3, 3 long exact sequences to degree 2";
  return report(8, "d o d = 0 and long exact sequences are exact", t);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool criterion9() {
  Tally t;
  const fs::path data = SEPCAT_DATA_DIR;
  const fs::path dir = fs::temp_directory_path() / "sepcat_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string z2 = (data / "z2_over_Q.json").string();
  const std::string a2 = (data / "a2_over_Q.json").string();
  const std::string cert = (dir / "z2_cert.json").string();
  const std::vector<std::vector<std::string>> commands{
      {"linearize", (data / "a2_chain.json").string(), "--field", "Fp:3", "-o"},
      {"separability", "check", z2, "--certificate-out"},
      {"maschke", (data / "z2_group.json").string(), "--field", "Fp:5", "--certificate-out"},
      {"delta", (data / "discrete3.json").string(), "--certificate-out"},
      {"cohomology", (data / "z2_over_F2.json").string(), "--bimodule", "canonical", "--max-degree", "2", "-o"},
      {"cohomology", a2, "--bimodule", "random", "--seed", "4", "--max-degree", "2", "-o"},
      {"obstruction", a2, "-o"},
      {"les", a2, "--ses", "random", "--seed", "1", "-o"},
      {"module", "split", z2, "--module", "random", "--seed", "2", "--certificate", cert, "-o"},
      {"zelinsky", z2, "--certificate", cert, "-o"},
  };
  std::ostringstream sink;
  if (run({"separability", "check", z2, "--certificate-out", cert}, sink, sink) != 0) t.fail("certificate setup failed");
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string first_artifact;
    std::string first_stdout;
    for (int rep = 0; rep < 2; ++rep) {
      auto args = commands[i];
      const fs::path out = dir / ("artifact" + std::to_string(i) + "_" + std::to_string(rep) + ".json");
      args.push_back(out.string());
      std::ostringstream so;
      std::ostringstream se;
      const int code = run(args, so, se);
      t.expect(code == 0 || code == 1, commands[i][0] + ": exit " + std::to_string(code) + " " + se.str());
      if (rep == 0) {
        first_artifact = slurp(out);
        first_stdout = so.str();
      } else {
        t.expect(!first_artifact.empty() && slurp(out) == first_artifact, commands[i][0] + ": artifacts differ");
        t.expect(so.str() == first_stdout, commands[i][0] + ": reports differ");
      }
    }
  }
  fs::remove_all(dir);
  t.detail = std::to_string(commands.size()) + " commands run twice";
  return report(9, "reruns produce byte-identical artifacts", t);
}

}  // namespace

int main() {
  bool ok = true;
  auto guard = [&](int number, auto&& fn) {
    try {
      ok = fn() && ok;
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << number << ": exception " << e.what() << "\n";
      ok = false;
    }
  };
  std::vector<Instance> separable_instances;
  guard(1, [&] { return criterion1(separable_instances); });
  guard(2, [&] { return criterion2(separable_instances); });
  guard(3, [&] { return criterion3(separable_instances); });
  guard(4, criterion4);
  guard(5, criterion5);
  guard(6, [&] { return criterion6(separable_instances); });
  guard(7, [&] { return criterion7(separable_instances); });
  guard(8, criterion8);
  guard(9, criterion9);
  return ok ? 0 : 1;
}
