#include "sepcat/separability.hpp"

#include <string>

#include "sepcat/errors.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

namespace {

template <class S>
std::vector<Index> block_offsets(const FinLinCat<S>& c) {
  const std::size_t n = c.object_count();
  std::vector<Index> off(n * n + 1, 0);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const std::size_t b = x * n + y;
      off[b + 1] = off[b] + c.hom_dim(y, x) * c.hom_dim(x, y);
    }
  }
  return off;
}

template <class S>
void check_shapes(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  const std::size_t n = c.object_count();
  if (fam.n != n || fam.blocks.size() != n * n) throw DimensionMismatch("family: one block per object pair expected");
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix<S>& a = fam.block(x, y);
      if (a.rows() != c.hom_dim(y, x) || a.cols() != c.hom_dim(x, y)) {
        throw DimensionMismatch("family block (" + c.object_name(x) + ", " + c.object_name(y) + ") has shape " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
      }
    }
  }
}

template <class S>
Vector<S> unit_residual(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam, ObjectId x) {
  Vector<S> sum = Vector<S>::Zero(c.hom_dim(x, x));
  for (ObjectId y = 0; y < c.object_count(); ++y) {
    const Matrix<S>& a = fam.block(x, y);
    if (a.size() == 0) continue;
    const Matrix<S> flat = a.transpose().reshaped(a.size(), 1);
    sum += multiply<S>(c.composition_matrix(x, y, x), flat).col(0);
  }
  if (c.has_identity(x)) sum -= c.identity(x);
  return sum;
}

template <class S>
void require_verified(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  if (!verify_family(c, fam).ok) throw PreconditionFailed("family does not satisfy the separability conditions");
}

template <class S>
Matrix<S> outer(const Vector<S>& u, const Vector<S>& v) {
  return multiply<S>(Matrix<S>(u), Matrix<S>(v.transpose()));
}

}  // namespace

template <class S>
SeparabilityFamily<S> zero_family(const FinLinCat<S>& c) {
  const std::size_t n = c.object_count();
  SeparabilityFamily<S> fam{n, {}};
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) fam.blocks.push_back(zeros<S>(c.hom_dim(y, x), c.hom_dim(x, y)));
  }
  return fam;
}

template <class S>
SeparabilitySystem<S> separability_system(const FinLinCat<S>& c) {
  const std::size_t n = c.object_count();
  const std::vector<Index> off = block_offsets(c);
  const Index unknowns = off.back();
  Index rows = 0;
  for (ObjectId x = 0; x < n; ++x) rows += c.hom_dim(x, x);
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId y = 0; y < n; ++y) rows += c.hom_dim(y, l.to) * c.hom_dim(l.from, y);
  }
  SeparabilitySystem<S> sys{zeros<S>(rows, unknowns), Vector<S>::Zero(rows)};
  Index row = 0;
  for (ObjectId x = 0; x < n; ++x) {
    const Index d = c.hom_dim(x, x);
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix<S>& m = c.composition_matrix(x, y, x);
      sys.matrix.block(row, off[x * n + y], d, m.cols()) = m;
    }
    if (c.has_identity(x)) sys.rhs.segment(row, d) = c.identity(x);
    row += d;
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const ObjectId x = c.label(f).from;
    const ObjectId z = c.label(f).to;
    for (ObjectId y = 0; y < n; ++y) {
      // Residual post(f)·A^{x,y} - A^{z,y}·pre(f)^T, entry (i, j) with i in
      // hom(y, z) and j in hom(x, y).
      const Matrix<S> post = c.post_composition(f, y);
      const Matrix<S> pre = c.pre_composition(f, y);
      const Index di = c.hom_dim(y, z);
      const Index dj = c.hom_dim(x, y);
      const Index dk = c.hom_dim(y, x);
      const Index dl = c.hom_dim(z, y);
      for (Index i = 0; i < di; ++i) {
        for (Index j = 0; j < dj; ++j) {
          const Index r = row + i * dj + j;
          for (Index k = 0; k < dk; ++k) {
            if (!is_zero(post(i, k))) sys.matrix(r, off[x * n + y] + k * dj + j) += post(i, k);
          }
          for (Index l = 0; l < dl; ++l) {
            if (!is_zero(pre(j, l))) sys.matrix(r, off[z * n + y] + i * dl + l) -= pre(j, l);
          }
        }
      }
      row += di * dj;
    }
  }
  return sys;
}

template <class S>
Vector<S> family_to_vector(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  check_shapes(c, fam);
  const std::vector<Index> off = block_offsets(c);
  Vector<S> v(off.back());
  for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
    const Matrix<S>& a = fam.blocks[b];
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) v(off[b] + i * a.cols() + j) = a(i, j);
    }
  }
  return v;
}

template <class S>
SeparabilityFamily<S> family_from_vector(const FinLinCat<S>& c, const Vector<S>& v) {
  const std::vector<Index> off = block_offsets(c);
  if (v.size() != off.back()) throw DimensionMismatch("family_from_vector: wrong length");
  SeparabilityFamily<S> fam = zero_family(c);
  for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
    Matrix<S>& a = fam.blocks[b];
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) a(i, j) = v(off[b] + i * a.cols() + j);
    }
  }
  return fam;
}

template <class S>
SeparabilitySolution<S> solve_separability(const FinLinCat<S>& c) {
  const ValidationReport valid = validate_category(c);
  if (!valid.ok) {
    throw PreconditionFailed("invalid category: " + valid.violations.front());
  }
  const SeparabilitySystem<S> sys = separability_system(c);
  SeparabilitySolution<S> out;
  out.unknowns = sys.matrix.cols();
  out.equations = sys.matrix.rows();
  out.rank = rank<S>(sys.matrix);
  const auto x = solve<S>(sys.matrix, Matrix<S>(sys.rhs));
  if (!x) return out;
  out.family = family_from_vector(c, Vector<S>(x->col(0)));
  out.solution_dim = out.unknowns - out.rank;
  return out;
}

template <class S>
FamilyVerification<S> verify_family(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  check_shapes(c, fam);
  FamilyVerification<S> out;
  const std::size_t n = c.object_count();
  for (ObjectId x = 0; x < n; ++x) {
    Vector<S> r = unit_residual(c, fam, x);
    if (!is_zero_matrix(r) || !c.has_identity(x)) {
      out.ok = false;
      out.unit_failures.push_back({x, std::move(r)});
    }
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const ObjectId x = c.label(f).from;
    const ObjectId z = c.label(f).to;
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix<S> lhs = multiply<S>(c.post_composition(f, y), fam.block(x, y));
      const Matrix<S> rhs = multiply<S>(fam.block(z, y), Matrix<S>(c.pre_composition(f, y).transpose()));
      Matrix<S> r = lhs - rhs;
      if (!is_zero_matrix(r)) {
        out.ok = false;
        out.naturality_failures.push_back({f, y, std::move(r)});
      }
    }
  }
  return out;
}

template <class S>
std::vector<Term<S>> reduce_block(const Matrix<S>& a) {
  const RrefResult<S> red = rref<S>(a);
  std::vector<Term<S>> terms;
  for (Index i = 0; i < red.rank; ++i) {
    terms.push_back({a.col(red.pivot_cols[static_cast<std::size_t>(i)]), red.reduced.row(i).transpose()});
  }
  return terms;
}

template <class S>
ReducedFamily<S> reduce_family(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  require_verified(c, fam);
  ReducedFamily<S> out{fam.n, {}};
  for (const auto& a : fam.blocks) out.blocks.push_back(reduce_block(a));
  return out;
}

template <class S>
SeparabilityFamily<S> recompose(const FinLinCat<S>& c, const ReducedFamily<S>& red) {
  const std::size_t n = c.object_count();
  if (red.n != n || red.blocks.size() != n * n) throw DimensionMismatch("reduced family: one block per object pair");
  SeparabilityFamily<S> fam = zero_family(c);
  for (std::size_t b = 0; b < red.blocks.size(); ++b) {
    for (const Term<S>& t : red.blocks[b]) {
      if (t.left.size() != fam.blocks[b].rows() || t.right.size() != fam.blocks[b].cols()) {
        throw DimensionMismatch("reduced family: term length");
      }
      fam.blocks[b] += outer(t.left, t.right);
    }
  }
  return fam;
}

template <class S>
PredictedVerdict<S> maschke_predict(const FiniteCatPresentation& p, const FieldSpec& k) {
  if (!classify_presentation(p).is_groupoid) throw PreconditionFailed("maschke criterion needs a groupoid");
  const FinLinCat<S> c = linearize<S>(p, k);
  const std::size_t n = p.objects.size();
  PredictedVerdict<S> out;
  for (ObjectId x = 0; x < n && !out.witness; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const std::size_t count = p.arrows_between(x, y).size();
      if (count > 0 && is_zero(make_scalar<S>(static_cast<long>(count), k))) {
        out.witness = GroupoidWitness{x, y, count};
        break;
      }
    }
  }
  if (out.witness) return out;
  out.separable = true;
  SeparabilityFamily<S> fam = zero_family(c);
  for (ObjectId x = 0; x < n; ++x) {
    ObjectId base = 0;
    while (p.arrows_between(base, x).empty()) ++base;
    const auto arrows = p.arrows_between(base, x);
    const S weight = make_scalar<S>(1, k) / make_scalar<S>(static_cast<long>(arrows.size()), k);
    Matrix<S>& a = fam.block(x, base);
    for (std::size_t g : arrows) {
      const auto inv = find_inverse(p, g);
      if (!inv) throw InternalError("groupoid arrow without inverse: " + p.arrows[g].name);
      const Index u = c.label(c.label_id(p.arrows[g].name)).position;
      const Index v = c.label(c.label_id(p.arrows[*inv].name)).position;
      a(u, v) += weight;
    }
  }
  out.family = std::move(fam);
  return out;
}

template <class S>
PredictedVerdict<S> delta_predict(const FiniteCatPresentation& p, const FieldSpec& k) {
  const PresentationFlags flags = classify_presentation(p);
  if (!flags.is_delta) throw PreconditionFailed("delta criterion needs a delta category");
  PredictedVerdict<S> out;
  out.separable = flags.is_discrete;
  if (!out.separable) return out;
  const FinLinCat<S> c = linearize<S>(p, k);
  SeparabilityFamily<S> fam = zero_family(c);
  for (ObjectId x = 0; x < c.object_count(); ++x) fam.block(x, x) = outer(c.identity(x), c.identity(x));
  out.family = std::move(fam);
  return out;
}

template <class S>
SectionResult<S> module_section(const FinLinCat<S>& c, const ReducedFamily<S>& red, const LeftModule<S>& m) {
  require_verified(c, recompose(c, red));
  if (!validate_module(c, m).ok) throw PreconditionFailed("module_section: invalid left module");
  const std::size_t n = c.object_count();
  SectionResult<S> out{n, {}, true, true};
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      Matrix<S> psi = zeros<S>(c.hom_dim(y, x) * m.dim(y), m.dim(x));
      for (const Term<S>& t : red.terms(x, y)) {
        psi += kron<S>(Matrix<S>(t.left), module_action(c, m, Morphism<S>{x, y, t.right}));
      }
      out.psi.push_back(std::move(psi));
    }
  }
  for (ObjectId x = 0; x < n; ++x) {
    Matrix<S> total = zeros<S>(m.dim(x), m.dim(x));
    for (ObjectId y = 0; y < n; ++y) {
      const auto& us = c.hom(y, x);
      Matrix<S> phi = zeros<S>(m.dim(x), static_cast<Index>(us.size()) * m.dim(y));
      for (std::size_t u = 0; u < us.size(); ++u) {
        phi.block(0, static_cast<Index>(u) * m.dim(y), m.dim(x), m.dim(y)) = m.action(us[u]);
      }
      total += multiply<S>(phi, out.block(x, y));
    }
    if (!equal(total, identity<S>(m.dim(x)))) out.section_ok = false;
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const ObjectId z = c.label(f).from;
    const ObjectId x = c.label(f).to;
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix<S> lhs = multiply<S>(out.block(x, y), m.action(f));
      const Matrix<S> rhs = multiply<S>(kron<S>(c.post_composition(f, y), identity<S>(m.dim(y))), out.block(z, y));
      if (!equal(lhs, rhs)) out.linear_ok = false;
    }
  }
  return out;
}

template <class S>
std::vector<ZelinskyPair<S>> zelinsky_report(const FinLinCat<S>& c, const ReducedFamily<S>& red) {
  require_verified(c, recompose(c, red));
  const std::size_t n = c.object_count();
  auto left_basis = [&](ObjectId x, ObjectId y) {
    const auto& terms = red.terms(x, y);
    Matrix<S> b(c.hom_dim(y, x), static_cast<Index>(terms.size()));
    for (std::size_t i = 0; i < terms.size(); ++i) b.col(static_cast<Index>(i)) = terms[i].left;
    return b;
  };
  std::vector<ZelinskyPair<S>> out;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId z = 0; z < n; ++z) {
      ZelinskyPair<S> pair;
      pair.x = x;
      pair.z = z;
      pair.hom_dim = c.hom_dim(x, z);
      Index rows = 0;
      for (ObjectId y = 0; y < n; ++y) {
        const Index sx = static_cast<Index>(red.term_count(x, y));
        if (sx == 0) continue;
        const Index sz = static_cast<Index>(red.term_count(z, y));
        pair.support.push_back({y, sx, sz});
        rows += sx * sz;
        pair.bound += sx * sz;
      }
      pair.embedding = zeros<S>(rows, pair.hom_dim);
      const auto& fs = c.hom(x, z);
      Index r = 0;
      for (const auto& s : pair.support) {
        const Matrix<S> vx = left_basis(x, s.y);
        const Matrix<S> vz = left_basis(z, s.y);
        for (std::size_t f = 0; f < fs.size(); ++f) {
          const Matrix<S> image = multiply<S>(c.post_composition(fs[f], s.y), vx);
          const auto coords = solve<S>(vz, image);
          if (!coords) {
            pair.closed = false;
            continue;
          }
          // Column-major flattening of the target_dim x source_dim matrix.
          pair.embedding.block(r, static_cast<Index>(f), s.source_dim * s.target_dim, 1) =
              coords->reshaped(s.source_dim * s.target_dim, 1);
        }
        r += s.source_dim * s.target_dim;
      }
      pair.rank = rank<S>(pair.embedding);
      pair.injective = pair.closed && pair.rank == pair.hom_dim;
      out.push_back(std::move(pair));
    }
  }
  return out;
}

#define SEPCAT_INSTANTIATE(S)                                                                                     \
  template SeparabilityFamily<S> zero_family<S>(const FinLinCat<S>&);                                             \
  template SeparabilitySystem<S> separability_system<S>(const FinLinCat<S>&);                                     \
  template Vector<S> family_to_vector<S>(const FinLinCat<S>&, const SeparabilityFamily<S>&);                      \
  template SeparabilityFamily<S> family_from_vector<S>(const FinLinCat<S>&, const Vector<S>&);                    \
  template SeparabilitySolution<S> solve_separability<S>(const FinLinCat<S>&);                                    \
  template FamilyVerification<S> verify_family<S>(const FinLinCat<S>&, const SeparabilityFamily<S>&);             \
  template std::vector<Term<S>> reduce_block<S>(const Matrix<S>&);                                                \
  template ReducedFamily<S> reduce_family<S>(const FinLinCat<S>&, const SeparabilityFamily<S>&);                  \
  template SeparabilityFamily<S> recompose<S>(const FinLinCat<S>&, const ReducedFamily<S>&);                      \
  template PredictedVerdict<S> maschke_predict<S>(const FiniteCatPresentation&, const FieldSpec&);                \
  template PredictedVerdict<S> delta_predict<S>(const FiniteCatPresentation&, const FieldSpec&);                  \
  template SectionResult<S> module_section<S>(const FinLinCat<S>&, const ReducedFamily<S>&, const LeftModule<S>&); \
  template std::vector<ZelinskyPair<S>> zelinsky_report<S>(const FinLinCat<S>&, const ReducedFamily<S>&);

SEPCAT_INSTANTIATE(Rational)
SEPCAT_INSTANTIATE(Zp)

}  // namespace sepcat
