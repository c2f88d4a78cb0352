#include "sepcat/cohomology.hpp"

#include <functional>

#include "sepcat/errors.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

namespace {

template <class S>
std::vector<std::vector<ObjectId>> composable_tuples(const FinLinCat<S>& c, int n) {
  std::vector<std::vector<ObjectId>> out;
  std::vector<ObjectId> current;
  std::function<void()> extend = [&] {
    if (static_cast<int>(current.size()) == n + 1) {
      out.push_back(current);
      return;
    }
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      if (!current.empty() && c.hom_dim(x, current.back()) == 0) continue;
      current.push_back(x);
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

template <class S>
Index tensor_index(const FinLinCat<S>& c, const std::vector<ObjectId>& objects, const std::vector<Index>& positions) {
  Index t = 0;
  for (std::size_t k = 1; k < objects.size(); ++k) t = t * c.hom_dim(objects[k], objects[k - 1]) + positions[k - 1];
  return t;
}

template <class S>
Matrix<S> hcat(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

/// Rank of the columns of `image` modulo the span of `boundaries`.
template <class S>
Index induced_rank(const Matrix<S>& image, const Matrix<S>& boundaries) {
  return rank<S>(hcat<S>(image, boundaries)) - rank<S>(boundaries);
}

template <class S>
Matrix<S> block_diagonal_map(const CochainComplex<S>& source, const CochainComplex<S>& target, int n,
                             const std::function<Matrix<S>(ObjectId, ObjectId)>& block) {
  const auto& src = source.cells.at(static_cast<std::size_t>(n));
  const auto& tgt = target.cells.at(static_cast<std::size_t>(n));
  if (src.size() != tgt.size()) throw DimensionMismatch("cochain map: complexes over different categories");
  Matrix<S> out = zeros<S>(target.dim(n), source.dim(n));
  for (std::size_t j = 0; j < src.size(); ++j) {
    const Cell& s = src[j];
    const Cell& t = tgt[j];
    const Matrix<S> b = block(s.objects.front(), s.objects.back());
    if (b.rows() != t.coeff_dim || b.cols() != s.coeff_dim) throw DimensionMismatch("cochain map: block shape");
    if (b.size() == 0) continue;
    for (Index k = 0; k < s.tensor_count; ++k) {
      out.block(t.offset + k * t.coeff_dim, s.offset + k * s.coeff_dim, b.rows(), b.cols()) = b;
    }
  }
  return out;
}

template <class S>
Matrix<S> boundaries(const CochainComplex<S>& complex, int n) {
  if (n == 0) return zeros<S>(complex.dim(0), 0);
  return complex.d(n - 1);
}

}  // namespace

template <class S>
CochainComplex<S> build_hm_complex(const FinLinCat<S>& c, const Bimodule<S>& m, int max_degree, Index budget) {
  if (max_degree < 0) throw PreconditionFailed("max_degree must be non-negative");
  if (!validate_module(c, m).ok) throw PreconditionFailed("invalid bimodule");
  CochainComplex<S> out;
  out.max_degree = max_degree;
  for (int n = 0; n <= max_degree + 1; ++n) {
    std::vector<Cell> cells;
    std::map<std::vector<ObjectId>, std::size_t> lookup;
    Index offset = 0;
    for (auto& objects : composable_tuples(c, n)) {
      Cell cell;
      for (std::size_t k = 1; k < objects.size(); ++k) cell.tensor_count *= c.hom_dim(objects[k], objects[k - 1]);
      cell.coeff_dim = m.dim(objects.front(), objects.back());
      cell.offset = offset;
      offset += cell.tensor_count * cell.coeff_dim;
      lookup.emplace(objects, cells.size());
      cell.objects = std::move(objects);
      cells.push_back(std::move(cell));
    }
    if (offset > budget) {
      throw BudgetExceeded(static_cast<std::size_t>(n), static_cast<std::size_t>(offset),
                           static_cast<std::size_t>(budget));
    }
    out.cells.push_back(std::move(cells));
    out.lookup.push_back(std::move(lookup));
    out.dims.push_back(offset);
  }
  const S one = make_scalar<S>(1, c.field());
  for (int n = 0; n <= max_degree; ++n) {
    const auto& sources = out.cells[static_cast<std::size_t>(n)];
    const auto& source_lookup = out.lookup[static_cast<std::size_t>(n)];
    Matrix<S> d = zeros<S>(out.dims[static_cast<std::size_t>(n + 1)], out.dims[static_cast<std::size_t>(n)]);
    auto source_cell = [&](const std::vector<ObjectId>& objects) -> const Cell& {
      return sources[source_lookup.at(objects)];
    };
    for (const Cell& target : out.cells[static_cast<std::size_t>(n + 1)]) {
      if (target.coeff_dim == 0) continue;
      const auto& x = target.objects;
      const ObjectId first = x.front();
      const ObjectId last = x.back();
      std::vector<Index> pos(static_cast<std::size_t>(n + 1));
      for (Index t = 0; t < target.tensor_count; ++t) {
        Index rest = t;
        for (int k = n; k >= 0; --k) {
          const Index dk = c.hom_dim(x[static_cast<std::size_t>(k + 1)], x[static_cast<std::size_t>(k)]);
          pos[static_cast<std::size_t>(k)] = rest % dk;
          rest /= dk;
        }
        auto label = [&](int k) {
          const auto K = static_cast<std::size_t>(k);
          return c.hom(x[K], x[K - 1])[static_cast<std::size_t>(pos[K - 1])];
        };
        const Index row = target.offset + t * target.coeff_dim;

        // f1 |> phi(f2, ..., f_{n+1})
        {
          const std::vector<ObjectId> objs(x.begin() + 1, x.end());
          const std::vector<Index> ps(pos.begin() + 1, pos.end());
          const Cell& s = source_cell(objs);
          if (s.coeff_dim > 0) {
            d.block(row, s.offset + tensor_index(c, objs, ps) * s.coeff_dim, target.coeff_dim, s.coeff_dim) +=
                m.left(label(1), last);
          }
        }
        // (-1)^i phi(..., f_i o f_{i+1}, ...)
        const S sign_base = (n % 2 == 0) ? -one : one;
        for (int i = 1; i <= n; ++i) {
          const S sign = (i % 2 == 0) ? one : -one;
          const Vector<S> w = c.compose_labels(label(i), label(i + 1));
          std::vector<ObjectId> objs = x;
          objs.erase(objs.begin() + i);
          std::vector<Index> ps = pos;
          ps.erase(ps.begin() + i);
          const Cell& s = source_cell(objs);
          for (Index k = 0; k < w.size(); ++k) {
            if (is_zero(w(k))) continue;
            ps[static_cast<std::size_t>(i - 1)] = k;
            const Index col = s.offset + tensor_index(c, objs, ps) * s.coeff_dim;
            for (Index r = 0; r < target.coeff_dim; ++r) d(row + r, col + r) += sign * w(k);
          }
        }
        // (-1)^{n+1} phi(f1, ..., fn) <| f_{n+1}
        {
          const std::vector<ObjectId> objs(x.begin(), x.end() - 1);
          const std::vector<Index> ps(pos.begin(), pos.end() - 1);
          const Cell& s = source_cell(objs);
          if (s.coeff_dim > 0) {
            d.block(row, s.offset + tensor_index(c, objs, ps) * s.coeff_dim, target.coeff_dim, s.coeff_dim) +=
                sign_base * m.right(label(n + 1), first);
          }
        }
      }
    }
    out.differentials.push_back(std::move(d));
  }
  for (int n = 0; n + 1 <= max_degree; ++n) {
    if (!is_zero_matrix(multiply<S>(out.d(n + 1), out.d(n)))) {
      throw InternalError("bar complex: d o d != 0 in degree " + std::to_string(n));
    }
  }
  return out;
}

template <class S>
std::vector<DegreeInfo> cohomology_dims(const CochainComplex<S>& complex) {
  std::vector<DegreeInfo> out;
  Index previous = 0;
  for (int n = 0; n <= complex.max_degree; ++n) {
    DegreeInfo info;
    info.n = n;
    info.dim_cochain = complex.dim(n);
    info.rank_d = rank<S>(complex.d(n));
    info.kernel_dim = info.dim_cochain - info.rank_d;
    info.dim_h = info.kernel_dim - previous;
    previous = info.rank_d;
    out.push_back(info);
  }
  return out;
}

template <class S>
Matrix<S> cochain_map(const CochainComplex<S>& source, const CochainComplex<S>& target, const BimoduleMap<S>& map,
                      int n) {
  return block_diagonal_map<S>(source, target, n, [&](ObjectId x, ObjectId y) { return map.block(x, y); });
}

template <class S>
ObstructionResult<S> obstruction_cocycle(const FinLinCat<S>& c, const std::optional<Vector<S>>& offset,
                                         Index budget) {
  const ValidationReport valid = validate_category(c);
  if (!valid.ok) throw PreconditionFailed("invalid category: " + valid.violations.front());
  const std::size_t n = c.object_count();
  const ShortExactSeq<S> ses = kernel_comp_sequence(c);
  const CochainComplex<S> kc = build_hm_complex(c, ses.m, 1, budget);

  std::vector<Vector<S>> sigma(n);
  Index shift = 0;
  for (ObjectId x = 0; x < n; ++x) {
    sigma[x] = Vector<S>::Zero(ses.n.dim(x, x));
    const Vector<S>& id = c.identity(x);
    const Index dxx = c.hom_dim(x, x);
    const Index base = tensor_square_offset(c, x, x, x);
    for (Index a = 0; a < dxx; ++a) {
      for (Index b = 0; b < dxx; ++b) sigma[x](base + a * dxx + b) = id(a) * id(b);
    }
    if (offset) {
      const Index k = ses.m.dim(x, x);
      if (offset->size() != kc.dim(0)) throw DimensionMismatch("obstruction: offset must lie in C^0(ker comp)");
      sigma[x] += multiply<S>(ses.i.block(x, x), Matrix<S>(offset->segment(shift, k))).col(0);
      shift += k;
    }
  }

  ObstructionResult<S> out;
  out.cocycle = Vector<S>::Zero(kc.dim(1));
  for (const Cell& cell : kc.cells[1]) {
    const ObjectId z = cell.objects[0];
    const ObjectId x = cell.objects[1];
    const auto& fs = c.hom(x, z);
    for (std::size_t p = 0; p < fs.size(); ++p) {
      const Matrix<S> value = multiply<S>(ses.n.left(fs[p], x), Matrix<S>(sigma[x])) -
                              multiply<S>(ses.n.right(fs[p], z), Matrix<S>(sigma[z]));
      const Matrix<S> coords = coordinates_in<S>(ses.i.block(z, x), value);
      out.cocycle.segment(cell.offset + static_cast<Index>(p) * cell.coeff_dim, cell.coeff_dim) = coords.col(0);
    }
  }
  out.is_cocycle = is_zero_matrix(multiply<S>(kc.d(1), Matrix<S>(out.cocycle)));
  const auto t = solve<S>(kc.d(0), Matrix<S>(out.cocycle));
  out.is_coboundary = t.has_value();
  if (!t) return out;

  SeparabilityFamily<S> fam = zero_family(c);
  for (const Cell& cell : kc.cells[0]) {
    const ObjectId x = cell.objects[0];
    const Vector<S> split =
        sigma[x] - multiply<S>(ses.i.block(x, x), Matrix<S>(t->block(cell.offset, 0, cell.coeff_dim, 1))).col(0);
    for (ObjectId y = 0; y < n; ++y) {
      Matrix<S>& a = fam.block(x, y);
      const Index base = tensor_square_offset(c, x, x, y);
      for (Index u = 0; u < a.rows(); ++u) {
        for (Index v = 0; v < a.cols(); ++v) a(u, v) = split(base + u * a.cols() + v);
      }
    }
  }
  out.family = std::move(fam);
  return out;
}

template <class S>
LesReport les_analysis(const FinLinCat<S>& c, const ShortExactSeq<S>& ses, int max_degree, Index budget) {
  const ValidationReport valid = validate_module(c, ses);
  if (!valid.ok) throw PreconditionFailed("not a short exact sequence: " + valid.violations.front());
  const CochainComplex<S> cm = build_hm_complex(c, ses.m, max_degree, budget);
  const CochainComplex<S> cn = build_hm_complex(c, ses.n, max_degree, budget);
  const CochainComplex<S> cp = build_hm_complex(c, ses.p, max_degree, budget);

  LesReport out;
  out.m = cohomology_dims(cm);
  out.n = cohomology_dims(cn);
  out.p = cohomology_dims(cp);

  std::vector<Index> rank_alpha;
  std::vector<Index> rank_beta;
  for (int k = 0; k <= max_degree; ++k) {
    const Matrix<S> alpha = cochain_map(cm, cn, ses.i, k);
    const Matrix<S> beta = cochain_map(cn, cp, ses.q, k);
    const Matrix<S> alpha_next = cochain_map(cm, cn, ses.i, k + 1);
    if (!equal(multiply<S>(cn.d(k), alpha), multiply<S>(alpha_next, cm.d(k)))) {
      throw InternalError("induced map does not commute with the differential");
    }
    const Matrix<S> zm = kernel_basis<S>(cm.d(k));
    const Matrix<S> zn = kernel_basis<S>(cn.d(k));
    const Matrix<S> zp = kernel_basis<S>(cp.d(k));
    rank_alpha.push_back(induced_rank<S>(multiply<S>(alpha, zm), boundaries(cn, k)));
    rank_beta.push_back(induced_rank<S>(multiply<S>(beta, zn), boundaries(cp, k)));

    // Zig-zag: lift through q, apply d, pull back through i.
    const Matrix<S> lift_map = block_diagonal_map<S>(
        cp, cn, k, [&](ObjectId x, ObjectId y) { return right_inverse<S>(ses.q.block(x, y)); });
    const Matrix<S> pull_map = block_diagonal_map<S>(
        cn, cm, k + 1, [&](ObjectId x, ObjectId y) { return left_inverse<S>(ses.i.block(x, y)); });
    const Matrix<S> dy = multiply<S>(cn.d(k), multiply<S>(lift_map, zp));
    const Matrix<S> delta = multiply<S>(pull_map, dy);
    if (!equal(multiply<S>(alpha_next, delta), dy)) throw InternalError("connecting map: lift left the image");
    out.connecting_ranks.push_back(induced_rank<S>(delta, cm.d(k)));
  }

  out.exact = true;
  auto add = [&](std::string name, Index incoming, Index kernel) {
    const bool ok = incoming == kernel;
    out.exact = out.exact && ok;
    out.positions.push_back({std::move(name), incoming, kernel, ok});
  };
  for (int k = 0; k <= max_degree; ++k) {
    const auto K = static_cast<std::size_t>(k);
    const std::string deg = "H^" + std::to_string(k);
    add(deg + "(M)", k == 0 ? 0 : out.connecting_ranks[K - 1], out.m[K].dim_h - rank_alpha[K]);
    add(deg + "(N)", rank_alpha[K], out.n[K].dim_h - rank_beta[K]);
    add(deg + "(P)", rank_beta[K], out.p[K].dim_h - out.connecting_ranks[K]);
  }
  return out;
}

#define SEPCAT_INSTANTIATE(S)                                                                                  \
  template CochainComplex<S> build_hm_complex<S>(const FinLinCat<S>&, const Bimodule<S>&, int, Index);         \
  template std::vector<DegreeInfo> cohomology_dims<S>(const CochainComplex<S>&);                               \
  template Matrix<S> cochain_map<S>(const CochainComplex<S>&, const CochainComplex<S>&, const BimoduleMap<S>&, \
                                    int);                                                                      \
  template ObstructionResult<S> obstruction_cocycle<S>(const FinLinCat<S>&, const std::optional<Vector<S>>&,   \
                                                       Index);                                                 \
  template LesReport les_analysis<S>(const FinLinCat<S>&, const ShortExactSeq<S>&, int, Index);

SEPCAT_INSTANTIATE(Rational)
SEPCAT_INSTANTIATE(Zp)

}  // namespace sepcat
