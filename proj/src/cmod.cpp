#include "sepcat/cmod.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sepcat/errors.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

namespace {

template <class S>
std::string label_name(const FinLinCat<S>& c, LabelId f) {
  return c.label(f).name;
}

template <class S>
Matrix<S> stack_block_diagonal(const std::vector<Matrix<S>>& parts) {
  Index rows = 0;
  Index cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Matrix<S> out = zeros<S>(rows, cols);
  Index r = 0;
  Index k = 0;
  for (const auto& p : parts) {
    out.block(r, k, p.rows(), p.cols()) = p;
    r += p.rows();
    k += p.cols();
  }
  return out;
}

/// Uniform draw from {-1, 0, 0, 1}, biased towards sparse elements.
template <class S>
S small_coefficient(std::mt19937_64& rng, const FieldSpec& field) {
  static constexpr long values[] = {-1, 0, 0, 1};
  return make_scalar<S>(values[rng() % 4], field);
}

template <class S>
Vector<S> random_vector(std::mt19937_64& rng, const FieldSpec& field, Index n) {
  Vector<S> v(n);
  for (Index i = 0; i < n; ++i) v(i) = small_coefficient<S>(rng, field);
  return v;
}

}  // namespace

template <class S>
LeftModule<S>::LeftModule(const FinLinCat<S>& c, std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.size() != c.object_count()) throw DimensionMismatch("left module: one dimension per object expected");
  action_.reserve(c.label_count());
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    action_.push_back(zeros<S>(dims_[l.to], dims_[l.from]));
  }
}

template <class S>
Index LeftModule<S>::total_dim() const noexcept {
  Index t = 0;
  for (Index d : dims_) t += d;
  return t;
}

template <class S>
Bimodule<S>::Bimodule(const FinLinCat<S>& c, std::vector<Index> dims) : n_(c.object_count()), dims_(std::move(dims)) {
  if (dims_.size() != n_ * n_) throw DimensionMismatch("bimodule: one dimension per object pair expected");
  left_.reserve(c.label_count() * n_);
  right_.reserve(c.label_count() * n_);
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId y = 0; y < n_; ++y) left_.push_back(zeros<S>(dim(l.to, y), dim(l.from, y)));
  }
  for (LabelId g = 0; g < c.label_count(); ++g) {
    const BasisLabel& l = c.label(g);
    for (ObjectId x = 0; x < n_; ++x) right_.push_back(zeros<S>(dim(x, l.from), dim(x, l.to)));
  }
}

template <class S>
Index Bimodule<S>::total_dim() const noexcept {
  Index t = 0;
  for (Index d : dims_) t += d;
  return t;
}

template <class S>
Index Bimodule<S>::max_component_dim() const noexcept {
  Index t = 0;
  for (Index d : dims_) t = std::max(t, d);
  return t;
}

template <class S>
Matrix<S> left_action(const FinLinCat<S>& c, const Bimodule<S>& m, const Morphism<S>& f, ObjectId y) {
  const auto& basis = c.hom(f.source, f.target);
  if (f.coeffs.size() != static_cast<Index>(basis.size())) throw DimensionMismatch("left_action: coefficient length");
  Matrix<S> out = zeros<S>(m.dim(f.target, y), m.dim(f.source, y));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const S& a = f.coeffs(static_cast<Index>(i));
    if (!is_zero(a)) out += a * m.left(basis[i], y);
  }
  return out;
}

template <class S>
Matrix<S> right_action(const FinLinCat<S>& c, const Bimodule<S>& m, const Morphism<S>& g, ObjectId x) {
  const auto& basis = c.hom(g.source, g.target);
  if (g.coeffs.size() != static_cast<Index>(basis.size())) throw DimensionMismatch("right_action: coefficient length");
  Matrix<S> out = zeros<S>(m.dim(x, g.source), m.dim(x, g.target));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const S& a = g.coeffs(static_cast<Index>(i));
    if (!is_zero(a)) out += a * m.right(basis[i], x);
  }
  return out;
}

template <class S>
Matrix<S> module_action(const FinLinCat<S>& c, const LeftModule<S>& m, const Morphism<S>& f) {
  const auto& basis = c.hom(f.source, f.target);
  if (f.coeffs.size() != static_cast<Index>(basis.size())) throw DimensionMismatch("module_action: coefficient length");
  Matrix<S> out = zeros<S>(m.dim(f.target), m.dim(f.source));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const S& a = f.coeffs(static_cast<Index>(i));
    if (!is_zero(a)) out += a * m.action(basis[i]);
  }
  return out;
}

template <class S>
Bimodule<S> canonical_bimodule(const FinLinCat<S>& c) {
  const std::size_t n = c.object_count();
  std::vector<Index> dims(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) dims[x * n + y] = c.hom_dim(y, x);
  }
  Bimodule<S> m(c, std::move(dims));
  for (LabelId f = 0; f < c.label_count(); ++f) {
    for (ObjectId w = 0; w < n; ++w) {
      m.left(f, w) = c.post_composition(f, w);
      m.right(f, w) = c.pre_composition(f, w);
    }
  }
  return m;
}

template <class S>
Index tensor_square_offset(const FinLinCat<S>& c, ObjectId x, ObjectId y, ObjectId z) {
  Index off = 0;
  for (ObjectId w = 0; w < z; ++w) off += c.hom_dim(w, x) * c.hom_dim(y, w);
  return off;
}

template <class S>
Bimodule<S> representable(const FinLinCat<S>& c, ObjectId a, ObjectId b) {
  const std::size_t n = c.object_count();
  std::vector<Index> dims(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) dims[x * n + y] = c.hom_dim(a, x) * c.hom_dim(y, b);
  }
  Bimodule<S> m(c, std::move(dims));
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const Matrix<S> post = c.post_composition(f, a);
    const Matrix<S> pre = c.pre_composition(f, b);
    for (ObjectId w = 0; w < n; ++w) {
      m.left(f, w) = kron<S>(post, identity<S>(c.hom_dim(w, b)));
      m.right(f, w) = kron<S>(identity<S>(c.hom_dim(a, w)), pre);
    }
  }
  return m;
}

template <class S>
Bimodule<S> direct_sum(const FinLinCat<S>& c, const std::vector<Bimodule<S>>& parts) {
  const std::size_t n = c.object_count();
  std::vector<Index> dims(n * n, 0);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < n * n; ++i) dims[i] += p.dims().at(i);
  }
  Bimodule<S> m(c, std::move(dims));
  std::vector<Matrix<S>> blocks;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    for (ObjectId w = 0; w < n; ++w) {
      blocks.clear();
      for (const auto& p : parts) blocks.push_back(p.left(f, w));
      m.left(f, w) = stack_block_diagonal(blocks);
      blocks.clear();
      for (const auto& p : parts) blocks.push_back(p.right(f, w));
      m.right(f, w) = stack_block_diagonal(blocks);
    }
  }
  return m;
}

template <class S>
TensorSquare<S> tensor_square(const FinLinCat<S>& c) {
  const std::size_t n = c.object_count();
  std::vector<Bimodule<S>> parts;
  parts.reserve(n);
  for (ObjectId z = 0; z < n; ++z) parts.push_back(representable(c, z, z));
  TensorSquare<S> out{direct_sum(c, parts), {}};
  out.comp.n = n;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      Matrix<S> block = zeros<S>(c.hom_dim(y, x), out.bimodule.dim(x, y));
      for (ObjectId z = 0; z < n; ++z) {
        const Matrix<S>& m = c.composition_matrix(y, z, x);
        block.block(0, tensor_square_offset(c, x, y, z), m.rows(), m.cols()) = m;
      }
      out.comp.blocks.push_back(std::move(block));
    }
  }
  return out;
}

template <class S>
Subbimodule<S> kernel_of(const FinLinCat<S>& c, const Bimodule<S>& source, const BimoduleMap<S>& map) {
  const std::size_t n = c.object_count();
  BimoduleMap<S> inc{n, {}};
  std::vector<Index> dims(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      inc.blocks.push_back(kernel_basis<S>(map.block(x, y)));
      if (inc.blocks.back().rows() != source.dim(x, y)) throw DimensionMismatch("kernel_of: block shape");
      dims[x * n + y] = inc.blocks.back().cols();
    }
  }
  Bimodule<S> k(c, std::move(dims));
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId w = 0; w < n; ++w) {
      k.left(f, w) = coordinates_in<S>(inc.block(l.to, w), multiply<S>(source.left(f, w), inc.block(l.from, w)));
      k.right(f, w) = coordinates_in<S>(inc.block(w, l.from), multiply<S>(source.right(f, w), inc.block(w, l.to)));
    }
  }
  return {std::move(k), std::move(inc)};
}

template <class S>
ImageResult<S> image_of(const FinLinCat<S>& c, const Bimodule<S>& target, const BimoduleMap<S>& map) {
  const std::size_t n = c.object_count();
  ImageResult<S> out;
  out.inclusion.n = n;
  out.corestriction.n = n;
  std::vector<Index> dims(n * n);
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      Matrix<S> b = column_space_basis<S>(map.block(x, y));
      out.corestriction.blocks.push_back(coordinates_in<S>(b, map.block(x, y)));
      dims[x * n + y] = b.cols();
      out.inclusion.blocks.push_back(std::move(b));
    }
  }
  Bimodule<S> im(c, std::move(dims));
  const BimoduleMap<S>& inc = out.inclusion;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId w = 0; w < n; ++w) {
      im.left(f, w) = coordinates_in<S>(inc.block(l.to, w), multiply<S>(target.left(f, w), inc.block(l.from, w)));
      im.right(f, w) = coordinates_in<S>(inc.block(w, l.from), multiply<S>(target.right(f, w), inc.block(w, l.to)));
    }
  }
  out.bimodule = std::move(im);
  return out;
}

template <class S>
BimoduleMap<S> zero_map(const Bimodule<S>& source, const Bimodule<S>& target) {
  const std::size_t n = source.object_count();
  BimoduleMap<S> out{n, {}};
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) out.blocks.push_back(zeros<S>(target.dim(x, y), source.dim(x, y)));
  }
  return out;
}

template <class S>
BimoduleMap<S> identity_map(const Bimodule<S>& m) {
  const std::size_t n = m.object_count();
  BimoduleMap<S> out{n, {}};
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) out.blocks.push_back(identity<S>(m.dim(x, y)));
  }
  return out;
}

template <class S>
BimoduleMap<S> compose_maps(const BimoduleMap<S>& a, const BimoduleMap<S>& b) {
  if (a.n != b.n) throw DimensionMismatch("compose_maps: object counts differ");
  BimoduleMap<S> out{a.n, {}};
  for (std::size_t i = 0; i < a.blocks.size(); ++i) out.blocks.push_back(multiply<S>(a.blocks[i], b.blocks[i]));
  return out;
}

template <class S>
BimoduleMap<S> yoneda_map(const FinLinCat<S>& c, ObjectId a, ObjectId b, const Bimodule<S>& target,
                          const Vector<S>& element) {
  if (element.size() != target.dim(a, b)) throw DimensionMismatch("yoneda_map: element length");
  const std::size_t n = c.object_count();
  BimoduleMap<S> out{n, {}};
  const Matrix<S> e = element;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const auto& us = c.hom(a, x);
      const auto& vs = c.hom(y, b);
      Matrix<S> block = zeros<S>(target.dim(x, y), static_cast<Index>(us.size() * vs.size()));
      for (std::size_t v = 0; v < vs.size(); ++v) {
        const Matrix<S> ev = multiply<S>(target.right(vs[v], a), e);
        for (std::size_t u = 0; u < us.size(); ++u) {
          block.col(static_cast<Index>(u * vs.size() + v)) = multiply<S>(target.left(us[u], y), ev).col(0);
        }
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

template <class S>
BimoduleMap<S> block_map(const std::vector<Bimodule<S>>& sources, const std::vector<Bimodule<S>>& targets,
                         const std::vector<std::vector<BimoduleMap<S>>>& parts) {
  if (sources.empty() && targets.empty()) return {};
  const std::size_t n = sources.empty() ? targets.front().object_count() : sources.front().object_count();
  BimoduleMap<S> out{n, {}};
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      Index rows = 0;
      Index cols = 0;
      for (const auto& t : targets) rows += t.dim(x, y);
      for (const auto& s : sources) cols += s.dim(x, y);
      Matrix<S> block = zeros<S>(rows, cols);
      Index r = 0;
      for (std::size_t j = 0; j < targets.size(); ++j) {
        Index k = 0;
        for (std::size_t i = 0; i < sources.size(); ++i) {
          const Matrix<S>& p = parts.at(j).at(i).block(x, y);
          block.block(r, k, p.rows(), p.cols()) = p;
          k += sources[i].dim(x, y);
        }
        r += targets[j].dim(x, y);
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

template <class S>
Bimodule<S> random_bimodule(const FinLinCat<S>& c, std::uint64_t seed, Index dim_cap) {
  const std::size_t n = c.object_count();
  std::vector<Index> zero_dims(n * n, 0);
  if (n == 0 || dim_cap <= 0) return Bimodule<S>(c, zero_dims);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<std::pair<ObjectId, ObjectId>> src(1 + rng() % 2);
    std::vector<std::pair<ObjectId, ObjectId>> tgt(1 + rng() % 2);
    for (auto& p : src) p = {rng() % n, rng() % n};
    for (auto& p : tgt) p = {rng() % n, rng() % n};
    std::vector<Bimodule<S>> sources;
    std::vector<Bimodule<S>> targets;
    for (auto [a, b] : src) sources.push_back(representable(c, a, b));
    for (auto [a, b] : tgt) targets.push_back(representable(c, a, b));
    std::vector<std::vector<BimoduleMap<S>>> parts(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) {
      for (std::size_t i = 0; i < sources.size(); ++i) {
        const auto [a, b] = src[i];
        const Vector<S> e = random_vector<S>(rng, c.field(), targets[j].dim(a, b));
        parts[j].push_back(yoneda_map(c, a, b, targets[j], e));
      }
    }
    const Bimodule<S> total = direct_sum(c, sources);
    Subbimodule<S> k = kernel_of(c, total, block_map(sources, targets, parts));
    const Index top = k.bimodule.max_component_dim();
    if (top > 0 && top <= dim_cap) return std::move(k.bimodule);
  }
  return Bimodule<S>(c, zero_dims);
}

template <class S>
ShortExactSeq<S> kernel_comp_sequence(const FinLinCat<S>& c) {
  TensorSquare<S> t = tensor_square(c);
  Subbimodule<S> k = kernel_of(c, t.bimodule, t.comp);
  return {std::move(k.bimodule), std::move(t.bimodule), canonical_bimodule(c), std::move(k.inclusion),
          std::move(t.comp)};
}

template <class S>
ShortExactSeq<S> random_short_exact_sequence(const FinLinCat<S>& c, std::uint64_t seed) {
  const std::size_t n = c.object_count();
  if (n == 0) {
    Bimodule<S> z(c, {});
    return {z, z, z, BimoduleMap<S>{}, BimoduleMap<S>{}};
  }
  std::mt19937_64 rng(seed);
  const ObjectId a = rng() % n;
  const ObjectId b = rng() % n;
  const ObjectId a2 = rng() % n;
  const ObjectId b2 = rng() % n;
  Bimodule<S> source = representable(c, a, b);
  const Bimodule<S> target = representable(c, a2, b2);
  const Vector<S> e = random_vector<S>(rng, c.field(), target.dim(a, b));
  const BimoduleMap<S> phi = yoneda_map(c, a, b, target, e);
  Subbimodule<S> k = kernel_of(c, source, phi);
  ImageResult<S> im = image_of(c, target, phi);
  return {std::move(k.bimodule), std::move(source), std::move(im.bimodule), std::move(k.inclusion),
          std::move(im.corestriction)};
}

template <class S>
LeftModule<S> representable_left(const FinLinCat<S>& c, ObjectId a) {
  std::vector<Index> dims(c.object_count());
  for (ObjectId x = 0; x < dims.size(); ++x) dims[x] = c.hom_dim(a, x);
  LeftModule<S> m(c, std::move(dims));
  for (LabelId f = 0; f < c.label_count(); ++f) m.action(f) = c.post_composition(f, a);
  return m;
}

template <class S>
LeftModule<S> direct_sum(const FinLinCat<S>& c, const std::vector<LeftModule<S>>& parts) {
  std::vector<Index> dims(c.object_count(), 0);
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] += p.dims().at(i);
  }
  LeftModule<S> m(c, std::move(dims));
  std::vector<Matrix<S>> blocks;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    blocks.clear();
    for (const auto& p : parts) blocks.push_back(p.action(f));
    m.action(f) = stack_block_diagonal(blocks);
  }
  return m;
}

template <class S>
LeftModule<S> regular_left_module(const FinLinCat<S>& c) {
  std::vector<LeftModule<S>> parts;
  for (ObjectId a = 0; a < c.object_count(); ++a) parts.push_back(representable_left(c, a));
  return direct_sum(c, parts);
}

template <class S>
LeftModule<S> random_left_module(const FinLinCat<S>& c, std::uint64_t seed, Index dim_cap) {
  const std::size_t n = c.object_count();
  if (n == 0 || dim_cap <= 0) return LeftModule<S>(c, std::vector<Index>(n, 0));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<ObjectId> src(1 + rng() % 2);
    std::vector<ObjectId> tgt(1 + rng() % 2);
    for (auto& a : src) a = rng() % n;
    for (auto& b : tgt) b = rng() % n;
    std::vector<LeftModule<S>> sources;
    for (ObjectId a : src) sources.push_back(representable_left(c, a));
    const LeftModule<S> total = direct_sum(c, sources);
    // A map P(a) -> P(b) is u |-> u o e with e in hom(b, a).
    std::vector<std::vector<Vector<S>>> elements(tgt.size());
    for (std::size_t j = 0; j < tgt.size(); ++j) {
      for (ObjectId a : src) elements[j].push_back(random_vector<S>(rng, c.field(), c.hom_dim(tgt[j], a)));
    }
    std::vector<Matrix<S>> kernels;
    std::vector<Index> dims(n);
    Index top = 0;
    for (ObjectId x = 0; x < n; ++x) {
      Index rows = 0;
      for (ObjectId b : tgt) rows += c.hom_dim(b, x);
      Matrix<S> block = zeros<S>(rows, total.dim(x));
      Index r = 0;
      for (std::size_t j = 0; j < tgt.size(); ++j) {
        Index k = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
          const auto& us = c.hom(src[i], x);
          for (std::size_t u = 0; u < us.size(); ++u) {
            const Vector<S> img = c.compose(tgt[j], src[i], x, c.unit(us[u]), elements[j][i]);
            block.block(r, k + static_cast<Index>(u), img.size(), 1) = img;
          }
          k += static_cast<Index>(us.size());
        }
        r += c.hom_dim(tgt[j], x);
      }
      kernels.push_back(kernel_basis<S>(block));
      dims[x] = kernels.back().cols();
      top = std::max(top, dims[x]);
    }
    if (top == 0 || top > dim_cap) continue;
    LeftModule<S> m(c, std::move(dims));
    for (LabelId f = 0; f < c.label_count(); ++f) {
      const BasisLabel& l = c.label(f);
      m.action(f) = coordinates_in<S>(kernels[l.to], multiply<S>(total.action(f), kernels[l.from]));
    }
    return m;
  }
  return LeftModule<S>(c, std::vector<Index>(n, 0));
}

template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const LeftModule<S>& m) {
  ValidationReport r;
  const std::size_t n = c.object_count();
  if (m.object_count() != n) {
    r.fail("module has " + std::to_string(m.object_count()) + " components, category has " + std::to_string(n));
    return r;
  }
  bool shapes = true;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    const Matrix<S>& a = m.action(f);
    if (a.rows() != m.dim(l.to) || a.cols() != m.dim(l.from)) {
      r.fail("action of " + l.name + " has wrong shape");
      shapes = false;
    }
  }
  if (!shapes) return r;
  for (ObjectId x = 0; x < n; ++x) {
    if (!c.has_identity(x)) continue;
    if (!equal(module_action(c, m, Morphism<S>{x, x, c.identity(x)}), identity<S>(m.dim(x)))) {
      r.fail("identity of " + c.object_name(x) + " does not act as the identity");
    }
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& lf = c.label(f);
    for (ObjectId z = 0; z < n; ++z) {
      for (LabelId g : c.hom(lf.to, z)) {
        const Morphism<S> gf{lf.from, z, c.compose_labels(g, f)};
        if (!equal(module_action(c, m, gf), multiply<S>(m.action(g), m.action(f)))) {
          r.fail("action not functorial on (" + label_name(c, g) + ", " + lf.name + ")");
          if (r.violations.size() >= 64) return r;
        }
      }
    }
  }
  return r;
}

template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const Bimodule<S>& m) {
  ValidationReport r;
  const std::size_t n = c.object_count();
  if (m.object_count() != n) {
    r.fail("bimodule has " + std::to_string(m.object_count()) + " object rows, category has " + std::to_string(n));
    return r;
  }
  bool shapes = true;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId w = 0; w < n; ++w) {
      const Matrix<S>& a = m.left(f, w);
      if (a.rows() != m.dim(l.to, w) || a.cols() != m.dim(l.from, w)) {
        r.fail("left action of " + l.name + " at " + c.object_name(w) + " has wrong shape");
        shapes = false;
      }
      const Matrix<S>& b = m.right(f, w);
      if (b.rows() != m.dim(w, l.from) || b.cols() != m.dim(w, l.to)) {
        r.fail("right action of " + l.name + " at " + c.object_name(w) + " has wrong shape");
        shapes = false;
      }
    }
  }
  if (!shapes) return r;
  auto full = [&] { return r.violations.size() >= 64; };
  for (ObjectId x = 0; x < n; ++x) {
    if (!c.has_identity(x)) continue;
    const Morphism<S> id{x, x, c.identity(x)};
    for (ObjectId w = 0; w < n; ++w) {
      if (!equal(left_action(c, m, id, w), identity<S>(m.dim(x, w)))) {
        r.fail("identity of " + c.object_name(x) + " does not act as the identity on the left at " +
               c.object_name(w));
      }
      if (!equal(right_action(c, m, id, w), identity<S>(m.dim(w, x)))) {
        r.fail("identity of " + c.object_name(x) + " does not act as the identity on the right at " +
               c.object_name(w));
      }
    }
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& lf = c.label(f);
    for (ObjectId z = 0; z < n; ++z) {
      for (LabelId g : c.hom(lf.to, z)) {
        const Morphism<S> gf{lf.from, z, c.compose_labels(g, f)};
        for (ObjectId w = 0; w < n; ++w) {
          if (!equal(left_action(c, m, gf, w), multiply<S>(m.left(g, w), m.left(f, w)))) {
            r.fail("left action not functorial on (" + label_name(c, g) + ", " + lf.name + ") at " +
                   c.object_name(w));
          }
          // right(g o f) = right(f) right(g)
          if (!equal(right_action(c, m, gf, w), multiply<S>(m.right(f, w), m.right(g, w)))) {
            r.fail("right action not functorial on (" + label_name(c, g) + ", " + lf.name + ") at " +
                   c.object_name(w));
          }
          if (full()) return r;
        }
      }
    }
  }
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& lf = c.label(f);
    for (LabelId g = 0; g < c.label_count(); ++g) {
      const BasisLabel& lg = c.label(g);
      // f acts hom(x, x') on the left, g acts hom(y', y) on the right.
      const Matrix<S> a = multiply<S>(m.right(g, lf.to), m.left(f, lg.to));
      const Matrix<S> b = multiply<S>(m.left(f, lg.from), m.right(g, lf.from));
      if (!equal(a, b)) {
        r.fail("left and right actions do not commute on (" + lf.name + ", " + lg.name + ")");
        if (full()) return r;
      }
    }
  }
  return r;
}

template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const Bimodule<S>& source, const Bimodule<S>& target,
                                 const BimoduleMap<S>& map) {
  ValidationReport r;
  const std::size_t n = c.object_count();
  if (map.n != n || map.blocks.size() != n * n) {
    r.fail("map does not have one block per object pair");
    return r;
  }
  bool shapes = true;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const Matrix<S>& b = map.block(x, y);
      if (b.rows() != target.dim(x, y) || b.cols() != source.dim(x, y)) {
        r.fail("block (" + c.object_name(x) + ", " + c.object_name(y) + ") has wrong shape");
        shapes = false;
      }
    }
  }
  if (!shapes) return r;
  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& l = c.label(f);
    for (ObjectId w = 0; w < n; ++w) {
      if (!equal(multiply<S>(map.block(l.to, w), source.left(f, w)),
                 multiply<S>(target.left(f, w), map.block(l.from, w)))) {
        r.fail("map does not commute with the left action of " + l.name + " at " + c.object_name(w));
      }
      if (!equal(multiply<S>(map.block(w, l.from), source.right(f, w)),
                 multiply<S>(target.right(f, w), map.block(w, l.to)))) {
        r.fail("map does not commute with the right action of " + l.name + " at " + c.object_name(w));
      }
      if (r.violations.size() >= 64) return r;
    }
  }
  return r;
}

template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const ShortExactSeq<S>& ses) {
  ValidationReport r;
  r.merge(validate_module(c, ses.m));
  r.merge(validate_module(c, ses.n));
  r.merge(validate_module(c, ses.p));
  r.merge(validate_module(c, ses.m, ses.n, ses.i));
  r.merge(validate_module(c, ses.n, ses.p, ses.q));
  if (!r.ok) return r;
  const std::size_t n = c.object_count();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      const std::string at = " at (" + c.object_name(x) + ", " + c.object_name(y) + ")";
      const Matrix<S>& i = ses.i.block(x, y);
      const Matrix<S>& q = ses.q.block(x, y);
      if (rank<S>(i) != i.cols()) r.fail("first map is not injective" + at);
      if (rank<S>(q) != q.rows()) r.fail("second map is not surjective" + at);
      if (!is_zero_matrix(multiply<S>(q, i))) r.fail("composite of the two maps is not zero" + at);
      if (ses.n.dim(x, y) != ses.m.dim(x, y) + ses.p.dim(x, y)) r.fail("dimensions do not add up" + at);
    }
  }
  return r;
}

#define SEPCAT_INSTANTIATE(S)                                                                               \
  template class LeftModule<S>;                                                                             \
  template class Bimodule<S>;                                                                               \
  template Matrix<S> left_action<S>(const FinLinCat<S>&, const Bimodule<S>&, const Morphism<S>&, ObjectId);  \
  template Matrix<S> right_action<S>(const FinLinCat<S>&, const Bimodule<S>&, const Morphism<S>&, ObjectId); \
  template Matrix<S> module_action<S>(const FinLinCat<S>&, const LeftModule<S>&, const Morphism<S>&);       \
  template Bimodule<S> canonical_bimodule<S>(const FinLinCat<S>&);                                          \
  template TensorSquare<S> tensor_square<S>(const FinLinCat<S>&);                                           \
  template Index tensor_square_offset<S>(const FinLinCat<S>&, ObjectId, ObjectId, ObjectId);                \
  template Subbimodule<S> kernel_of<S>(const FinLinCat<S>&, const Bimodule<S>&, const BimoduleMap<S>&);     \
  template ImageResult<S> image_of<S>(const FinLinCat<S>&, const Bimodule<S>&, const BimoduleMap<S>&);      \
  template BimoduleMap<S> zero_map<S>(const Bimodule<S>&, const Bimodule<S>&);                              \
  template BimoduleMap<S> identity_map<S>(const Bimodule<S>&);                                              \
  template BimoduleMap<S> compose_maps<S>(const BimoduleMap<S>&, const BimoduleMap<S>&);                    \
  template Bimodule<S> representable<S>(const FinLinCat<S>&, ObjectId, ObjectId);                           \
  template Bimodule<S> direct_sum<S>(const FinLinCat<S>&, const std::vector<Bimodule<S>>&);                 \
  template BimoduleMap<S> yoneda_map<S>(const FinLinCat<S>&, ObjectId, ObjectId, const Bimodule<S>&,        \
                                        const Vector<S>&);                                                  \
  template BimoduleMap<S> block_map<S>(const std::vector<Bimodule<S>>&, const std::vector<Bimodule<S>>&,    \
                                       const std::vector<std::vector<BimoduleMap<S>>>&);                    \
  template Bimodule<S> random_bimodule<S>(const FinLinCat<S>&, std::uint64_t, Index);                       \
  template ShortExactSeq<S> kernel_comp_sequence<S>(const FinLinCat<S>&);                                   \
  template ShortExactSeq<S> random_short_exact_sequence<S>(const FinLinCat<S>&, std::uint64_t);             \
  template LeftModule<S> representable_left<S>(const FinLinCat<S>&, ObjectId);                              \
  template LeftModule<S> regular_left_module<S>(const FinLinCat<S>&);                                       \
  template LeftModule<S> direct_sum<S>(const FinLinCat<S>&, const std::vector<LeftModule<S>>&);             \
  template LeftModule<S> random_left_module<S>(const FinLinCat<S>&, std::uint64_t, Index);                  \
  template ValidationReport validate_module<S>(const FinLinCat<S>&, const LeftModule<S>&);                  \
  template ValidationReport validate_module<S>(const FinLinCat<S>&, const Bimodule<S>&);                    \
  template ValidationReport validate_module<S>(const FinLinCat<S>&, const Bimodule<S>&, const Bimodule<S>&, \
                                               const BimoduleMap<S>&);                                      \
  template ValidationReport validate_module<S>(const FinLinCat<S>&, const ShortExactSeq<S>&);

SEPCAT_INSTANTIATE(Rational)
SEPCAT_INSTANTIATE(Zp)

}  // namespace sepcat
