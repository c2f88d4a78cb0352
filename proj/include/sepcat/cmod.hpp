#pragma once

#include <cstdint>
#include <vector>

#include "sepcat/lincat.hpp"

namespace sepcat {

/// A covariant left module: f in hom(x, y) acts M[x] -> M[y].
template <class S>
class LeftModule {
 public:
  LeftModule() = default;
  /// Zero action matrices of the right shapes.
  LeftModule(const FinLinCat<S>& c, std::vector<Index> dims);

  std::size_t object_count() const noexcept { return dims_.size(); }
  Index dim(ObjectId x) const { return dims_.at(x); }
  const std::vector<Index>& dims() const noexcept { return dims_; }
  Index total_dim() const noexcept;

  /// Matrix of shape dim(to(f)) x dim(from(f)).
  Matrix<S>& action(LabelId f) { return action_.at(f); }
  const Matrix<S>& action(LabelId f) const { return action_.at(f); }

  friend bool operator==(const LeftModule& a, const LeftModule& b) {
    if (a.dims_ != b.dims_ || a.action_.size() != b.action_.size()) return false;
    for (std::size_t i = 0; i < a.action_.size(); ++i) {
      if (!equal(a.action_[i], b.action_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<Index> dims_;
  std::vector<Matrix<S>> action_;
};

/// A bimodule with components M[x][y].
///
/// f in hom(x, x') acts on the left M[x][y] -> M[x'][y]; g in hom(y', y)
/// acts on the right M[x][y] -> M[x][y']. The canonical bimodule has
/// component hom(y, x) at (x, y).
template <class S>
class Bimodule {
 public:
  Bimodule() = default;
  /// dims in row-major (x, y) order; all actions start as zero matrices.
  Bimodule(const FinLinCat<S>& c, std::vector<Index> dims);

  std::size_t object_count() const noexcept { return n_; }
  Index dim(ObjectId x, ObjectId y) const { return dims_.at(x * n_ + y); }
  const std::vector<Index>& dims() const noexcept { return dims_; }
  Index total_dim() const noexcept;
  Index max_component_dim() const noexcept;

  /// Left action of basis f: shape dim(to(f), y) x dim(from(f), y).
  Matrix<S>& left(LabelId f, ObjectId y) { return left_.at(f * n_ + y); }
  const Matrix<S>& left(LabelId f, ObjectId y) const { return left_.at(f * n_ + y); }
  /// Right action of basis g: shape dim(x, from(g)) x dim(x, to(g)).
  Matrix<S>& right(LabelId g, ObjectId x) { return right_.at(g * n_ + x); }
  const Matrix<S>& right(LabelId g, ObjectId x) const { return right_.at(g * n_ + x); }

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    if (a.n_ != b.n_ || a.dims_ != b.dims_ || a.left_.size() != b.left_.size()) return false;
    for (std::size_t i = 0; i < a.left_.size(); ++i) {
      if (!equal(a.left_[i], b.left_[i]) || !equal(a.right_[i], b.right_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Index> dims_;
  std::vector<Matrix<S>> left_;
  std::vector<Matrix<S>> right_;
};

/// Componentwise linear maps, block (x, y) of shape
/// target.dim(x, y) x source.dim(x, y).
template <class S>
struct BimoduleMap {
  std::size_t n = 0;
  std::vector<Matrix<S>> blocks;

  Matrix<S>& block(ObjectId x, ObjectId y) { return blocks.at(x * n + y); }
  const Matrix<S>& block(ObjectId x, ObjectId y) const { return blocks.at(x * n + y); }

  friend bool operator==(const BimoduleMap& a, const BimoduleMap& b) {
    if (a.n != b.n || a.blocks.size() != b.blocks.size()) return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
      if (!equal(a.blocks[i], b.blocks[i])) return false;
    }
    return true;
  }
};

/// 0 -> m --i--> n --q--> p -> 0
template <class S>
struct ShortExactSeq {
  Bimodule<S> m;
  Bimodule<S> n;
  Bimodule<S> p;
  BimoduleMap<S> i;
  BimoduleMap<S> q;
};

/// Action of an arbitrary morphism, extended linearly over its coefficients.
template <class S>
Matrix<S> left_action(const FinLinCat<S>& c, const Bimodule<S>& m, const Morphism<S>& f, ObjectId y);
template <class S>
Matrix<S> right_action(const FinLinCat<S>& c, const Bimodule<S>& m, const Morphism<S>& g, ObjectId x);
template <class S>
Matrix<S> module_action(const FinLinCat<S>& c, const LeftModule<S>& m, const Morphism<S>& f);

/// The category as a bimodule: component hom(y, x) at (x, y), left action by
/// post-composition, right action by pre-composition.
template <class S>
Bimodule<S> canonical_bimodule(const FinLinCat<S>& c);

template <class S>
struct TensorSquare {
  Bimodule<S> bimodule;
  /// u (x) v |-> u o v, a map to canonical_bimodule(c).
  BimoduleMap<S> comp;
};

/// C (x) C with component (x, y) = sum over z of hom(z, x) (x) hom(y, z).
/// Basis order: z in object order, then u in hom(z, x), then v in hom(y, z)
/// (index u * dim hom(y, z) + v inside the z-summand).
template <class S>
TensorSquare<S> tensor_square(const FinLinCat<S>& c);

/// Offset of the z-summand inside component (x, y) of C (x) C.
template <class S>
Index tensor_square_offset(const FinLinCat<S>& c, ObjectId x, ObjectId y, ObjectId z);

template <class S>
struct Subbimodule {
  Bimodule<S> bimodule;
  /// Inclusion into the ambient bimodule.
  BimoduleMap<S> inclusion;
};

/// Componentwise kernel of a bimodule map with the induced actions; the
/// inclusion columns are the standard kernel basis.
template <class S>
Subbimodule<S> kernel_of(const FinLinCat<S>& c, const Bimodule<S>& source, const BimoduleMap<S>& map);

template <class S>
struct ImageResult {
  Bimodule<S> bimodule;
  /// source -> image
  BimoduleMap<S> corestriction;
  /// image -> target
  BimoduleMap<S> inclusion;
};

template <class S>
ImageResult<S> image_of(const FinLinCat<S>& c, const Bimodule<S>& target, const BimoduleMap<S>& map);

template <class S>
BimoduleMap<S> zero_map(const Bimodule<S>& source, const Bimodule<S>& target);
template <class S>
BimoduleMap<S> identity_map(const Bimodule<S>& m);
/// Componentwise product a o b.
template <class S>
BimoduleMap<S> compose_maps(const BimoduleMap<S>& a, const BimoduleMap<S>& b);

/// P(a, b) with P(a, b)[x][y] = hom(a, x) (x) hom(y, b), basis u * dim hom(y, b) + v.
template <class S>
Bimodule<S> representable(const FinLinCat<S>& c, ObjectId a, ObjectId b);

template <class S>
Bimodule<S> direct_sum(const FinLinCat<S>& c, const std::vector<Bimodule<S>>& parts);

/// The bimodule map P(a, b) -> target sending 1_a (x) 1_b to `element`,
/// an element of target[a][b]: u (x) v |-> u |> element <| v.
template <class S>
BimoduleMap<S> yoneda_map(const FinLinCat<S>& c, ObjectId a, ObjectId b, const Bimodule<S>& target,
                          const Vector<S>& element);

/// Block map between direct sums, parts[j][i] : sources[i] -> targets[j].
template <class S>
BimoduleMap<S> block_map(const std::vector<Bimodule<S>>& sources, const std::vector<Bimodule<S>>& targets,
                         const std::vector<std::vector<BimoduleMap<S>>>& parts);

/// A random bimodule with 0 < component dims <= dim_cap when one can be found,
/// built as the kernel of a random bimodule map between sums of
/// representables. Falls back to the zero bimodule. Deterministic in seed.
template <class S>
Bimodule<S> random_bimodule(const FinLinCat<S>& c, std::uint64_t seed, Index dim_cap);

/// 0 -> ker comp -> C (x) C -> C -> 0.
template <class S>
ShortExactSeq<S> kernel_comp_sequence(const FinLinCat<S>& c);

/// 0 -> ker phi -> P -> im phi -> 0 for a random map phi out of a
/// representable. Deterministic in seed.
template <class S>
ShortExactSeq<S> random_short_exact_sequence(const FinLinCat<S>& c, std::uint64_t seed);

/// M[x] = hom(a, x) with action by post-composition.
template <class S>
LeftModule<S> representable_left(const FinLinCat<S>& c, ObjectId a);
/// The sum of all representable left modules.
template <class S>
LeftModule<S> regular_left_module(const FinLinCat<S>& c);
template <class S>
LeftModule<S> direct_sum(const FinLinCat<S>& c, const std::vector<LeftModule<S>>& parts);
/// Kernel of a random map between representable left modules, with
/// 0 < dims <= dim_cap when possible; zero module otherwise.
template <class S>
LeftModule<S> random_left_module(const FinLinCat<S>& c, std::uint64_t seed, Index dim_cap);

template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const LeftModule<S>& m);
template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const Bimodule<S>& m);
/// Shapes and commutation with both actions of every basis morphism.
template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const Bimodule<S>& source, const Bimodule<S>& target,
                                 const BimoduleMap<S>& map);
/// All parts valid, i injective, q surjective, im i = ker q.
template <class S>
ValidationReport validate_module(const FinLinCat<S>& c, const ShortExactSeq<S>& ses);

}  // namespace sepcat
