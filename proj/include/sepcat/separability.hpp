#pragma once

#include <optional>
#include <vector>

#include "sepcat/cmod.hpp"

namespace sepcat {

/// Coefficient matrices A^{x,y} of a_x^y in hom(y, x) (x) hom(x, y): entry
/// (i, j) is the coefficient of u_i (x) v_j.
template <class S>
struct SeparabilityFamily {
  std::size_t n = 0;
  std::vector<Matrix<S>> blocks;

  Matrix<S>& block(ObjectId x, ObjectId y) { return blocks.at(x * n + y); }
  const Matrix<S>& block(ObjectId x, ObjectId y) const { return blocks.at(x * n + y); }

  friend bool operator==(const SeparabilityFamily& a, const SeparabilityFamily& b) {
    if (a.n != b.n || a.blocks.size() != b.blocks.size()) return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
      if (!equal(a.blocks[i], b.blocks[i])) return false;
    }
    return true;
  }
};

template <class S>
SeparabilityFamily<S> zero_family(const FinLinCat<S>& c);

/// Unknowns are the entries of every A^{x,y}, blocks in row-major (x, y)
/// order and entries row-major inside a block. Rows: the unit equations
/// sum_y comp(a_x^y) = 1_x for each x, then for every basis f in hom(x, z)
/// and every y the naturality equations f |> a_x^y = a_z^y <| f.
template <class S>
struct SeparabilitySystem {
  Matrix<S> matrix;
  Vector<S> rhs;
};

template <class S>
SeparabilitySystem<S> separability_system(const FinLinCat<S>& c);

template <class S>
Vector<S> family_to_vector(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam);
template <class S>
SeparabilityFamily<S> family_from_vector(const FinLinCat<S>& c, const Vector<S>& v);

template <class S>
struct SeparabilitySolution {
  /// Absent iff the category is not separable.
  std::optional<SeparabilityFamily<S>> family;
  Index unknowns = 0;
  Index equations = 0;
  Index rank = 0;
  /// Dimension of the affine space of families; absent when infeasible.
  std::optional<Index> solution_dim;
};

/// Throws PreconditionFailed on an invalid category.
template <class S>
SeparabilitySolution<S> solve_separability(const FinLinCat<S>& c);

template <class S>
struct FamilyVerification {
  struct UnitResidual {
    ObjectId x;
    /// sum_y comp(a_x^y) - 1_x in hom(x, x)
    Vector<S> residual;
  };
  struct NaturalityResidual {
    LabelId f;
    ObjectId y;
    /// f |> a_x^y - a_z^y <| f as a hom(y, z) x hom(x, y) coefficient matrix
    Matrix<S> residual;
  };

  bool ok = true;
  std::vector<UnitResidual> unit_failures;
  std::vector<NaturalityResidual> naturality_failures;
};

/// Throws DimensionMismatch if a block shape does not match the hom dimensions.
template <class S>
FamilyVerification<S> verify_family(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam);

/// A rank decomposition A = sum_i f^i (g^i)^T with linearly independent
/// f^i in hom(y, x) and g^i in hom(x, y).
template <class S>
struct Term {
  Vector<S> left;
  Vector<S> right;
};

template <class S>
struct ReducedFamily {
  std::size_t n = 0;
  std::vector<std::vector<Term<S>>> blocks;

  const std::vector<Term<S>>& terms(ObjectId x, ObjectId y) const { return blocks.at(x * n + y); }
  std::size_t term_count(ObjectId x, ObjectId y) const { return terms(x, y).size(); }
};

/// Column-reduced form: g^i are the nonzero rows of rref(A), f^i the pivot
/// columns of A. 1/2 I gives the terms (1/2 e, e), (1/2 g, g).
template <class S>
std::vector<Term<S>> reduce_block(const Matrix<S>& a);

/// Throws PreconditionFailed unless the family verifies.
template <class S>
ReducedFamily<S> reduce_family(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam);

template <class S>
SeparabilityFamily<S> recompose(const FinLinCat<S>& c, const ReducedFamily<S>& red);

struct GroupoidWitness {
  ObjectId x;
  ObjectId y;
  std::size_t count;
};

template <class S>
struct PredictedVerdict {
  bool separable = false;
  /// A hom set whose cardinality vanishes in the field.
  std::optional<GroupoidWitness> witness;
  /// Certificate relative to linearize(p, k).
  std::optional<SeparabilityFamily<S>> family;
};

/// Groupoid criterion. The certificate puts |G(y0, x)|^{-1} sum g (x) g^{-1}
/// over g in G(y0, x) at (x, y0), y0 the first object of x's component, and
/// zero elsewhere. Throws PreconditionFailed unless p is a groupoid.
template <class S>
PredictedVerdict<S> maschke_predict(const FiniteCatPresentation& p, const FieldSpec& k);

/// Delta criterion: separable iff discrete, certificate 1_x (x) 1_x.
/// Throws PreconditionFailed unless p is a delta category.
template <class S>
PredictedVerdict<S> delta_predict(const FiniteCatPresentation& p, const FieldSpec& k);

template <class S>
struct SectionResult {
  std::size_t n = 0;
  /// psi_x^y : M[x] -> hom(y, x) (x) M[y], rows ordered (u, m).
  std::vector<Matrix<S>> psi;
  bool section_ok = false;
  bool linear_ok = false;

  const Matrix<S>& block(ObjectId x, ObjectId y) const { return psi.at(x * n + y); }
};

/// psi_x^y(m) = sum_i f^i (x) (g^i |> m); checks sum_y phi_x^y psi_x^y = 1
/// and psi_x (f |> m) = (f o -) (x) 1 psi_z(m) for every basis f in hom(z, x).
/// Throws PreconditionFailed on an unverified family or an invalid module.
template <class S>
SectionResult<S> module_section(const FinLinCat<S>& c, const ReducedFamily<S>& red, const LeftModule<S>& m);

template <class S>
struct ZelinskyPair {
  struct Summand {
    ObjectId y;
    Index source_dim;
    Index target_dim;
  };

  ObjectId x = 0;
  ObjectId z = 0;
  Index hom_dim = 0;
  std::vector<Summand> support;
  /// hom(x, z) -> sum_y Hom(V_{y,x}, V_{y,z}), one column per basis morphism.
  Matrix<S> embedding;
  Index rank = 0;
  bool closed = true;
  bool injective = false;
  Index bound = 0;
};

/// Throws PreconditionFailed on an unverified family.
template <class S>
std::vector<ZelinskyPair<S>> zelinsky_report(const FinLinCat<S>& c, const ReducedFamily<S>& red);

}  // namespace sepcat
