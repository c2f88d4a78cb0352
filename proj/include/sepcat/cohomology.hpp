#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepcat/separability.hpp"

namespace sepcat {

inline constexpr Index kDefaultCochainBudget = 20000;

/// A composable tuple (x0, ..., xn) with hom(x_k, x_{k-1}) nonzero for all
/// k. Its block in C^n has tensor_count * coeff_dim coordinates, index
/// t * coeff_dim + m with t row-major over (f1, ..., fn), f_k in hom(x_k, x_{k-1}),
/// and m a basis index of M[x0][xn].
struct Cell {
  std::vector<ObjectId> objects;
  Index tensor_count = 1;
  Index coeff_dim = 0;
  Index offset = 0;
};

/// The bar complex C^0 .. C^{max_degree + 1} with differentials d^0 .. d^{max_degree}.
template <class S>
struct CochainComplex {
  int max_degree = 0;
  std::vector<std::vector<Cell>> cells;
  std::vector<std::map<std::vector<ObjectId>, std::size_t>> lookup;
  std::vector<Index> dims;
  std::vector<Matrix<S>> differentials;

  Index dim(int n) const { return dims.at(static_cast<std::size_t>(n)); }
  const Matrix<S>& d(int n) const { return differentials.at(static_cast<std::size_t>(n)); }
};

/// (d phi)(f1, ..., f_{n+1}) = f1 |> phi(f2, ..., f_{n+1})
///   + sum_i (-1)^i phi(..., f_i o f_{i+1}, ...) + (-1)^{n+1} phi(f1, ..., fn) <| f_{n+1}.
/// Throws BudgetExceeded if some C^n with n <= max_degree + 1 exceeds the
/// budget, PreconditionFailed on an invalid bimodule, InternalError if d o d != 0.
template <class S>
CochainComplex<S> build_hm_complex(const FinLinCat<S>& c, const Bimodule<S>& m, int max_degree,
                                   Index budget = kDefaultCochainBudget);

struct DegreeInfo {
  int n = 0;
  Index dim_cochain = 0;
  Index rank_d = 0;
  Index kernel_dim = 0;
  Index dim_h = 0;
};

/// dim H^n = dim ker d^n - rank d^{n-1} for n = 0 .. max_degree.
template <class S>
std::vector<DegreeInfo> cohomology_dims(const CochainComplex<S>& complex);

template <class S>
struct ObstructionResult {
  /// f |> sigma_x - sigma_z <| f in C^1(C, ker comp), sigma_x = 1_x (x) 1_x.
  Vector<S> cocycle;
  bool is_cocycle = false;
  bool is_coboundary = false;
  /// The splitting sigma - t read off as a family when the cocycle is d^0 t.
  std::optional<SeparabilityFamily<S>> family;
};

/// `offset` moves sigma by an element of C^0(C, ker comp), giving any other
/// linear section of comp.
template <class S>
ObstructionResult<S> obstruction_cocycle(const FinLinCat<S>& c, const std::optional<Vector<S>>& offset = std::nullopt,
                                         Index budget = kDefaultCochainBudget);

/// The cochain map C^n(M) -> C^n(N) induced by a bimodule map.
template <class S>
Matrix<S> cochain_map(const CochainComplex<S>& source, const CochainComplex<S>& target, const BimoduleMap<S>& map,
                      int n);

struct LesPosition {
  /// "H^n(M)", "H^n(N)" or "H^n(P)"
  std::string position;
  Index incoming_rank = 0;
  Index kernel_dim = 0;
  bool exact = false;
};

struct LesReport {
  std::vector<DegreeInfo> m;
  std::vector<DegreeInfo> n;
  std::vector<DegreeInfo> p;
  /// Rank of H^k(P) -> H^{k+1}(M) for k = 0 .. max_degree.
  std::vector<Index> connecting_ranks;
  std::vector<LesPosition> positions;
  bool exact = false;
};

/// Throws PreconditionFailed if the sequence is not short exact.
template <class S>
LesReport les_analysis(const FinLinCat<S>& c, const ShortExactSeq<S>& ses, int max_degree,
                       Index budget = kDefaultCochainBudget);

}  // namespace sepcat
