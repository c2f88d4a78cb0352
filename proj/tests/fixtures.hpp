#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "sepcat/lincat.hpp"

namespace sepcat::testing {

template <class S>
Vector<S> vec(const FieldSpec& k, std::initializer_list<long> entries) {
  Vector<S> v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = make_scalar<S>(e, k);
  return v;
}

template <class S>
Matrix<S> mat(const FieldSpec& k, Index rows, Index cols, std::initializer_list<long> entries) {
  Matrix<S> m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = make_scalar<S>(*it++, k);
  }
  return m;
}

/// K[Z/2] written out by hand: one object x, basis {e, g}, g o g = e.
/// `gg` overrides the coefficient vector of g o g.
template <class S>
FinLinCat<S> z2_by_hand(const FieldSpec& k, std::initializer_list<long> gg = {1, 0}) {
  using Entry = typename FinLinCat<S>::CompositionEntry;
  std::vector<Entry> comp{{"e", "e", vec<S>(k, {1, 0})},
                          {"e", "g", vec<S>(k, {0, 1})},
                          {"g", "e", vec<S>(k, {0, 1})},
                          {"g", "g", vec<S>(k, gg)}};
  return FinLinCat<S>(k, {"x"}, {{"x", "x", {"e", "g"}}}, {{"x", vec<S>(k, {1, 0})}}, comp);
}

/// K[A2] by hand: objects x, y; basis 1_x, 1_y, a: x -> y.
template <class S>
FinLinCat<S> a2_by_hand(const FieldSpec& k) {
  using Entry = typename FinLinCat<S>::CompositionEntry;
  std::vector<Entry> comp{{"1_x", "1_x", vec<S>(k, {1})},
                          {"1_y", "1_y", vec<S>(k, {1})},
                          {"1_y", "a", vec<S>(k, {1})},
                          {"a", "1_x", vec<S>(k, {1})}};
  return FinLinCat<S>(k, {"x", "y"}, {{"x", "x", {"1_x"}}, {"y", "y", {"1_y"}}, {"x", "y", {"a"}}},
                      {{"x", vec<S>(k, {1})}, {"y", vec<S>(k, {1})}}, comp);
}

/// The one-object category with hom = K.
template <class S>
FinLinCat<S> trivial_by_hand(const FieldSpec& k) {
  using Entry = typename FinLinCat<S>::CompositionEntry;
  return FinLinCat<S>(k, {"x"}, {{"x", "x", {"1"}}}, {{"x", vec<S>(k, {1})}},
                      std::vector<Entry>{{"1", "1", vec<S>(k, {1})}});
}

}  // namespace sepcat::testing
