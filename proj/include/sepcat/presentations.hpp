#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sepcat/lincat.hpp"

namespace sepcat {

/// A finite group by multiplication table; element 0 is the identity and
/// table[a][b] is the product a·b.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const noexcept { return names.size(); }
};

/// Z/n with elements e, g, g2, ..., g{n-1}.
FiniteGroup cyclic_group(std::size_t n);
/// Direct product; element names are "a.b" except that e.e is "e".
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);
/// Z/2 x Z/2 with elements e, a, b, ab.
FiniteGroup klein_four_group();
/// S3 as permutations of three points.
FiniteGroup symmetric_group_3();

/// One-object category with the group as endomorphisms.
FiniteCatPresentation group_category(const FiniteGroup& g, const std::string& object = "x");

/// Connected groupoid on the given objects with vertex group G: arrows
/// i -> j are pairs (i, j, g), composition (j,k,h) o (i,j,g) = (i,k,h·g).
/// Arrow names are "<g>:<i>-><j>"; every hom set has |G| elements.
FiniteCatPresentation connected_groupoid(const std::vector<std::string>& objects, const FiniteGroup& g);

/// The poset generated by `less` (pairs of object indices), as a category.
/// Arrows are "1_<x>" for identities and "<x><<y>" for x < y.
FiniteCatPresentation poset_category(const std::vector<std::string>& objects,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& less);

/// The chain x1 < x2 < ... < xn (A_n).
FiniteCatPresentation chain_poset(std::size_t n);

/// n objects x1..xn and only identities.
FiniteCatPresentation discrete_category(std::size_t n);

/// One-object category of maps {0..points-1} -> itself generated by the
/// given maps under composition (g o f)(i) = g(f(i)). Elements are named
/// "t" followed by the image list, e.g. "t01" for the identity on 2 points.
FiniteCatPresentation transformation_monoid(std::size_t points,
                                            const std::vector<std::vector<std::size_t>>& generators);

/// Disjoint union; objects and arrows of each side get the given prefix.
FiniteCatPresentation disjoint_union(const FiniteCatPresentation& a, const FiniteCatPresentation& b,
                                     const std::string& prefix_a = "a.", const std::string& prefix_b = "b.");

/// A small random finite category (poset, groupoid, transformation monoid,
/// or a disjoint union of these), deterministic in the seed.
FiniteCatPresentation random_presentation(std::uint64_t seed);

}  // namespace sepcat
