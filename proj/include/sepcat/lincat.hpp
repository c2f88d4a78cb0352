#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepcat/field.hpp"
#include "sepcat/linalg.hpp"
#include "sepcat/report.hpp"

namespace sepcat {

using ObjectId = std::size_t;
using LabelId = std::size_t;

/// One hom space in the input description: basis labels of hom(from, to).
struct HomSpec {
  std::string from;
  std::string to;
  std::vector<std::string> basis;
};

/// A basis morphism: its position in hom(from, to).
struct BasisLabel {
  std::string name;
  ObjectId from = 0;
  ObjectId to = 0;
  Index position = 0;
};

/// A finite K-linear category given by structure constants.
///
/// hom(x, y) is the space of morphisms x -> y; composition is
/// hom(y, z) x hom(x, y) -> hom(x, z), (g, f) |-> g o f. Labels are global
/// across all hom bases; internally everything is positional.
///
/// The constructor accepts structurally dubious tables (a composition entry
/// for a non-composable pair, a coefficient vector of the wrong length, a
/// missing identity). Such entries are kept out of the structure constants
/// and listed by structural_issues(); validate_category reports them.
/// Unknown labels or objects, by contrast, throw InvalidInput.
template <class S>
class FinLinCat {
 public:
  struct CompositionEntry {
    std::string g;
    std::string f;
    Vector<S> result;
  };

  FinLinCat(FieldSpec field, std::vector<std::string> objects, const std::vector<HomSpec>& homs,
            const std::map<std::string, Vector<S>>& identities, const std::vector<CompositionEntry>& composition);

  const FieldSpec& field() const noexcept { return field_; }

  std::size_t object_count() const noexcept { return objects_.size(); }
  const std::string& object_name(ObjectId x) const { return objects_.at(x); }
  ObjectId object_id(std::string_view name) const;
  const std::vector<std::string>& objects() const noexcept { return objects_; }

  std::size_t label_count() const noexcept { return labels_.size(); }
  const BasisLabel& label(LabelId id) const { return labels_.at(id); }
  LabelId label_id(std::string_view name) const;

  Index hom_dim(ObjectId from, ObjectId to) const { return static_cast<Index>(hom(from, to).size()); }
  /// Global label ids of the basis of hom(from, to), in basis order.
  const std::vector<LabelId>& hom(ObjectId from, ObjectId to) const { return homs_.at(from * n() + to); }
  /// Sum of all hom dimensions.
  Index total_dim() const noexcept;

  bool has_identity(ObjectId x) const { return identities_.at(x).has_value(); }
  /// The identity of x as a coefficient vector; throws PreconditionFailed if missing.
  const Vector<S>& identity(ObjectId x) const;

  /// Structure constants of hom(y,z) x hom(x,y) -> hom(x,z): shape
  /// dim hom(x,z) x (dim hom(y,z) * dim hom(x,y)), column g * dim hom(x,y) + f.
  const Matrix<S>& composition_matrix(ObjectId x, ObjectId y, ObjectId z) const {
    return comp_.at((x * n() + y) * n() + z);
  }

  /// g o f for coefficient vectors g in hom(y,z), f in hom(x,y).
  Vector<S> compose(ObjectId x, ObjectId y, ObjectId z, const Vector<S>& g, const Vector<S>& f) const;
  /// g o f for basis morphisms; throws PreconditionFailed if not composable.
  Vector<S> compose_labels(LabelId g, LabelId f) const;

  /// Post-composition with basis morphism f: hom(w, from(f)) -> hom(w, to(f)).
  Matrix<S> post_composition(LabelId f, ObjectId w) const;
  /// Pre-composition with basis morphism g: hom(to(g), w) -> hom(from(g), w).
  Matrix<S> pre_composition(LabelId g, ObjectId w) const;

  /// Unit basis vector of label `id` in its hom space.
  Vector<S> unit(LabelId id) const;

  const std::vector<CompositionEntry>& composition_entries() const noexcept { return entries_; }
  const std::vector<std::string>& structural_issues() const noexcept { return issues_; }

  friend bool operator==(const FinLinCat& a, const FinLinCat& b) {
    if (a.field_ != b.field_ || a.objects_ != b.objects_ || a.homs_ != b.homs_) return false;
    for (std::size_t i = 0; i < a.labels_.size(); ++i) {
      if (a.labels_[i].name != b.labels_[i].name) return false;
    }
    for (std::size_t x = 0; x < a.identities_.size(); ++x) {
      if (a.identities_[x].has_value() != b.identities_[x].has_value()) return false;
      if (a.identities_[x] && !equal(*a.identities_[x], *b.identities_[x])) return false;
    }
    for (std::size_t i = 0; i < a.comp_.size(); ++i) {
      if (!equal(a.comp_[i], b.comp_[i])) return false;
    }
    return true;
  }

 private:
  std::size_t n() const noexcept { return objects_.size(); }

  FieldSpec field_;
  std::vector<std::string> objects_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::vector<BasisLabel> labels_;
  std::unordered_map<std::string, LabelId> label_index_;
  std::vector<std::vector<LabelId>> homs_;
  std::vector<std::optional<Vector<S>>> identities_;
  std::vector<Matrix<S>> comp_;
  std::vector<CompositionEntry> entries_;
  std::vector<std::string> issues_;
};

/// An element of hom(source, target).
template <class S>
struct Morphism {
  ObjectId source = 0;
  ObjectId target = 0;
  Vector<S> coeffs;
};

template <class S>
Morphism<S> basis_morphism(const FinLinCat<S>& c, std::string_view label);

/// Bilinear composition g o f; throws PreconditionFailed unless
/// g.source == f.target, DimensionMismatch on wrong coefficient lengths.
template <class S>
Morphism<S> compose(const FinLinCat<S>& c, const Morphism<S>& g, const Morphism<S>& f);

/// Checks identity presence, unit laws, associativity on all composable basis
/// triples, and the structural issues recorded at construction.
template <class S>
ValidationReport validate_category(const FinLinCat<S>& c);

/// A finite ordinary category given by a total composition table.
struct FiniteCatPresentation {
  struct Arrow {
    std::string name;
    ObjectId from = 0;
    ObjectId to = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  /// Arrow index of the identity of each object.
  std::vector<std::size_t> identity;
  /// (g, f) -> g o f, arrow indices; defined exactly on composable pairs.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;
  /// Optional inverse table, arrow index -> arrow index.
  std::map<std::size_t, std::size_t> inverse;

  std::size_t arrow_index(std::string_view name) const;
  std::vector<std::size_t> arrows_between(ObjectId from, ObjectId to) const;
  /// Fills in missing compositions with an identity (unit laws).
  void complete_units();
};

/// Plain-category axioms: identities exist and are endomorphisms, the table
/// is total on composable pairs with correctly typed results, unit laws,
/// associativity, and consistency of the inverse table if present.
ValidationReport validate_presentation(const FiniteCatPresentation& p);

/// K[A]: hom bases are the arrow sets, composition the bilinear extension.
/// Throws InvalidInput if the presentation is not a category.
template <class S>
FinLinCat<S> linearize(const FiniteCatPresentation& p, const FieldSpec& field);

struct PresentationFlags {
  bool is_groupoid = false;
  /// Skeletal with identities as the only endomorphisms.
  bool is_delta = false;
  bool is_discrete = false;
};

PresentationFlags classify_presentation(const FiniteCatPresentation& p);

/// Two-sided inverse of arrow f, searched in the composition table.
std::optional<std::size_t> find_inverse(const FiniteCatPresentation& p, std::size_t f);

}  // namespace sepcat
