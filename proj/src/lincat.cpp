#include "sepcat/lincat.hpp"

#include <set>
#include <sstream>

namespace sepcat {

namespace {

constexpr std::size_t kMaxReportedViolations = 64;

void report(ValidationReport& r, std::size_t& count, std::string message) {
  if (count++ < kMaxReportedViolations) {
    r.fail(std::move(message));
  } else {
    r.ok = false;
  }
}

}  // namespace

template <class S>
FinLinCat<S>::FinLinCat(FieldSpec field, std::vector<std::string> objects, const std::vector<HomSpec>& homs,
                        const std::map<std::string, Vector<S>>& identities,
                        const std::vector<CompositionEntry>& composition)
    : field_(field), objects_(std::move(objects)) {
  for (ObjectId x = 0; x < objects_.size(); ++x) {
    if (!object_index_.emplace(objects_[x], x).second) {
      throw InvalidInput("duplicate object '" + objects_[x] + "'");
    }
  }
  const std::size_t count = n();
  homs_.assign(count * count, {});
  std::set<std::pair<ObjectId, ObjectId>> declared;
  for (const HomSpec& h : homs) {
    const ObjectId from = object_id(h.from);
    const ObjectId to = object_id(h.to);
    if (!declared.emplace(from, to).second) {
      throw InvalidInput("hom(" + h.from + ", " + h.to + ") declared twice");
    }
    for (const std::string& name : h.basis) {
      const LabelId id = labels_.size();
      if (!label_index_.emplace(name, id).second) {
        throw InvalidInput("basis label '" + name + "' is not globally unique");
      }
      labels_.push_back(BasisLabel{name, from, to, static_cast<Index>(homs_[from * count + to].size())});
      homs_[from * count + to].push_back(id);
    }
  }

  identities_.assign(count, std::nullopt);
  for (const auto& [name, vec] : identities) {
    const ObjectId x = object_id(name);
    if (vec.size() != hom_dim(x, x)) {
      issues_.push_back("identity of '" + name + "' has length " + std::to_string(vec.size()) +
                        ", expected dim hom(" + name + ", " + name + ") = " + std::to_string(hom_dim(x, x)));
      continue;
    }
    identities_[x] = vec;
  }

  comp_.resize(count * count * count);
  for (ObjectId x = 0; x < count; ++x) {
    for (ObjectId y = 0; y < count; ++y) {
      for (ObjectId z = 0; z < count; ++z) {
        comp_[(x * count + y) * count + z] = zeros<S>(hom_dim(x, z), hom_dim(y, z) * hom_dim(x, y));
      }
    }
  }
  std::set<std::pair<LabelId, LabelId>> seen;
  for (const CompositionEntry& e : composition) {
    const LabelId g = label_id(e.g);
    const LabelId f = label_id(e.f);
    entries_.push_back(e);
    const BasisLabel& lg = labels_[g];
    const BasisLabel& lf = labels_[f];
    if (lg.from != lf.to) {
      issues_.push_back("composition entry (" + e.g + ", " + e.f + ") is not a composable pair");
      continue;
    }
    if (e.result.size() != hom_dim(lf.from, lg.to)) {
      issues_.push_back("composition entry (" + e.g + ", " + e.f + ") has length " +
                        std::to_string(e.result.size()) + ", expected " +
                        std::to_string(hom_dim(lf.from, lg.to)));
      continue;
    }
    if (!seen.emplace(g, f).second) {
      issues_.push_back("composition entry (" + e.g + ", " + e.f + ") given twice");
      continue;
    }
    Matrix<S>& m = comp_[(lf.from * count + lf.to) * count + lg.to];
    m.col(lg.position * hom_dim(lf.from, lf.to) + lf.position) = e.result;
  }
}

template <class S>
ObjectId FinLinCat<S>::object_id(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) throw InvalidInput("unknown object '" + std::string(name) + "'");
  return it->second;
}

template <class S>
LabelId FinLinCat<S>::label_id(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  if (it == label_index_.end()) throw InvalidInput("unknown basis label '" + std::string(name) + "'");
  return it->second;
}

template <class S>
Index FinLinCat<S>::total_dim() const noexcept {
  return static_cast<Index>(labels_.size());
}

template <class S>
const Vector<S>& FinLinCat<S>::identity(ObjectId x) const {
  const auto& id = identities_.at(x);
  if (!id) throw PreconditionFailed("object '" + objects_[x] + "' has no identity");
  return *id;
}

template <class S>
Vector<S> FinLinCat<S>::compose(ObjectId x, ObjectId y, ObjectId z, const Vector<S>& g,
                                const Vector<S>& f) const {
  const Matrix<S>& m = composition_matrix(x, y, z);
  const Index df = hom_dim(x, y);
  if (g.size() != hom_dim(y, z) || f.size() != df) {
    throw DimensionMismatch("compose: coefficient vectors do not match hom dimensions");
  }
  Vector<S> out = Vector<S>::Zero(hom_dim(x, z));
  for (Index i = 0; i < g.size(); ++i) {
    if (is_zero(g(i))) continue;
    for (Index j = 0; j < df; ++j) {
      if (is_zero(f(j))) continue;
      out += (g(i) * f(j)) * m.col(i * df + j);
    }
  }
  return out;
}

template <class S>
Vector<S> FinLinCat<S>::compose_labels(LabelId g, LabelId f) const {
  const BasisLabel& lg = labels_.at(g);
  const BasisLabel& lf = labels_.at(f);
  if (lg.from != lf.to) {
    throw PreconditionFailed("'" + lg.name + "' and '" + lf.name + "' are not composable");
  }
  return composition_matrix(lf.from, lf.to, lg.to).col(lg.position * hom_dim(lf.from, lf.to) + lf.position);
}

template <class S>
Matrix<S> FinLinCat<S>::post_composition(LabelId f, ObjectId w) const {
  const BasisLabel& lf = labels_.at(f);
  const Matrix<S>& m = composition_matrix(w, lf.from, lf.to);
  const Index d = hom_dim(w, lf.from);
  return m.block(0, lf.position * d, m.rows(), d);
}

template <class S>
Matrix<S> FinLinCat<S>::pre_composition(LabelId g, ObjectId w) const {
  const BasisLabel& lg = labels_.at(g);
  const Matrix<S>& m = composition_matrix(lg.from, lg.to, w);
  const Index dg = hom_dim(lg.from, lg.to);
  Matrix<S> out(m.rows(), hom_dim(lg.to, w));
  for (Index h = 0; h < out.cols(); ++h) out.col(h) = m.col(h * dg + lg.position);
  return out;
}

template <class S>
Vector<S> FinLinCat<S>::unit(LabelId id) const {
  const BasisLabel& l = labels_.at(id);
  Vector<S> v = Vector<S>::Zero(hom_dim(l.from, l.to));
  v(l.position) = make_scalar<S>(1, field_);
  return v;
}

template <class S>
Morphism<S> basis_morphism(const FinLinCat<S>& c, std::string_view label) {
  const LabelId id = c.label_id(label);
  return Morphism<S>{c.label(id).from, c.label(id).to, c.unit(id)};
}

template <class S>
Morphism<S> compose(const FinLinCat<S>& c, const Morphism<S>& g, const Morphism<S>& f) {
  if (g.source != f.target) {
    throw PreconditionFailed("cannot compose: source of g is '" + c.object_name(g.source) + "' but target of f is '" +
                             c.object_name(f.target) + "'");
  }
  return Morphism<S>{f.source, g.target, c.compose(f.source, f.target, g.target, g.coeffs, f.coeffs)};
}

template <class S>
ValidationReport validate_category(const FinLinCat<S>& c) {
  ValidationReport r;
  std::size_t count = 0;
  for (const std::string& issue : c.structural_issues()) report(r, count, issue);

  const std::size_t n = c.object_count();
  for (ObjectId x = 0; x < n; ++x) {
    if (!c.has_identity(x)) report(r, count, "missing identity for object '" + c.object_name(x) + "'");
  }

  for (LabelId f = 0; f < c.label_count(); ++f) {
    const BasisLabel& lf = c.label(f);
    const Vector<S> ef = c.unit(f);
    if (c.has_identity(lf.to) && !equal(c.compose(lf.from, lf.to, lf.to, c.identity(lf.to), ef), ef)) {
      report(r, count, "left unit law fails: 1_" + c.object_name(lf.to) + " o " + lf.name + " != " + lf.name);
    }
    if (c.has_identity(lf.from) && !equal(c.compose(lf.from, lf.from, lf.to, ef, c.identity(lf.from)), ef)) {
      report(r, count, "right unit law fails: " + lf.name + " o 1_" + c.object_name(lf.from) + " != " + lf.name);
    }
  }

  // (h o g) o f == h o (g o f) for f: x->y, g: y->z, h: z->w
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      for (ObjectId z = 0; z < n; ++z) {
        for (ObjectId w = 0; w < n; ++w) {
          for (LabelId f : c.hom(x, y)) {
            for (LabelId g : c.hom(y, z)) {
              const Vector<S> gf = c.compose_labels(g, f);
              for (LabelId h : c.hom(z, w)) {
                const Vector<S> hg = c.compose_labels(h, g);
                const Vector<S> lhs = c.compose(x, y, w, hg, c.unit(f));
                const Vector<S> rhs = c.compose(x, z, w, c.unit(h), gf);
                if (!equal(lhs, rhs)) {
                  report(r, count,
                         "associativity fails on (" + c.label(h).name + ", " + c.label(g).name + ", " +
                             c.label(f).name + ")");
                }
              }
            }
          }
        }
      }
    }
  }
  if (count > kMaxReportedViolations) {
    r.violations.push_back("... and " + std::to_string(count - kMaxReportedViolations) + " more violations");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Finite presentations

std::size_t FiniteCatPresentation::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name == name) return i;
  }
  throw InvalidInput("unknown morphism '" + std::string(name) + "'");
}

std::vector<std::size_t> FiniteCatPresentation::arrows_between(ObjectId from, ObjectId to) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].from == from && arrows[i].to == to) out.push_back(i);
  }
  return out;
}

void FiniteCatPresentation::complete_units() {
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    const Arrow& a = arrows[f];
    if (a.to < identity.size()) composition.emplace(std::pair{identity[a.to], f}, f);
    if (a.from < identity.size()) composition.emplace(std::pair{f, identity[a.from]}, f);
  }
}

ValidationReport validate_presentation(const FiniteCatPresentation& p) {
  ValidationReport r;
  std::size_t count = 0;
  const std::size_t n = p.objects.size();
  std::set<std::string> names;
  for (const auto& a : p.arrows) {
    if (!names.insert(a.name).second) report(r, count, "duplicate morphism name '" + a.name + "'");
    if (a.from >= n || a.to >= n) report(r, count, "morphism '" + a.name + "' refers to an unknown object");
  }
  if (!r.ok) return r;
  if (p.identity.size() != n) {
    r.fail("identity table has " + std::to_string(p.identity.size()) + " entries for " + std::to_string(n) +
           " objects");
    return r;
  }
  for (ObjectId x = 0; x < n; ++x) {
    const std::size_t id = p.identity[x];
    if (id >= p.arrows.size() || p.arrows[id].from != x || p.arrows[id].to != x) {
      report(r, count, "identity of '" + p.objects[x] + "' is not an endomorphism of it");
    }
  }
  if (!r.ok) return r;

  auto lookup = [&](std::size_t g, std::size_t f) -> std::optional<std::size_t> {
    auto it = p.composition.find({g, f});
    if (it == p.composition.end()) return std::nullopt;
    return it->second;
  };

  for (const auto& [key, result] : p.composition) {
    const auto [g, f] = key;
    if (g >= p.arrows.size() || f >= p.arrows.size() || result >= p.arrows.size()) {
      report(r, count, "composition table refers to an unknown morphism");
      continue;
    }
    const auto& ag = p.arrows[g];
    const auto& af = p.arrows[f];
    if (ag.from != af.to) {
      report(r, count, "composition entry (" + ag.name + ", " + af.name + ") is not a composable pair");
      continue;
    }
    const auto& ar = p.arrows[result];
    if (ar.from != af.from || ar.to != ag.to) {
      report(r, count, "composite " + ag.name + " o " + af.name + " = " + ar.name + " has the wrong type");
    }
  }
  if (!r.ok) return r;

  for (std::size_t f = 0; f < p.arrows.size(); ++f) {
    for (std::size_t g = 0; g < p.arrows.size(); ++g) {
      if (p.arrows[g].from == p.arrows[f].to && !lookup(g, f)) {
        report(r, count, "composition table is missing (" + p.arrows[g].name + ", " + p.arrows[f].name + ")");
      }
    }
  }
  if (!r.ok) return r;

  for (std::size_t f = 0; f < p.arrows.size(); ++f) {
    const auto& a = p.arrows[f];
    if (*lookup(p.identity[a.to], f) != f) report(r, count, "left unit law fails for '" + a.name + "'");
    if (*lookup(f, p.identity[a.from]) != f) report(r, count, "right unit law fails for '" + a.name + "'");
  }
  for (std::size_t f = 0; f < p.arrows.size(); ++f) {
    for (std::size_t g = 0; g < p.arrows.size(); ++g) {
      if (p.arrows[g].from != p.arrows[f].to) continue;
      const std::size_t gf = *lookup(g, f);
      for (std::size_t h = 0; h < p.arrows.size(); ++h) {
        if (p.arrows[h].from != p.arrows[g].to) continue;
        if (*lookup(*lookup(h, g), f) != *lookup(h, gf)) {
          report(r, count,
                 "associativity fails on (" + p.arrows[h].name + ", " + p.arrows[g].name + ", " +
                     p.arrows[f].name + ")");
        }
      }
    }
  }
  for (const auto& [f, g] : p.inverse) {
    if (f >= p.arrows.size() || g >= p.arrows.size()) {
      report(r, count, "inverse table refers to an unknown morphism");
      continue;
    }
    const auto& af = p.arrows[f];
    const auto gf = lookup(g, f);
    const auto fg = lookup(f, g);
    if (!gf || !fg || *gf != p.identity[af.from] || *fg != p.identity[af.to]) {
      report(r, count, "'" + p.arrows[g].name + "' is not an inverse of '" + af.name + "'");
    }
  }
  if (count > kMaxReportedViolations) {
    r.violations.push_back("... and " + std::to_string(count - kMaxReportedViolations) + " more violations");
  }
  return r;
}

template <class S>
FinLinCat<S> linearize(const FiniteCatPresentation& p, const FieldSpec& field) {
  const ValidationReport report = validate_presentation(p);
  if (!report.ok) {
    std::ostringstream msg;
    msg << "invalid presentation:";
    for (const auto& v : report.violations) msg << "\n  " << v;
    throw InvalidInput(msg.str());
  }
  const std::size_t n = p.objects.size();
  std::vector<HomSpec> homs;
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      HomSpec h{p.objects[x], p.objects[y], {}};
      for (std::size_t a : p.arrows_between(x, y)) h.basis.push_back(p.arrows[a].name);
      if (!h.basis.empty()) homs.push_back(std::move(h));
    }
  }
  auto position = [&](std::size_t arrow) {
    const auto between = p.arrows_between(p.arrows[arrow].from, p.arrows[arrow].to);
    return static_cast<Index>(std::find(between.begin(), between.end(), arrow) - between.begin());
  };
  auto unit_vector = [&](std::size_t arrow) {
    Vector<S> v = Vector<S>::Zero(static_cast<Index>(p.arrows_between(p.arrows[arrow].from, p.arrows[arrow].to).size()));
    v(position(arrow)) = make_scalar<S>(1, field);
    return v;
  };
  std::map<std::string, Vector<S>> identities;
  for (ObjectId x = 0; x < n; ++x) identities.emplace(p.objects[x], unit_vector(p.identity[x]));
  std::vector<typename FinLinCat<S>::CompositionEntry> entries;
  for (const auto& [key, result] : p.composition) {
    entries.push_back({p.arrows[key.first].name, p.arrows[key.second].name, unit_vector(result)});
  }
  return FinLinCat<S>(field, p.objects, homs, identities, entries);
}

std::optional<std::size_t> find_inverse(const FiniteCatPresentation& p, std::size_t f) {
  const auto& a = p.arrows.at(f);
  for (std::size_t g : p.arrows_between(a.to, a.from)) {
    auto gf = p.composition.find({g, f});
    auto fg = p.composition.find({f, g});
    if (gf != p.composition.end() && fg != p.composition.end() && gf->second == p.identity[a.from] &&
        fg->second == p.identity[a.to]) {
      return g;
    }
  }
  return std::nullopt;
}

PresentationFlags classify_presentation(const FiniteCatPresentation& p) {
  PresentationFlags flags;
  const std::size_t n = p.objects.size();
  flags.is_groupoid = true;
  for (std::size_t f = 0; f < p.arrows.size(); ++f) {
    if (!find_inverse(p, f)) {
      flags.is_groupoid = false;
      break;
    }
  }
  bool only_identity_endos = true;
  bool skeletal = true;
  for (ObjectId x = 0; x < n; ++x) {
    const auto endos = p.arrows_between(x, x);
    if (endos.size() != 1 || endos.front() != p.identity[x]) only_identity_endos = false;
    for (ObjectId y = x + 1; y < n; ++y) {
      if (!p.arrows_between(x, y).empty() && !p.arrows_between(y, x).empty()) skeletal = false;
    }
  }
  flags.is_delta = only_identity_endos && skeletal;
  flags.is_discrete = p.arrows.size() == n && only_identity_endos;
  return flags;
}

#define SEPCAT_INSTANTIATE(S)                                                                     \
  template class FinLinCat<S>;                                                                    \
  template Morphism<S> basis_morphism<S>(const FinLinCat<S>&, std::string_view);                  \
  template Morphism<S> compose<S>(const FinLinCat<S>&, const Morphism<S>&, const Morphism<S>&);   \
  template ValidationReport validate_category<S>(const FinLinCat<S>&);                            \
  template FinLinCat<S> linearize<S>(const FiniteCatPresentation&, const FieldSpec&);

SEPCAT_INSTANTIATE(Rational)
SEPCAT_INSTANTIATE(Zp)

}  // namespace sepcat
