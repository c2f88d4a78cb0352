#include "sepcat/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sepcat/errors.hpp"
#include "sepcat/scalar.hpp"

namespace sepcat {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object with member \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing member \"") + key + "\"");
  return *it;
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) throw InvalidInput(std::string("member \"") + key + "\" must be an array");
  return a;
}

/// Absent members read as an empty array.
const Json& optional_array(const Json& j, const char* key) {
  static const Json empty = Json::array();
  if (!j.is_object() || !j.contains(key)) return empty;
  return array_member(j, key);
}

std::string text(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("member \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Index count(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidInput(std::string("member \"") + key + "\" must be a non-negative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

template <class S>
S scalar(const Json& v, const FieldSpec& field) {
  if (v.is_string()) return parse_scalar<S>(v.get<std::string>(), field);
  if (v.is_number_integer()) return make_scalar<S>(v.get<long>(), field);
  throw InvalidInput("scalar must be a string such as \"1/2\" or an integer");
}

template <class S>
ObjectId object_of(const FinLinCat<S>& c, const std::string& name) {
  try {
    return c.object_id(name);
  } catch (const Error&) {
    throw InvalidInput("unknown object \"" + name + "\"");
  }
}

template <class S>
LabelId label_of(const FinLinCat<S>& c, const std::string& name) {
  try {
    return c.label_id(name);
  } catch (const Error&) {
    throw InvalidInput("unknown basis label \"" + name + "\"");
  }
}

/// Runs a parser, turning JSON library errors into InvalidInput.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << dump_json(j);
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q") return FieldSpec::rationals();
    return parse_field_flag(s);
  }
  if (j.is_object() && j.contains("Fp")) {
    const Json& p = j.at("Fp");
    if (!p.is_number_integer() || p.get<long long>() < 2) throw InvalidInput("\"Fp\" must be a prime");
    return FieldSpec::prime_field(p.get<std::uint64_t>());
  }
  throw InvalidInput("field must be \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const FieldSpec& field) {
  if (field.is_rationals()) return "Q";
  Json j = Json::object();
  j["Fp"] = field.characteristic();
  return j;
}

FieldSpec category_field(const Json& j) {
  return guarded([&] { return field_from_json(member(j, "field")); });
}

template <class S>
FinLinCat<S> category_from_json(const Json& j) {
  return guarded([&] {
    const FieldSpec field = field_from_json(member(j, "field"));
    std::vector<std::string> objects;
    for (const Json& o : array_member(j, "objects")) {
      if (!o.is_string()) throw InvalidInput("object names must be strings");
      objects.push_back(o.get<std::string>());
    }
    struct Place {
      std::string from;
      std::string to;
      Index position;
    };
    std::vector<HomSpec> homs;
    std::map<std::string, Place> places;
    std::map<std::pair<std::string, std::string>, Index> dims;
    for (const Json& h : array_member(j, "homs")) {
      HomSpec spec{text(h, "from"), text(h, "to"), {}};
      for (const Json& b : array_member(h, "basis")) {
        if (!b.is_string()) throw InvalidInput("basis labels must be strings");
        places[b.get<std::string>()] = {spec.from, spec.to, static_cast<Index>(spec.basis.size())};
        spec.basis.push_back(b.get<std::string>());
      }
      dims[{spec.from, spec.to}] = static_cast<Index>(spec.basis.size());
      homs.push_back(std::move(spec));
    }
    auto dim = [&](const std::string& from, const std::string& to) {
      auto it = dims.find({from, to});
      return it == dims.end() ? Index{0} : it->second;
    };
    auto place = [&](const std::string& label) -> const Place& {
      auto it = places.find(label);
      if (it == places.end()) throw InvalidInput("unknown basis label \"" + label + "\"");
      return it->second;
    };

    std::map<std::string, Vector<S>> identities;
    if (j.contains("identity")) {
      const Json& ids = j.at("identity");
      if (!ids.is_object()) throw InvalidInput("\"identity\" must map objects to coefficient maps");
      for (const auto& [object, coeffs] : ids.items()) {
        if (!coeffs.is_object()) throw InvalidInput("identity of " + object + " must map labels to scalars");
        Vector<S> v = Vector<S>::Zero(dim(object, object));
        for (const auto& [label, value] : coeffs.items()) {
          const Place& p = place(label);
          if (p.from != object || p.to != object) {
            throw InvalidInput("identity of " + object + " uses " + label + ", which is not an endomorphism of it");
          }
          v(p.position) += scalar<S>(value, field);
        }
        identities.emplace(object, std::move(v));
      }
    }

    std::vector<typename FinLinCat<S>::CompositionEntry> entries;
    for (const Json& e : optional_array(j, "composition")) {
      const std::string g = text(e, "g");
      const std::string f = text(e, "f");
      const std::string from = place(f).from;
      const std::string to = place(g).to;
      Vector<S> v = Vector<S>::Zero(dim(from, to));
      for (const Json& t : array_member(e, "result")) {
        const std::string b = text(t, "basis");
        const Place& p = place(b);
        if (p.from != from || p.to != to) {
          throw InvalidInput("composition (" + g + ", " + f + ") has result term " + b + " outside hom(" + from +
                             ", " + to + ")");
        }
        v(p.position) += scalar<S>(member(t, "coeff"), field);
      }
      entries.push_back({g, f, std::move(v)});
    }
    return FinLinCat<S>(field, std::move(objects), homs, identities, entries);
  });
}

template <class S>
Json category_to_json(const FinLinCat<S>& c) {
  const FieldSpec& k = c.field();
  Json j = Json::object();
  j["field"] = field_to_json(k);
  j["objects"] = c.objects();
  Json homs = Json::array();
  for (LabelId id = 0; id < c.label_count(); ++id) {
    const BasisLabel& l = c.label(id);
    if (l.position != 0) continue;
    Json h = Json::object();
    h["from"] = c.object_name(l.from);
    h["to"] = c.object_name(l.to);
    Json basis = Json::array();
    for (LabelId b : c.hom(l.from, l.to)) basis.push_back(c.label(b).name);
    h["basis"] = std::move(basis);
    homs.push_back(std::move(h));
  }
  j["homs"] = std::move(homs);
  Json ids = Json::object();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (!c.has_identity(x)) continue;
    Json coeffs = Json::object();
    const Vector<S>& v = c.identity(x);
    for (Index i = 0; i < v.size(); ++i) {
      if (!is_zero(v(i))) coeffs[c.label(c.hom(x, x)[static_cast<std::size_t>(i)]).name] = format_scalar(v(i), k);
    }
    ids[c.object_name(x)] = std::move(coeffs);
  }
  j["identity"] = std::move(ids);
  Json comp = Json::array();
  for (LabelId g = 0; g < c.label_count(); ++g) {
    for (LabelId f = 0; f < c.label_count(); ++f) {
      if (c.label(g).from != c.label(f).to) continue;
      const Vector<S> r = c.compose_labels(g, f);
      if (is_zero_matrix(r)) continue;
      Json result = Json::array();
      const auto& basis = c.hom(c.label(f).from, c.label(g).to);
      for (Index i = 0; i < r.size(); ++i) {
        if (is_zero(r(i))) continue;
        Json t = Json::object();
        t["basis"] = c.label(basis[static_cast<std::size_t>(i)]).name;
        t["coeff"] = format_scalar(r(i), k);
        result.push_back(std::move(t));
      }
      Json e = Json::object();
      e["g"] = c.label(g).name;
      e["f"] = c.label(f).name;
      e["result"] = std::move(result);
      comp.push_back(std::move(e));
    }
  }
  j["composition"] = std::move(comp);
  return j;
}

FiniteCatPresentation presentation_from_json(const Json& j) {
  return guarded([&] {
    FiniteCatPresentation p;
    std::map<std::string, ObjectId> objects;
    for (const Json& o : array_member(j, "objects")) {
      if (!o.is_string()) throw InvalidInput("object names must be strings");
      if (!objects.emplace(o.get<std::string>(), p.objects.size()).second) {
        throw InvalidInput("duplicate object \"" + o.get<std::string>() + "\"");
      }
      p.objects.push_back(o.get<std::string>());
    }
    auto object = [&](const std::string& name) {
      auto it = objects.find(name);
      if (it == objects.end()) throw InvalidInput("unknown object \"" + name + "\"");
      return it->second;
    };
    std::map<std::string, std::size_t> arrows;
    for (const Json& a : array_member(j, "morphisms")) {
      const std::string name = text(a, "name");
      if (!arrows.emplace(name, p.arrows.size()).second) throw InvalidInput("duplicate morphism \"" + name + "\"");
      p.arrows.push_back({name, object(text(a, "from")), object(text(a, "to"))});
    }
    auto arrow = [&](const std::string& name) {
      auto it = arrows.find(name);
      if (it == arrows.end()) throw InvalidInput("unknown morphism \"" + name + "\"");
      return it->second;
    };
    const Json& ids = member(j, "identity");
    if (!ids.is_object()) throw InvalidInput("\"identity\" must map objects to morphism names");
    p.identity.assign(p.objects.size(), 0);
    std::vector<bool> seen(p.objects.size(), false);
    for (const auto& [name, value] : ids.items()) {
      if (!value.is_string()) throw InvalidInput("identity of " + name + " must be a morphism name");
      const ObjectId x = object(name);
      p.identity[x] = arrow(value.get<std::string>());
      seen[x] = true;
    }
    for (ObjectId x = 0; x < p.objects.size(); ++x) {
      if (!seen[x]) throw InvalidInput("no identity given for object \"" + p.objects[x] + "\"");
    }
    for (const Json& e : optional_array(j, "composition")) {
      const auto key = std::pair{arrow(text(e, "g")), arrow(text(e, "f"))};
      const std::size_t result = arrow(text(e, "result"));
      auto [it, inserted] = p.composition.emplace(key, result);
      if (!inserted && it->second != result) {
        throw InvalidInput("composition (" + text(e, "g") + ", " + text(e, "f") + ") given twice");
      }
    }
    if (j.contains("inverse")) {
      const Json& inv = j.at("inverse");
      if (!inv.is_object()) throw InvalidInput("\"inverse\" must map morphism names to morphism names");
      for (const auto& [name, value] : inv.items()) {
        if (!value.is_string()) throw InvalidInput("inverse of " + name + " must be a morphism name");
        p.inverse[arrow(name)] = arrow(value.get<std::string>());
      }
    }
    p.complete_units();
    return p;
  });
}

Json presentation_to_json(const FiniteCatPresentation& p) {
  Json j = Json::object();
  j["objects"] = p.objects;
  Json arrows = Json::array();
  for (const auto& a : p.arrows) {
    Json m = Json::object();
    m["name"] = a.name;
    m["from"] = p.objects.at(a.from);
    m["to"] = p.objects.at(a.to);
    arrows.push_back(std::move(m));
  }
  j["morphisms"] = std::move(arrows);
  Json ids = Json::object();
  for (ObjectId x = 0; x < p.objects.size(); ++x) ids[p.objects[x]] = p.arrows.at(p.identity.at(x)).name;
  j["identity"] = std::move(ids);
  Json comp = Json::array();
  for (const auto& [key, result] : p.composition) {
    Json e = Json::object();
    e["g"] = p.arrows.at(key.first).name;
    e["f"] = p.arrows.at(key.second).name;
    e["result"] = p.arrows.at(result).name;
    comp.push_back(std::move(e));
  }
  j["composition"] = std::move(comp);
  if (!p.inverse.empty()) {
    Json inv = Json::object();
    for (const auto& [a, b] : p.inverse) inv[p.arrows.at(a).name] = p.arrows.at(b).name;
    j["inverse"] = std::move(inv);
  }
  return j;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j, Index rows, Index cols, const FieldSpec& field) {
  return guarded([&] {
    if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
    Matrix<S> m = zeros<S>(rows, cols);
    const bool nested = !j.empty() && j.front().is_array();
    if (nested) {
      if (static_cast<Index>(j.size()) != rows) {
        throw InvalidInput("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
      }
      for (Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
          throw InvalidInput("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        }
        for (Index k = 0; k < cols; ++k) m(i, k) = scalar<S>(row[static_cast<std::size_t>(k)], field);
      }
      return m;
    }
    if (static_cast<Index>(j.size()) != rows * cols) {
      throw InvalidInput("matrix has " + std::to_string(j.size()) + " entries, expected " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (Index i = 0; i < rows; ++i) {
      for (Index k = 0; k < cols; ++k) m(i, k) = scalar<S>(j[static_cast<std::size_t>(i * cols + k)], field);
    }
    return m;
  });
}

template <class S>
Json matrix_to_json(const Matrix<S>& m, const FieldSpec& field) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(format_scalar(m(i, k), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Bimodule<S> bimodule_from_json(const FinLinCat<S>& c, const Json& j) {
  return guarded([&] {
    const std::size_t n = c.object_count();
    std::vector<Index> dims(n * n, 0);
    for (const Json& s : optional_array(j, "spaces")) {
      dims[object_of(c, text(s, "x")) * n + object_of(c, text(s, "y"))] = count(s, "dim");
    }
    Bimodule<S> m(c, std::move(dims));
    for (const Json& a : optional_array(j, "left_action")) {
      const LabelId f = label_of(c, text(a, "f"));
      const ObjectId y = object_of(c, text(a, "y"));
      const BasisLabel& l = c.label(f);
      m.left(f, y) = matrix_from_json<S>(member(a, "matrix"), m.dim(l.to, y), m.dim(l.from, y), c.field());
    }
    for (const Json& a : optional_array(j, "right_action")) {
      const LabelId g = label_of(c, text(a, "g"));
      const ObjectId x = object_of(c, text(a, "x"));
      const BasisLabel& l = c.label(g);
      m.right(g, x) = matrix_from_json<S>(member(a, "matrix"), m.dim(x, l.from), m.dim(x, l.to), c.field());
    }
    return m;
  });
}

template <class S>
Json bimodule_to_json(const FinLinCat<S>& c, const Bimodule<S>& m) {
  const std::size_t n = c.object_count();
  Json spaces = Json::array();
  for (ObjectId x = 0; x < n; ++x) {
    for (ObjectId y = 0; y < n; ++y) {
      if (m.dim(x, y) == 0) continue;
      Json s = Json::object();
      s["x"] = c.object_name(x);
      s["y"] = c.object_name(y);
      s["dim"] = m.dim(x, y);
      spaces.push_back(std::move(s));
    }
  }
  Json left = Json::array();
  Json right = Json::array();
  for (LabelId f = 0; f < c.label_count(); ++f) {
    for (ObjectId w = 0; w < n; ++w) {
      if (m.left(f, w).size() > 0) {
        Json a = Json::object();
        a["f"] = c.label(f).name;
        a["y"] = c.object_name(w);
        a["matrix"] = matrix_to_json(m.left(f, w), c.field());
        left.push_back(std::move(a));
      }
      if (m.right(f, w).size() > 0) {
        Json a = Json::object();
        a["g"] = c.label(f).name;
        a["x"] = c.object_name(w);
        a["matrix"] = matrix_to_json(m.right(f, w), c.field());
        right.push_back(std::move(a));
      }
    }
  }
  Json j = Json::object();
  j["spaces"] = std::move(spaces);
  j["left_action"] = std::move(left);
  j["right_action"] = std::move(right);
  return j;
}

template <class S>
LeftModule<S> left_module_from_json(const FinLinCat<S>& c, const Json& j) {
  return guarded([&] {
    std::vector<Index> dims(c.object_count(), 0);
    for (const Json& s : optional_array(j, "spaces")) dims[object_of(c, text(s, "x"))] = count(s, "dim");
    LeftModule<S> m(c, std::move(dims));
    for (const Json& a : optional_array(j, "action")) {
      const LabelId f = label_of(c, text(a, "f"));
      const BasisLabel& l = c.label(f);
      m.action(f) = matrix_from_json<S>(member(a, "matrix"), m.dim(l.to), m.dim(l.from), c.field());
    }
    return m;
  });
}

template <class S>
Json left_module_to_json(const FinLinCat<S>& c, const LeftModule<S>& m) {
  Json spaces = Json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    if (m.dim(x) == 0) continue;
    Json s = Json::object();
    s["x"] = c.object_name(x);
    s["dim"] = m.dim(x);
    spaces.push_back(std::move(s));
  }
  Json action = Json::array();
  for (LabelId f = 0; f < c.label_count(); ++f) {
    if (m.action(f).size() == 0) continue;
    Json a = Json::object();
    a["f"] = c.label(f).name;
    a["matrix"] = matrix_to_json(m.action(f), c.field());
    action.push_back(std::move(a));
  }
  Json j = Json::object();
  j["spaces"] = std::move(spaces);
  j["action"] = std::move(action);
  return j;
}

template <class S>
BimoduleMap<S> bimodule_map_from_json(const FinLinCat<S>& c, const Bimodule<S>& source, const Bimodule<S>& target,
                                      const Json& j) {
  return guarded([&] {
    BimoduleMap<S> map = zero_map(source, target);
    for (const Json& b : optional_array(j, "blocks")) {
      const ObjectId x = object_of(c, text(b, "x"));
      const ObjectId y = object_of(c, text(b, "y"));
      map.block(x, y) = matrix_from_json<S>(member(b, "matrix"), target.dim(x, y), source.dim(x, y), c.field());
    }
    return map;
  });
}

template <class S>
Json bimodule_map_to_json(const FinLinCat<S>& c, const BimoduleMap<S>& map) {
  Json blocks = Json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      if (map.block(x, y).size() == 0) continue;
      Json b = Json::object();
      b["x"] = c.object_name(x);
      b["y"] = c.object_name(y);
      b["matrix"] = matrix_to_json(map.block(x, y), c.field());
      blocks.push_back(std::move(b));
    }
  }
  Json j = Json::object();
  j["blocks"] = std::move(blocks);
  return j;
}

template <class S>
ShortExactSeq<S> ses_from_json(const FinLinCat<S>& c, const Json& j) {
  return guarded([&] {
    ShortExactSeq<S> ses;
    ses.m = bimodule_from_json(c, member(j, "M"));
    ses.n = bimodule_from_json(c, member(j, "N"));
    ses.p = bimodule_from_json(c, member(j, "P"));
    ses.i = bimodule_map_from_json(c, ses.m, ses.n, member(j, "i"));
    ses.q = bimodule_map_from_json(c, ses.n, ses.p, member(j, "q"));
    return ses;
  });
}

template <class S>
Json ses_to_json(const FinLinCat<S>& c, const ShortExactSeq<S>& ses) {
  Json j = Json::object();
  j["M"] = bimodule_to_json(c, ses.m);
  j["N"] = bimodule_to_json(c, ses.n);
  j["P"] = bimodule_to_json(c, ses.p);
  j["i"] = bimodule_map_to_json(c, ses.i);
  j["q"] = bimodule_map_to_json(c, ses.q);
  return j;
}

template <class S>
SeparabilityFamily<S> certificate_from_json(const FinLinCat<S>& c, const Json& j) {
  return guarded([&] {
    if (!j.is_array()) throw InvalidInput("certificate must be an array of blocks");
    SeparabilityFamily<S> fam = zero_family(c);
    for (const Json& b : j) {
      const ObjectId x = object_of(c, text(b, "x"));
      const ObjectId y = object_of(c, text(b, "y"));
      for (const Json& t : array_member(b, "terms")) {
        const BasisLabel& u = c.label(label_of(c, text(t, "u")));
        const BasisLabel& v = c.label(label_of(c, text(t, "v")));
        if (u.from != y || u.to != x) throw InvalidInput("certificate term u = " + u.name + " is not in hom(y, x)");
        if (v.from != x || v.to != y) throw InvalidInput("certificate term v = " + v.name + " is not in hom(x, y)");
        fam.block(x, y)(u.position, v.position) += scalar<S>(member(t, "coeff"), c.field());
      }
    }
    return fam;
  });
}

template <class S>
Json certificate_to_json(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam) {
  Json out = Json::array();
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      const Matrix<S>& a = fam.block(x, y);
      if (is_zero_matrix(a)) continue;
      Json terms = Json::array();
      for (Index i = 0; i < a.rows(); ++i) {
        for (Index k = 0; k < a.cols(); ++k) {
          if (is_zero(a(i, k))) continue;
          Json t = Json::object();
          t["coeff"] = format_scalar(a(i, k), c.field());
          t["u"] = c.label(c.hom(y, x)[static_cast<std::size_t>(i)]).name;
          t["v"] = c.label(c.hom(x, y)[static_cast<std::size_t>(k)]).name;
          terms.push_back(std::move(t));
        }
      }
      Json b = Json::object();
      b["x"] = c.object_name(x);
      b["y"] = c.object_name(y);
      b["terms"] = std::move(terms);
      out.push_back(std::move(b));
    }
  }
  return out;
}

Json cohomology_to_json(const std::vector<DegreeInfo>& degrees, bool budget_exceeded) {
  Json ds = Json::array();
  for (const DegreeInfo& d : degrees) {
    Json e = Json::object();
    e["n"] = d.n;
    e["dim_cochain"] = d.dim_cochain;
    e["rank_d"] = d.rank_d;
    e["dim_H"] = d.dim_h;
    ds.push_back(std::move(e));
  }
  Json j = Json::object();
  j["degrees"] = std::move(ds);
  j["budget_exceeded"] = budget_exceeded;
  return j;
}

Json les_to_json(const LesReport& r) {
  Json degrees = Json::array();
  for (std::size_t k = 0; k < r.m.size(); ++k) {
    Json e = Json::object();
    e["n"] = r.m[k].n;
    e["dim_H_M"] = r.m[k].dim_h;
    e["dim_H_N"] = r.n[k].dim_h;
    e["dim_H_P"] = r.p[k].dim_h;
    e["connecting_rank"] = r.connecting_ranks[k];
    degrees.push_back(std::move(e));
  }
  Json positions = Json::array();
  for (const LesPosition& p : r.positions) {
    Json e = Json::object();
    e["position"] = p.position;
    e["incoming_rank"] = p.incoming_rank;
    e["kernel_dim"] = p.kernel_dim;
    e["exact"] = p.exact;
    positions.push_back(std::move(e));
  }
  Json j = Json::object();
  j["degrees"] = std::move(degrees);
  j["positions"] = std::move(positions);
  j["exact"] = r.exact;
  return j;
}

#define SEPCAT_INSTANTIATE(S)                                                                                  \
  template FinLinCat<S> category_from_json<S>(const Json&);                                                    \
  template Json category_to_json<S>(const FinLinCat<S>&);                                                      \
  template Matrix<S> matrix_from_json<S>(const Json&, Index, Index, const FieldSpec&);                         \
  template Json matrix_to_json<S>(const Matrix<S>&, const FieldSpec&);                                         \
  template Bimodule<S> bimodule_from_json<S>(const FinLinCat<S>&, const Json&);                                \
  template Json bimodule_to_json<S>(const FinLinCat<S>&, const Bimodule<S>&);                                  \
  template LeftModule<S> left_module_from_json<S>(const FinLinCat<S>&, const Json&);                           \
  template Json left_module_to_json<S>(const FinLinCat<S>&, const LeftModule<S>&);                             \
  template BimoduleMap<S> bimodule_map_from_json<S>(const FinLinCat<S>&, const Bimodule<S>&, const Bimodule<S>&, \
                                                    const Json&);                                              \
  template Json bimodule_map_to_json<S>(const FinLinCat<S>&, const BimoduleMap<S>&);                           \
  template ShortExactSeq<S> ses_from_json<S>(const FinLinCat<S>&, const Json&);                                \
  template Json ses_to_json<S>(const FinLinCat<S>&, const ShortExactSeq<S>&);                                  \
  template SeparabilityFamily<S> certificate_from_json<S>(const FinLinCat<S>&, const Json&);                   \
  template Json certificate_to_json<S>(const FinLinCat<S>&, const SeparabilityFamily<S>&);

SEPCAT_INSTANTIATE(Rational)
SEPCAT_INSTANTIATE(Zp)

}  // namespace sepcat
