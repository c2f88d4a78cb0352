#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "sepcat/cohomology.hpp"

namespace sepcat {

using Json = nlohmann::ordered_json;

/// Parse errors and schema violations throw InvalidInput.
Json read_json_file(const std::filesystem::path& path);
/// Two-space indented text with a trailing newline.
std::string dump_json(const Json& j);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// "Q" or {"Fp": p}.
FieldSpec field_from_json(const Json& j);
Json field_to_json(const FieldSpec& field);

/// The field member of a category document.
FieldSpec category_field(const Json& j);
template <class S>
FinLinCat<S> category_from_json(const Json& j);
template <class S>
Json category_to_json(const FinLinCat<S>& c);

/// {"objects", "morphisms": [{"name","from","to"}], "identity": {object: name},
///  "composition": [{"g","f","result"}], "inverse": {name: name}}; compositions
/// with an identity may be omitted.
FiniteCatPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const FiniteCatPresentation& p);

template <class S>
Matrix<S> matrix_from_json(const Json& j, Index rows, Index cols, const FieldSpec& field);
template <class S>
Json matrix_to_json(const Matrix<S>& m, const FieldSpec& field);

template <class S>
Bimodule<S> bimodule_from_json(const FinLinCat<S>& c, const Json& j);
template <class S>
Json bimodule_to_json(const FinLinCat<S>& c, const Bimodule<S>& m);

template <class S>
LeftModule<S> left_module_from_json(const FinLinCat<S>& c, const Json& j);
template <class S>
Json left_module_to_json(const FinLinCat<S>& c, const LeftModule<S>& m);

/// {"blocks": [{"x","y","matrix"}]}; omitted blocks are zero.
template <class S>
BimoduleMap<S> bimodule_map_from_json(const FinLinCat<S>& c, const Bimodule<S>& source, const Bimodule<S>& target,
                                      const Json& j);
template <class S>
Json bimodule_map_to_json(const FinLinCat<S>& c, const BimoduleMap<S>& map);

/// {"M", "N", "P", "i", "q"}
template <class S>
ShortExactSeq<S> ses_from_json(const FinLinCat<S>& c, const Json& j);
template <class S>
Json ses_to_json(const FinLinCat<S>& c, const ShortExactSeq<S>& ses);

/// [{"x","y","terms":[{"coeff","u","v"}]}]; omitted blocks are zero.
template <class S>
SeparabilityFamily<S> certificate_from_json(const FinLinCat<S>& c, const Json& j);
template <class S>
Json certificate_to_json(const FinLinCat<S>& c, const SeparabilityFamily<S>& fam);

Json cohomology_to_json(const std::vector<DegreeInfo>& degrees, bool budget_exceeded);
Json les_to_json(const LesReport& r);

}  // namespace sepcat
