#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tame/config.hpp"
#include "tame/decompose.hpp"
#include "tame/diagram.hpp"
#include "tame/relation.hpp"

namespace tame {

using nlohmann::json;

/// {"prime": p} or "Q".
Field field_from_json(const json& j);
json field_to_json(const Field& f);
/// "5", "Q", "q" or "GF(5)".
Field field_from_flag(const std::string& text);

/// An integer or a string "a", "-a", "a/b".
Scalar scalar_from_json(const Field& f, const json& j);
/// Integers as JSON numbers when they fit, everything else as a string.
json scalar_to_json(const Field& f, const Scalar& s);

/// A flat row-major list or a list of rows.
Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols);
/// Flat row-major.
json matrix_to_json(const Matrix& m);

struct RepresentationInput {
  bool circle = true;
  CircleRep circle_rep;
  ZRep line_rep;
};

RepresentationInput representation_from_json(const json& j, const std::optional<Field>& field_override = {});
json representation_to_json(const CircleRep& rep);
json representation_to_json(const ZRep& rep);

SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& k);
SimplicialMap map_from_json(const json& j, const SimplicialComplex& source, const SimplicialComplex& target);

TameDiagram diagram_from_json(const json& j, const std::optional<Field>& field_override = {});
json diagram_to_json(const TameDiagram& d);

json barcode_to_json(const BarCode& c);
json canonical_form_to_json(const Field& f, const EndoCanonicalForm& form);
json decomposition_to_json(const Decomposition& d);
json regular_part_to_json(const Field& f, const RegularPart& reg);
json configuration_to_json(const Configuration& c, const ConfigPolynomial& p);
json checks_to_json(const std::vector<CheckResult>& checks);

/// The analyze report; every derived number computed from `report`.
json report_to_json(const InvariantReport& report, const std::vector<CheckResult>& checks);
/// Reads back kind, field, angles and bar codes (enough for configurations).
InvariantReport report_from_json(const json& j);

}  // namespace tame
