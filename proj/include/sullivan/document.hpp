#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sullivan/cdga.hpp"
#include "sullivan/models.hpp"

namespace sullivan {

using Json = nlohmann::ordered_json;

enum class DocumentKind { Homogeneous, Biquotient, CohomogeneityOne, Model, AlmostFree };

std::string_view to_string(DocumentKind k);

struct HomogeneousInput {
    GroupData G;
    GroupData H;
    RestrictionMap restriction;
};

struct BiquotientInput {
    GroupData G;
    GroupData H;
    RestrictionMap left;
    RestrictionMap right;
};

struct AlmostFreeInput {
    SullivanAlgebra space;
    GroupData G;
    std::map<std::string, std::string> action;
};

/// A fully resolved input document; exactly the member matching `kind` is set.
struct Document {
    DocumentKind kind = DocumentKind::Model;
    std::optional<int> cutoff;  // explicit cutoff, otherwise the builder default
    std::optional<HomogeneousInput> homogeneous;
    std::optional<BiquotientInput> biquotient;
    std::optional<GroupDiagram> diagram;
    std::optional<SullivanAlgebra> model;
    std::optional<AlmostFreeInput> almost_free;
};

/// Parses JSON text; malformed text is a ParseError.
Json parse_json(std::string_view text);

/// Resolves catalog references and validates. Schema violations throw SchemaError naming
/// the offending path, e.g. "/embeddings/Kplus/map/x1".
Document load_document(const Json& doc);
GroupDiagram load_diagram(const Json& doc);

Json serialize(const Document& doc);

/// Syntactic normal form: catalog names expanded, defaults filled in, keys in canonical
/// order, polynomials in canonical spelling.
Json normalize_document(const Json& doc);

Json group_to_json(const GroupData& g);
Json algebra_to_json(const SullivanAlgebra& a);
SullivanAlgebra algebra_from_json(const Json& j, const std::string& path = "");

/// Cutoff used when a model document gives none: for pure algebras the formal dimension
/// sum of odd degrees minus sum of (even degree - 1), plus the largest generator degree; otherwise none.
std::optional<int> default_model_cutoff(const SullivanAlgebra& a);

}  // namespace sullivan
