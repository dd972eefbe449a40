#pragma once

#include <optional>
#include <string>

#include "sullivan/cohomology.hpp"
#include "sullivan/document.hpp"

namespace sullivan {

struct AnalysisOptions {
    std::optional<int> cutoff;  // overrides the document and builder defaults
};

/// Structured report plus its text rendering. Identical inputs give identical output.
struct Report {
    Json structured;
    std::string text;
};

/// Model of the space described by a document (G/H, G//H, M, X/G or the model itself).
SullivanAlgebra document_model(const Document& doc, const AnalysisOptions& options = {});

Json model_section(const SullivanAlgebra& a);
Json cohomology_section(const CohomologyTable& t);
/// Verdict of the governing surjectivity theorem; throws SchemaError for model documents.
Json check_section(const Document& doc, const AnalysisOptions& options = {});
Json ktheory_section(const Document& doc, const AnalysisOptions& options = {});

Report run_analysis(const Json& document, const AnalysisOptions& options = {});
Report run_analysis(const Document& doc, const AnalysisOptions& options = {});

/// Indented key: value rendering of a structured section.
std::string render_text(const Json& j);

}  // namespace sullivan
