#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ppr/complex.hpp"
#include "ppr/homology.hpp"
#include "ppr/oracle.hpp"
#include "ppr/reduction.hpp"

namespace ppr {

/// Malformed document: bad JSON, missing fields, wrong types, ragged rows.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"p": int, "differentials": [{"d1": [[...]], "d2": [[...]]}, ...],
///  "ranks": [...] (optional)}. Entries are integers or decimal strings.
/// Shapes are not checked here; validate_complex reports them.
ChainComplexR parse_complex(const std::string& text);
nlohmann::json complex_to_json(const ChainComplexR& c);

nlohmann::json invariants_to_json(const AbelianInvariants& inv);
nlohmann::json validation_to_json(const ValidationReport& report);
/// K_dim, S1, Sbar_dim, S2, q1, q2, p1, p2. S_i are encoded by rank and
/// factors, so the components must be in minimized generator order.
nlohmann::json rdiagram_to_json(const RDiagram& rd);
RDiagram rdiagram_from_json(const nlohmann::json& j, Prime p);

nlohmann::json presentation_to_json(const SeparatedPresentation& pres);

struct DegreeReport {
  DegreeResult result;
  ValidationReport validation;
  GroupInvariants pipeline;
  GroupInvariants oracle;
  bool agree() const { return pipeline == oracle; }
};

/// Validates a computed R-diagram and compares its underlying group with the
/// integer homology of the complex in the same degree.
DegreeReport report_degree(DegreeResult result, const ChainComplexR& c);

nlohmann::json degree_to_json(const DegreeReport& r, bool include_trace);
nlohmann::json rdiagram_document(Prime p, const std::vector<DegreeReport>& reports, bool include_trace);

/// Inverse of rdiagram_document for the R-diagram fields.
std::vector<RDiagram> parse_rdiagram_document(const std::string& text);

/// The R-diagram drawn as K over S_1 and S_2 over Sbar, followed by matrices.
std::string render_text(const DegreeReport& r, Prime p, bool include_trace);

}  // namespace ppr
