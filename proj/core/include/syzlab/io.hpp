#ifndef SYZLAB_IO_HPP
#define SYZLAB_IO_HPP

#include <optional>
#include <string>

#include "syzlab/bimodule.hpp"
#include "syzlab/fixtures.hpp"

namespace syzlab {

// JSON serialization of the domain types.  The wire formats:
//   field:        {"type":"Q"} | {"type":"Fp","p":<prime>}
//   algebra:      {"field":..., "quiver":{"vertices":[...], "arrows":[[name,src,tgt]...],
//                  "relations":[[{"path":[...],"coeff":"<scalar>"}...]...], "nilpotency":N}}
//              |  {"field":..., "basis":[...], "table":[[[coeff...]...]...],
//                  "unit":[...], "idempotents":[[...]...]}
//   module:       {"algebra":<path or inline>, "dim":d, "action":{"<label>":[[...]...]...}}
//              |  {"algebra":..., "submodule_of":"regular", "generators":[[...]...]}
//   automorphism: {"algebra":<path or inline>, "matrix":[[...]...]}
// Scalars serialize as strings: "a/b" reduced with positive denominator ("a"
// for integers), decimal residues over F_p.  Relation coefficients may use
// the symbolic tokens q, -q, 1/q, -1/q, resolved against a binding supplied
// at parse time.

std::string field_to_json_text(const Field& f);
Field field_from_json_text(const std::string& text);

std::string algebra_to_json_text(const AlgebraPtr& a);
AlgebraPtr parse_algebra_text(const std::string& text,
                              const std::optional<std::string>& q_binding = {});
AlgebraPtr load_algebra_file(const std::string& path,
                             const std::optional<std::string>& q_binding = {});

/// `algebra_ref`, when given, is stored as the module's algebra reference
/// instead of inlining the full presentation.
std::string module_to_json_text(const Module& m, const std::optional<std::string>& algebra_ref = {});
/// `override_algebra`, when given, is used instead of loading the module
/// file's own algebra reference.
Module parse_module_text(const std::string& text, AlgebraPtr override_algebra = nullptr,
                         const std::string& base_dir = ".");
Module load_module_file(const std::string& path, AlgebraPtr override_algebra = nullptr);

std::string automorphism_to_json_text(const Automorphism& s,
                                      const std::optional<std::string>& algebra_ref = {});
Automorphism parse_automorphism_text(const std::string& text, AlgebraPtr override_algebra = nullptr,
                                     const std::string& base_dir = ".");
Automorphism load_automorphism_file(const std::string& path, AlgebraPtr override_algebra = nullptr);

// Report payloads (machine format).  CSV is offered for dimension sequences.
std::string resolution_to_json_text(const Resolution& r);
std::string resolution_to_csv(const Resolution& r);
std::string period_report_to_json_text(const PeriodReport& r);
std::string period_report_to_csv(const PeriodReport& r);
std::string complexity_to_json_text(const ComplexityEstimate& e);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace syzlab

#endif
