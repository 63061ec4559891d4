#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regui/layout_spec.hpp"

namespace regui {

enum class Severity { error, warning, info };

std::string_view to_string(Severity severity) noexcept;

// Closed set of diagnostic codes.
enum class DiagnosticCode {
  partition_gap,       // error: some R > 0 matches no class
  partition_overlap,   // error: some R > 0 matches several classes
  invalid_interval,    // error: lo > hi, negative lo, NaN, or open point class
  duplicate_class,     // error
  duplicate_block,     // error
  dangling_class,      // error: placement keyed by an undeclared class
  rect_out_of_bounds,  // error: negative field, x + w > 1 or y + h > 1
  invalid_font,        // error: font outside (0, 1]
  block_overlap,       // warning: two visible blocks intersect in one class
  hidden_in_class,     // info: block has no placement for a declared class
};

// Stable upper-case identifier, e.g. "PARTITION_GAP".
std::string_view to_string(DiagnosticCode code) noexcept;

struct Diagnostic {
  Severity severity = Severity::error;
  DiagnosticCode code = DiagnosticCode::partition_gap;
  std::string message;
  // Either may be empty. For block_overlap, `block` is "a/b" with a < b.
  std::string block;
  std::string class_name;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// All diagnostics, sorted by (severity, code, block, class, message).
std::vector<Diagnostic> validate_spec(const LayoutSpec& spec);

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept;

// {"valid":bool,"diagnostics":[{"severity","code","message","block"?,"class"?}]}
std::string serialize_diagnostics(const std::vector<Diagnostic>& diagnostics, int indent = 2);

}  // namespace regui
