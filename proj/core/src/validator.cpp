#include "regui/validator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "json_internal.hpp"
#include "regui/classifier.hpp"

namespace regui {

using detail::Json;

std::string_view to_string(Severity severity) noexcept {
  switch (severity) {
    case Severity::error:
      return "error";
    case Severity::warning:
      return "warning";
    case Severity::info:
      break;
  }
  return "info";
}

std::string_view to_string(DiagnosticCode code) noexcept {
  switch (code) {
    case DiagnosticCode::partition_gap:
      return "PARTITION_GAP";
    case DiagnosticCode::partition_overlap:
      return "PARTITION_OVERLAP";
    case DiagnosticCode::invalid_interval:
      return "INVALID_INTERVAL";
    case DiagnosticCode::duplicate_class:
      return "DUPLICATE_CLASS";
    case DiagnosticCode::duplicate_block:
      return "DUPLICATE_BLOCK";
    case DiagnosticCode::dangling_class:
      return "DANGLING_CLASS";
    case DiagnosticCode::rect_out_of_bounds:
      return "RECT_OUT_OF_BOUNDS";
    case DiagnosticCode::invalid_font:
      return "INVALID_FONT";
    case DiagnosticCode::block_overlap:
      return "BLOCK_OVERLAP";
    case DiagnosticCode::hidden_in_class:
      break;
  }
  return "HIDDEN_IN_CLASS";
}

namespace {

bool valid_interval(const ClassRule& rule) {
  if (std::isnan(rule.lo) || std::isnan(rule.hi) || rule.lo < 0.0) return false;
  if (rule.lo < rule.hi) return true;
  return rule.lo == rule.hi && rule.lo_inclusive && rule.hi_inclusive;
}

bool in_bounds(const NormRect& r) {
  return r.x >= 0.0 && r.y >= 0.0 && r.w >= 0.0 && r.h >= 0.0 && r.x + r.w <= 1.0 &&
         r.y + r.h <= 1.0;
}

std::string describe(const NormRect& r) {
  Json j = Json::array({r.x, r.y, r.w, r.h});
  return j.dump();
}

void check_classes(const LayoutSpec& spec, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const ClassRule& rule : spec.classes) {
    if (!seen.insert(rule.name).second) {
      out.push_back({Severity::error, DiagnosticCode::duplicate_class,
                     "class '" + rule.name + "' is declared more than once", "", rule.name});
    }
    if (!valid_interval(rule)) {
      out.push_back({Severity::error, DiagnosticCode::invalid_interval,
                     "class '" + rule.name + "' has an empty or malformed interval", "",
                     rule.name});
    }
  }
  for (const PartitionIssue& issue : validate_partition(spec.classes)) {
    const bool gap = issue.kind == PartitionIssue::Kind::gap;
    std::string subject;
    for (const auto& name : issue.classes) {
      if (!subject.empty()) subject += "/";
      subject += name;
    }
    out.push_back({Severity::error,
                   gap ? DiagnosticCode::partition_gap : DiagnosticCode::partition_overlap,
                   issue.describe(), "", subject});
  }
}

void check_blocks(const LayoutSpec& spec, std::vector<Diagnostic>& out) {
  std::set<std::string> seen;
  for (const Block& block : spec.blocks) {
    if (!seen.insert(block.id).second) {
      out.push_back({Severity::error, DiagnosticCode::duplicate_block,
                     "block id '" + block.id + "' is used more than once", block.id, ""});
    }
    for (const auto& [class_name, placement] : block.placements) {
      if (spec.find_class(class_name) == nullptr) {
        out.push_back({Severity::error, DiagnosticCode::dangling_class,
                       "placement refers to undeclared class '" + class_name + "'", block.id,
                       class_name});
      }
      if (!in_bounds(placement.rect)) {
        out.push_back({Severity::error, DiagnosticCode::rect_out_of_bounds,
                       "rect " + describe(placement.rect) + " leaves the unit square", block.id,
                       class_name});
      }
      if (placement.font && !(*placement.font > 0.0 && *placement.font <= 1.0)) {
        out.push_back({Severity::error, DiagnosticCode::invalid_font,
                       "font fraction must lie in (0, 1]", block.id, class_name});
      }
    }
    for (const ClassRule& rule : spec.classes) {
      if (block.placement_for(rule.name) == nullptr) {
        out.push_back({Severity::info, DiagnosticCode::hidden_in_class,
                       "no placement; block is hidden in this class", block.id, rule.name});
      }
    }
  }
}

void check_overlaps(const LayoutSpec& spec, std::vector<Diagnostic>& out) {
  for (const ClassRule& rule : spec.classes) {
    std::vector<std::pair<const std::string*, const NormRect*>> visible;
    for (const Block& block : spec.blocks) {
      const Placement* placement = block.placement_for(rule.name);
      if (placement != nullptr && placement->visible) visible.emplace_back(&block.id, &placement->rect);
    }
    for (std::size_t i = 0; i < visible.size(); ++i) {
      for (std::size_t j = i + 1; j < visible.size(); ++j) {
        if (!intersects(*visible[i].second, *visible[j].second)) continue;
        const auto& [a, b] = std::minmax(*visible[i].first, *visible[j].first);
        out.push_back({Severity::warning, DiagnosticCode::block_overlap,
                       "blocks '" + a + "' and '" + b + "' overlap", a + "/" + b, rule.name});
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate_spec(const LayoutSpec& spec) {
  std::vector<Diagnostic> diagnostics;
  check_classes(spec, diagnostics);
  check_blocks(spec, diagnostics);
  check_overlaps(spec, diagnostics);
  std::sort(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& l, const Diagnostic& r) {
    return std::tie(l.severity, l.code, l.block, l.class_name, l.message) <
           std::tie(r.severity, r.code, r.block, r.class_name, r.message);
  });
  return diagnostics;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string serialize_diagnostics(const std::vector<Diagnostic>& diagnostics, int indent) {
  Json j;
  j["valid"] = !has_errors(diagnostics);
  j["diagnostics"] = Json::array();
  for (const Diagnostic& d : diagnostics) {
    Json entry;
    entry["severity"] = std::string(to_string(d.severity));
    entry["code"] = std::string(to_string(d.code));
    entry["message"] = d.message;
    if (!d.block.empty()) entry["block"] = d.block;
    if (!d.class_name.empty()) entry["class"] = d.class_name;
    j["diagnostics"].push_back(std::move(entry));
  }
  return detail::dump(j, indent);
}

}  // namespace regui
