#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "regui/layout_spec.hpp"

namespace regui {

struct WindowInput {
  double width = 0.0;
  double height = 0.0;
  Anchor anchor = Anchor::none;
};

struct TraceInput {
  std::filesystem::path events_path;  // relative to the project root
};

enum class GoldenFormat { layout_json, svg, action_stream };

struct GoldenCase {
  std::string name;
  std::filesystem::path spec_path;      // relative to the project root
  std::variant<WindowInput, TraceInput> input;
  GoldenFormat format = GoldenFormat::layout_json;
  std::filesystem::path expected_path;  // relative to the project root
};

std::vector<GoldenCase> enumerate_goldens();

// Produces the document a golden case expects, reading inputs under `root`.
// Throws regui::Error on parse failures and std::runtime_error on I/O.
std::string render_golden(const GoldenCase& golden, const std::filesystem::path& root);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace regui
