#include "regui/goldens.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "regui/controller.hpp"
#include "regui/resolver.hpp"
#include "regui/svg.hpp"

namespace regui {

std::vector<GoldenCase> enumerate_goldens() {
  const std::filesystem::path spec = "fixtures/teachlcge.regui.json";
  auto window = [&](std::string name, double w, double h, GoldenFormat format,
                    Anchor anchor = Anchor::none) {
    const char* extension = format == GoldenFormat::svg ? ".svg" : ".json";
    return GoldenCase{name, spec, WindowInput{w, h, anchor}, format,
                      std::filesystem::path("goldens") / (name + extension)};
  };
  auto trace = [&](std::string name, std::filesystem::path events) {
    return GoldenCase{name, spec, TraceInput{std::move(events)}, GoldenFormat::action_stream,
                      std::filesystem::path("goldens") / (name + ".jsonl")};
  };
  return {
      window("classic_1024x768", 1024, 768, GoldenFormat::layout_json),
      window("classic_1024x768", 1024, 768, GoldenFormat::svg),
      window("portrait_600x1000", 600, 1000, GoldenFormat::layout_json),
      window("portrait_600x1000", 600, 1000, GoldenFormat::svg),
      window("landscape_1600x800", 1600, 800, GoldenFormat::layout_json),
      window("landscape_1600x800", 1600, 800, GoldenFormat::svg),
      window("boundary_r0.75_600x800", 600, 800, GoldenFormat::layout_json),
      window("boundary_r1.5_1200x800", 1200, 800, GoldenFormat::layout_json),
      window("anchor_right_landscape_1600x800", 1600, 800, GoldenFormat::layout_json,
             Anchor::right),
      window("anchor_right_landscape_1600x800", 1600, 800, GoldenFormat::svg, Anchor::right),
      trace("trace_crossing", "fixtures/traces/crossing.jsonl"),
      trace("trace_anchor", "fixtures/traces/anchor.jsonl"),
  };
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string render_golden(const GoldenCase& golden, const std::filesystem::path& root) {
  auto spec = std::make_shared<const LayoutSpec>(parse_spec(read_text_file(root / golden.spec_path)));

  if (const auto* input = std::get_if<WindowInput>(&golden.input)) {
    ResolvedLayout layout = resolve(*spec, make_window(input->width, input->height), input->anchor);
    return golden.format == GoldenFormat::svg ? export_svg(layout) : serialize_layout(layout);
  }

  const auto& input = std::get<TraceInput>(golden.input);
  std::string out;
  for (const UpdateAction& action :
       replay_trace(spec, parse_trace(read_text_file(root / input.events_path)))) {
    out += serialize_action(action);
    out += '\n';
  }
  return out;
}

}  // namespace regui
