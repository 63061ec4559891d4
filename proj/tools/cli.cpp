#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <ostream>

#include "regui/regui.hpp"

namespace regui::cli {
namespace {

struct Options {
  std::string spec_path;
  std::string events_path;
  double width = 0.0;
  double height = 0.0;
  std::string anchor = "none";
  std::string format = "json";
};

std::string number(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

// Thrown for input files that cannot be read or parsed.
struct InputFailure {
  std::string message;
};

LayoutSpec load_spec(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw InputFailure{e.what()};
  }
  try {
    return parse_spec(text);
  } catch (const Error& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

std::vector<UiEvent> load_trace(const std::string& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const std::exception& e) {
    throw InputFailure{e.what()};
  }
  try {
    return parse_trace(text);
  } catch (const Error& e) {
    throw InputFailure{path + ": " + e.what()};
  }
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const WindowState window = make_window(opt.width, opt.height);
  const LayoutSpec spec = load_spec(opt.spec_path);
  const ClassId id = classify(window.aspect_ratio(), spec.classes);
  out << "{\"r\":" << number(window.aspect_ratio()) << ",\"class\":\"" << id.name << "\"}\n";
  return kOk;
}

int cmd_resolve(const Options& opt, std::ostream& out, bool svg) {
  const WindowState window = make_window(opt.width, opt.height);
  const LayoutSpec spec = load_spec(opt.spec_path);
  const ResolvedLayout layout = resolve(spec, window, *parse_anchor(opt.anchor));
  out << (svg ? export_svg(layout) : serialize_layout(layout));
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const std::vector<Diagnostic> diagnostics = validate_spec(load_spec(opt.spec_path));
  out << serialize_diagnostics(diagnostics);
  return has_errors(diagnostics) ? kSpecErrors : kOk;
}

int cmd_trace(const Options& opt, std::ostream& out) {
  auto spec = std::make_shared<const LayoutSpec>(load_spec(opt.spec_path));
  const std::vector<UiEvent> events = load_trace(opt.events_path);
  for (const UpdateAction& action : replay_trace(std::move(spec), events)) {
    out << serialize_action(action) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regui: aspect-ratio driven layout engine", "regui"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec_path, "Layout spec file")->required();
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--width", opt.width, "Window width in pixels")->required();
    sub->add_option("--height", opt.height, "Window height in pixels")->required();
  };
  auto add_anchor = [&](CLI::App* sub) {
    sub->add_option("--anchor", opt.anchor, "Screen anchor for mirroring")
        ->check(CLI::IsMember({"none", "left", "right"}));
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(allowed));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Print the aspect ratio and its class");
  add_spec(classify_cmd);
  add_window(classify_cmd);
  add_format(classify_cmd, {"json"});

  CLI::App* resolve_cmd = app.add_subcommand("resolve", "Print the resolved layout");
  add_spec(resolve_cmd);
  add_window(resolve_cmd);
  add_anchor(resolve_cmd);
  add_format(resolve_cmd, {"json", "svg"});

  CLI::App* validate_cmd = app.add_subcommand("validate", "Lint a layout spec");
  add_spec(validate_cmd);
  add_format(validate_cmd, {"json"});

  CLI::App* trace_cmd = app.add_subcommand("trace", "Replay a resize/move event trace");
  add_spec(trace_cmd);
  trace_cmd->add_option("--events", opt.events_path, "Event trace (JSON Lines)")->required();
  add_format(trace_cmd, {"json"});

  CLI::App* svg_cmd = app.add_subcommand("export-svg", "Render the resolved layout as SVG");
  add_spec(svg_cmd);
  add_window(svg_cmd);
  add_anchor(svg_cmd);
  add_format(svg_cmd, {"svg"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "regui: " << e.what() << '\n';
    return kBadFlags;
  }

  const bool window_command = classify_cmd->parsed() || resolve_cmd->parsed() || svg_cmd->parsed();
  if (window_command && (!(opt.width > 0.0) || !(opt.height > 0.0))) {
    err << "regui: --width and --height must be positive\n";
    return kBadFlags;
  }
  if (svg_cmd->parsed()) opt.format = "svg";

  try {
    if (classify_cmd->parsed()) return cmd_classify(opt, out);
    if (resolve_cmd->parsed()) return cmd_resolve(opt, out, opt.format == "svg");
    if (validate_cmd->parsed()) return cmd_validate(opt, out);
    if (trace_cmd->parsed()) return cmd_trace(opt, out);
    return cmd_resolve(opt, out, true);
  } catch (const InputFailure& failure) {
    err << "regui: " << failure.message << '\n';
    return kBadInput;
  } catch (const Error& e) {
    // Parsed but semantically broken spec (gap in the class partition,
    // dangling class reference). `validate` explains the details.
    err << "regui: " << e.what() << '\n';
    return kSpecErrors;
  }
}

}  // namespace regui::cli
