#include "regui/controller.hpp"

#include <string>

#include "json_internal.hpp"

namespace regui {

using detail::Json;

ScreenAnchor screen_anchor(double window_x, double window_w, double screen_width) noexcept {
  const double center = window_x + window_w / 2.0;
  if (center < screen_width / 3.0) return ScreenAnchor::left;
  if (center > 2.0 * screen_width / 3.0) return ScreenAnchor::right;
  return ScreenAnchor::center;
}

Anchor to_anchor(ScreenAnchor side) noexcept {
  switch (side) {
    case ScreenAnchor::left:
      return Anchor::left;
    case ScreenAnchor::right:
      return Anchor::right;
    case ScreenAnchor::center:
      break;
  }
  return Anchor::none;
}

std::string_view to_string(ActionKind kind) noexcept {
  switch (kind) {
    case ActionKind::reflow:
      return "reflow";
    case ActionKind::rescale:
      return "rescale";
    case ActionKind::anchor_change:
      return "anchor_change";
    case ActionKind::rejected:
      return "rejected";
    case ActionKind::none:
      break;
  }
  return "none";
}

namespace {

Transition on_resize(const ControllerState& state, const ResizeEvent& event) {
  WindowState window = [&] {
    try {
      return make_window(event.width, event.height);
    } catch (const DegenerateWindow& e) {
      throw RejectedEvent(std::string("DegenerateWindow: ") + e.what());
    }
  }();

  Transition next{state, {}};
  if (state.last_window && *state.last_window == window) return next;

  ResolvedLayout layout = resolve(*state.spec, window, state.last_anchor);
  const bool class_changed = !state.last_class || *state.last_class != layout.active_class;
  next.action.kind = class_changed ? ActionKind::reflow : ActionKind::rescale;
  next.state.last_window = window;
  next.state.last_class = layout.active_class;
  next.action.layout = std::move(layout);
  return next;
}

Transition on_move(const ControllerState& state, const MoveEvent& event) {
  if (!(event.screen_width > 0.0)) {
    throw RejectedEvent("move event needs a positive screen width");
  }
  // Before the first resize the window width is unknown; its left edge
  // stands in for its center.
  const double window_w = state.last_window ? state.last_window->width() : 0.0;
  const Anchor anchor = to_anchor(screen_anchor(event.window_x, window_w, event.screen_width));

  Transition next{state, {}};
  if (anchor == state.last_anchor) return next;
  next.state.last_anchor = anchor;
  if (!state.last_window) return next;

  ResolvedLayout layout = resolve(*state.spec, *state.last_window, anchor);
  next.action.kind = ActionKind::anchor_change;
  next.action.layout = std::move(layout);
  return next;
}

}  // namespace

Transition process_event(const ControllerState& state, const UiEvent& event) {
  return std::visit(
      [&](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, ResizeEvent>) {
          return on_resize(state, e);
        } else {
          return on_move(state, e);
        }
      },
      event);
}

ResizeController::ResizeController(std::shared_ptr<const LayoutSpec> spec)
    : state_{std::move(spec), std::nullopt, std::nullopt, Anchor::none} {}

UpdateAction ResizeController::handle(const UiEvent& event) {
  Transition next = process_event(state_, event);
  state_ = std::move(next.state);
  return std::move(next.action);
}

std::vector<UpdateAction> replay_trace(std::shared_ptr<const LayoutSpec> spec,
                                       const std::vector<UiEvent>& events) {
  ResizeController controller(std::move(spec));
  std::vector<UpdateAction> actions;
  actions.reserve(events.size());
  for (const UiEvent& event : events) {
    try {
      actions.push_back(controller.handle(event));
    } catch (const RejectedEvent& e) {
      UpdateAction rejected;
      rejected.kind = ActionKind::rejected;
      rejected.error = e.what();
      actions.push_back(std::move(rejected));
    }
  }
  return actions;
}

namespace {

double read_number(const Json& object, std::string_view key, const std::string& path) {
  auto it = object.find(std::string(key));
  if (it == object.end()) throw SchemaError(path, "missing required field: " + std::string(key));
  if (!it->is_number()) throw SchemaError(path + "." + std::string(key), "expected number");
  return it->get<double>();
}

}  // namespace

std::vector<UiEvent> parse_trace(std::string_view text) {
  std::vector<UiEvent> events;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    Json object;
    try {
      object = Json::parse(line.begin(), line.end());
    } catch (const Json::parse_error& e) {
      throw SyntaxError("malformed trace event", line_number, e.byte);
    }
    const std::string path = "line " + std::to_string(line_number);
    if (!object.is_object()) throw SchemaError(path, "expected object");
    auto kind = object.find("kind");
    if (kind == object.end() || !kind->is_string()) {
      throw SchemaError(path + ".kind", "expected \"resize\" or \"move\"");
    }
    if (*kind == "resize") {
      events.emplace_back(ResizeEvent{read_number(object, "w", path), read_number(object, "h", path)});
    } else if (*kind == "move") {
      events.emplace_back(MoveEvent{read_number(object, "x", path), read_number(object, "y", path),
                                    read_number(object, "screen_w", path),
                                    read_number(object, "screen_h", path)});
    } else {
      throw SchemaError(path + ".kind", "expected \"resize\" or \"move\"");
    }
  }
  return events;
}

std::string serialize_action(const UpdateAction& action) {
  Json j;
  j["action"] = std::string(to_string(action.kind));
  if (action.layout) {
    j["class"] = action.layout->active_class.name;
    j["layout"] = detail::layout_to_json(*action.layout);
  }
  if (action.kind == ActionKind::rejected) j["error"] = action.error;
  return detail::dump(j, -1);
}

}  // namespace regui
