#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "regui/classifier.hpp"
#include "regui/error.hpp"
#include "regui/geometry.hpp"
#include "regui/layout_spec.hpp"
#include "regui/resolver.hpp"

namespace regui {

struct ResizeEvent {
  double width = 0.0;
  double height = 0.0;

  friend bool operator==(const ResizeEvent&, const ResizeEvent&) = default;
};

struct MoveEvent {
  double window_x = 0.0;
  double window_y = 0.0;
  double screen_width = 0.0;
  double screen_height = 0.0;

  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

using UiEvent = std::variant<ResizeEvent, MoveEvent>;

enum class ScreenAnchor { left, center, right };

// Left or right when the window's horizontal center falls in that third of
// the screen; center otherwise. `screen_width` must be positive.
ScreenAnchor screen_anchor(double window_x, double window_w, double screen_width) noexcept;

// Center maps to Anchor::none (mirroring off).
Anchor to_anchor(ScreenAnchor side) noexcept;

enum class ActionKind { none, reflow, rescale, anchor_change, rejected };

std::string_view to_string(ActionKind kind) noexcept;

struct UpdateAction {
  ActionKind kind = ActionKind::none;
  // Present for reflow, rescale and anchor_change.
  std::optional<ResolvedLayout> layout;
  // Set for rejected actions only.
  std::string error;

  friend bool operator==(const UpdateAction&, const UpdateAction&) = default;
};

// Event that violated the protocol. The state it was offered to is unchanged.
class RejectedEvent : public Error {
 public:
  using Error::Error;
};

struct ControllerState {
  std::shared_ptr<const LayoutSpec> spec;
  std::optional<WindowState> last_window;
  std::optional<ClassId> last_class;
  Anchor last_anchor = Anchor::none;

  // Same window, class and anchor. The spec is compared by identity.
  friend bool operator==(const ControllerState&, const ControllerState&) = default;
};

struct Transition {
  ControllerState state;
  UpdateAction action;
};

// Pure transition function. Throws RejectedEvent for a resize with
// non-positive dimensions; the input state is never modified.
Transition process_event(const ControllerState& state, const UiEvent& event);

// Owning wrapper for a single producer delivering events in order. Not safe
// for concurrent delivery; may be handed between threads between events.
class ResizeController {
 public:
  explicit ResizeController(std::shared_ptr<const LayoutSpec> spec);

  // On RejectedEvent the controller keeps its previous state.
  UpdateAction handle(const UiEvent& event);

  const ControllerState& state() const noexcept { return state_; }

 private:
  ControllerState state_;
};

// Folds process_event over `events` from an empty state. Rejected events
// become ActionKind::rejected entries and leave the state untouched.
std::vector<UpdateAction> replay_trace(std::shared_ptr<const LayoutSpec> spec,
                                       const std::vector<UiEvent>& events);

// One event per line:
//   {"kind":"resize","w":800,"h":600}
//   {"kind":"move","x":0,"y":0,"screen_w":1920,"screen_h":1080}
// Blank lines are skipped. Throws SyntaxError or SchemaError (path names the
// 1-based line).
std::vector<UiEvent> parse_trace(std::string_view text);

// Single-line action document:
//   {"action":"reflow","class":"classic","layout":{...}}
//   {"action":"none"}
//   {"action":"rejected","error":"..."}
std::string serialize_action(const UpdateAction& action);

}  // namespace regui
