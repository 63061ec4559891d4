#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regui/classifier.hpp"
#include "regui/geometry.hpp"
#include "regui/layout_spec.hpp"

namespace regui {

struct ResolvedBlock {
  std::string block_id;
  PixelRect rect;
  bool visible = false;
  std::optional<double> font_px;
  StyleMap style;
  std::string class_name;

  friend bool operator==(const ResolvedBlock&, const ResolvedBlock&) = default;
};

struct ResolvedLayout {
  WindowState window;
  ClassId active_class;
  std::vector<ResolvedBlock> blocks;

  const ResolvedBlock* find(std::string_view block_id) const noexcept;

  friend bool operator==(const ResolvedLayout&, const ResolvedLayout&) = default;
};

double resolve_font(double norm_font, const PixelRect& block_rect) noexcept;

// Resolves every block of `spec` for `window`, in spec order. Blocks with no
// placement in the active class are emitted hidden with a zero rect.
// Throws NonPositiveRatio / UnclassifiableRatio from the classifier, and
// SpecInvalid when a placement names an undeclared class.
ResolvedLayout resolve(const LayoutSpec& spec, const WindowState& window,
                       Anchor anchor = Anchor::none);

// Canonical document:
//   {"window":{"w","h","r"},"class":...,"blocks":[{"id","rect":[x,y,w,h],
//    "visible","font_px"?,"style"?}]}
// indent < 0 produces a single line.
std::string serialize_layout(const ResolvedLayout& layout, int indent = 2);

}  // namespace regui
