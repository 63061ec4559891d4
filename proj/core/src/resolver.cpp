#include "regui/resolver.hpp"

#include <algorithm>

#include "json_internal.hpp"
#include "regui/error.hpp"

namespace regui {

const ResolvedBlock* ResolvedLayout::find(std::string_view block_id) const noexcept {
  auto it = std::find_if(blocks.begin(), blocks.end(),
                         [&](const ResolvedBlock& b) { return b.block_id == block_id; });
  return it == blocks.end() ? nullptr : &*it;
}

double resolve_font(double norm_font, const PixelRect& block_rect) noexcept {
  return norm_font * block_rect.h;
}

ResolvedLayout resolve(const LayoutSpec& spec, const WindowState& window, Anchor anchor) {
  for (const Block& block : spec.blocks) {
    for (const auto& [class_name, placement] : block.placements) {
      if (spec.find_class(class_name) == nullptr) {
        throw SpecInvalid("block '" + block.id + "' has a placement for undeclared class '" +
                          class_name + "'");
      }
    }
  }

  ResolvedLayout layout{window, classify(window.aspect_ratio(), spec.classes), {}};
  layout.blocks.reserve(spec.blocks.size());
  for (const Block& block : spec.blocks) {
    ResolvedBlock out;
    out.block_id = block.id;
    out.class_name = layout.active_class.name;
    if (const Placement* placement = block.placement_for(layout.active_class.name)) {
      const bool mirrored =
          anchor != Anchor::none && placement->mirror_on_anchor == anchor;
      out.rect = scale_to_window(mirrored ? mirror_x(placement->rect) : placement->rect, window);
      out.visible = placement->visible;
      if (placement->font) out.font_px = resolve_font(*placement->font, out.rect);
      out.style = placement->style;
    }
    layout.blocks.push_back(std::move(out));
  }
  return layout;
}

namespace detail {

Json layout_to_json(const ResolvedLayout& layout) {
  Json j;
  j["window"] = Json{{"w", layout.window.width()},
                     {"h", layout.window.height()},
                     {"r", layout.window.aspect_ratio()}};
  j["class"] = layout.active_class.name;
  Json blocks = Json::array();
  for (const ResolvedBlock& block : layout.blocks) {
    Json b;
    b["id"] = block.block_id;
    b["rect"] = Json::array({block.rect.x, block.rect.y, block.rect.w, block.rect.h});
    b["visible"] = block.visible;
    if (block.font_px) b["font_px"] = *block.font_px;
    if (!block.style.empty()) {
      Json style = Json::object();
      for (const auto& [key, value] : block.style) style[key] = value;
      b["style"] = std::move(style);
    }
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace detail

std::string serialize_layout(const ResolvedLayout& layout, int indent) {
  return detail::dump(detail::layout_to_json(layout), indent);
}

}  // namespace regui
