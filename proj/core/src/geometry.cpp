#include "regui/geometry.hpp"

#include <charconv>
#include <string>

#include "regui/error.hpp"

namespace regui {
namespace {

std::string format(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

}  // namespace

WindowState make_window(double width, double height) {
  // Negated comparisons so NaN is rejected too.
  if (!(width > 0.0) || !(height > 0.0)) {
    throw DegenerateWindow("window must have positive width and height, got " +
                           format(width) + "x" + format(height));
  }
  return WindowState(width, height);
}

PixelRect scale_to_window(const NormRect& r, const WindowState& window) noexcept {
  return {r.x * window.width(), r.y * window.height(), r.w * window.width(),
          r.h * window.height()};
}

// Reflects about (1 - w) / 2, which keeps centered rects exactly fixed.
NormRect mirror_x(const NormRect& r) noexcept { return {(1.0 - r.w) - r.x, r.y, r.w, r.h}; }

bool intersects(const NormRect& a, const NormRect& b) noexcept {
  if (!(a.w > 0.0 && a.h > 0.0 && b.w > 0.0 && b.h > 0.0)) return false;
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

}  // namespace regui
