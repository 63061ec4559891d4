#pragma once

// Normalized and pixel rectangles plus the window state they are resolved
// against. Origin is bottom-left with y growing upward (MATLAB normalized
// units); convert with `y_top = 1 - y - h` at the rendering boundary.

namespace regui {

// Rectangle in window fractions. Bounds (x + w <= 1, y + h <= 1) are checked
// by the validator, not here, so malformed specs can still be loaded.
struct NormRect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  friend bool operator==(const NormRect&, const NormRect&) = default;
};

// Device pixels, real-valued. Rounding belongs to the renderer.
struct PixelRect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

// Window dimensions with the cached aspect ratio width / height.
// Only constructible through make_window(), which rejects degenerate sizes.
class WindowState {
 public:
  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  double aspect_ratio() const noexcept { return aspect_ratio_; }

  friend bool operator==(const WindowState&, const WindowState&) = default;

 private:
  friend WindowState make_window(double width, double height);
  WindowState(double width, double height) noexcept
      : width_(width), height_(height), aspect_ratio_(width / height) {}

  double width_;
  double height_;
  double aspect_ratio_;
};

// Throws DegenerateWindow unless width > 0 and height > 0.
WindowState make_window(double width, double height);

PixelRect scale_to_window(const NormRect& r, const WindowState& window) noexcept;

// Horizontal mirror about the window's vertical center line.
NormRect mirror_x(const NormRect& r) noexcept;

// True iff the open interiors overlap; touching edges or corners do not count.
bool intersects(const NormRect& a, const NormRect& b) noexcept;

}  // namespace regui
