#include "regui/svg.hpp"

#include <charconv>
#include <sstream>

namespace regui {
namespace {

std::string number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, end) : "0";
}

std::string escape_attribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string export_svg(const ResolvedLayout& layout) {
  const std::string width = number(layout.window.width());
  const std::string height = number(layout.window.height());
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\" data-class=\""
      << escape_attribute(layout.active_class.name) << "\">\n";
  for (const ResolvedBlock& block : layout.blocks) {
    if (!block.visible) continue;
    const double top = layout.window.height() - block.rect.y - block.rect.h;
    svg << "  <rect id=\"" << escape_attribute(block.block_id) << "\" x=\"" << number(block.rect.x)
        << "\" y=\"" << number(top) << "\" width=\"" << number(block.rect.w) << "\" height=\""
        << number(block.rect.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace regui
