#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "json_internal.hpp"
#include "regui/error.hpp"
#include "regui/layout_spec.hpp"

namespace regui {
namespace {

using detail::Json;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join_path(const std::string& parent, std::string_view key) {
  return parent.empty() ? std::string(key) : parent + "." + std::string(key);
}

std::string index_path(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

std::string_view type_name(const Json& value) {
  switch (value.type()) {
    case Json::value_t::null:
      return "null";
    case Json::value_t::object:
      return "object";
    case Json::value_t::array:
      return "array";
    case Json::value_t::string:
      return "string";
    case Json::value_t::boolean:
      return "boolean";
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::number_float:
      return "number";
    default:
      return "value";
  }
}

[[noreturn]] void type_mismatch(const std::string& path, std::string_view expected,
                                const Json& got) {
  throw SchemaError(path, "expected " + std::string(expected) + ", got " +
                              std::string(type_name(got)));
}

// Object reader that enforces required keys and rejects unknown ones.
class ObjectReader {
 public:
  ObjectReader(const Json& value, std::string path, std::initializer_list<std::string_view> allowed,
               std::initializer_list<std::string_view> required)
      : value_(value), path_(std::move(path)) {
    if (!value.is_object()) type_mismatch(path_, "object", value);
    std::string missing;
    for (std::string_view key : required) {
      if (!value.contains(key)) {
        if (!missing.empty()) missing += ", ";
        missing += key;
      }
    }
    if (!missing.empty()) throw SchemaError(path_, "missing required field(s): " + missing);
    for (const auto& item : value.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        throw SchemaError(join_path(path_, item.key()), "unknown field");
      }
    }
  }

  bool has(std::string_view key) const { return value_.contains(key); }
  const Json& at(std::string_view key) const { return value_.at(std::string(key)); }
  std::string path(std::string_view key) const { return join_path(path_, key); }

  std::string string(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_string()) type_mismatch(path(key), "string", v);
    return v.get<std::string>();
  }

  bool boolean(std::string_view key) const {
    const Json& v = at(key);
    if (!v.is_boolean()) type_mismatch(path(key), "boolean", v);
    return v.get<bool>();
  }

  double number(std::string_view key) const { return read_number(at(key), path(key)); }

  static double read_number(const Json& v, const std::string& path) {
    if (!v.is_number()) type_mismatch(path, "number", v);
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(path, "number out of range");
    return d;
  }

 private:
  const Json& value_;
  std::string path_;
};

ClassRule read_class(const Json& value, const std::string& path) {
  ObjectReader obj(value, path, {"name", "lo", "lo_inclusive", "hi", "hi_inclusive"},
                   {"name", "lo", "lo_inclusive", "hi", "hi_inclusive"});
  ClassRule rule;
  rule.name = obj.string("name");
  rule.lo = obj.number("lo");
  rule.lo_inclusive = obj.boolean("lo_inclusive");
  const Json& hi = obj.at("hi");
  if (hi.is_string()) {
    if (hi.get<std::string>() != "inf") {
      throw SchemaError(obj.path("hi"), "expected number or \"inf\"");
    }
    rule.hi = kInf;
  } else {
    rule.hi = obj.number("hi");
  }
  rule.hi_inclusive = obj.boolean("hi_inclusive");
  return rule;
}

NormRect read_rect(const Json& value, const std::string& path) {
  if (!value.is_array()) type_mismatch(path, "array [x, y, w, h]", value);
  if (value.size() != 4) {
    throw SchemaError(path, "expected 4 elements [x, y, w, h], got " +
                                std::to_string(value.size()));
  }
  static constexpr std::string_view kNames[] = {"x", "y", "w", "h"};
  double fields[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string element_path = index_path(path, i);
    if (!value[i].is_number()) {
      throw SchemaError(element_path, "expected number for rect " + std::string(kNames[i]) +
                                          ", got " + std::string(type_name(value[i])));
    }
    fields[i] = ObjectReader::read_number(value[i], element_path);
  }
  return {fields[0], fields[1], fields[2], fields[3]};
}

StyleMap read_style(const Json& value, const std::string& path) {
  if (!value.is_object()) type_mismatch(path, "object", value);
  StyleMap style;
  for (const auto& item : value.items()) {
    if (!item.value().is_string()) type_mismatch(join_path(path, item.key()), "string", item.value());
    style.emplace_back(item.key(), item.value().get<std::string>());
  }
  return style;
}

Placement read_placement(const Json& value, const std::string& path) {
  ObjectReader obj(value, path, {"rect", "visible", "font", "style", "mirror_on_anchor"}, {"rect"});
  Placement placement;
  placement.rect = read_rect(obj.at("rect"), obj.path("rect"));
  if (obj.has("visible")) placement.visible = obj.boolean("visible");
  if (obj.has("font")) placement.font = obj.number("font");
  if (obj.has("style")) placement.style = read_style(obj.at("style"), obj.path("style"));
  if (obj.has("mirror_on_anchor")) {
    const std::string text = obj.string("mirror_on_anchor");
    auto anchor = parse_anchor(text);
    if (!anchor) {
      throw SchemaError(obj.path("mirror_on_anchor"),
                        "expected \"none\", \"left\" or \"right\", got \"" + text + "\"");
    }
    placement.mirror_on_anchor = *anchor;
  }
  return placement;
}

Block read_block(const Json& value, const std::string& path) {
  ObjectReader obj(value, path, {"id", "label", "placements"}, {"id", "placements"});
  Block block;
  block.id = obj.string("id");
  if (obj.has("label")) block.label = obj.string("label");
  const Json& placements = obj.at("placements");
  const std::string placements_path = obj.path("placements");
  if (!placements.is_object()) type_mismatch(placements_path, "object", placements);
  for (const auto& item : placements.items()) {
    block.placements.emplace_back(
        item.key(), read_placement(item.value(), join_path(placements_path, item.key())));
  }
  return block;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  // nlohmann reports a 1-based byte count just past the offending character.
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  });
}

Json to_json(const ClassRule& rule) {
  Json j;
  j["name"] = rule.name;
  j["lo"] = rule.lo;
  j["lo_inclusive"] = rule.lo_inclusive;
  if (rule.hi == kInf) {
    j["hi"] = "inf";
  } else {
    j["hi"] = rule.hi;
  }
  j["hi_inclusive"] = rule.hi_inclusive;
  return j;
}

Json to_json(const Placement& placement) {
  Json j;
  const NormRect& r = placement.rect;
  j["rect"] = Json::array({r.x, r.y, r.w, r.h});
  if (!placement.visible) j["visible"] = false;
  if (placement.font) j["font"] = *placement.font;
  if (!placement.style.empty()) {
    Json style = Json::object();
    for (const auto& [key, value] : placement.style) style[key] = value;
    j["style"] = std::move(style);
  }
  if (placement.mirror_on_anchor != Anchor::none) {
    j["mirror_on_anchor"] = std::string(to_string(placement.mirror_on_anchor));
  }
  return j;
}

Json to_json(const Block& block) {
  Json j;
  j["id"] = block.id;
  if (block.label) j["label"] = *block.label;
  Json placements = Json::object();
  for (const auto& [class_name, placement] : block.placements) {
    placements[class_name] = to_json(placement);
  }
  j["placements"] = std::move(placements);
  return j;
}

}  // namespace

LayoutSpec parse_spec(std::string_view text) {
  Json document;
  if (is_blank(text)) {
    document = Json::object();
  } else {
    try {
      document = Json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/true,
                             /*ignore_comments=*/true);
    } catch (const Json::parse_error& e) {
      auto [line, column] = line_and_column(text, e.byte);
      std::string message = e.what();
      // Drop nlohmann's "[json.exception.parse_error.NNN] parse error at ...: " prefix.
      if (auto pos = message.find(": "); pos != std::string::npos) message = message.substr(pos + 2);
      throw SyntaxError("malformed spec document (" + message + ")", line, column);
    }
  }

  ObjectReader root(document, "", {"name", "classes", "blocks"}, {"name", "classes", "blocks"});
  LayoutSpec spec;
  spec.name = root.string("name");

  const Json& classes = root.at("classes");
  if (!classes.is_array()) type_mismatch("classes", "array", classes);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    spec.classes.push_back(read_class(classes[i], index_path("classes", i)));
  }

  const Json& blocks = root.at("blocks");
  if (!blocks.is_array()) type_mismatch("blocks", "array", blocks);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    spec.blocks.push_back(read_block(blocks[i], index_path("blocks", i)));
  }
  return spec;
}

std::string serialize_spec(const LayoutSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["classes"] = Json::array();
  for (const ClassRule& rule : spec.classes) j["classes"].push_back(to_json(rule));
  j["blocks"] = Json::array();
  for (const Block& block : spec.blocks) j["blocks"].push_back(to_json(block));
  return detail::dump(j, 2);
}

namespace detail {

std::string dump(const Json& document, int indent) {
  return document.dump(indent < 0 ? -1 : indent, ' ', false, Json::error_handler_t::replace) +
         (indent < 0 ? "" : "\n");
}

}  // namespace detail
}  // namespace regui
