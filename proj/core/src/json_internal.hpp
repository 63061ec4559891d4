#pragma once

// Private to regui_core: keeps nlohmann/json out of the public headers.

#include <json.hpp>

#include "regui/resolver.hpp"

namespace regui::detail {

using Json = nlohmann::ordered_json;

Json layout_to_json(const ResolvedLayout& layout);

// indent < 0 gives a single line.
std::string dump(const Json& document, int indent);

}  // namespace regui::detail
