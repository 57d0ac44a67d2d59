#pragma once

#include "webcalc/stranding.hpp"
#include "webcalc/tensor.hpp"
#include "webcalc/web.hpp"

#include <json.hpp>

#include <string>

namespace webcalc {

using Json = nlohmann::json;

// Parse errors are std::invalid_argument with the offending field path.
WebGraph web_from_json(const Json& j);
Json web_to_json(const WebGraph& g);

Stranding stranding_from_json(const WebGraph& g, const Json& j);
Json stranding_to_json(const WebGraph& g, const Stranding& s);

Json vector_to_json(const WebVector& v);
WebVector vector_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace webcalc
