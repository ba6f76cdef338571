#pragma once

#include <string>

#include "etri/surface.hpp"

namespace etri {

// "facelist", "json" or "off"; throws UnsupportedFormat otherwise.
// facelist and json are deterministic; OFF coordinates come from a
// barycentric (Tutte) layout and are only meant for viewing.
std::string export_surface(const Surface& s, const std::string& format);

std::string to_json_text(const Surface& s);
std::string to_off(const Surface& s);

}  // namespace etri
