#pragma once

#include <string>

namespace quadlip::io {

/// Locale-independent decimal formatting. 17 significant digits: parsing the
/// output reproduces the exact double.
std::string format_double(double v);

/// Locale-independent decimal formatting with a chosen significant-digit
/// count (used for plot coordinates).
std::string format_double(double v, int precision);

/// Writes `content` to `path`, throwing std::runtime_error with path context
/// on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace quadlip::io
