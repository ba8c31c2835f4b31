#pragma once

#include <functional>
#include <string_view>

namespace sqzcav {

using WarningHandler = std::function<void(std::string_view)>;

/// Installs the sink for non-fatal warnings and returns the previous one.
/// The default handler writes to std::clog.
WarningHandler set_warning_handler(WarningHandler handler);

void warn(std::string_view message);

}  // namespace sqzcav
