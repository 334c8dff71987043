#pragma once

#include <string>

namespace bicomb {

/// Shortest decimal string that parses back to the same double.
/// Locale-independent.
std::string format_double(double value);

}  // namespace bicomb
