#pragma once

#include <string>

namespace automorph {

// Shortest decimal string that parses back to the same binary64 value.
std::string format_double(double value);

}  // namespace automorph
