#pragma once

#include <string>

namespace gcrit {

/// printf %.Ng formatting: locale independent, '.' decimal separator.
std::string format_number(double x, int significant_digits = 6);

}  // namespace gcrit
