#pragma once

#include <string>
#include <vector>

namespace vrpmtw {

// Shortest decimal text that reads back to the same double.
std::string format_number(double value);

std::string join(const std::vector<std::string>& parts, const std::string& separator);

}  // namespace vrpmtw
