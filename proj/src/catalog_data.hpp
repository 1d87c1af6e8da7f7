#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eulersums/catalog.hpp"

namespace eulersums::detail {

// Transcribed records, one per line; '#' lines are comments.
std::string_view catalog_records();
// Parameterized help functions instantiated at small parameter values.
std::vector<std::string> help_function_records();
const std::vector<CoverageEntry>& coverage();

}  // namespace eulersums::detail
