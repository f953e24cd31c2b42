#pragma once

#include <string_view>

#include "report.hpp"

namespace subshift::cli {

/// Runs the invariant suite on one input. The result has a `checks` array of
/// {name, passed, detail} and an overall `passed` flag.
Json run_checks(std::string_view source);

}  // namespace subshift::cli
