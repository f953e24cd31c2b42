#pragma once

#include <string>
#include <string_view>

#include "subshift/words.hpp"

namespace subshift {

struct InputSpec {
  std::string source;
  Substitution substitution;
};

/// One rule per line, `X -> IMAGE`; `#` starts a comment and blank lines are
/// skipped. The alphabet is ordered by declaration. Throws ParseError.
InputSpec parse_input(std::string_view text);

/// The normalized text of a substitution, one rule per line.
std::string emit(const Substitution& sigma);

}  // namespace subshift
