#pragma once

#include <string>

#include "cantorlab/measure.hpp"

namespace cantorlab {

// Text format for measure specs (grammar in docs/measure-format.md).
// print/parse round-trip losslessly: parse_measure(print_measure(m)) == m.
std::string print_measure(const MeasureSpec& spec);
MeasureSpec parse_measure(const std::string& text);

}  // namespace cantorlab
