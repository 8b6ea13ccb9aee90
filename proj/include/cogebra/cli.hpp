#pragma once

// Batch driver behind the `cogebra` executable. Every report embeds the
// normalized configuration that produced it, so `cogebra replay FILE`
// regenerates the same bytes.
//
// Exit codes: 0 success, 1 the checked property fails, 2 bad input, 3 budget
// exceeded (or a check that could not be decided).

#include <iosfwd>
#include <string>
#include <vector>

namespace cogebra {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cogebra
