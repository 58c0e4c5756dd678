#pragma once

#include <string>
#include <vector>

namespace auglink::cli {

// Exit codes: 0 success, 1 analysis failure (--require-hypotheses unmet),
// 2 input or parse error, 3 internal error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace auglink::cli
