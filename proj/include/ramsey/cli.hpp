#pragma once

#include <iosfwd>

namespace ramsey {

// Exit codes: 0 query answered, 1 violation found / search not found,
// 2 usage or parse error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsey
