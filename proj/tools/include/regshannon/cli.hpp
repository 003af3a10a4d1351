#pragma once

#include <iosfwd>

namespace regshannon {

// Exit codes: 0 success, 1 bound or identity failure under --strict,
// 2 usage error (synopsis goes to err).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regshannon
