#pragma once

#include <iosfwd>

namespace kv {

/// Entry point of kv-calc. Exit codes: 0 success, 1 usage or input error,
/// 2 invariant failure or failed verification.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kv
