#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verkit::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default cache directory: $VERKIT_CACHE_DIR, then $XDG_CACHE_HOME/verkit,
/// then $HOME/.cache/verkit. Empty when none is available.
std::string default_cache_dir();

}  // namespace verkit::cli
