#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reeder {

// Full command-line driver, factored out of main() so tests can call it with
// captured streams.  args excludes the program name.  Returns the process
// exit code: 0 success, 1 failed check (table/validate mismatch), 2 usage
// error, 3 unsupported computation, 4 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace reeder
