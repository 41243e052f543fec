#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gores {

// Full command-line surface:
//   gores <ingest|rate|compare|table1|trend|plan> [flags]
// Reports go to `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 1 domain/validation failure, 2 I/O or parse failure.
//
// `args` excludes the program name. The catalog comes from --catalog, the
// GORES_CATALOG environment variable (flag wins), or the bundled fixtures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gores
