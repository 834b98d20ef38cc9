// cli.hpp -- command-line front end.  Subcommands: baskets, covers, rr,
// blowup, verify, dims.  Exit codes: 0 success / all-pass, 1 verification
// failure, 2 usage or parse error.

#ifndef THREEFOLD_CLI_HPP
#define THREEFOLD_CLI_HPP

#include <iosfwd>
#include <string>

namespace threefold {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Deterministic text renderings; also the golden-file content.
std::string format_baskets_text(long long r_max);
std::string format_covers_text(long long r_max);
std::string format_residues_text(long long param_r);

}  // namespace threefold

#endif
