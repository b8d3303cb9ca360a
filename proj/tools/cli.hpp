#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majcol::cli {

/// Exit codes shared by every command.
enum Exit : int {
    ok = 0,
    failed = 1,        // verification failed or infeasibility certified
    usage = 2,         // bad flags or malformed input files
    unmet = 3,         // no theorem applies / oracle inconclusive
    internal = 4,      // invariant violation
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a over the bytes of a file, as 16 hex digits.
std::string file_digest(const std::string& path);

}  // namespace majcol::cli
