#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace duadic::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (args excludes the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0,2,3,4" -> {0, 2, 3, 4}, sorted. Throws std::invalid_argument on
// duplicates or malformed input.
std::vector<unsigned> parse_residues(const std::string& text);

// "3,5,9" or "3..17" (odd values in the range) or a mix; empty text gives an
// empty list.
std::vector<unsigned> parse_m_list(const std::string& text);

}  // namespace duadic::cli
