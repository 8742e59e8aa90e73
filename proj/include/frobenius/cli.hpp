#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frobenius/coins.hpp"

namespace frobenius::cli {

enum class OutputMode { text, structured };

struct Command {
    std::string subcommand;
    std::string denoms;
    std::optional<Amount> a;
    std::optional<Amount> h;
    std::optional<Amount> d;
    std::optional<Amount> limit;
    std::optional<Amount> a_hi;
    std::optional<Amount> span;
    std::optional<OutputMode> output;
    bool residue = false;
    std::string family;
    std::optional<Amount> b;
    std::optional<Amount> k;
    std::optional<Amount> big_k;
};

// Exit codes: 0 success, 1 oracle/formula disagreement, 2 usage or precondition error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name). Returns the exit code in
// `exit_code` and no command when parsing stopped (help, bad flags).
std::optional<Command> parse(const std::vector<std::string>& args, std::ostream& out,
                             std::ostream& err, int& exit_code);

int run(const Command& command, std::ostream& out, std::ostream& err);

// parse + run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace frobenius::cli
