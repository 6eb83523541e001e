#ifndef REISWICH_TESTS_CLI_RUNNER_HPP
#define REISWICH_TESTS_CLI_RUNNER_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only; stderr is discarded
};

/// Runs the installed CLI binary with the given argument string in a shell,
/// capturing stdout. `env_prefix` may hold VAR=value assignments.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += "\"" REISWICH_CLI_BIN "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testutil

#endif
