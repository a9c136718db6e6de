#ifndef STARLIKE_TESTS_RUN_CLI_HPP
#define STARLIKE_TESTS_RUN_CLI_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli
{

struct result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string demo(const std::string &name)
{
    return std::string(STARLIKE_DEMO_DIR) + "/" + name;
}

inline std::filesystem::path scratch(const std::string &name)
{
    return std::filesystem::temp_directory_path() / ("starlike_" + std::to_string(::getpid()) + "_" + name);
}

// Runs the CLI with the given arguments, capturing both streams.
inline result run(const std::string &args)
{
    const auto out = scratch("stdout");
    const auto err = scratch("stderr");
    const std::string cmd = std::string("'") + STARLIKE_CLI + "' " + args + " >'" + out.string() + "' 2>'"
                            + err.string() + "'";
    const int status = std::system(cmd.c_str());
    result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

// Value of a "key: value" line in flattened output, or empty.
inline std::string field(const std::string &text, const std::string &key)
{
    std::istringstream in(text);
    std::string line;
    const auto prefix = key + ": ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) {
            return line.substr(prefix.size());
        }
    }
    return {};
}

} // namespace cli

#endif
