#pragma once

#include "tropres/io.hpp"
#include "tropres/specialized.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropres {

// Bad command name or options; reported as a usage error, not a domain error.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    LinkMethod method = LinkMethod::Slicing;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool special = false;
    bool prune = true;
    bool text = false;
};

// {"method": "slicing"|"projections", "seed": n, "threads": n, "special": b, "prune": b, "text": b}
RunOptions options_from_json(const Json& j);

const std::vector<std::string>& command_names();

// JSON document, or the plain-text tuple format when options.text is set.
Json parse_input(const std::string& input, const RunOptions& options);

// Runs one command on a parsed input document. Throws UsageError or Error.
Json run_command(const std::string& command, const Json& input, const RunOptions& options);

}  // namespace tropres
