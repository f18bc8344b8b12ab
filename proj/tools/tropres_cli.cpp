#include "tropres.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tropical resultants, specialized resultants and Newton polytope reconstruction"};
    std::string command, input_path, output_path, method = "slicing";
    unsigned threads = 1;
    std::uint64_t seed = 1;
    bool pretty = false, special = false, no_prune = false, text = false;

    std::string names;
    for (int i = 0; i < tr_command_count(); ++i) names += std::string(i ? ", " : "") + tr_command_name(i);
    app.add_option("command", command, "One of: " + names)->required();
    app.add_option("--input", input_path, "Input file (default: stdin)");
    app.add_option("-o,--output", output_path, "Output file (default: stdout)");
    app.add_flag("--pretty", pretty, "Indent the JSON output");
    app.add_flag("--special", special, "fan: traverse the specialized resultant");
    app.add_option("--method", method, "Stable link method")->check(CLI::IsMember({"slicing", "projections"}));
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for random starting points");
    app.add_flag("--no-prune", no_prune, "implicitize: keep redundant specialized points");
    app.add_flag("--text", text, "Input is a plain-text tuple: one point per row, blank lines between configurations");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::string input;
    if (input_path.empty()) {
        input = read_all(std::cin);
    } else {
        std::ifstream f(input_path);
        if (!f) {
            std::cerr << "cannot open " << input_path << "\n";
            return 2;
        }
        input = read_all(f);
    }

    nlohmann::json opts{{"method", method}, {"threads", threads}, {"seed", seed},
                        {"special", special}, {"prune", !no_prune}, {"text", text}};
    tr_context* ctx = tr_context_new();
    char* out = nullptr;
    tr_status st = tr_run(ctx, command.c_str(), input.c_str(), opts.dump().c_str(), &out);
    std::string doc = out ? out : "";
    tr_string_free(out);
    if (st != TR_OK) std::cerr << tr_status_name(st) << ": " << tr_last_error_message(ctx) << "\n";
    tr_context_free(ctx);
    if (pretty && !doc.empty()) doc = nlohmann::json::parse(doc).dump(2);

    if (output_path.empty() || st != TR_OK) {
        std::cout << doc << "\n";
    } else {
        std::ofstream f(output_path);
        if (!f) {
            std::cerr << "cannot write " << output_path << "\n";
            return 2;
        }
        f << doc << "\n";
    }
    if (st == TR_OK) return 0;
    return st == TR_ERR_USAGE ? 2 : 1;
}
