// Command-line front end for the claim registry and family sweeps.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topo/verify.hpp"

namespace {

int exit_code(const std::vector<topo::verify::ClaimReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return 1;
    return 0;
}

bool parse_range(const std::string& s, long long& lo, long long& hi) {
    auto pos = s.find("..", s.empty() || s[0] != '-' ? 0 : 1);
    if (pos == std::string::npos) return false;
    try {
        std::size_t used = 0;
        lo = std::stoll(s.substr(0, pos), &used);
        if (used != pos) return false;
        hi = std::stoll(s.substr(pos + 2), &used);
        if (used != s.size() - pos - 2) return false;
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic replay of Seifert fibered surgery constructions"};
    app.require_subcommand(1);

    // verify run --claim <id> [--param k=v]...
    auto* run = app.add_subcommand("run", "Run a single registered claim");
    std::string claim_id;
    std::vector<std::string> raw_params;
    std::string run_format = "json";
    run->add_option("--claim", claim_id, "Claim id (see list-claims)")->required();
    run->add_option("--param", raw_params, "Claim parameter as key=value");
    run->add_option("--format", run_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // verify sweep --family <id> --range <min>..<max> --format json|text
    auto* sweep = app.add_subcommand("sweep", "Replay a twist family over a range of n");
    std::string family_id;
    std::string range = "-100..100";
    std::string sweep_format = "json";
    sweep->add_option("--family", family_id, "Family id")->required();
    sweep->add_option("--range", range, "Range min..max (default -100..100)");
    sweep->add_option("--format", sweep_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* list = app.add_subcommand("list-claims", "List registered claim ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            for (const auto& id : topo::verify::claim_ids()) std::cout << id << "\n";
            return 0;
        }
        if (run->parsed()) {
            std::map<std::string, std::string> params;
            for (const auto& kv : raw_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) {
                    std::cerr << "error: --param expects key=value, got '" << kv << "'\n";
                    return 2;
                }
                params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            auto report = topo::verify::run_claim(claim_id, params);
            std::vector<topo::verify::ClaimReport> reports{report};
            std::cout << (run_format == "json" ? topo::verify::to_json(reports)
                                               : topo::verify::to_text(reports));
            if (run_format == "json") std::cout << "\n";
            return exit_code(reports);
        }
        // sweep
        long long lo = 0, hi = 0;
        if (!parse_range(range, lo, hi)) {
            std::cerr << "error: bad --range '" << range << "', expected min..max\n";
            return 2;
        }
        const auto& fam = topo::verify::family_by_id(family_id);
        auto reports = topo::verify::sweep_family(fam, lo, hi);
        std::cout << (sweep_format == "json" ? topo::verify::to_json(reports)
                                             : topo::verify::to_text(reports));
        if (sweep_format == "json") std::cout << "\n";
        return exit_code(reports);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
