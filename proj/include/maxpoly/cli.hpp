#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "maxpoly/pentagon.hpp"

namespace maxpoly::cli {

enum class Subcommand { volume, pentagon, cases, construct, search, counts, limits, verify };
enum class OutputFormat { json, csv, text };

// A validated invocation: one subcommand plus its typed flags.
struct CommandRequest {
    Subcommand subcommand = Subcommand::volume;
    OutputFormat outputFormat = OutputFormat::text;
    std::optional<std::uint64_t> seed;

    std::optional<int> n;
    std::optional<int> k;
    std::optional<long> m;
    std::optional<int> points;
    std::optional<int> starts;
    std::optional<long> trials;
    std::optional<double> r;
    std::optional<double> x;
    std::optional<double> h;
    std::optional<std::string> caseTag;
    std::optional<std::string> mode;      // polygon | polytope3d
    std::optional<std::string> capsFile;
    bool trackleations = false;
    bool benderWormald = false;
    bool projection = false;
};

// Structured result of a successful run; serializes losslessly to JSON.
// Layout: { schemaVersion, subcommand, inputs, results, diagnostics } where
// results.records is a flat array of uniform objects (the CSV rows).
struct ReportDocument {
    nlohmann::ordered_json doc;
};

struct RunOutcome {
    int status = 0;  // 0 success, 2 validation error, 1 internal error
    ReportDocument report;
    std::string error;  // for the diagnostics stream when status != 0
};

// Dispatch a validated request to the owning module.
RunOutcome run(const CommandRequest& request);

// Serialize: json = stable-key-order UTF-8 object; csv = header plus one row
// per result record; text = aligned human-readable listing. Numeric fields in
// csv/text carry 12 significant digits.
std::string emit(const ReportDocument& report, OutputFormat format);

// Parse the cap-matrix file format: first line k, then k lines of k
// space-separated decimals, symmetric within 1e-12.
pentagon::CapMatrix parse_cap_matrix(std::istream& in);

// Full command-line entry point (argv without the program name is also
// accepted); prints to the given streams and returns the exit status.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxpoly::cli
