#pragma once

// Command-line front end: argument parsing, dispatch and rendering.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpdirac/base_spectrum.hpp"
#include "cpdirac/embedding_spectrum.hpp"
#include "cpdirac/spinc_config.hpp"

namespace cpdirac::cli {

enum class Subcommand { Spectrum, Twisted, Bound, Sharpness, Sweep };
enum class OutputFormat { Table, Csv, Json };

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInvalidConfig = 2, kTheoremViolation = 3 };

struct CliRequest {
    Subcommand subcommand = Subcommand::Sharpness;
    OutputFormat format = OutputFormat::Table;
    bool strict = false;
    bool provenance = false;

    // spectrum
    std::optional<TwistedBundle> bundle;
    // twisted, bound, sharpness
    std::optional<EmbeddingConfig> config;
    // spectrum, twisted
    std::int64_t cutoff = 0;
    // sweep
    IntRange d_range{1, 1};
    IntRange m_range{2, 2};
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown by parse for --help; carries the help text.
class HelpRequested : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name). Throws UsageError for
/// malformed command lines and ConfigError for values that parse but fail
/// validation.
CliRequest parse(const std::vector<std::string>& args);

struct BaseSpectrumResult {
    TwistedBundle bundle;
    Spectrum spectrum;
};

struct TwistedResult {
    EmbeddingConfig config;
    Spectrum spectrum;
};

struct BoundResult {
    EmbeddingConfig config;
    BigNat mu;
    Bound bound;
};

using Json = nlohmann::ordered_json;

Json to_json(const BaseSpectrumResult& result, bool provenance);
Json to_json(const TwistedResult& result, bool provenance);
Json to_json(const BoundResult& result);
Json to_json(const SharpnessReport& report, bool provenance);
Json to_json(const std::vector<SharpnessReport>& reports, bool provenance);

void render(const BaseSpectrumResult& result, OutputFormat format, bool provenance, std::ostream& out);
void render(const TwistedResult& result, OutputFormat format, bool provenance, std::ostream& out);
void render(const BoundResult& result, OutputFormat format, std::ostream& out);
void render(const SharpnessReport& report, OutputFormat format, bool provenance, std::ostream& out);
void render(const std::vector<SharpnessReport>& reports, OutputFormat format, bool provenance,
            std::ostream& out);

/// Runs the engine for a parsed request and writes the rendered result to
/// `out`. Returns an ExitCode.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// parse + run with exit-code mapping; what main() calls.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpdirac::cli
