#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phaselock/errors.hpp"

namespace phaselock::output {

enum class Format { csv, json };

/// One table of results plus the metadata block describing its provenance.
struct ColumnarOutput {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    // metadata keys are emitted sorted; "command", "version", "config" and
    // "config_hash" are filled by the CLI driver
    std::map<std::string, std::string> metadata;

    void add_row(std::vector<double> row);
};

/// 12 significant digits, locale-independent.
std::string format_double(double v);

std::string to_csv(const ColumnarOutput& out);
std::string to_json(const ColumnarOutput& out);

/// FNV-1a over the canonical "key=value" listing; stable across runs.
std::uint64_t config_hash(const std::string& command,
                          const std::map<std::string, std::string>& params);

/// Write to path, or stdout when path is empty. Relative paths are resolved
/// against the PHASELOCK_OUTDIR environment variable when it is set.
void write_output(const ColumnarOutput& out, Format format, const std::string& path);

std::string resolve_output_path(const std::string& path);

}  // namespace phaselock::output
