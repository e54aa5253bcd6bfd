#include "phaselock/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace phaselock::output {

void ColumnarOutput::add_row(std::vector<double> row) {
    if (row.size() != header.size())
        throw parameter_error("output: row width does not match header");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string to_csv(const ColumnarOutput& out) {
    std::ostringstream os;
    for (const auto& [k, v] : out.metadata) os << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < out.header.size(); ++i) {
        if (i) os << ",";
        os << out.header[i];
    }
    os << "\n";
    for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << format_double(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

std::string to_json(const ColumnarOutput& out) {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : out.metadata) j["metadata"][k] = v;
    j["header"] = out.header;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : out.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row) r.push_back(v);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::uint64_t config_hash(const std::string& command,
                          const std::map<std::string, std::string>& params) {
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(command);
    for (const auto& [k, v] : params) {
        mix(k);
        mix(v);
    }
    return h;
}

std::string resolve_output_path(const std::string& path) {
    if (path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    if (const char* dir = std::getenv("PHASELOCK_OUTDIR"); dir != nullptr && *dir != '\0')
        return (std::filesystem::path(dir) / p).string();
    return path;
}

void write_output(const ColumnarOutput& out, Format format, const std::string& path) {
    const std::string text = format == Format::csv ? to_csv(out) : to_json(out);
    if (path.empty()) {
        std::cout << text;
        return;
    }
    const std::string resolved = resolve_output_path(path);
    std::ofstream f(resolved, std::ios::binary);
    if (!f) throw parameter_error("output: cannot open " + resolved);
    f << text;
}

}  // namespace phaselock::output
