#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace seclab {

// Labeled numeric curve(s); the unit of CSV output.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // metadata emitted as leading '#' comment lines
    std::string config_digest;
    std::uint64_t root_seed = 0;
    std::string version;

    void add_row(std::vector<double> row); // throws on width mismatch
};

// RFC-4180-style CSV: '#' metadata lines, header row, then data rows with
// numbers printed to 17 significant digits (round-trip exact for doubles).
void emit_csv(const ResultTable& table, const std::string& path);
std::string to_csv(const ResultTable& table);

// Re-parse a CSV produced by emit_csv (metadata lines are skipped).
ResultTable parse_csv(const std::string& text);

} // namespace seclab
