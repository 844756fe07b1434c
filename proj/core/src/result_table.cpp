#include "seclab/result_table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace seclab {

void ResultTable::add_row(std::vector<double> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("ResultTable: row width mismatch");
    rows.push_back(std::move(row));
}

std::string to_csv(const ResultTable& table) {
    std::ostringstream out;
    out << "# config_digest=" << table.config_digest << "\n";
    out << "# root_seed=" << table.root_seed << "\n";
    out << "# version=" << table.version << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out << ',';
        out << table.columns[i];
    }
    out << '\n';
    char buf[64];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ',';
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

void emit_csv(const ResultTable& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("emit_csv: cannot open " + path);
    f << to_csv(table);
    if (!f)
        throw std::runtime_error("emit_csv: write failed for " + path);
}

ResultTable parse_csv(const std::string& text) {
    ResultTable table;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string field;
        if (!have_header) {
            while (std::getline(ls, field, ','))
                table.columns.push_back(field);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ls, field, ','))
            row.push_back(std::stod(field));
        table.add_row(std::move(row));
    }
    return table;
}

} // namespace seclab
