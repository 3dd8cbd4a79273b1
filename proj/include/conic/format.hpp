#pragma once

#include <string>
#include <vector>

namespace conic {

enum class OutputFormat { tsv, json };

OutputFormat parse_format(const std::string& text);

/// A rendered table: homogeneous rows under a fixed header. Cells are
/// already-formatted strings; columns flagged integral are emitted as JSON
/// numbers, everything else as JSON strings (exact values do not fit in
/// doubles).
struct Table {
    std::vector<std::string> header;
    std::vector<bool> integral;  // per column; empty means "all strings"
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

std::string render_tsv(const Table& t);
std::string render_json(const Table& t);
std::string render(const Table& t, OutputFormat f);

}  // namespace conic
