#include "conic/format.hpp"

#include <json.hpp>

#include "conic/errors.hpp"

namespace conic {

OutputFormat parse_format(const std::string& text) {
    if (text == "tsv") return OutputFormat::tsv;
    if (text == "json") return OutputFormat::json;
    raise(errc::invalid_argument, "bad format '" + text + "' (tsv | json)");
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header.size())
        raise(errc::invalid_argument, "row width does not match header");
    rows.push_back(std::move(row));
}

std::string render_tsv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += '\t';
        out += t.header[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            bool integral = i < t.integral.size() && t.integral[i];
            if (integral)
                obj[t.header[i]] = std::stoll(row[i]);
            else
                obj[t.header[i]] = row[i];
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string render(const Table& t, OutputFormat f) {
    return f == OutputFormat::tsv ? render_tsv(t) : render_json(t);
}

}  // namespace conic
