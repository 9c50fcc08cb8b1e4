#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "riordan/errors.hpp"
#include "riordan/power_series.hpp"

namespace riordan {

/**
 * Reads an OEIS b-file: lines "index value", blank lines and '#' comments
 * ignored. The sequence offset is the first index; later indices must follow
 * on consecutively.
 */
inline Sequence parse_bfile(std::istream& in) {
    Sequence out;
    std::string line;
    long line_no = 0;
    long expected = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        fields >> index_text >> value_text;
        if (value_text.empty() || (fields >> extra))
            throw MalformedLine("line " + std::to_string(line_no) + ": expected \"index value\"");
        long index = 0;
        Integer value;
        try {
            std::size_t used = 0;
            index = std::stol(index_text, &used);
            if (used != index_text.size()) throw std::invalid_argument(index_text);
            if (value.set_str(value_text, 10) != 0) throw std::invalid_argument(value_text);
        } catch (const std::exception&) {
            throw MalformedLine("line " + std::to_string(line_no) + ": not an integer pair: " + line);
        }
        if (first) {
            out.offset = index;
            expected = index;
            first = false;
        }
        if (index != expected)
            throw NonConsecutiveIndices("line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                        " follows " + std::to_string(expected - 1));
        out.terms.emplace_back(value);
        ++expected;
    }
    return out;
}

inline Sequence load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_bfile(in);
}

/// "b104545.txt" -> "A104545"; empty when the name does not look like a b-file.
inline std::string oeis_id_from_bfile_name(const std::string& path) {
    const auto slash = path.find_last_of("/\\");
    const std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    if (name.size() < 8 || (name[0] != 'b' && name[0] != 'B')) return {};
    std::string digits;
    for (std::size_t i = 1; i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])); ++i)
        digits += name[i];
    if (digits.size() != 6) return {};
    return "A" + digits;
}

}  // namespace riordan
