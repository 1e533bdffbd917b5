#pragma once

// Line-oriented helpers shared by the graph and complex readers.

#include <ivc/error.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ivc::text {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

/// Tokenised non-blank, non-comment lines.
inline auto content_lines(std::string_view text) -> std::vector<Line>
{
    std::vector<Line> out;
    int number = 0;
    while (! text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        Line l{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t\r", pos);
            if (pos == std::string_view::npos)
                break;
            auto end = line.find_first_of(" \t\r", pos);
            l.tokens.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        out.push_back(std::move(l));
    }
    return out;
}

inline auto line_error(int number, const std::string & what) -> InputError
{
    return InputError("line " + std::to_string(number) + ": " + what);
}

inline auto to_int(std::string_view token, int line) -> int
{
    int value = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || p != token.data() + token.size())
        throw line_error(line, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

inline auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace ivc::text
