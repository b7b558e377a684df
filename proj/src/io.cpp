#include "tktile/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tktile {

namespace {
    auto fail(std::size_t line, const std::string & what) -> Error
    {
        return Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + what);
    }

    auto split(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

    auto to_int(std::string_view token, std::size_t line) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
            throw fail(line, "expected a nonnegative integer, got \"" + std::string(token) + "\"");
        return value;
    }
}

auto parse_kgraph(std::string_view text) -> KGraph
{
    if (text.empty() || text.back() != '\n')
        throw Error(ErrorKind::parse_error, "missing trailing newline");
    int n = -1, k = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0, start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        auto tokens = split(line);
        if (line_no == 1) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "kgraph")
                throw fail(line_no, "expected header \"p kgraph <n> <k>\"");
            n = to_int(tokens[2], line_no);
            k = to_int(tokens[3], line_no);
            if (k < 2)
                throw fail(line_no, "uniformity must be at least 2");
            continue;
        }
        if (tokens.empty())
            throw fail(line_no, "empty line");
        if (tokens[0] == "c")
            continue;
        if (tokens[0] != "e")
            throw fail(line_no, "unknown line type \"" + std::string(tokens[0]) + "\"");
        if (static_cast<int>(tokens.size()) != k + 1)
            throw fail(line_no, "edge must list exactly " + std::to_string(k) + " vertices");
        Edge e;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            int v = to_int(tokens[i], line_no);
            if (v >= n)
                throw fail(line_no, "vertex " + std::to_string(v) + " out of range");
            if (! e.empty() && v <= e.back())
                throw fail(line_no, "edge vertices must be strictly ascending");
            e.push_back(v);
        }
        edges.push_back(std::move(e));
    }
    try {
        return KGraph(n, k, std::move(edges), Duplicates::reject);
    }
    catch (const Error & e) {
        throw Error(ErrorKind::parse_error, e.what());
    }
}

auto format_kgraph(const KGraph & h) -> std::string
{
    std::string out = "p kgraph " + std::to_string(h.n()) + " " + std::to_string(h.k()) + "\n";
    for (auto & e : h.edges()) {
        out += "e";
        for (auto v : e) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

auto read_text_file(const std::filesystem::path & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::parse_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path & path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
    out << content;
}

auto read_kgraph(const std::filesystem::path & path) -> KGraph
{
    auto text = read_text_file(path);
    try {
        return parse_kgraph(text);
    }
    catch (const Error & e) {
        throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
    }
}

void write_kgraph(const std::filesystem::path & path, const KGraph & h)
{
    write_text_file(path, format_kgraph(h));
}

}
