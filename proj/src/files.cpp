#include "spc/files.hpp"

#include <fstream>
#include <sstream>

#include "spc/errors.hpp"

namespace spc {

namespace {

std::string strip_comment(const std::string& line)
{
    auto pos = line.find('#');
    auto body = pos == std::string::npos ? line : line.substr(0, pos);
    auto first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return {};
    auto last = body.find_last_not_of(" \t\r\n");
    return body.substr(first, last - first + 1);
}

std::vector<std::string> content_lines(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto body = strip_comment(line);
        if (!body.empty())
            lines.push_back(body);
    }
    return lines;
}

} // namespace

Graph read_graph(std::istream& in)
{
    auto lines = content_lines(in);
    if (lines.empty())
        fail(ErrorKind::parse, "empty graph file");
    std::istringstream head(lines[0]);
    long long n = -1, m = -1;
    std::string junk;
    if (!(head >> n >> m) || n < 0 || m < 0 || (head >> junk))
        fail(ErrorKind::parse, "bad header line '" + lines[0] + "'");
    if (static_cast<long long>(lines.size()) != m + 1)
        fail(ErrorKind::parse, "expected " + std::to_string(m) + " edge lines, got " +
                                   std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    for (long long i = 1; i <= m; ++i) {
        std::istringstream row(lines[static_cast<size_t>(i)]);
        int u, v;
        if (!(row >> u >> v))
            fail(ErrorKind::parse, "bad edge line '" + lines[static_cast<size_t>(i)] + "'");
        std::string rest;
        if (row >> rest)
            fail(ErrorKind::parse, "trailing data on edge line '" +
                                       lines[static_cast<size_t>(i)] + "'");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const Error& e) {
        fail(ErrorKind::parse, std::string("invalid graph: ") + e.what());
    }
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::parse, "cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        fail(ErrorKind::parse, "cannot write '" + path + "'");
    write_graph(out, g);
}

ColoringFile read_coloring(std::istream& in)
{
    auto lines = content_lines(in);
    if (lines.size() < 2)
        fail(ErrorKind::parse, "coloring file needs a sequence line and a class line");
    ColoringFile cf;
    cf.s = parse_sequence(lines[0]);
    std::istringstream row(lines[1]);
    int c;
    while (row >> c)
        cf.coloring.cls.push_back(c);
    if (cf.coloring.cls.empty())
        fail(ErrorKind::parse, "no class indices in coloring file");
    return cf;
}

ColoringFile read_coloring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::parse, "cannot open '" + path + "'");
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const ColoringFile& cf)
{
    out << to_string(cf.s) << '\n';
    for (int i = 0; i < cf.coloring.n(); ++i)
        out << (i ? " " : "") << cf.coloring.cls[i];
    out << '\n';
}

void write_coloring_file(const std::string& path, const ColoringFile& cf)
{
    std::ofstream out(path);
    if (!out)
        fail(ErrorKind::parse, "cannot write '" + path + "'");
    write_coloring(out, cf);
}

} // namespace spc
