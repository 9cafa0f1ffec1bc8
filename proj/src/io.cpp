#include "drd/io.hpp"

#include <fstream>
#include <sstream>

#include "drd/labeling.hpp"

namespace drd {

namespace {

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

// Reads the next non-comment, non-blank line; returns false on EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno))
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header line \"n m\"");
    long long n, m;
    {
        std::istringstream ss(line);
        if (!(ss >> n >> m) || n < 0 || m < 0)
            throw ParseError(lineno, "expected header \"n m\"");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                             " edges, got " + std::to_string(i));
        std::istringstream ss(line);
        long long u, v;
        if (!(ss >> u >> v))
            throw ParseError(lineno, "expected edge line \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "edge endpoint out of range");
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path)
{
    auto in = open_input(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : edge_list(g))
        out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g)
{
    auto out = open_output(path);
    write_edge_list(out, g);
}

Labeling read_labeling(std::istream& in)
{
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno))
        throw ParseError(1, "missing order line");
    long long n;
    {
        std::istringstream ss(line);
        if (!(ss >> n) || n < 0)
            throw ParseError(lineno, "expected vertex count");
    }
    std::vector<int> values;
    values.reserve(static_cast<size_t>(n));
    while (static_cast<long long>(values.size()) < n) {
        if (!next_data_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(n) + " values");
        std::istringstream ss(line);
        long long x;
        while (ss >> x) {
            if (x < 0 || x > 3)
                throw ParseError(lineno, "labeling value must be in {0,1,2,3}");
            values.push_back(static_cast<int>(x));
        }
    }
    if (static_cast<long long>(values.size()) != n)
        throw ParseError(lineno, "too many values");
    return Labeling(std::move(values));
}

Labeling read_labeling_file(const std::string& path)
{
    auto in = open_input(path);
    return read_labeling(in);
}

void write_labeling(std::ostream& out, const Labeling& f)
{
    out << f.size() << '\n';
    for (int v = 0; v < f.size(); ++v)
        out << (v ? " " : "") << f[v];
    out << '\n';
}

void write_labeling_file(const std::string& path, const Labeling& f)
{
    auto out = open_output(path);
    write_labeling(out, f);
}

} // namespace drd
