#include "color4/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "color4/errors.hpp"

namespace color4 {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == 'c' && (pos + 1 >= line.size() || std::isspace(line[pos + 1]))) continue;
        return line.substr(pos);
    }
    return "";
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string header = next_content_line(in);
    if (header.empty()) throw parse_error("empty graph file");

    bool dimacs = header[0] == 'p';
    int n = 0, m = 0;
    if (dimacs) {
        std::istringstream hs(header);
        std::string p, fmt;
        hs >> p >> fmt >> n >> m;
        if (hs.fail() || fmt != "edge") throw parse_error("bad DIMACS header: '" + header + "'");
    } else {
        std::istringstream hs(header);
        hs >> n >> m;
        if (hs.fail()) throw parse_error("bad graph header: '" + header + "'");
    }
    if (n < 0 || m < 0) throw parse_error("negative counts in graph header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        std::string line = next_content_line(in);
        if (line.empty()) throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                            std::to_string(k));
        std::istringstream es(line);
        int u, v;
        if (dimacs) {
            std::string e;
            es >> e >> u >> v;
            if (es.fail() || e != "e") throw parse_error("bad edge line: '" + line + "'");
            --u;
            --v;
        } else {
            es >> u >> v;
            if (es.fail()) throw parse_error("bad edge line: '" + line + "'");
        }
        edges.emplace_back(u, v);
    }
    return ParsedGraph{Graph(n, edges), dimacs};
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

void write_graph_file(const Graph& g, std::ostream& out, bool dimacs) {
    int n = g.slot_count();
    if (dimacs) {
        out << "p edge " << n << " " << g.edge_count() << "\n";
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                if (u > v) out << "e " << v + 1 << " " << u + 1 << "\n";
    } else {
        out << n << " " << g.edge_count() << "\n";
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                if (u > v) out << v << " " << u << "\n";
    }
}

void write_graph_file(const Graph& g, const std::string& path, bool dimacs) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write graph file '" + path + "'");
    write_graph_file(g, out, dimacs);
}

ColorLists parse_lists(std::istream& in, int n, bool one_indexed) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("lists file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("lists file must be a JSON object");

    std::vector<std::uint8_t> masks(n, kFullMask);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v;
        try {
            v = std::stoi(it.key());
        } catch (...) {
            throw parse_error("lists key '" + it.key() + "' is not a vertex id");
        }
        if (one_indexed) --v;
        if (v < 0 || v >= n) throw parse_error("lists vertex " + it.key() + " out of range");
        if (!it.value().is_array() || it.value().empty())
            throw parse_error("list for vertex " + it.key() + " must be a non-empty array");
        std::uint8_t mask = 0;
        for (const auto& c : it.value()) {
            if (!c.is_number_integer() || c.get<int>() < 1 || c.get<int>() > kPalette)
                throw parse_error("color outside {1,2,3,4} for vertex " + it.key());
            mask |= static_cast<std::uint8_t>(1u << (c.get<int>() - 1));
        }
        masks[v] = mask;
    }
    return ColorLists(std::move(masks));
}

ColorLists read_lists_file(const std::string& path, int n, bool one_indexed) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open lists file '" + path + "'");
    return parse_lists(in, n, one_indexed);
}

void write_lists_file(const ColorLists& lists, std::ostream& out, bool one_indexed) {
    nlohmann::json j = nlohmann::json::object();
    for (int v = 0; v < lists.slot_count(); ++v) {
        if (lists.mask(v) == kFullMask) continue;
        j[std::to_string(one_indexed ? v + 1 : v)] = mask_colors(lists.mask(v));
    }
    out << j.dump(2) << "\n";
}

void write_lists_file(const ColorLists& lists, const std::string& path, bool one_indexed) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write lists file '" + path + "'");
    write_lists_file(lists, out, one_indexed);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "' for digest");
    std::uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i)
            h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ull;
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + hex;
}

}  // namespace color4
