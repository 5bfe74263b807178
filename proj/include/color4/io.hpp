#pragma once

#include <iosfwd>
#include <string>

#include "color4/instance.hpp"

namespace color4 {

// CLI exit codes, stable and documented in the README.
enum ExitCode {
    kExitOk = 0,
    kExitParse = 1,
    kExitInvalid = 2,
    kExitUnsat = 3,
    kExitCapacity = 4,
};

// Graph files come in two text forms:
//   DIMACS-col style: "c ..." comments, "p edge <n> <m>", then "e <u> <v>"
//     with 1-indexed vertices;
//   plain: "<n> <m>" then m lines "<u> <v>", 0-indexed.
struct ParsedGraph {
    Graph graph;
    bool one_indexed = false;  // index base of the source file (and its lists file)
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, std::ostream& out, bool dimacs = true);
void write_graph_file(const Graph& g, const std::string& path, bool dimacs = true);

// Lists files are JSON objects mapping vertex id (string, in the same index
// base as the graph file) to an array of colors from {1,2,3,4}; vertices not
// mentioned get the full palette.
ColorLists parse_lists(std::istream& in, int n, bool one_indexed);
ColorLists read_lists_file(const std::string& path, int n, bool one_indexed);
void write_lists_file(const ColorLists& lists, std::ostream& out, bool one_indexed);
void write_lists_file(const ColorLists& lists, const std::string& path, bool one_indexed);

// FNV-1a 64 over the raw file bytes, hex encoded; used as the input digest in
// run reports.
std::string file_digest(const std::string& path);

}  // namespace color4
