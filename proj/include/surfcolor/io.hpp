#pragma once

// Line-oriented text formats.
//
//   graph file     genus <eps>
//                  vertex <id>: <neighbour> <neighbour> ...   (cyclic order)
//                  sign <u> <v> <+1|-1>                        (default +1)
//   lists file     list <id>: <color> <color> ...
//   coloring file  color <id>: <color>
//
// Tokens are separated by whitespace; the colon may touch the id. '#' starts a
// comment running to the end of the line. Each parser skips lines that open
// with another format's keyword, so a graph and its lists may share one file.
// Errors carry the 1-based line and column of the offending token.

#include <string>
#include <string_view>

#include "surfcolor/coloring.hpp"
#include "surfcolor/embedding.hpp"

namespace surfcolor {

EmbeddedGraph parse_graph(std::string_view text);
ListAssignment parse_lists(std::string_view text);
Coloring parse_coloring(std::string_view text);

/// Vertex lines in id order; sign lines only for -1 edges.
std::string emit_graph(const EmbeddedGraph& g);
std::string emit_lists(const ListAssignment& la);
std::string emit_coloring(const Coloring& c);

/// Whole file as a string; throws Error when unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace surfcolor
