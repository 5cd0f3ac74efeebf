// Copyright 2026 The domgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMGAME_GRAPH_IO_HPP_
#define DOMGAME_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

// Largest order accepted by the graph6 reader (the 4-byte size form).
inline constexpr int kGraph6MaxOrder = 258047;

// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
// newline are accepted. Throws InvalidInput on a malformed size field,
// characters outside 63..126, a truncated or overlong payload, or nonzero
// padding bits.
Graph parse_graph6(std::string_view text);

// Encodes g in graph6 without header or newline.
std::string encode_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0-based ids. Lines starting with '#' and blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

struct NamedGraph {
  std::string id;
  Graph graph;
};

// Reads every graph in a file. A file whose first significant line holds
// exactly two integers is an edge list (one graph, id = file stem);
// otherwise each non-empty line is graph6 (ids "stem:line").
std::vector<NamedGraph> load_graph_file(const std::filesystem::path& path);

// Reads every *.g6, *.txt, *.edges and *.el file of a directory, sorted by
// file name.
std::vector<NamedGraph> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace domgame

#endif  // DOMGAME_GRAPH_IO_HPP_
