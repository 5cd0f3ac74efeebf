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

#include "domgame/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "domgame/errors.hpp"

namespace domgame {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int Sextet(char c) {
  const int x = static_cast<unsigned char>(c);
  if (x < 63 || x > 126) {
    throw InvalidInput(std::string("graph6: byte '") + c + "' outside the printable range 63..126");
  }
  return x - 63;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseInt(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

bool IsSignificant(std::string_view line) {
  line = Trim(line);
  return !line.empty() && line.front() != '#';
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = Trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw InvalidInput("graph6: empty input");

  long long n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = Sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw InvalidInput("graph6: truncated size field");
    n = (static_cast<long long>(Sextet(text[1])) << 12) | (Sextet(text[2]) << 6) | Sextet(text[3]);
    pos = 4;
  } else {
    if (text.size() < 8) throw InvalidInput("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | Sextet(text[i]);
    pos = 8;
  }
  if (n < 1) throw InvalidInput("graph6: order must be at least 1");
  if (n > kGraph6MaxOrder) throw InvalidInput("graph6: order " + std::to_string(n) + " exceeds cap");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  const long long have = static_cast<long long>(text.size() - pos);
  if (have < bytes) throw InvalidInput("graph6: truncated bit payload");
  if (have > bytes) throw InvalidInput("graph6: trailing bytes after payload");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = Sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int byte = Sextet(text[pos + static_cast<std::size_t>(k / 6)]);
    if ((byte >> (5 - k % 6)) & 1) throw InvalidInput("graph6: nonzero padding bits");
  }
  return Graph::FromEdgeList(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= kGraph6MaxOrder) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = Lines(text);
  std::size_t li = 0;
  auto next_line = [&]() -> std::string_view {
    while (li < lines.size() && !IsSignificant(lines[li])) ++li;
    if (li == lines.size()) return {};
    return Trim(lines[li++]);
  };

  const auto header = Tokens(next_line());
  long long n = 0, m = 0;
  if (header.size() != 2 || !ParseInt(header[0], n) || !ParseInt(header[1], m)) {
    throw InvalidInput("edge list: header must be \"n m\"");
  }
  if (n < 1 || m < 0) throw InvalidInput("edge list: header needs n >= 1 and m >= 0");
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    const auto tok = Tokens(next_line());
    long long u = 0, v = 0;
    if (tok.empty()) {
      throw InvalidInput("edge list: expected " + std::to_string(m) + " edges, found " +
                         std::to_string(e));
    }
    if (tok.size() != 2 || !ParseInt(tok[0], u) || !ParseInt(tok[1], v)) {
      throw InvalidInput("edge list: malformed edge line " + std::to_string(e + 1));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!next_line().empty()) throw InvalidInput("edge list: more edge lines than m");
  return Graph::FromEdgeList(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<NamedGraph> load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string stem = path.stem().string();

  const auto lines = Lines(text);
  std::string_view first;
  for (auto l : lines) {
    if (IsSignificant(l)) {
      first = Trim(l);
      break;
    }
  }
  if (first.empty()) throw InvalidInput(path.string() + ": no graph data");

  long long a = 0, b = 0;
  const auto tok = Tokens(first);
  if (tok.size() == 2 && ParseInt(tok[0], a) && ParseInt(tok[1], b)) {
    return {NamedGraph{stem, parse_edge_list(text)}};
  }
  std::vector<NamedGraph> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!IsSignificant(lines[i])) continue;
    try {
      out.push_back({stem + ":" + std::to_string(i + 1), parse_graph6(lines[i])});
    } catch (const InvalidInput& e) {
      throw InvalidInput(path.string() + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<NamedGraph> load_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InvalidInput(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".g6" || ext == ".txt" || ext == ".edges" || ext == ".el") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const auto& f : files) {
    auto graphs = load_graph_file(f);
    for (auto& g : graphs) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace domgame
