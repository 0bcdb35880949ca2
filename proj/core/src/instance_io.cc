#include "modkernel/instance_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace modkernel {

ParseError::ParseError(Kind kind, int line, const std::string& message)
    : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

int parse_int(std::string_view word, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(ParseError::Kind::kSyntax, line,
                     std::string("expected an integer ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text, const ParseOptions& options) {
  using Kind = ParseError::Kind;
  bool have_header = false;
  bool have_modulator = false;
  int n = 0, m = 0, header_line = 0;
  Instance inst;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  std::vector<Vertex> modulator;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;

    if (words[0] == "p") {
      if (have_header) throw ParseError(Kind::kSyntax, line_no, "second header line");
      if (words.size() != 7 || words[1] != "vc-struct") {
        throw ParseError(Kind::kSyntax, line_no,
                         "header must read 'p vc-struct <n> <m> <k> <d> <class>'");
      }
      n = parse_int(words[2], line_no, "vertex count");
      m = parse_int(words[3], line_no, "edge count");
      inst.k = parse_int(words[4], line_no, "k");
      inst.d = parse_int(words[5], line_no, "d");
      if (n < 0 || m < 0) throw ParseError(Kind::kSyntax, line_no, "negative size");
      if (inst.d < 0) throw ParseError(Kind::kSyntax, line_no, "d must be non-negative");
      if (inst.k < 0 || inst.k > n) {
        throw ParseError(Kind::kSyntax, line_no, "k must lie in 0..n");
      }
      auto cls = parse_graph_class(words[6]);
      if (!cls) {
        throw ParseError(Kind::kSyntax, line_no, "unknown class '" + std::string(words[6]) + "'");
      }
      inst.cls = *cls;
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (!have_header) throw ParseError(Kind::kSyntax, line_no, "expected the 'p' header first");

    if (words[0] == "e") {
      if (words.size() != 3) throw ParseError(Kind::kSyntax, line_no, "edge line must read 'e <u> <v>'");
      int u = parse_int(words[1], line_no, "endpoint");
      int v = parse_int(words[2], line_no, "endpoint");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError(Kind::kSyntax, line_no, "endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(Kind::kSyntax, line_no, "self-loop");
      edges.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
      edge_lines.push_back(line_no);
    } else if (words[0] == "x") {
      if (have_modulator) throw ParseError(Kind::kModulator, line_no, "second modulator line");
      have_modulator = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        int v = parse_int(words[i], line_no, "modulator vertex");
        if (v < 1 || v > n) {
          throw ParseError(Kind::kModulator, line_no,
                           "modulator vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        }
        modulator.push_back(v - 1);
      }
      if (VertexSet(modulator).size() != modulator.size()) {
        throw ParseError(Kind::kModulator, line_no, "repeated modulator vertex");
      }
    } else {
      throw ParseError(Kind::kSyntax, line_no, "unknown line type '" + std::string(words[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(Kind::kSyntax, 0, "missing 'p vc-struct' header");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(Kind::kSyntax, header_line,
                     "header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (edges[order[i]] == edges[order[i - 1]]) {
        throw ParseError(Kind::kSyntax, edge_lines[order[i]], "duplicate edge");
      }
    }
  }
  inst.graph = Graph::from_edges(n, edges);
  inst.modulator = VertexSet(std::move(modulator));
  if (options.check_class) {
    try {
      validate_instance(inst, options.cap);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(Kind::kClass, 0, e.what());
    }
  }
  return inst;
}

std::string emit_instance(const Instance& inst) {
  if (!inst.graph.has_dense_labels()) {
    throw InputError("emit_instance needs dense labels; compact the instance first");
  }
  std::ostringstream out;
  out << "p vc-struct " << inst.graph.size() << ' ' << inst.graph.edge_count() << ' ' << inst.k
      << ' ' << inst.d << ' ' << to_string(inst.cls) << '\n';
  for (auto [u, v] : inst.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  out << 'x';
  for (Vertex v : inst.modulator) out << ' ' << v + 1;
  out << '\n';
  return out.str();
}

Instance read_instance_file(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), options);
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace modkernel
