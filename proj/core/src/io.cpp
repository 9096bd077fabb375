#include "wic/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wic/errors.hpp"

namespace wic {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Non-empty, non-comment lines. A first token equal to `extra_comment` also
/// marks a comment (PACE files use "c").
std::vector<Line> content_lines(std::string_view text, std::string_view extra_comment = {}) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    auto tokens = split(line);
    if (!tokens.empty() && tokens.front().front() != '#' && tokens.front() != extra_comment) {
      out.push_back({number, std::move(tokens)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

long long parse_integer(std::string_view token, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ParseErrorKind::Malformed, line, std::string("expected integer ") + what + ", got '" +
                                                          std::string(token) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view token, int line, int n) {
  const long long v = parse_integer(token, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(ParseErrorKind::IndexOutOfRange, line,
                     "vertex " + std::string(token) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v);
}

Weight parse_weight(std::string_view token, int line) {
  Rational value;
  try {
    value = Rational::parse(token);
  } catch (const std::invalid_argument&) {
    throw ParseError(ParseErrorKind::Malformed, line, "bad weight '" + std::string(token) + "'");
  } catch (const OverflowError&) {
    throw ParseError(ParseErrorKind::Malformed, line, "weight '" + std::string(token) + "' overflows 64 bits");
  }
  if (!Weight::in_range(value)) {
    throw ParseError(ParseErrorKind::WeightOutOfRange, line, "weight " + value.to_string() + " outside [0, 1]");
  }
  return Weight(value);
}

struct Header {
  bool undirected = false;
  int n = 0;
  long long m = 0;
};

Header parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(ParseErrorKind::Malformed, 0, "missing 'p wig' header");
  const Line& h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[0] != "p" || (h.tokens[1] != "wig" && h.tokens[1] != "wug")) {
    throw ParseError(ParseErrorKind::Malformed, h.number, "expected 'p wig <n> <m>' or 'p wug <n> <m>'");
  }
  Header out;
  out.undirected = h.tokens[1] == "wug";
  const long long n = parse_integer(h.tokens[2], h.number, "vertex count");
  out.m = parse_integer(h.tokens[3], h.number, "arc count");
  if (n < 0 || n > 100'000'000 || out.m < 0) throw ParseError(ParseErrorKind::Malformed, h.number, "bad header counts");
  out.n = static_cast<int>(n);
  return out;
}

void check_count(const Header& header, std::size_t seen) {
  if (static_cast<long long>(seen) != header.m) {
    throw ParseError(ParseErrorKind::Malformed, 0,
                     "header declares " + std::to_string(header.m) + " arcs, found " + std::to_string(seen));
  }
}

UndirectedWeightedGraph parse_undirected_body(const std::vector<Line>& lines, const Header& header) {
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e" || (line.tokens.size() != 3 && line.tokens.size() != 4)) {
      throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'e <u> <v> [<weight>]'");
    }
    Vertex u = parse_vertex(line.tokens[1], line.number, header.n);
    Vertex v = parse_vertex(line.tokens[2], line.number, header.n);
    if (u == v) throw ParseError(ParseErrorKind::Malformed, line.number, "self-loop at vertex " + std::to_string(u));
    Weight w = line.tokens.size() == 4 ? parse_weight(line.tokens[3], line.number) : Weight(1, 1);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) {
      throw ParseError(ParseErrorKind::DuplicateArc, line.number,
                       "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    edges.push_back({u, v, w});
  }
  check_count(header, edges.size());
  return UndirectedWeightedGraph(header.n, std::move(edges));
}

}  // namespace

WeightedDigraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  const Header header = parse_header(lines);
  if (header.undirected) return embed_undirected(parse_undirected_body(lines, header));

  std::vector<Arc> arcs;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e" || line.tokens.size() != 4) {
      throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'e <tail> <head> <weight>'");
    }
    const Vertex tail = parse_vertex(line.tokens[1], line.number, header.n);
    const Vertex head = parse_vertex(line.tokens[2], line.number, header.n);
    if (tail == head) {
      throw ParseError(ParseErrorKind::Malformed, line.number, "self-loop at vertex " + std::to_string(tail));
    }
    const Weight w = parse_weight(line.tokens[3], line.number);
    if (!seen.emplace(tail, head).second) {
      throw ParseError(ParseErrorKind::DuplicateArc, line.number,
                       "duplicate arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
    }
    arcs.push_back({tail, head, w});
  }
  check_count(header, arcs.size());
  return WeightedDigraph(header.n, std::move(arcs));
}

UndirectedWeightedGraph parse_undirected(std::string_view text) {
  const auto lines = content_lines(text);
  const Header header = parse_header(lines);
  if (!header.undirected) {
    throw ParseError(ParseErrorKind::Malformed, lines.front().number, "expected an undirected 'p wug' file");
  }
  return parse_undirected_body(lines, header);
}

std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << "p wig " << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) {
    out << "e " << a.tail << ' ' << a.head << ' ' << a.weight.value().to_fraction_string() << '\n';
  }
  return out.str();
}

std::string serialize_undirected(const UndirectedWeightedGraph& h) {
  std::ostringstream out;
  out << "p wug " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.weight.value().to_fraction_string() << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text, int n) {
  Coloring c(n);
  for (const Line& line : content_lines(text)) {
    if (line.tokens.size() != 2) throw ParseError(ParseErrorKind::Malformed, line.number, "expected '<vertex> <color>'");
    const Vertex v = parse_vertex(line.tokens[0], line.number, n);
    const long long color = parse_integer(line.tokens[1], line.number, "color");
    if (color < 1 || color > 1'000'000'000) {
      throw ParseError(ParseErrorKind::IndexOutOfRange, line.number, "color must be a positive integer");
    }
    if (c.assigned(v)) {
      throw ParseError(ParseErrorKind::DuplicateArc, line.number, "vertex " + std::to_string(v) + " colored twice");
    }
    c.assign(v, static_cast<int>(color));
  }
  return c;
}

std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  for (Vertex v = 1; v <= c.vertex_count(); ++v) {
    if (c.assigned(v)) out << v << ' ' << c[v] << '\n';
  }
  return out.str();
}

TreeDecomposition parse_decomposition(std::string_view text) {
  const auto lines = content_lines(text, "c");
  if (lines.empty()) throw ParseError(ParseErrorKind::Malformed, 0, "missing 's td' header");
  const Line& h = lines.front();
  if (h.tokens.size() != 5 || h.tokens[0] != "s" || h.tokens[1] != "td") {
    throw ParseError(ParseErrorKind::Malformed, h.number, "expected 's td <bags> <max-bag-size> <n>'");
  }
  const long long bag_count = parse_integer(h.tokens[2], h.number, "bag count");
  const long long max_size = parse_integer(h.tokens[3], h.number, "max bag size");
  const long long n = parse_integer(h.tokens[4], h.number, "vertex count");
  if (bag_count < 1 || bag_count > 100'000'000 || max_size < 0 || n < 0) {
    throw ParseError(ParseErrorKind::Malformed, h.number, "bad header counts");
  }

  TreeDecomposition d;
  d.bags.resize(bag_count);
  std::vector<char> defined(bag_count, 0);
  auto parse_bag_id = [&](std::string_view token, int line) {
    const long long id = parse_integer(token, line, "bag id");
    if (id < 1 || id > bag_count) {
      throw ParseError(ParseErrorKind::IndexOutOfRange, line,
                       "bag " + std::string(token) + " outside 1.." + std::to_string(bag_count));
    }
    return static_cast<int>(id - 1);
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "b") {
      if (line.tokens.size() < 2) throw ParseError(ParseErrorKind::Malformed, line.number, "expected 'b <bag-id> <v...>'");
      const int id = parse_bag_id(line.tokens[1], line.number);
      if (defined[id]) throw ParseError(ParseErrorKind::DuplicateArc, line.number, "bag defined twice");
      defined[id] = 1;
      for (std::size_t t = 2; t < line.tokens.size(); ++t) {
        d.bags[id].push_back(parse_vertex(line.tokens[t], line.number, static_cast<int>(n)));
      }
      std::sort(d.bags[id].begin(), d.bags[id].end());
      if (std::adjacent_find(d.bags[id].begin(), d.bags[id].end()) != d.bags[id].end()) {
        throw ParseError(ParseErrorKind::Malformed, line.number, "vertex repeated within a bag");
      }
      if (static_cast<long long>(d.bags[id].size()) > max_size) {
        throw ParseError(ParseErrorKind::Malformed, line.number, "bag larger than the declared maximum");
      }
    } else {
      if (line.tokens.size() != 2) throw ParseError(ParseErrorKind::Malformed, line.number, "expected '<i> <j>'");
      d.tree_edges.emplace_back(parse_bag_id(line.tokens[0], line.number), parse_bag_id(line.tokens[1], line.number));
    }
  }
  for (long long i = 0; i < bag_count; ++i) {
    if (!defined[i]) throw ParseError(ParseErrorKind::Malformed, 0, "bag " + std::to_string(i + 1) + " never defined");
  }
  d.root = 0;
  return d;
}

std::string serialize_decomposition(const TreeDecomposition& d, int n) {
  // Bag 1 of the file is the root, so the root is swapped to the front.
  const int m = d.bag_count();
  std::vector<int> file_id(m);
  for (int i = 0; i < m; ++i) file_id[i] = i;
  std::swap(file_id[0], file_id[d.root]);

  std::size_t max_size = 0;
  for (const VertexSet& bag : d.bags) max_size = std::max(max_size, bag.size());
  std::ostringstream out;
  out << "s td " << m << ' ' << max_size << ' ' << n << '\n';
  std::vector<int> by_file(m);
  for (int i = 0; i < m; ++i) by_file[file_id[i]] = i;
  for (int f = 0; f < m; ++f) {
    out << "b " << f + 1;
    for (Vertex v : d.bags[by_file[f]]) out << ' ' << v;
    out << '\n';
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : d.tree_edges) {
    int x = file_id[a] + 1;
    int y = file_id[b] + 1;
    if (x > y) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  std::sort(edges.begin(), edges.end());
  for (auto [x, y] : edges) out << x << ' ' << y << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace wic
