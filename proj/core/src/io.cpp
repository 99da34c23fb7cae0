#include "gp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace gp {
namespace {

struct Token {
  std::string text;
  int column;  // 1-based start position
};

[[noreturn]] void fail(const std::string& name, int line, int column, const std::string& msg) {
  throw input_error(name + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

// Strips the comment tail and splits on runs of blanks.
std::vector<Token> tokenize(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

VertexId parse_id(const Token& t, const std::string& name, int line) {
  VertexId v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail(name, line, t.column, "expected a vertex id, got '" + t.text + "'");
  }
  if (v < 0) fail(name, line, t.column, "vertex ids must be nonnegative");
  return v;
}

double parse_value(const Token& t, const std::string& name, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail(name, line, t.column, "expected a number, got '" + t.text + "'");
  }
  return v;
}

// "# cover center=<id> radius=<r>" emitted by write_graph.
std::optional<BallCover> parse_cover_comment(const std::string& raw) {
  std::istringstream ss(raw);
  std::string hash, word, center_kv, radius_kv;
  ss >> hash >> word >> center_kv >> radius_kv;
  if (hash != "#" || word != "cover") return std::nullopt;
  if (center_kv.rfind("center=", 0) != 0 || radius_kv.rfind("radius=", 0) != 0) {
    return std::nullopt;
  }
  try {
    BallCover cover;
    cover.center = std::stoll(center_kv.substr(7));
    cover.complete_radius = std::stoi(radius_kv.substr(7));
    return cover;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

WeightedGraph parse_graph(std::istream& in, const std::string& name) {
  std::vector<WeightedGraph::Edge> edges;
  std::map<std::pair<VertexId, VertexId>, int> first_line;
  std::optional<BallCover> cover;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!cover) {
      if (auto c = parse_cover_comment(raw)) cover = c;
    }
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      fail(name, line, tokens.back().column,
           "edge lines need 3 fields (x, y, mu), got " + std::to_string(tokens.size()));
    }
    VertexId x = parse_id(tokens[0], name, line);
    VertexId y = parse_id(tokens[1], name, line);
    double mu = parse_value(tokens[2], name, line);
    if (x == y) fail(name, line, tokens[0].column, "loop edge at vertex " + std::to_string(x));
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      fail(name, line, tokens[2].column, "edge weight must be positive and finite");
    }
    auto key = std::minmax(x, y);
    auto [it, inserted] = first_line.insert({{key.first, key.second}, line});
    if (!inserted) {
      fail(name, line, tokens[0].column,
           "duplicate edge {" + std::to_string(x) + ", " + std::to_string(y) +
               "}, first listed on line " + std::to_string(it->second));
    }
    edges.emplace_back(x, y, mu);
  }
  if (edges.empty()) throw input_error(name + ": no edges found");
  if (cover && !std::any_of(edges.begin(), edges.end(), [&](const WeightedGraph::Edge& e) {
        return std::get<0>(e) == cover->center || std::get<1>(e) == cover->center;
      })) {
    cover.reset();
  }
  return WeightedGraph::from_edges(std::move(edges), {}, cover);
}

WeightedGraph load_graph(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_graph(in, path);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  if (g.cover()) {
    out << "# cover center=" << g.cover()->center << " radius=" << g.cover()->complete_radius
        << "\n";
  }
  std::vector<WeightedGraph::Edge> edges = g.raw_edges();
  for (auto& [x, y, mu] : edges) {
    if (x > y) std::swap(x, y);
    (void)mu;
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [x, y, mu] : edges) {
    out << x << '\t' << y << '\t' << format_double(mu) << '\n';
  }
}

std::string graph_text(const WeightedGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  write_graph(out, g);
}

GraphFunction parse_function(std::istream& in, const std::string& name) {
  GraphFunction f;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      fail(name, line, tokens.back().column,
           "function lines need 2 fields (vertex, value), got " + std::to_string(tokens.size()));
    }
    VertexId x = parse_id(tokens[0], name, line);
    double value = parse_value(tokens[1], name, line);
    if (!std::isfinite(value)) fail(name, line, tokens[1].column, "value must be finite");
    if (f.defined(x)) {
      fail(name, line, tokens[0].column, "vertex " + std::to_string(x) + " listed twice");
    }
    f.set(x, value);
  }
  return f;
}

GraphFunction load_function(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_function(in, path);
}

void write_function(std::ostream& out, const GraphFunction& f) {
  for (const auto& [v, value] : f) {
    out << v << '\t' << format_double(value) << '\n';
  }
}

std::string function_text(const GraphFunction& f) {
  std::ostringstream out;
  write_function(out, f);
  return out.str();
}

void save_function(const std::string& path, const GraphFunction& f) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  write_function(out, f);
}

std::vector<VertexId> parse_vertex_list(std::istream& in, const std::string& name) {
  std::vector<VertexId> vs;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) {
      fail(name, line, tokens[1].column, "vertex lines carry a single id");
    }
    vs.push_back(parse_id(tokens[0], name, line));
  }
  return vs;
}

std::vector<VertexId> load_vertex_list(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_vertex_list(in, path);
}

void write_vertex_list(std::ostream& out, const std::vector<VertexId>& vs) {
  for (VertexId v : vs) out << v << '\n';
}

void save_vertex_list(const std::string& path, const std::vector<VertexId>& vs) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write file: " + path);
  write_vertex_list(out, vs);
}

}  // namespace gp
