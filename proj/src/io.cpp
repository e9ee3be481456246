#include "mctsp/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace mctsp {

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Significant lines only: blank lines and '#' comments are dropped.
std::vector<Line> tokenize(std::string_view text, std::size_t& last_line) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto row = text.substr(pos, end - pos);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < row.size()) {
      if (row[i] == ' ' || row[i] == '\t') {
        ++i;
        continue;
      }
      const auto start = i;
      while (i < row.size() && row[i] != ' ' && row[i] != '\t') ++i;
      line.tokens.push_back(Token{row.substr(start, i - start), number, start + 1});
    }
    if (!line.tokens.empty() && line.tokens.front().text.front() != '#') {
      out.push_back(std::move(line));
    }
    pos = end + 1;
  }
  last_line = out.empty() ? number : out.back().number;
  return out;
}

std::int64_t to_integer(const Token& t, const char* what) {
  std::int64_t v = 0;
  const auto* last = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), last, v);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(t.line, t.column, std::string(what) + " out of range: '" +
                                           std::string(t.text) + "'");
  }
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", found '" +
                                           std::string(t.text) + "'");
  }
  return v;
}

void expect_count(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() > count) {
    const auto& t = line.tokens[count];
    throw ParseError(t.line, t.column, std::string("too many entries in ") + what);
  }
  if (line.tokens.size() < count) {
    const auto& t = line.tokens.back();
    throw ParseError(t.line, t.column + t.text.size(),
                     std::string(what) + " has " + std::to_string(line.tokens.size()) +
                         " entries, expected " + std::to_string(count));
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t last_line = 0;
  const auto lines = tokenize(text, last_line);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'MCTSP' header");

  const auto& header = lines.front();
  if (header.tokens.front().text != "MCTSP") {
    const auto& t = header.tokens.front();
    throw ParseError(t.line, t.column, "expected 'MCTSP', found '" + std::string(t.text) + "'");
  }
  expect_count(header, 4, "header");
  Direction direction;
  if (header.tokens[1].text == "directed") {
    direction = Direction::directed;
  } else if (header.tokens[1].text == "undirected") {
    direction = Direction::undirected;
  } else {
    const auto& t = header.tokens[1];
    throw ParseError(t.line, t.column,
                     "expected 'directed' or 'undirected', found '" + std::string(t.text) + "'");
  }
  const auto n_raw = to_integer(header.tokens[2], "vertex count");
  if (n_raw < static_cast<std::int64_t>(min_vertices(direction)) || n_raw > 4096) {
    throw ParseError(header.tokens[2].line, header.tokens[2].column,
                     "vertex count must be in [" + std::to_string(min_vertices(direction)) +
                         ", 4096] for " + std::string(to_string(direction)) + " instances");
  }
  const auto k_raw = to_integer(header.tokens[3], "objective count");
  if (k_raw < 1 || k_raw > 64) {
    throw ParseError(header.tokens[3].line, header.tokens[3].column,
                     "objective count must be in [1, 64]");
  }
  const auto n = static_cast<std::size_t>(n_raw);
  const auto k = static_cast<std::size_t>(k_raw);

  if (lines.size() - 1 < n * k) {
    throw ParseError(last_line, 1,
                     "expected " + std::to_string(n * k) + " matrix rows, found " +
                         std::to_string(lines.size() - 1));
  }
  if (lines.size() - 1 > n * k) {
    const auto& t = lines[1 + n * k].tokens.front();
    throw ParseError(t.line, t.column, "unexpected content after the last matrix row");
  }

  std::vector<Matrix> weights;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto& line = lines[1 + i * n + x];
      expect_count(line, n, "matrix row");
      for (std::size_t y = 0; y < n; ++y) {
        const auto& t = line.tokens[y];
        const auto w = to_integer(t, "weight");
        if (w < 0) throw ParseError(t.line, t.column, "negative weight " + std::string(t.text));
        if (w > max_file_weight) {
          throw ParseError(t.line, t.column,
                           "weight exceeds " + std::to_string(max_file_weight));
        }
        if (x == y && w != 0) {
          throw ParseError(t.line, t.column, "diagonal entry must be 0");
        }
        if (direction == Direction::undirected && y < x &&
            m.at(static_cast<Vertex>(y), static_cast<Vertex>(x)) != w) {
          throw ParseError(t.line, t.column,
                           "objective " + std::to_string(i) + " is not symmetric: entry (" +
                               std::to_string(x) + "," + std::to_string(y) + ") = " +
                               std::to_string(w) + " but (" + std::to_string(y) + "," +
                               std::to_string(x) + ") = " +
                               std::to_string(m.at(static_cast<Vertex>(y),
                                                   static_cast<Vertex>(x))));
        }
        m.at(static_cast<Vertex>(x), static_cast<Vertex>(y)) = w;
      }
    }
    weights.push_back(std::move(m));
  }
  return Instance(direction, n, std::move(weights));
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "MCTSP " << to_string(instance.direction()) << ' ' << instance.n() << ' '
      << instance.k() << '\n';
  const auto n = static_cast<Vertex>(instance.n());
  for (std::size_t i = 0; i < instance.k(); ++i) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        if (y) out << ' ';
        out << instance.weight(i, x, y);
      }
      out << '\n';
    }
  }
  return out.str();
}

CycleCover parse_cover(std::string_view text, Direction direction, std::size_t n) {
  std::size_t last_line = 0;
  const auto lines = tokenize(text, last_line);
  if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'COVER' header");
  const auto& header = lines.front();
  if (header.tokens.front().text != "COVER") {
    const auto& t = header.tokens.front();
    throw ParseError(t.line, t.column, "expected 'COVER', found '" + std::string(t.text) + "'");
  }
  expect_count(header, 2, "cover header");
  const auto c = to_integer(header.tokens[1], "cycle count");
  if (c < 1) throw ParseError(header.tokens[1].line, header.tokens[1].column, "no cycles");
  if (lines.size() - 1 != static_cast<std::size_t>(c)) {
    throw ParseError(last_line, 1,
                     "expected " + std::to_string(c) + " cycles, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Vertex>> cycles;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<Vertex> cycle;
    for (const auto& t : lines[r].tokens) {
      const auto v = to_integer(t, "vertex");
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw ParseError(t.line, t.column, "vertex " + std::string(t.text) + " out of range");
      }
      cycle.push_back(static_cast<Vertex>(v));
    }
    cycles.push_back(std::move(cycle));
  }
  try {
    return CycleCover(direction, n, std::move(cycles));
  } catch (const StructuralError& e) {
    throw ParseError(lines.front().number, 1, std::string("invalid cover: ") + e.what());
  }
}

std::string serialize_cover(const CycleCover& cover) {
  std::ostringstream out;
  out << "COVER " << cover.cycles().size() << '\n';
  for (const auto& c : cover.cycles()) {
    for (std::size_t t = 0; t < c.size(); ++t) out << (t ? " " : "") << c[t];
    out << '\n';
  }
  return out.str();
}

Instance generate_instance(Direction direction, std::size_t n, std::size_t k, Weight max_weight,
                           std::uint64_t seed) {
  if (n < min_vertices(direction)) {
    throw ContractError("generate: n must be at least " + std::to_string(min_vertices(direction)));
  }
  if (k < 1) throw ContractError("generate: k must be at least 1");
  if (max_weight < 0 || max_weight > max_file_weight) {
    throw ContractError("generate: max weight must be in [0, " +
                        std::to_string(max_file_weight) + "]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(0, max_weight);
  std::vector<Matrix> weights;
  const auto nv = static_cast<Vertex>(n);
  for (std::size_t i = 0; i < k; ++i) {
    Matrix m(n);
    for (Vertex x = 0; x < nv; ++x) {
      for (Vertex y = 0; y < nv; ++y) {
        if (x == y) continue;
        if (direction == Direction::undirected && y < x) {
          m.at(x, y) = m.at(y, x);
        } else {
          m.at(x, y) = dist(rng);
        }
      }
    }
    weights.push_back(std::move(m));
  }
  return Instance(direction, n, std::move(weights));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mctsp
