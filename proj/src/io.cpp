#include "surfcolor/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "surfcolor/errors.hpp"

namespace surfcolor {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

// One logical line, comment stripped, with ':' split into its own token.
std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      continue;
    }
    if (ch == ':') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ':') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next() {
    if (pos_ > text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    const std::string_view line = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() + 1 : end + 1;
    ++line_no_;
    tokens_ = tokenize(line);
    return true;
  }

  std::size_t line() const { return line_no_; }
  const std::vector<Token>& tokens() const { return tokens_; }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const { throw ParseError(line_no_, column, what); }

  int integer(std::size_t index) const {
    if (index >= tokens_.size()) fail(end_column(), "expected an integer");
    const Token& t = tokens_[index];
    std::string_view s = t.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      fail(t.column, "expected an integer, got '" + std::string(t.text) + "'");
    return value;
  }

  void expect_colon(std::size_t index) const {
    if (index >= tokens_.size() || tokens_[index].text != ":") fail(index < tokens_.size() ? tokens_[index].column : end_column(), "expected ':'");
  }

  void expect_end(std::size_t index) const {
    if (index < tokens_.size()) fail(tokens_[index].column, "unexpected token '" + std::string(tokens_[index].text) + "'");
  }

  std::size_t end_column() const {
    if (tokens_.empty()) return 1;
    const Token& t = tokens_.back();
    return t.column + t.text.size();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::vector<Token> tokens_;
};

bool is_keyword(std::string_view w) { return w == "genus" || w == "vertex" || w == "sign" || w == "list" || w == "color"; }

// Parses "<kw> <id> : <int>*" starting at token 0.
std::pair<VertexId, std::vector<int>> keyed_row(const LineReader& r) {
  const VertexId v = r.integer(1);
  r.expect_colon(2);
  std::vector<int> values;
  for (std::size_t i = 3; i < r.tokens().size(); ++i) values.push_back(r.integer(i));
  return {v, values};
}

}  // namespace

EmbeddedGraph parse_graph(std::string_view text) {
  LineReader r(text);
  std::optional<int> genus;
  EmbeddedGraph::Rotation rotation;
  std::map<Edge, int> signs;
  std::size_t genus_line = 0;
  while (r.next()) {
    const auto& tk = r.tokens();
    if (tk.empty()) continue;
    const std::string_view kw = tk[0].text;
    if (kw == "genus") {
      if (genus) r.fail(tk[0].column, "second genus line (first on line " + std::to_string(genus_line) + ")");
      genus = r.integer(1);
      if (*genus < 0) r.fail(tk[1].column, "genus must be nonnegative");
      genus_line = r.line();
      r.expect_end(2);
    } else if (kw == "vertex") {
      auto [v, nbrs] = keyed_row(r);
      if (!rotation.emplace(v, std::move(nbrs)).second) r.fail(tk[1].column, "vertex " + std::to_string(v) + " defined twice");
    } else if (kw == "sign") {
      const VertexId a = r.integer(1);
      const VertexId b = r.integer(2);
      const int s = r.integer(3);
      if (s != 1 && s != -1) r.fail(tk[3].column, "sign must be +1 or -1");
      r.expect_end(4);
      if (a == b) r.fail(tk[2].column, "sign on a loop");
      if (!signs.emplace(Edge::of(a, b), s).second) r.fail(tk[0].column, "sign for edge given twice");
    } else if (kw == "list" || kw == "color") {
      continue;
    } else {
      r.fail(tk[0].column, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!genus) throw ParseError(1, 1, "missing genus line");
  std::set<Edge> negative;
  for (const auto& [e, s] : signs) {
    if (s < 0) negative.insert(e);
  }
  return EmbeddedGraph(*genus, std::move(rotation), std::move(negative));
}

ListAssignment parse_lists(std::string_view text) {
  LineReader r(text);
  std::map<VertexId, std::vector<Color>> lists;
  while (r.next()) {
    const auto& tk = r.tokens();
    if (tk.empty()) continue;
    if (tk[0].text != "list") {
      if (is_keyword(tk[0].text)) continue;
      r.fail(tk[0].column, "unknown directive '" + std::string(tk[0].text) + "'");
    }
    auto [v, colors] = keyed_row(r);
    if (colors.empty()) r.fail(r.end_column(), "empty list for vertex " + std::to_string(v));
    if (!lists.emplace(v, std::move(colors)).second) r.fail(tk[1].column, "list for vertex " + std::to_string(v) + " given twice");
  }
  return ListAssignment(std::move(lists));
}

Coloring parse_coloring(std::string_view text) {
  LineReader r(text);
  Coloring c;
  while (r.next()) {
    const auto& tk = r.tokens();
    if (tk.empty()) continue;
    if (tk[0].text != "color") {
      if (is_keyword(tk[0].text)) continue;
      r.fail(tk[0].column, "unknown directive '" + std::string(tk[0].text) + "'");
    }
    const VertexId v = r.integer(1);
    r.expect_colon(2);
    const Color col = r.integer(3);
    r.expect_end(4);
    if (!c.emplace(v, col).second) r.fail(tk[1].column, "color for vertex " + std::to_string(v) + " given twice");
  }
  return c;
}

std::string emit_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  out << "genus " << g.declared_genus() << "\n";
  for (VertexId v : g.vertices()) {
    out << "vertex " << v << ":";
    for (VertexId w : g.rotation(v)) out << ' ' << w;
    out << "\n";
  }
  for (const Edge& e : g.negative_edges()) out << "sign " << e.u << ' ' << e.v << " -1\n";
  return out.str();
}

std::string emit_lists(const ListAssignment& la) {
  std::ostringstream out;
  for (const auto& [v, colors] : la.lists()) {
    out << "list " << v << ":";
    for (Color c : colors) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

std::string emit_coloring(const Coloring& c) {
  std::ostringstream out;
  for (const auto& [v, col] : c) out << "color " << v << ": " << col << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace surfcolor
