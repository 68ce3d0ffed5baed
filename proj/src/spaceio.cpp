#include <fstream>
#include <functional>
#include <sstream>

#include "ultralip/space.hpp"

namespace ultralip {

namespace {

std::vector<std::string> tokenize_dend(const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ':') {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
      toks.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

}  // namespace

FiniteSpace read_space(std::istream& in) {
  std::string header;
  long n = 0;
  if (!(in >> header) || header != "space" || !(in >> n) || n < 1)
    fail(Err::ParseError, "expected 'space <n>' header");
  std::vector<std::string> labels(n);
  for (auto& l : labels)
    if (!(in >> l)) fail(Err::ParseError, "missing label");
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) fail(Err::ParseError, "missing matrix entry");
      dist[i][j] = parse_rational(tok);
    }
  }
  return FiniteSpace::validate(std::move(labels), std::move(dist));
}

void write_space(std::ostream& out, const FiniteSpace& space) {
  out << "space " << space.size() << "\n";
  for (int i = 0; i < space.size(); ++i)
    out << space.label(i) << (i + 1 == space.size() ? "\n" : " ");
  for (int i = 0; i < space.size(); ++i)
    for (int j = 0; j < space.size(); ++j)
      out << rat_str(space.dist(i, j)) << (j + 1 == space.size() ? "\n" : " ");
}

Dendrogram read_dendrogram(std::istream& in) {
  std::string header;
  if (!(in >> header) || header != "dend")
    fail(Err::ParseError, "expected 'dend' header");
  std::string rest((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  auto toks = tokenize_dend(rest);
  std::size_t pos = 0;
  std::vector<Dendrogram::Node> nodes;
  std::function<int()> parse_node = [&]() -> int {
    if (pos >= toks.size()) fail(Err::ParseError, "unexpected end of dendrogram");
    if (toks[pos] == "(") {
      ++pos;
      Dendrogram::Node nd;
      if (pos >= toks.size()) fail(Err::ParseError, "missing height");
      nd.height = parse_rational(toks[pos++]);
      if (pos >= toks.size() || toks[pos] != ":")
        fail(Err::ParseError, "expected ':' after height");
      ++pos;
      while (pos < toks.size() && toks[pos] != ")") nd.children.push_back(parse_node());
      if (pos >= toks.size()) fail(Err::ParseError, "missing ')'");
      ++pos;
      nodes.push_back(std::move(nd));
      return static_cast<int>(nodes.size()) - 1;
    }
    if (toks[pos] == ")" || toks[pos] == ":")
      fail(Err::ParseError, "unexpected '" + toks[pos] + "'");
    Dendrogram::Node leaf;
    leaf.label = toks[pos++];
    nodes.push_back(std::move(leaf));
    return static_cast<int>(nodes.size()) - 1;
  };
  int root = parse_node();
  if (pos != toks.size()) fail(Err::ParseError, "trailing tokens after dendrogram");
  return Dendrogram::build(std::move(nodes), root);
}

void write_dendrogram(std::ostream& out, const Dendrogram& dend) {
  out << "dend\n";
  std::function<void(int)> emit = [&](int v) {
    const auto& nd = dend.node(v);
    if (nd.leaf()) {
      out << nd.label;
      return;
    }
    out << "( " << rat_str(nd.height) << " :";
    for (int c : nd.children) {
      out << " ";
      emit(c);
    }
    out << " )";
  };
  emit(dend.root());
  out << "\n";
}

SpacePtr parse_space_text(const std::string& text) {
  std::istringstream peek(text);
  std::string header;
  peek >> header;
  std::istringstream in(text);
  if (header == "space")
    return std::make_shared<const FiniteSpace>(read_space(in));
  if (header == "dend")
    return std::make_shared<const FiniteSpace>(from_dendrogram(read_dendrogram(in)));
  fail(Err::ParseError, "unknown file header '" + header + "'");
}

SpacePtr load_space(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(Err::BadArgument, "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(file)),
                   std::istreambuf_iterator<char>());
  return parse_space_text(text);
}

}  // namespace ultralip
