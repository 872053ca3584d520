// Copyright 2026 The stablefix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stablefix/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stablefix/error.h"

namespace stablefix {
namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

struct Line {
  int number;
  std::vector<Token> tokens;
  std::string_view raw;
};

// Splits on whitespace and on any character in `extra_separators`; a
// separator character is dropped.
std::vector<Token> tokenize(std::string_view s, int first_column,
                            std::string_view extra_separators = {}) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return std::isspace(static_cast<unsigned char>(c)) ||
           extra_separators.find(c) != std::string_view::npos;
  };
  while (i < s.size()) {
    while (i < s.size() && is_sep(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_sep(s[i])) ++i;
    if (i > start) {
      out.push_back({std::string(s.substr(start, i - start)),
                     first_column + static_cast<int>(start)});
    }
  }
  return out;
}

const char* const kSections[] = {"agents",   "edges",  "values",  "orders",
                                 "ranks",    "matching", "bounds", "weights",
                                 "subset",   "colors"};

class Parser {
 public:
  explicit Parser(std::string_view text) { split_sections(text); }

  InstanceFile run() {
    InstanceFile out;
    build_graph();
    out.instance.graph = graph_;
    if (has("values")) out.instance.values = parse_values();
    if (has("orders")) out.instance.orders = parse_orders();
    if (has("ranks")) out.instance.ranks = parse_ranks();
    if (has("matching")) out.matching = parse_matching();
    if (has("bounds")) out.bounds = parse_bounds();
    if (has("weights")) out.weights = parse_weights();
    if (has("subset")) out.subset = parse_subset();
    if (has("colors")) out.colors = parse_colors();
    return out;
  }

 private:
  [[noreturn]] static void fail(int line, int column, const std::string& msg) {
    throw ParseError(line, column, msg);
  }

  void split_sections(std::string_view text) {
    std::string current;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view raw = text.substr(pos, end - pos);
      ++number;
      pos = end + 1;
      std::string_view body = raw.substr(0, raw.find('#'));
      if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
      auto tokens = tokenize(body, 1);
      if (tokens.empty()) {
        if (end == text.size()) break;
        continue;
      }
      const std::string& first = tokens.front().text;
      if (first.front() == '[') {
        if (tokens.size() != 1 || first.back() != ']') {
          fail(number, tokens.front().column, "malformed section header");
        }
        current = first.substr(1, first.size() - 2);
        if (std::find(std::begin(kSections), std::end(kSections), current) ==
            std::end(kSections)) {
          fail(number, tokens.front().column, "unknown section [" + current + "]");
        }
        sections_[current];
      } else {
        if (current.empty()) {
          fail(number, tokens.front().column, "content before any section header");
        }
        sections_[current].push_back({number, std::move(tokens), body});
      }
      if (end == text.size()) break;
    }
  }

  bool has(const std::string& name) const { return sections_.count(name) > 0; }
  const std::vector<Line>& lines(const std::string& name) {
    return sections_[name];
  }

  AgentId agent(const Token& t, int line) const {
    auto a = graph_.find_agent(t.text);
    if (!a) fail(line, t.column, "unknown agent '" + t.text + "'");
    return *a;
  }

  EdgeId edge_between(AgentId a, AgentId b, const Token& t, int line) const {
    auto e = graph_.find_edge(a, b);
    if (!e) {
      fail(line, t.column,
           "no edge " + graph_.name(a) + " " + graph_.name(b));
    }
    return *e;
  }

  static double real(const std::string& s, const Token& t, int line,
                     std::size_t offset = 0) {
    double x = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
      fail(line, t.column + static_cast<int>(offset),
           "expected a number, got '" + s + "'");
    }
    return x;
  }

  static int integer(const std::string& s, const Token& t, int line,
                     std::size_t offset = 0) {
    int x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(line, t.column + static_cast<int>(offset),
           "expected an integer, got '" + s + "'");
    }
    return x;
  }

  static void expect_count(const Line& l, std::size_t lo, std::size_t hi) {
    if (l.tokens.size() < lo) {
      fail(l.number, 0, "too few fields");
    }
    if (l.tokens.size() > hi) {
      fail(l.number, l.tokens[hi].column, "unexpected field");
    }
  }

  // "<id>: rest" lines. Returns the agent token and the tokens after ':'.
  std::pair<Token, std::vector<Token>> split_colon(
      const Line& l, std::string_view extra_separators) const {
    std::size_t colon = l.raw.find(':');
    if (colon == std::string_view::npos) {
      fail(l.number, l.tokens.front().column, "expected '<agent>:'");
    }
    auto head = tokenize(l.raw.substr(0, colon), 1);
    if (head.size() != 1) fail(l.number, 1, "expected a single agent before ':'");
    auto rest = tokenize(l.raw.substr(colon + 1), static_cast<int>(colon) + 2,
                         extra_separators);
    return {head.front(), std::move(rest)};
  }

  void build_graph() {
    if (!has("agents")) fail(1, 0, "missing [agents] section");
    std::vector<std::string> names;
    std::vector<int> caps;
    std::set<std::string> seen;
    for (const Line& l : lines("agents")) {
      expect_count(l, 1, 2);
      const Token& id = l.tokens[0];
      if (id.text.find_first_of(":=>[]") != std::string::npos) {
        fail(l.number, id.column, "invalid agent id '" + id.text + "'");
      }
      if (!seen.insert(id.text).second) {
        fail(l.number, id.column, "duplicate agent '" + id.text + "'");
      }
      int cap = 1;
      if (l.tokens.size() == 2) {
        const Token& t = l.tokens[1];
        if (t.text.rfind("cap=", 0) != 0) fail(l.number, t.column, "expected cap=<int>");
        cap = integer(t.text.substr(4), t, l.number, 4);
        if (cap < 1) fail(l.number, t.column, "capacity < 1");
      }
      names.push_back(id.text);
      caps.push_back(cap);
    }
    // Provisional graph for name lookup while reading edges.
    graph_ = Graph(names, caps, {});
    std::vector<std::pair<AgentId, AgentId>> edges;
    std::set<std::pair<AgentId, AgentId>> seen_edges;
    if (has("edges")) {
      for (const Line& l : lines("edges")) {
        expect_count(l, 2, 2);
        AgentId a = agent(l.tokens[0], l.number);
        AgentId b = agent(l.tokens[1], l.number);
        if (a == b) fail(l.number, l.tokens[1].column, "self-loop");
        if (!seen_edges.insert({std::min(a, b), std::max(a, b)}).second) {
          fail(l.number, l.tokens[0].column, "duplicate edge");
        }
        edges.emplace_back(a, b);
      }
    }
    graph_ = Graph(std::move(names), std::move(caps), std::move(edges));
  }

  Values parse_values() {
    Values values{make_endpoint_map(graph_, -1.0)};
    std::vector<char> listed(graph_.num_agents(), 0);
    for (const Line& l : lines("values")) {
      auto [head, rest] = split_colon(l, "");
      AgentId v = agent(head, l.number);
      if (listed[v]) fail(l.number, head.column, "agent listed twice");
      listed[v] = 1;
      for (const Token& t : rest) {
        std::size_t eq = t.text.find('=');
        if (eq == std::string::npos || eq == 0) {
          fail(l.number, t.column, "expected <neighbor>=<value>");
        }
        Token nb{t.text.substr(0, eq), t.column};
        EdgeId e = edge_between(v, agent(nb, l.number), nb, l.number);
        double x = real(t.text.substr(eq + 1), t, l.number, eq + 1);
        if (x < 0) fail(l.number, t.column + static_cast<int>(eq) + 1, "negative value");
        double& slot = values.at(graph_, v, e);
        if (slot >= 0) fail(l.number, t.column, "neighbor listed twice");
        slot = x;
      }
    }
    for (AgentId v = 0; v < graph_.num_agents(); ++v) {
      for (EdgeId e : graph_.incident(v)) {
        if (values.at(graph_, v, e) < 0) {
          fail(lines("values").empty() ? 1 : lines("values").back().number, 0,
               "values not total: missing " + graph_.name(v) + " -> " +
                   graph_.name(graph_.other(e, v)));
        }
      }
    }
    return values;
  }

  StrictOrders parse_orders() {
    StrictOrders orders;
    orders.order.resize(graph_.num_agents());
    for (const Line& l : lines("orders")) {
      auto [head, rest] = split_colon(l, ">");
      AgentId v = agent(head, l.number);
      if (orders.order[v]) fail(l.number, head.column, "agent listed twice");
      std::vector<AgentId> list;
      std::vector<char> used(graph_.num_agents(), 0);
      for (const Token& t : rest) {
        AgentId b = agent(t, l.number);
        edge_between(v, b, t, l.number);
        if (used[b]) fail(l.number, t.column, "neighbor listed twice");
        used[b] = 1;
        list.push_back(b);
      }
      if (static_cast<int>(list.size()) != graph_.degree(v)) {
        fail(l.number, 0, "order of " + graph_.name(v) +
                              " is not a permutation of its neighbors");
      }
      orders.order[v] = std::move(list);
    }
    return orders;
  }

  Ranks parse_ranks() {
    Ranks ranks{make_endpoint_map<std::optional<int>>(graph_, std::nullopt)};
    std::vector<std::set<int>> used(graph_.num_agents());
    for (const Line& l : lines("ranks")) {
      expect_count(l, 3, 3);
      AgentId v = agent(l.tokens[0], l.number);
      EdgeId e = edge_between(v, agent(l.tokens[1], l.number), l.tokens[1], l.number);
      int r = integer(l.tokens[2].text, l.tokens[2], l.number);
      if (r < 1 || r > graph_.degree(v)) fail(l.number, l.tokens[2].column, "rank out of range");
      auto& slot = ranks.at(graph_, v, e);
      if (slot) fail(l.number, l.tokens[1].column, "rank given twice");
      if (!used[v].insert(r).second) fail(l.number, l.tokens[2].column, "duplicate rank position");
      slot = r;
    }
    return ranks;
  }

  QMatching parse_matching() {
    std::vector<EdgeId> edges;
    std::vector<int> load(graph_.num_agents(), 0);
    std::set<EdgeId> seen;
    for (const Line& l : lines("matching")) {
      expect_count(l, 2, 2);
      AgentId a = agent(l.tokens[0], l.number);
      EdgeId e = edge_between(a, agent(l.tokens[1], l.number), l.tokens[1], l.number);
      if (!seen.insert(e).second) fail(l.number, l.tokens[0].column, "matching edge listed twice");
      for (AgentId x : {graph_.edge(e).u, graph_.edge(e).v}) {
        if (++load[x] > graph_.capacity(x)) {
          fail(l.number, l.tokens[0].column,
               "not a q-matching: capacity of " + graph_.name(x) + " exceeded");
        }
      }
      edges.push_back(e);
    }
    return make_matching(std::move(edges));
  }

  EndpointMap<ValueBound> parse_bounds() {
    auto bounds = make_endpoint_map(graph_, ValueBound{});
    auto given = make_endpoint_map<char>(graph_, 0);
    for (const Line& l : lines("bounds")) {
      expect_count(l, 3, 4);
      AgentId v = agent(l.tokens[0], l.number);
      EdgeId e = edge_between(v, agent(l.tokens[1], l.number), l.tokens[1], l.number);
      int side = graph_.side(e, v);
      if (given[e][side]) fail(l.number, l.tokens[1].column, "bounds given twice");
      given[e][side] = 1;
      ValueBound b;
      std::set<char> keys;
      for (std::size_t i = 2; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        if (t.text.size() < 3 || t.text[1] != '=' ||
            (t.text[0] != 'l' && t.text[0] != 'u') || !keys.insert(t.text[0]).second) {
          fail(l.number, t.column, "expected l=<value> or u=<value>");
        }
        double x = real(t.text.substr(2), t, l.number, 2);
        (t.text[0] == 'l' ? b.lower : b.upper) = x;
      }
      if (b.lower < 0 || b.lower > b.upper) {
        fail(l.number, l.tokens[2].column, "bounds must satisfy 0 <= l <= u");
      }
      bounds[e][side] = b;
    }
    return bounds;
  }

  std::vector<double> parse_weights() {
    std::vector<double> w(graph_.num_agents(), 1.0);
    std::vector<char> seen(graph_.num_agents(), 0);
    for (const Line& l : lines("weights")) {
      expect_count(l, 2, 2);
      AgentId v = agent(l.tokens[0], l.number);
      if (seen[v]) fail(l.number, l.tokens[0].column, "weight given twice");
      seen[v] = 1;
      double x = real(l.tokens[1].text, l.tokens[1], l.number);
      if (x <= 0) fail(l.number, l.tokens[1].column, "weight must be positive");
      w[v] = x;
    }
    return w;
  }

  std::vector<AgentId> parse_subset() {
    std::vector<AgentId> out;
    for (const Line& l : lines("subset")) {
      for (const Token& t : l.tokens) out.push_back(agent(t, l.number));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<EdgeColor> parse_colors() {
    std::vector<std::optional<EdgeColor>> colors(graph_.num_edges());
    int last_line = 1;
    for (const Line& l : lines("colors")) {
      expect_count(l, 3, 3);
      last_line = l.number;
      AgentId a = agent(l.tokens[0], l.number);
      EdgeId e = edge_between(a, agent(l.tokens[1], l.number), l.tokens[1], l.number);
      const std::string& c = l.tokens[2].text;
      if (c != "r" && c != "b") fail(l.number, l.tokens[2].column, "color must be r or b");
      if (colors[e]) fail(l.number, l.tokens[0].column, "edge colored twice");
      colors[e] = c == "r" ? EdgeColor::kRed : EdgeColor::kBlue;
    }
    std::vector<EdgeColor> out;
    for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
      if (!colors[e]) fail(last_line, 0, "edge " + format_edge(graph_, e) + " has no color");
      out.push_back(*colors[e]);
    }
    return out;
  }

  std::map<std::string, std::vector<Line>> sections_;
  Graph graph_;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) { return Parser(text).run(); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InstanceFile read_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

std::string format_number(double x) {
  if (x == 0) return "0";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_edge(const Graph& g, EdgeId e) {
  return g.name(g.edge(e).u) + " " + g.name(g.edge(e).v);
}

std::string format_agents_section(const Graph& g) {
  std::string out = "[agents]\n";
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    out += g.name(a);
    if (g.capacity(a) != 1) out += " cap=" + std::to_string(g.capacity(a));
    out += '\n';
  }
  return out;
}

std::string format_edges_section(const Graph& g) {
  std::string out = "[edges]\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) out += format_edge(g, e) + '\n';
  return out;
}

std::string format_values_section(const Graph& g, const Values& values) {
  std::string out = "[values]\n";
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    if (g.degree(v) == 0) continue;
    out += g.name(v) + ":";
    for (EdgeId e : g.incident(v)) {
      out += ' ' + g.name(g.other(e, v)) + '=' +
             format_number(values.at(g, v, e));
    }
    out += '\n';
  }
  return out;
}

std::string format_orders_section(const Graph& g, const StrictOrders& orders) {
  std::string out = "[orders]\n";
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    const auto& list = orders.order[v];
    if (!list || list->empty()) continue;
    out += g.name(v) + ":";
    for (std::size_t i = 0; i < list->size(); ++i) {
      out += (i == 0 ? " " : " > ") + g.name((*list)[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_ranks_section(const Graph& g, const Ranks& ranks) {
  std::string out = "[ranks]\n";
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    for (EdgeId e : g.incident(v)) {
      if (const auto& r = ranks.at(g, v, e)) {
        out += g.name(v) + ' ' + g.name(g.other(e, v)) + ' ' +
               std::to_string(*r) + '\n';
      }
    }
  }
  return out;
}

std::string format_matching_section(const Graph& g, const QMatching& m) {
  std::string out = "[matching]\n";
  for (EdgeId e : m.edges) out += format_edge(g, e) + '\n';
  return out;
}

std::string format_colors_section(const Graph& g,
                                  const std::vector<EdgeColor>& colors) {
  std::string out = "[colors]\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out += format_edge(g, e) + (colors[e] == EdgeColor::kRed ? " r\n" : " b\n");
  }
  return out;
}

std::string format_instance(const InstanceFile& file) {
  const Graph& g = file.instance.graph;
  std::string out = format_agents_section(g) + format_edges_section(g);
  if (file.instance.values) out += format_values_section(g, *file.instance.values);
  if (file.instance.orders) out += format_orders_section(g, *file.instance.orders);
  if (file.instance.ranks) out += format_ranks_section(g, *file.instance.ranks);
  if (file.matching) out += format_matching_section(g, *file.matching);
  if (file.bounds) {
    out += "[bounds]\n";
    for (AgentId v = 0; v < g.num_agents(); ++v) {
      for (EdgeId e : g.incident(v)) {
        const ValueBound& b = (*file.bounds)[e][g.side(e, v)];
        if (b.lower == 0 && std::isinf(b.upper)) continue;
        out += g.name(v) + ' ' + g.name(g.other(e, v));
        if (b.lower != 0) out += " l=" + format_number(b.lower);
        if (!std::isinf(b.upper)) out += " u=" + format_number(b.upper);
        out += '\n';
      }
    }
  }
  if (file.weights) {
    out += "[weights]\n";
    for (AgentId v = 0; v < g.num_agents(); ++v) {
      if ((*file.weights)[v] != 1.0) {
        out += g.name(v) + ' ' + format_number((*file.weights)[v]) + '\n';
      }
    }
  }
  if (file.subset) {
    out += "[subset]\n";
    for (AgentId a : *file.subset) out += g.name(a) + '\n';
  }
  if (file.colors) out += format_colors_section(g, *file.colors);
  return out;
}

}  // namespace stablefix
