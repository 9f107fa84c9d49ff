#include "consensus_lab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace consensus_lab {

ParseError::ParseError(int line, const std::string& message, const std::string& source)
    : std::runtime_error((source.empty() ? "line " : source + ":") + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

namespace {

std::optional<double> parse_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::optional<double> parse_weight(std::string_view token) {
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    auto num = parse_double(token.substr(0, slash));
    auto den = parse_double(token.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  return parse_double(token);
}

GraphFile parse_graph_text(std::string_view text) {
  GraphFile file;
  int line_no = 0;
  bool have_n = false;
  std::optional<bool> arcs_weighted;
  std::size_t pos = 0;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (!have_n) {
      std::string_view head = tok[0];
      if (tok.size() != 1 || head.substr(0, 2) != "n=")
        throw ParseError(line_no, "expected 'n=<int>' as the first line");
      auto n = parse_int(head.substr(2));
      if (!n || *n < 1 || *n > 1'000'000) throw ParseError(line_no, "node count must be a positive integer");
      file.n = static_cast<int>(*n);
      file.graphs.emplace_back();
      have_n = true;
      continue;
    }

    const std::string_view kw = tok[0];
    if (kw == "arc") {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected 'arc <k> <l> [<weight>]'");
      auto k = parse_int(tok[1]);
      auto l = parse_int(tok[2]);
      if (!k || !l) throw ParseError(line_no, "arc endpoints must be integers");
      if (*k < 1 || *k > file.n || *l < 1 || *l > file.n)
        throw ParseError(line_no, "arc endpoint outside 1.." + std::to_string(file.n));
      if (*k == *l) throw ParseError(line_no, "self-loops are not allowed");
      const bool has_w = tok.size() == 4;
      if (arcs_weighted && *arcs_weighted != has_w)
        throw ParseError(line_no, "either every arc carries a weight or none does");
      arcs_weighted = has_w;
      double w = 1.0;
      if (has_w) {
        auto parsed = parse_weight(tok[3]);
        if (!parsed) throw ParseError(line_no, "bad weight '" + std::string(tok[3]) + "'");
        if (!(*parsed > 0.0)) throw ParseError(line_no, "weights must be positive");
        w = *parsed;
      }
      Arc a{static_cast<Node>(*k), static_cast<Node>(*l)};
      for (const auto& existing : file.graphs.back())
        if (existing.arc == a) throw ParseError(line_no, "duplicate arc");
      file.graphs.back().push_back(WeightedArc{a, w});
    } else if (kw == "bounds") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'bounds <e_min> <e_max>'");
      auto lo = parse_weight(tok[1]);
      auto hi = parse_weight(tok[2]);
      if (!lo || !hi || !(*lo > 0.0) || *lo > *hi) throw ParseError(line_no, "bounds must satisfy 0 < e_min <= e_max");
      file.bounds = WeightBounds{*lo, *hi};
    } else if (kw == "next") {
      if (tok.size() != 1) throw ParseError(line_no, "'next' takes no arguments");
      file.graphs.emplace_back();
    } else if (kw == "schedule") {
      if (tok.size() != 2 || (tok[1] != "finite" && tok[1] != "periodic"))
        throw ParseError(line_no, "expected 'schedule finite' or 'schedule periodic'");
      file.kind = tok[1] == "periodic" ? GraphSchedule::Kind::periodic : GraphSchedule::Kind::finite;
    } else if (kw == "first_time") {
      auto t = tok.size() == 2 ? parse_int(tok[1]) : std::nullopt;
      if (!t) throw ParseError(line_no, "expected 'first_time <int>'");
      file.first_time = *t;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(kw) + "'");
    }
  }
  if (!have_n) throw ParseError(std::max(line_no, 1), "missing 'n=<int>' line");
  file.weighted = arcs_weighted.value_or(false);
  return file;
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

std::vector<WeightedDigraph> GraphFile::all() const {
  std::vector<WeightedDigraph> out;
  out.reserve(graphs.size());
  for (const auto& arcs : graphs) {
    std::optional<WeightBounds> b = bounds;
    if (!b && !weighted) b = WeightBounds{1.0, 1.0};
    out.push_back(WeightedDigraph::from_arcs(n, arcs, b));
  }
  return out;
}

WeightedDigraph GraphFile::single() const {
  if (graphs.size() != 1)
    throw std::invalid_argument("expected a single graph, file holds " + std::to_string(graphs.size()));
  return all().front();
}

GraphSchedule GraphFile::schedule(std::string id) const {
  auto list = all();
  if (kind == GraphSchedule::Kind::periodic) return GraphSchedule::periodic(std::move(list), first_time, std::move(id));
  return GraphSchedule::finite(std::move(list), first_time, std::move(id));
}

std::string format_graph(const WeightedDigraph& g, bool with_weights) {
  std::ostringstream os;
  os.precision(17);
  os << "n=" << g.size() << "\n";
  if (with_weights) os << "bounds " << g.bounds().min << " " << g.bounds().max << "\n";
  for (const auto& [arc, w] : g.weights()) {
    os << "arc " << arc.from << " " << arc.to;
    if (with_weights) os << " " << w;
    os << "\n";
  }
  return os.str();
}

}  // namespace consensus_lab
