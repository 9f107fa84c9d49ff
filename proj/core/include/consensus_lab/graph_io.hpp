#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "consensus_lab/schedule.hpp"
#include "consensus_lab/weighted_digraph.hpp"

namespace consensus_lab {

// Line-oriented graph text format:
//
//   # comment (also allowed after content)
//   n=4                     first non-comment line
//   bounds 0.5 5            optional: declared [e_min, e_max]
//   arc 2 1 1/2             arc from 2 to 1, optional weight (decimal or p/q)
//   arc 1 2 1
//
// A file may hold a sequence of graphs on the same nodes. `next` starts the
// following graph, `schedule finite|periodic` picks the schedule kind (finite
// by default) and `first_time <t>` its start (0 by default).

class ParseError : public std::runtime_error {
 public:
  /// what() reads "<source>:<line>: <message>", or "line <line>: <message>"
  /// when no source name is given.
  ParseError(int line, const std::string& message, const std::string& source = "");
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

struct GraphFile {
  int n = 0;
  bool weighted = false;
  std::optional<WeightBounds> bounds;
  GraphSchedule::Kind kind = GraphSchedule::Kind::finite;
  Time first_time = 0;
  std::vector<std::vector<WeightedArc>> graphs;

  /// The only graph of the file; std::invalid_argument for sequences. Weight
  /// violations surface as std::invalid_argument naming the arc.
  WeightedDigraph single() const;
  std::vector<WeightedDigraph> all() const;
  GraphSchedule schedule(std::string id) const;
};

/// Throws ParseError with the offending line number.
GraphFile parse_graph_text(std::string_view text);

/// Throws std::runtime_error naming the path when it cannot be read.
GraphFile read_graph_file(const std::filesystem::path& path);

/// Writes `g` in the text format; weights are printed when `with_weights`.
std::string format_graph(const WeightedDigraph& g, bool with_weights);

/// Parses a decimal ("0.5", "1e-3") or a ratio of decimals ("1/2").
std::optional<double> parse_weight(std::string_view token);

}  // namespace consensus_lab
