#ifndef LVED_IO_HPP
#define LVED_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lved/graph.hpp"
#include "lved/interval.hpp"
#include "lved/labels.hpp"
#include "lved/threedm.hpp"

namespace lved {

/// Parsed graph file: `p <n> <m>`, edge lines `e <u> <v>` (optionally
/// `e <u> <v> <k>` carrying an edge label), optional interval lines
/// `i <vertex> <l> <r>`, optional vertex-label lines `v <id> <t> <s>`,
/// comment lines starting with `c`.
struct GraphFile {
    Graph graph{0, {}};
    std::optional<IntervalRepresentation> intervals;
    std::optional<LabeledBlockGraph> labels;  // present iff any v/k records appeared
};

/// All readers throw std::runtime_error with a line-numbered message on
/// malformed input.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g,
                 const IntervalRepresentation* iv = nullptr,
                 const LabeledBlockGraph* labels = nullptr);
void write_graph_file(const std::string& path, const Graph& g,
                      const IntervalRepresentation* iv = nullptr,
                      const LabeledBlockGraph* labels = nullptr);

/// Vertex-set file: one vertex id per line, `c` comments allowed.
std::vector<int> read_vertex_set(std::istream& in);
std::vector<int> read_vertex_set_file(const std::string& path);
void write_vertex_set(std::ostream& out, const std::vector<int>& set);

/// 3-DM instance file: `q <q> <p>` then p lines `t <u> <v> <w>`.
ThreeDMInstance read_3dm(std::istream& in);
ThreeDMInstance read_3dm_file(const std::string& path);
void write_3dm(std::ostream& out, const ThreeDMInstance& inst);

}  // namespace lved

#endif
