#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ksi {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Counts of input edges that were normalized away during construction.
struct BuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Node ids are dense in [0, n). Every neighbor list is sorted ascending and
/// free of duplicates and self-loops; adjacency is symmetric. Copies are cheap
/// to share across threads because nothing mutates after construction.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an unordered edge list. Self-loops and repeated
    /// edges (in either orientation) are dropped and counted in `stats`.
    /// Throws ParameterError naming the first edge with an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            BuildStats* stats = nullptr);

    [[nodiscard]] std::size_t node_count() const noexcept { return offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    [[nodiscard]] std::span<const NodeId> neighbors(NodeId i) const {
        return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
    }
    [[nodiscard]] std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }
    [[nodiscard]] std::vector<std::size_t> degrees() const;

    /// Binary search in the sorted neighbor list of `u`.
    [[nodiscard]] bool has_edge(NodeId u, NodeId v) const;

    /// Canonical edge list: u < v, sorted lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Throws NodeIndexError unless i < n.
    void check_node(NodeId i) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
};

/// Result of parsing an edge-list file: the compacted graph plus the original
/// label of every dense node id.
struct ParsedGraph {
    Graph graph;
    std::vector<std::uint64_t> labels;
    BuildStats stats;
};

/// Parses whitespace-separated "u v" lines. Lines starting with '#' are
/// comments, blank lines are skipped, tokens after the second are ignored.
/// Labels are compacted to 0..n-1 in first-appearance order, except that a
/// leading "# nodes=<n>" header pre-registers labels 0..n-1 so isolated nodes
/// of serialized graphs survive a round trip.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph read_edge_list_file(const std::string& path);

/// Writes "# nodes=<n> edges=<m>" followed by the canonical edge list.
/// `header_lines` are emitted first, each prefixed with "# ".
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> header_lines = {});
std::string serialize_edge_list(const Graph& g, std::span<const std::string> header_lines = {});

/// Connected components ordered by their smallest member; members ascending.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

}  // namespace ksi
