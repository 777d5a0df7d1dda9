#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polysurf {

// Simple undirected graph, adjacency-set representation with sorted
// neighbor lists.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edges_; }

    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

  private:
    std::vector<std::vector<int>> adj_;
    std::size_t edges_ = 0;
};

// Generators.
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int d);
Graph petersen();
Graph path_graph(int n);
Graph cycle_graph(int n);

// Each edge replaced by a path with k internal vertices; the original
// vertices keep their indices, subdivision vertices are appended.
Graph subdivide_graph(const Graph& g, int k);

// Erdos-Renyi G(n, num/den) with a seeded generator.
Graph random_gnp(int n, long num, long den, std::uint64_t seed);

// Random planar graph: random spanning tree plus random extra edges kept
// only when planarity survives, until m_target edges (or saturation).
Graph random_planar(int n, int m_target, std::uint64_t seed);

// Exact planarity decision (Boyer-Myrvold).
bool is_planar(const Graph& g);

// Generic subgraph-isomorphism witness, pattern limited to 10 vertices.
// witness[i] = host vertex for pattern vertex i.
std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern);

// K_{5,t} detection by common-neighborhood search over degree-filtered
// 5-subsets; avoids generic matching on an 86-vertex pattern.
struct K5tWitness {
    std::vector<int> left;    // the 5 vertices
    std::vector<int> right;   // t common neighbors
};
std::optional<K5tWitness> contains_k5t(const Graph& host, int t);

// Graph isomorphism via color refinement plus backtracking.
// Returns map from vertices of a to vertices of b.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

// 3-trees. A stack step records the new vertex and its triangle.
struct StackStep {
    int vertex;
    int u, v, w;
};

// Stacks n-4 vertices onto uniformly random triangles of the growing
// 3-tree (mt19937_64, index = next() % triangle_count, documented for
// reproducibility).
Graph random_three_tree(int n, std::uint64_t seed);

// Recognizer: repeatedly removes a degree-3 vertex whose neighborhood is a
// triangle. Succeeds exactly on 3-trees; returns the construction sequence
// (in stacking order).
std::optional<std::vector<StackStep>> is_three_tree(const Graph& g);

// K_{3,3} plus a cycle through one part: the unique minimal nonplanar 3-tree.
Graph triple_stacked_triangle();

// Realizability obstructions (necessary conditions only).
enum class ObstructionKind { K5, K5_81, TripleStackedTriangle };

struct Obstruction {
    ObstructionKind kind;
    std::vector<int> witness;  // vertices inducing a supergraph of the pattern
};

const char* obstruction_kind_name(ObstructionKind kind);

// Scans for all obstruction kinds present. A nonempty result certifies the
// graph is not realizable by a convex-polyhedral surface; an empty result
// certifies nothing.
std::vector<Obstruction> obstruction_scan(const Graph& g);

struct DensityStats {
    int n = 0;
    std::size_t m = 0;
    double avg_degree = 0;
    double kst_upper = 0;              // n^(9/5), constant-free reference
    int nearest_pow2_dim = 0;          // d with 2^d nearest to n
    std::size_t hypercube_edges = 0;   // 2^d * d / 2 at that d
};

DensityStats density_stats(const Graph& g);

}  // namespace polysurf
