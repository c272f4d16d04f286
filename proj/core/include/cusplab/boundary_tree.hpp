#pragma once

#include <utility>
#include <vector>

#include "cusplab/metric_graph.hpp"

namespace cusplab {

// Articulation vertices of a connected graph, ascending. Disconnected input
// is a domain error.
std::vector<int> cut_vertices(const MetricGraph& g);

struct BlockCutTree {
  struct Block {
    std::vector<int> vertices;  // ascending
    bool is_bridge = false;
  };
  std::vector<Block> blocks;
  std::vector<int> cuts;
  std::vector<std::pair<int, int>> edges;  // (block index, cut vertex id)
};

BlockCutTree block_cut_tree(const MetricGraph& g);

// All unordered pairs whose removal disconnects the rest, lexicographically
// sorted. Exhaustive by design: the graphs here are desk-sized and the dumb
// enumeration doubles as a reference point for cleverer code.
std::vector<std::pair<int, int>> enumerate_cut_pairs(const MetricGraph& g);

// Does removing sep leave the two vertices of `other` in different
// components? Overlapping pairs are an input error.
bool pair_separates_pair(const MetricGraph& g, std::pair<int, int> sep,
                         std::pair<int, int> other);

// Cut pairs of one 2-connected graph, grouped by the crossing relation
// (mutual separation). Classes of two or more pairs sweep out necklaces;
// isolated pairs are inseparable. Separation between disjoint cut pairs must
// come out symmetric; if it ever does not, that is a hard internal error.
struct PairClassification {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> crossing_class;          // index into necklaces, -1 = isolated
  std::vector<std::vector<int>> necklaces;  // vertex sets, each sorted
};

PairClassification classify_pairs(const MetricGraph& g);

// Maximal cliques of the relation "no cut pair avoiding both separates u
// from v". Note the relation is not transitive, hence cliques rather than
// classes.
std::vector<std::vector<int>> maximal_inseparable_sets(const MetricGraph& g);

enum class TreeVertexType { CutPoint, Pair, Necklace, Rigid };

const char* tree_type_name(TreeVertexType t);  // "cutpoint" | "pair" | "necklace" | "rigid"

// Group-theoretic reading of each vertex type (vertex stabilizers of the
// splitting the tree encodes).
const char* jsj_label(TreeVertexType t);

// Tree assembled from cut points, inseparable cut pairs, necklaces and
// maximal inseparable sets; edges join a separator-type vertex (cut point or
// pair) to each class-type vertex (necklace or rigid) containing its set.
// Per-block pair analysis excludes pairs touching an articulation point of
// the whole graph: the cut point splits on its own, so such a pair is not a
// two-point separator and must not feed necklaces or the inseparability
// relation (keeping one produces cycles instead of a tree).
struct CombinedTree {
  struct Vertex {
    TreeVertexType type = TreeVertexType::Rigid;
    std::vector<int> set;  // ascending
  };
  std::vector<Vertex> vertices;            // canonical order: type rank, then set
  std::vector<std::pair<int, int>> edges;  // normalized, sorted
};

CombinedTree combined_tree(const MetricGraph& g);

// All adjacency-preserving permutations, brute force. Guarded to n <= 8.
std::vector<std::vector<int>> graph_automorphisms(const MetricGraph& g);

bool is_automorphism(const MetricGraph& g, const std::vector<int>& sigma);

// Action of a graph permutation on the tree: each vertex set is pushed
// through sigma and matched against the tree (same type, same set). valid
// means every image matched, the map is a bijection, and edges map to edges.
struct TreeMap {
  std::vector<int> vertex_image;
  bool valid = false;
};

TreeMap induced_tree_map(const CombinedTree& t, const std::vector<int>& sigma);

}  // namespace cusplab
