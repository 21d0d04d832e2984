#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdc/cdc.hpp"
#include "cdc/cycles.hpp"
#include "cdc/embedding.hpp"
#include "cdc/graph.hpp"

namespace cdc {

/// A constructed cover together with the proof branches taken to build it.
struct ConstructedCdc {
  Cdc cdc;
  std::vector<std::string> case_trace;
};

/// Every face boundary once. Needs a 2-connected plane graph (all faces cycles).
Cdc face_boundary_cdc(const PlaneEmbedding& e);

// --- antiprisms and the nested-cycle graphs -------------------------------

/// {I, all triangles, O}, {odd triangles doubled, O doubled}, {even triangles doubled, I doubled}.
std::vector<Cdc> antiprism_three_cdcs(int k);

/// The l(l+1)/2 CDCs of size f, one per choice of two level cycles (or one level cycle
/// taken twice), completed by forced triangle multiplicities. Sorted.
std::vector<Cdc> theorem2_enumerate_fcdcs(int k, int l);

// --- planar 4-connected graphs with a Hamiltonian cycle -------------------

/// (n-1)^- CDC that contains h, or that contains two cycles meeting in one edge at v whose
/// symmetric difference is h. v must have degree 4 or 5.
ConstructedCdc seyffarth_small_cdc(const PlaneEmbedding& e, const Cycle& h, Vertex v);

// --- rings in cubic plane graphs ------------------------------------------

enum class RingKind { cycle_ring, wheel_ring };

struct RingStructure {
  RingKind kind = RingKind::cycle_ring;
  int centre_face = -1;
  std::vector<int> faces;       // C^1..C^k as face ids, in order around the centre
  std::vector<Cycle> cycles;    // C^1..C^k
  std::vector<EdgeId> shared;   // shared[i] = the edge in C^i and C^{i+1}
  Cycle boundary;               // B: the centre face boundary
  int length() const { return static_cast<int>(cycles.size()) + (kind == RingKind::wheel_ring ? 1 : 0); }
};

/// Ring around face `dual_vertex` of a cubic plane graph: a cycle ring when the face has even
/// length, a wheel ring (B included) when odd. nullopt when the surrounding faces do not form a ring.
std::optional<RingStructure> find_ring(const PlaneEmbedding& e, int dual_vertex);

/// D_1, D_2 replacing C^1..C^k. Needs an even cycle ring.
std::array<Cycle, 2> cycle_ring_exchange(const Graph& g, const RingStructure& r);
/// O_1, O_2, O_3 replacing B and C^1..C^k, with C = C^{chosen+1}. Needs a wheel ring.
std::array<Cycle, 3> wheel_ring_exchange(const Graph& g, const RingStructure& r, int chosen = 0);
/// Replaces the ring's cycles in `cover` by the exchange output; result verified.
Cdc apply_ring_exchange(const Graph& g, const Cdc& cover, const RingStructure& r, int chosen = 0);

/// CDC of size <= n/2 for a 2-connected planar cubic simple graph with n > 4.
ConstructedCdc cubic_planar_half_cdc(const PlaneEmbedding& e);

/// One side of a 3-edge-cut merge: a cubic graph, its CDC, the vertex standing for the other
/// side, and the map from its edges to edges of the merged graph (the marker's three edges
/// map to the three cut edges; every other edge to its own image).
struct CutSide {
  const Graph* graph = nullptr;
  const Cdc* cover = nullptr;
  Vertex marker = -1;
  std::span<const EdgeId> to_target;
};

/// Pairs the three cycles through each marker along the cut: size |c1| + |c2| - 3.
Cdc merge_cubic_dual_cdcs(const Graph& target, const CutSide& side1, const CutSide& side2);

// --- cubic 3-cut joins ----------------------------------------------------

struct JoinResult {
  Graph graph;
  std::array<EdgeId, 3> cut{};
  std::vector<EdgeId> g_edge_map;  // edge of g -> edge of the join (edges at x -> cut edges)
  std::vector<EdgeId> h_edge_map;
  std::vector<Vertex> g_vertex_map;  // -1 for x
  std::vector<Vertex> h_vertex_map;  // -1 for y
};

/// G - x and H - y with dangling edge i of x joined to dangling edge matching[i] of y.
/// Dangling edges are taken in incidence order.
JoinResult join_equiv(const Graph& g, Vertex x, const Graph& h, Vertex y, std::array<int, 3> matching = {0, 1, 2});

/// Merges CDCs of g and h into one of their join (size |cg| + |ch| - 3).
Cdc join_cdc(const JoinResult& j, const Graph& g, const Cdc& cg, Vertex x, const Graph& h, const Cdc& ch, Vertex y);

/// t Petersen graphs chained by joins; 8t + 2 vertices.
Graph petersen_chain(int t);

// --- triangulations -------------------------------------------------------

struct TriangulationPiece {
  Graph graph;
  PlaneEmbedding embedding;
  std::vector<Vertex> vertex_origin;  // piece vertex -> vertex of the split triangulation
  std::vector<EdgeId> edge_origin;
  bool is_k4 = false;
};

struct TriangleSplit {
  std::array<Vertex, 3> triangle{};
  std::array<EdgeId, 3> triangle_edges{};
  std::array<TriangulationPiece, 2> parts;
};

/// Lowest separating triangle (lexicographic vertex triple), if any.
std::optional<std::array<Vertex, 3>> find_separating_triangle(const Graph& t);
/// The two triangulations on either side of a separating triangle, each keeping a copy of it.
TriangleSplit split_along_triangle(const PlaneEmbedding& t, std::array<Vertex, 3> triangle);

struct MarkerLink {
  int piece_a = -1;
  int piece_b = -1;
  std::array<Vertex, 3> triangle{};  // vertices of the root triangulation
};

struct DecompositionTree {
  std::vector<TriangulationPiece> pieces;  // vertex/edge origins refer to the root
  std::vector<MarkerLink> links;
};

/// Pieces after splitting along separating triangles until none remain.
DecompositionTree jackson_yu_tree(const PlaneEmbedding& t);

/// CDC of T glued from CDCs of T1 and T2 along the marker triangle (edges of the target).
/// Size <= |c1| + |c2|, and |c1| + |c2| - 2 when the triangle occurs twice.
Cdc merge_triangulation_cdcs(const Graph& target, const Cdc& c1, std::span<const EdgeId> to_target1,
                             const Cdc& c2, std::span<const EdgeId> to_target2,
                             std::array<EdgeId, 3> marker);

/// Splits t recursively and merges piece covers back; piece covers come from `piece_cdc`.
ConstructedCdc triangulation_cdc_from_pieces(const PlaneEmbedding& t,
                                             const std::function<Cdc(const Graph&)>& piece_cdc);

/// Sum of c(piece) over the decomposition tree.
int theorem3_upper_bound(const PlaneEmbedding& t, int workers = 0);

// --- Hamiltonian graphs ---------------------------------------------------

/// Three even subgraphs covering every edge exactly twice. Loops and parallel edges allowed.
std::array<EdgeSet, 3> hamiltonian_three_even_cover(const Graph& g, const Cycle& h);

}  // namespace cdc
