#pragma once

#include <optional>
#include <vector>

#include "cdc/cycles.hpp"
#include "cdc/graph.hpp"

namespace cdc {

/// One end of an edge: side 0 is the `u` end, side 1 the `v` end.
struct EdgeEnd {
  EdgeId edge = 0;
  int side = 0;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Closed walk around a face. Dart (e, s) leaves the vertex at end s of e.
struct FacialWalk {
  std::vector<EdgeEnd> darts;
  bool is_cycle = false;

  std::vector<EdgeId> edges() const;
  int length() const { return static_cast<int>(darts.size()); }
};

/// Rotation system over a graph, validated as genus 0 (per component) on construction.
class PlaneEmbedding {
 public:
  PlaneEmbedding() = default;
  PlaneEmbedding(Graph g, std::vector<std::vector<EdgeEnd>> rotation);

  const Graph& graph() const { return graph_; }
  const std::vector<EdgeEnd>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<EdgeEnd>>& rotations() const { return rotation_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<FacialWalk>& faces() const { return faces_; }
  const FacialWalk& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  int face_of_dart(EdgeEnd d) const { return dart_face_[static_cast<std::size_t>(2 * d.edge + d.side)]; }
  /// The two faces on either side of e (dart (e,0) and dart (e,1)).
  std::pair<int, int> faces_of_edge(EdgeId e) const { return {face_of_dart({e, 0}), face_of_dart({e, 1})}; }
  /// Face boundary as an edge set (each edge once).
  EdgeSet face_edges(int f) const;

  Vertex vertex_of_end(EdgeEnd end) const {
    const Edge& ed = graph_.edge(end.edge);
    return end.side == 0 ? ed.u : ed.v;
  }
  /// Successor of `end` in the rotation at its vertex.
  EdgeEnd next_in_rotation(EdgeEnd end) const;
  EdgeEnd prev_in_rotation(EdgeEnd end) const;

  friend bool operator==(const PlaneEmbedding& a, const PlaneEmbedding& b) {
    return a.graph_ == b.graph_ && a.rotation_ == b.rotation_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<EdgeEnd>> rotation_;
  std::vector<int> end_position_;  // index of end (2e+side) in its vertex's rotation
  std::vector<FacialWalk> faces_;
  std::vector<int> dart_face_;
};

/// Faces of a connected, bridgeless plane embedding.
std::vector<FacialWalk> trace_faces(const PlaneEmbedding& e);

struct DualResult {
  Graph graph;
  PlaneEmbedding embedding;
  /// dual edge i crosses primal edge edge_map[i]; this is always the identity.
  std::vector<EdgeId> edge_map;
};
DualResult dual(const PlaneEmbedding& e);

/// Genus-0 rotation system for a connected graph, or nullopt when it is not planar.
std::optional<PlaneEmbedding> planar_embed(const Graph& g);

/// Induced subgraph on `keep` with the restricted rotation system (a plane embedding of it).
struct InducedEmbedding {
  InducedSubgraph sub;
  PlaneEmbedding embedding;
};
InducedEmbedding induced_embedding(const PlaneEmbedding& e, std::span<const Vertex> keep);

/// Same embedding with every rotation reversed.
PlaneEmbedding mirror(const PlaneEmbedding& e);

/// Colour per face in {1,2,3,4}. Faces on the side of h containing face 0 get {1,2};
/// inner_choice is the colour of face 0 and outer_choice that of the lowest exterior face.
std::vector<int> four_face_colouring(const PlaneEmbedding& e, const Cycle& h, int inner_choice, int outer_choice);
/// Same colouring but anchored: face `colour1_face` gets 1 and `colour3_face` gets 3 (they must lie on opposite sides).
std::vector<int> four_face_colouring_anchored(const PlaneEmbedding& e, const Cycle& h, int colour1_face,
                                              int colour3_face);

/// Edges with exactly one incident face coloured 1 or j.
EdgeSet even_subgraph_G1j(const PlaneEmbedding& e, const std::vector<int>& colouring, int j);

/// Faces lying on each side of the cycle c (side of face 0 first).
std::pair<std::vector<int>, std::vector<int>> face_sides(const PlaneEmbedding& e, const Cycle& c);

}  // namespace cdc
