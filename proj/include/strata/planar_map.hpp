#pragma once

#include <vector>

#include "strata/signature.hpp"

namespace strata {

// Combinatorial embedding of a signature in the disc, circle included.
// Vertices are the 4d boundary labels, the d blue-red crossings and the
// pencil points; edges are circle arcs and chord segments.  The
// embedding of a valid signature is unique rel boundary, so it can be
// reconstructed from the chord data alone.
class PlanarMap {
 public:
  enum class VertexKind : std::uint8_t { Boundary, Crossing, Pencil };

  struct Vertex {
    VertexKind kind;
    int index;  // label value / crossing index / pencil index
  };

  struct CrossingInfo {
    Chord blue, red;
  };

  struct HalfEdge {
    int from = -1, to = -1;
    int chord = -1;    // index into chords(), or -1 for a circle arc
    int segment = -1;  // segment index along the chord, or arc index
    int twin = -1;
  };

  struct Face {
    std::vector<int> walk;  // outgoing half-edge ids around the face
  };

  static PlanarMap build(const Signature& s);

  int n() const { return n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<CrossingInfo>& crossings() const { return crossings_; }
  const std::vector<HalfEdge>& half_edges() const { return halves_; }
  const std::vector<Chord>& chords() const { return chords_; }
  // Vertex ids along a chord, from chord.lo to chord.hi.
  const std::vector<int>& chord_path(int chord_index) const { return paths_[chord_index]; }

  // All faces; interior ones are every face except outer_face().
  const std::vector<Face>& faces() const { return faces_; }
  int outer_face() const { return outer_; }
  int interior_face_count() const { return static_cast<int>(faces_.size()) - 1; }

  // Items available to a contracting move on one face.
  struct FaceItems {
    std::vector<std::pair<int, int>> segments;  // (chord index, segment index)
    std::vector<int> pencil_vertices;           // vertex ids
  };
  FaceItems items_on_face(int face_id) const;

  int pencil_vertex_id(int pencil_index) const;
  int chord_index(const Chord& c) const;

 private:
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<CrossingInfo> crossings_;
  std::vector<HalfEdge> halves_;
  std::vector<std::vector<int>> rotation_;  // per vertex: ccw outgoing half-edges
  std::vector<int> rot_pos_;                // per half-edge: position in rotation_[from]
  std::vector<Chord> chords_;
  std::vector<std::vector<int>> paths_;
  std::vector<Face> faces_;
  int outer_ = -1;
  int pencil_base_ = 0;

  void trace_faces();
};

}  // namespace strata
