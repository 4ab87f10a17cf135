#ifndef CONFACES_FACE_GRAPH_HPP
#define CONFACES_FACE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "confaces/faces.hpp"
#include "confaces/system.hpp"

namespace confaces {

// Directed multigraph over face pairs. Node 0 is the interior; the rest are
// proper pairs (enumeration order for the standard polyhedron, first-seen
// rep order for the custom fixture). Every node has exactly one outgoing
// edge per matrix label: `to[node * m + label]` is its target. Immutable
// once built.
struct FaceGraph {
  int n = 0;
  int m = 0;
  bool custom = false;
  std::vector<FaceId> faces;             // per node; empty in custom mode
  std::vector<std::string> node_names;   // per node; node_names[0] = "int"
  std::vector<std::string> labels;       // per matrix
  std::vector<int> to;                   // size node_count() * m

  int node_count() const { return static_cast<int>(node_names.size()); }
  long long edge_count() const {
    return static_cast<long long>(node_count()) * m;
  }
  int target(int node, int label) const { return to[node * m + label]; }

  // Node index of a face (canonicalized); -1 if absent.
  int node_of(const FaceId& f) const;
};

// Image face of f under A: classify A * representative(f). The interior is
// invariant under Assumption 1 and maps to itself without computation.
// Throws InvarianceError if the image leaves P (impossible for validated
// systems).
FaceId map_face(const RatMatrix& a, const FaceId& f);

// N+1 nodes, m*(N+1) edges; O(3^n * m * n^2) work. Throws CapacityError
// when n exceeds n_max.
FaceGraph build_face_graph(const SwitchedSystem& sys, int n_max = 12);

// Fixture mode for 2-dimensional polyhedra given by explicit halfspaces
// a.x <= b plus one interior point of each proper open face. Faces are
// identified by their set of tight constraints; opposite faces are merged
// into one node named by the lexicographically smaller signature.
struct CustomPolyhedron2D {
  std::vector<std::pair<RatVec, Rational>> constraints;
  std::vector<RatVec> face_reps;
};

// Checks central symmetry of the constraint list, membership of every
// face_rep with at least one tight constraint, and pairwise distinct
// signatures modulo negation.
void validate_custom_polyhedron(const CustomPolyhedron2D& poly);

// Tight constraint indices at x, increasing. Throws OutsidePolyhedronError
// if some constraint fails.
std::vector<int> active_set(const CustomPolyhedron2D& poly, const RatVec& x);

// Each matrix must map the polyhedron into itself; a violating
// (matrix, face_rep) combination raises InvarianceError naming both.
FaceGraph build_custom_face_graph(const CustomPolyhedron2D& poly,
                                  const std::vector<RatMatrix>& matrices,
                                  const std::vector<std::string>& labels);

// GraphViz text, nodes and edges in stable order; the interior node is
// drawn doubled so it stands out.
std::string to_dot(const FaceGraph& g);

}  // namespace confaces

#endif  // CONFACES_FACE_GRAPH_HPP
