#include "confaces/face_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace confaces {

namespace {

// Base-3 code of a sign vector, used as a lookup key during construction.
std::size_t face_code(const FaceId& f) {
  std::size_t c = 0;
  for (std::int8_t v : f) c = c * 3 + static_cast<std::size_t>(v + 1);
  return c;
}

std::string signature_name(const std::vector<int>& sig) {
  std::string s = "{";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sig[i]);
  }
  return s + "}";
}

std::vector<std::string> default_labels(int m,
                                        const std::vector<std::string>& given) {
  if (!given.empty()) return given;
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("A" + std::to_string(i));
  return out;
}

}  // namespace

int FaceGraph::node_of(const FaceId& f) const {
  if (f.empty()) return 0;
  if (custom) return -1;
  FaceId c = face_canonicalize(f);
  auto begin = faces.begin() + 1;  // nodes 1.. are in enumeration order
  auto it = std::lower_bound(begin, faces.end(), c);
  if (it == faces.end() || *it != c) return -1;
  return static_cast<int>(it - faces.begin());
}

FaceId map_face(const RatMatrix& a, const FaceId& f) {
  if (f.empty()) return {};
  RatVec y = mat_apply(a, representative_point(f, a.n()));
  try {
    return classify_point(y);
  } catch (const OutsidePolyhedronError& e) {
    throw InvarianceError(
        "image of face " + face_to_string(f) +
        " left the polyhedron, the matrix violates the standing assumptions: " +
        e.what());
  }
}

FaceGraph build_face_graph(const SwitchedSystem& sys, int n_max) {
  validate_system(sys);
  FaceGraph g;
  g.n = sys.n;
  g.m = sys.m();
  g.labels = default_labels(g.m, sys.labels);
  g.faces = enumerate_faces(sys.n, n_max);
  g.faces.insert(g.faces.begin(), FaceId{});

  std::size_t codes = 1;
  for (int i = 0; i < sys.n; ++i) codes *= 3;
  std::vector<int> node_at(codes, -1);
  for (std::size_t v = 1; v < g.faces.size(); ++v) {
    node_at[face_code(g.faces[v])] = static_cast<int>(v);
  }

  g.node_names.resize(g.faces.size());
  g.to.assign(g.faces.size() * static_cast<std::size_t>(g.m), 0);
  for (int v = 0; v < g.node_count(); ++v) {
    g.node_names[v] = face_to_string(g.faces[v]);
    if (v == 0) continue;  // interior edges all stay at node 0
    for (int l = 0; l < g.m; ++l) {
      FaceId image = map_face(sys.matrices[l], g.faces[v]);
      int t = image.empty() ? 0 : node_at[face_code(image)];
      g.to[static_cast<std::size_t>(v) * g.m + l] = t;
    }
  }
  return g;
}

std::vector<int> active_set(const CustomPolyhedron2D& poly, const RatVec& x) {
  std::vector<int> sig;
  for (std::size_t c = 0; c < poly.constraints.size(); ++c) {
    const auto& [a, b] = poly.constraints[c];
    Rational dot(0);
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * x[i];
    if (dot > b) {
      throw OutsidePolyhedronError("point " + to_string(x) +
                                   " violates constraint " + std::to_string(c));
    }
    if (dot == b) sig.push_back(static_cast<int>(c));
  }
  return sig;
}

namespace {

RatVec vec_negate(const RatVec& x) {
  RatVec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
  return y;
}

}  // namespace

void validate_custom_polyhedron(const CustomPolyhedron2D& poly) {
  for (const auto& [a, b] : poly.constraints) {
    if (a.size() != 2) {
      throw DimensionError("custom polyhedron constraints must be 2-dimensional");
    }
    bool mirrored = false;
    for (const auto& [a2, b2] : poly.constraints) {
      if (b2 == b && a2.size() == 2 && a2[0] == -a[0] && a2[1] == -a[1]) {
        mirrored = true;
        break;
      }
    }
    if (!mirrored) {
      throw ValidationError(
          "custom polyhedron is not centrally symmetric: constraint (" +
              to_string(a) + ", " + to_string(b) + ") has no mirror",
          -1, ValidationKind::DimensionMismatch);
    }
  }
  std::vector<std::vector<int>> seen;
  for (const RatVec& rep : poly.face_reps) {
    if (rep.size() != 2) {
      throw DimensionError("custom polyhedron face representatives must be "
                           "2-dimensional");
    }
    std::vector<int> sig = active_set(poly, rep);
    if (sig.empty()) {
      throw ValidationError("face representative " + to_string(rep) +
                                " lies in the interior (no tight constraint)",
                            -1, ValidationKind::DimensionMismatch);
    }
    std::vector<int> neg = active_set(poly, vec_negate(rep));
    for (const auto& s : seen) {
      if (s == sig || s == neg) {
        throw ValidationError("face representative " + to_string(rep) +
                                  " duplicates an earlier face (signature " +
                                  signature_name(sig) + ")",
                              -1, ValidationKind::DimensionMismatch);
      }
    }
    seen.push_back(sig);
  }
}

FaceGraph build_custom_face_graph(const CustomPolyhedron2D& poly,
                                  const std::vector<RatMatrix>& matrices,
                                  const std::vector<std::string>& labels) {
  validate_custom_polyhedron(poly);
  FaceGraph g;
  g.n = 2;
  g.m = static_cast<int>(matrices.size());
  g.custom = true;
  g.labels = default_labels(g.m, labels);

  // Pair nodes in first-seen rep order; every signature of the pair keys the
  // same node so images can be classified by lookup.
  std::map<std::vector<int>, int> node_at;
  std::vector<RatVec> reps{RatVec{Rational(0), Rational(0)}};
  g.node_names.push_back("int");
  for (const RatVec& rep : poly.face_reps) {
    std::vector<int> sig = active_set(poly, rep);
    std::vector<int> neg = active_set(poly, vec_negate(rep));
    if (node_at.count(sig)) continue;
    int v = static_cast<int>(reps.size());
    node_at[sig] = v;
    node_at[neg] = v;
    g.node_names.push_back(signature_name(std::min(sig, neg)));
    reps.push_back(rep);
  }

  g.to.assign(reps.size() * static_cast<std::size_t>(g.m), 0);
  for (int v = 1; v < static_cast<int>(reps.size()); ++v) {
    for (int l = 0; l < g.m; ++l) {
      RatVec image = mat_apply(matrices[l], reps[v]);
      std::vector<int> sig;
      try {
        sig = active_set(poly, image);
      } catch (const OutsidePolyhedronError& e) {
        throw InvarianceError("matrix " + g.labels[l] +
                              " maps face representative " + to_string(reps[v]) +
                              " outside the polyhedron: " + e.what());
      }
      int t = 0;
      if (!sig.empty()) {
        auto it = node_at.find(sig);
        if (it == node_at.end()) {
          throw InvarianceError("image " + to_string(image) + " of " +
                                to_string(reps[v]) + " under matrix " +
                                g.labels[l] + " lies on a face with no listed "
                                "representative (signature " +
                                signature_name(sig) + ")");
        }
        t = it->second;
      }
      g.to[static_cast<std::size_t>(v) * g.m + l] = t;
    }
  }
  return g;
}

std::string to_dot(const FaceGraph& g) {
  std::ostringstream os;
  os << "digraph faces {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=ellipse];\n";
  for (int v = 0; v < g.node_count(); ++v) {
    os << "  n" << v << " [label=\"" << g.node_names[v] << "\"";
    if (v == 0) os << ", peripheries=2";
    os << "];\n";
  }
  for (int v = 0; v < g.node_count(); ++v) {
    for (int l = 0; l < g.m; ++l) {
      os << "  n" << v << " -> n" << g.target(v, l) << " [label=\""
         << g.labels[l] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace confaces
