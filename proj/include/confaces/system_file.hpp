#ifndef CONFACES_SYSTEM_FILE_HPP
#define CONFACES_SYSTEM_FILE_HPP

#include <optional>
#include <string>

#include "confaces/face_graph.hpp"
#include "confaces/system.hpp"

namespace confaces {

// On-disk system description (JSON): dimension, matrices as arrays of
// rational strings, optional per-matrix names, optional custom_polyhedron
// block. Matrices are NOT validated on load; callers decide when.
struct SystemFile {
  SwitchedSystem system;
  std::optional<CustomPolyhedron2D> polyhedron;
};

SystemFile load_system_file(const std::string& path);
SystemFile parse_system_file(const std::string& text);

}  // namespace confaces

#endif  // CONFACES_SYSTEM_FILE_HPP
