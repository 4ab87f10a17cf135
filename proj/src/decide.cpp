#include "confaces/decide.hpp"

#include <algorithm>
#include <map>

namespace confaces {

std::string word_to_string(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

namespace {

// Concatenates steering words in node order; pos[u] tracks where the word
// so far has moved face u. The interior is absorbing, so each appended
// block retires at least one face: at most N blocks of length at most N.
Word build_universal_word(const FaceGraph& g,
                          const std::vector<std::pair<int, Word>>& per_face) {
  std::map<int, const Word*> steer;
  for (const auto& [node, w] : per_face) steer[node] = &w;

  std::vector<int> pos(g.node_count());
  for (int u = 0; u < g.node_count(); ++u) pos[u] = u;
  Word out;
  for (int u = 1; u < g.node_count(); ++u) {
    if (pos[u] == 0) continue;
    const Word& block = *steer[pos[u]];
    out.insert(out.end(), block.begin(), block.end());
    std::map<int, int> moved;  // walk each distinct position once
    for (int x = 1; x < g.node_count(); ++x) {
      if (pos[x] == 0) continue;
      auto it = moved.find(pos[x]);
      if (it == moved.end()) {
        int p = pos[x];
        for (int l : block) p = g.target(p, l);
        it = moved.emplace(pos[x], p).first;
      }
      pos[x] = it->second;
    }
  }
  return out;
}

CycleWitness make_cycle_witness(const FaceGraph& g, const std::vector<int>& nodes,
                                const std::vector<int>& labels) {
  // Rotate the cycle to start at its smallest node; with nodes in
  // enumeration order that is the lexicographically smallest face.
  std::size_t start = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i] < nodes[start]) start = i;
  }
  CycleWitness w;
  w.node = nodes[start];
  if (!g.custom) w.face = g.faces[w.node];
  w.face_name = g.node_names[w.node];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    w.word.push_back(labels[(start + i) % labels.size()]);
  }
  return w;
}

}  // namespace

Verdict decide_problem1(const FaceGraph& g) {
  Verdict v;
  v.problem = Problem::AsymptoticStability;

  // Iterative depth-first search over proper nodes, ascending, labels
  // ascending; interior targets are skipped (nothing returns from the
  // interior). A back edge closes the witness cycle.
  enum : char { White, Gray, Black };
  std::vector<char> color(g.node_count(), White);
  std::vector<int> path_nodes;
  std::vector<int> path_labels;  // label used out of path_nodes[i]
  std::vector<int> next_label;   // per path entry, next label to try

  for (int root = 1; root < g.node_count(); ++root) {
    if (color[root] != White) continue;
    color[root] = Gray;
    path_nodes = {root};
    path_labels = {0};
    next_label = {0};
    while (!path_nodes.empty()) {
      int u = path_nodes.back();
      if (next_label.back() == g.m) {
        color[u] = Black;
        path_nodes.pop_back();
        path_labels.pop_back();
        next_label.pop_back();
        continue;
      }
      int l = next_label.back()++;
      int t = g.target(u, l);
      if (t == 0 || color[t] == Black) continue;
      if (color[t] == Gray) {
        std::size_t pos = static_cast<std::size_t>(
            std::find(path_nodes.begin(), path_nodes.end(), t) -
            path_nodes.begin());
        std::vector<int> cyc_nodes(path_nodes.begin() + pos, path_nodes.end());
        std::vector<int> cyc_labels(path_labels.begin() + pos,
                                    path_labels.end());
        cyc_labels.back() = l;  // closing edge
        v.answer = false;
        v.cycle = make_cycle_witness(g, cyc_nodes, cyc_labels);
        return v;
      }
      path_labels.back() = l;
      color[t] = Gray;
      path_nodes.push_back(t);
      path_labels.push_back(0);
      next_label.push_back(0);
    }
  }
  v.answer = true;
  return v;
}

Verdict decide_problem2(const FaceGraph& g) {
  Verdict v;
  v.problem = Problem::ReachabilityOfConsensus;

  // Level-synchronized search on the reversed graph from the interior. A
  // node joins the next level through its smallest label whose target the
  // tree already holds, so per-face words are shortest with ties broken by
  // matrix index. Any visited target of a still-unvisited node sits exactly
  // one level down: an older level would have absorbed the node earlier.
  constexpr int kUnset = -1;
  std::vector<int> dist(g.node_count(), kUnset);
  std::vector<int> via(g.node_count(), kUnset);
  dist[0] = 0;
  std::vector<bool> visited(g.node_count(), false);
  visited[0] = true;

  int level = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> next;
    for (int u = 1; u < g.node_count(); ++u) {
      if (dist[u] != kUnset) continue;
      for (int l = 0; l < g.m; ++l) {
        if (visited[g.target(u, l)]) {
          dist[u] = level + 1;
          via[u] = l;
          next.push_back(u);
          break;
        }
      }
    }
    for (int u : next) visited[u] = true;
    grew = !next.empty();
    ++level;
  }

  std::vector<int> unreachable;
  for (int u = 1; u < g.node_count(); ++u) {
    if (dist[u] == kUnset) unreachable.push_back(u);
  }
  if (!unreachable.empty()) {
    v.answer = false;
    v.unreachable_nodes = std::move(unreachable);
    return v;
  }
  v.answer = true;
  SteeringWitness sw;
  for (int u = 1; u < g.node_count(); ++u) {
    Word w;
    for (int x = u; x != 0; x = g.target(x, via[x])) w.push_back(via[x]);
    sw.per_face_words.emplace_back(u, std::move(w));
  }
  sw.universal_word = build_universal_word(g, sw.per_face_words);
  v.steering = std::move(sw);
  return v;
}

Word universal_steering_word(const FaceGraph& g) {
  Verdict v = decide_problem2(g);
  if (!v.answer) {
    throw PreconditionError(
        "universal steering word requires every face to reach the interior");
  }
  return std::move(v.steering->universal_word);
}

bool verify_cycle_witness(const SwitchedSystem& sys, const CycleWitness& w) {
  if (w.word.empty() || w.face.empty()) return false;
  if (static_cast<int>(w.face.size()) != sys.n) return false;
  FaceId start = face_canonicalize(w.face);
  FaceId f = start;
  for (int l : w.word) {
    if (l < 0 || l >= sys.m()) return false;
    f = map_face(sys.matrices[l], f);
    if (f.empty()) return false;  // fell into the interior
  }
  return f == start;
}

}  // namespace confaces
