#ifndef CONFACES_DECIDE_HPP
#define CONFACES_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "confaces/face_graph.hpp"

namespace confaces {

enum class Problem { AsymptoticStability, ReachabilityOfConsensus };

using Word = std::vector<int>;  // 0-based matrix indices

std::string word_to_string(const Word& w);

// A proper face and a word whose matrix product maps the face back into
// its own pair; every intermediate face stays proper. 1 <= |word| <= N.
struct CycleWitness {
  int node = -1;
  FaceId face;            // empty when the graph is a custom fixture
  std::string face_name;
  Word word;
};

// Per-face shortest words into the interior plus one word that steers
// every proper face there (length <= N^2).
struct SteeringWitness {
  std::vector<std::pair<int, Word>> per_face_words;  // (node, word)
  Word universal_word;
};

struct Verdict {
  Problem problem = Problem::AsymptoticStability;
  bool answer = false;
  std::optional<CycleWitness> cycle;          // negative Problem 1
  std::optional<SteeringWitness> steering;    // positive Problem 2
  std::vector<int> unreachable_nodes;         // negative Problem 2
  std::optional<std::string> failed_sequence; // negative fast-path verdicts
};

// True iff the proper-node subgraph is acyclic. Depth-first search over
// nodes in ascending order, edges in label order; a back edge yields the
// witness cycle, rotated to start at its smallest node index.
Verdict decide_problem1(const FaceGraph& g);

// True iff node 0 is reachable from every node, by breadth-first search on
// the reversed graph; per-face words are shortest, ties broken by smallest
// label. A negative verdict lists the nodes that cannot reach the interior.
Verdict decide_problem2(const FaceGraph& g);

// Concatenates per-face steering words in node order, skipping faces the
// prefix already sent to the interior and steering from wherever the prefix
// moved them. Requires a positive Problem 2 verdict (PreconditionError
// otherwise); result length <= N^2.
Word universal_steering_word(const FaceGraph& g);

// Replays the word through map_face from w.face: true iff the final face
// equals the witness pair and no intermediate face is the interior.
// Recomputes from the matrices; independent of how the witness was found.
bool verify_cycle_witness(const SwitchedSystem& sys, const CycleWitness& w);

}  // namespace confaces

#endif  // CONFACES_DECIDE_HPP
