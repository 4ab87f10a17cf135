#include <doctest.h>

#include <set>

#include "confaces/decide.hpp"
#include "confaces/face_graph.hpp"
#include "support/random_systems.hpp"

using namespace confaces;

namespace {

SwitchedSystem make_system(int n,
                           std::vector<std::vector<std::vector<std::string>>>
                               rows,
                           std::vector<std::string> labels = {}) {
  SwitchedSystem sys;
  sys.n = n;
  for (auto& r : rows) sys.matrices.push_back(RatMatrix::from_strings(r));
  sys.labels = std::move(labels);
  return sys;
}

const std::vector<std::vector<std::string>> kPerm2 = {{"0", "1"}, {"1", "0"}};
const std::vector<std::vector<std::string>> kAvg2 = {{"1/2", "1/2"},
                                                     {"1/2", "1/2"}};
const std::vector<std::vector<std::string>> kId3 = {
    {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
const std::vector<std::vector<std::string>> kAvg3 = {
    {"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"}};

}  // namespace

TEST_CASE("face images under single matrices") {
  RatMatrix avg = RatMatrix::from_strings(kAvg2);
  RatMatrix perm = RatMatrix::from_strings(kPerm2);
  FaceId pm{1, -1};
  CHECK(map_face(avg, pm) == FaceId{});
  CHECK(map_face(perm, pm) == pm);  // image is -v, same pair
  CHECK(map_face(RatMatrix::identity(3), FaceId{1, 0, -1}) ==
        FaceId{1, 0, -1});
  CHECK(map_face(avg, FaceId{}) == FaceId{});
}

TEST_CASE("face image is the same from either member of the pair") {
  testsupport::Rng rng(20240814);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, 2, trial % 4);
    FaceId f = testsupport::random_face(rng, n);
    for (const RatMatrix& a : sys.matrices) {
      RatVec v = representative_point(f, n);
      RatVec neg(v.size());
      for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
      CHECK(map_face(a, f) == classify_point(mat_apply(a, neg)));
    }
  }
}

TEST_CASE("every point of an open face maps to one face") {
  // Two independent points of the same open face must classify to the same
  // image face under every matrix of a validated system.
  testsupport::Rng rng(20240815);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, 2, trial % 4);
    FaceId f = testsupport::random_face(rng, n);
    RatVec y = testsupport::random_point_in_face(rng, f);
    RatVec z = testsupport::random_point_in_face(rng, f);
    REQUIRE(classify_point(y) == f);
    REQUIRE(classify_point(z) == f);
    for (const RatMatrix& a : sys.matrices) {
      CHECK(classify_point(mat_apply(a, y)) ==
            classify_point(mat_apply(a, z)));
    }
  }
}

TEST_CASE("graph construction on two-agent systems") {
  SwitchedSystem perm = make_system(2, {kPerm2});
  FaceGraph g = build_face_graph(perm);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.node_names[0] == "int");
  CHECK(g.node_names[1] == "+-");
  CHECK(g.target(0, 0) == 0);
  CHECK(g.target(1, 0) == 1);
  CHECK(g.node_of(FaceId{1, -1}) == 1);
  CHECK(g.node_of(FaceId{-1, 1}) == 1);
  CHECK(g.node_of(FaceId{}) == 0);

  SwitchedSystem avg = make_system(2, {kAvg2});
  FaceGraph h = build_face_graph(avg);
  CHECK(h.node_count() == 2);
  CHECK(h.target(1, 0) == 0);
  CHECK(h.target(0, 0) == 0);
}

TEST_CASE("identity graph is all self-loops") {
  SwitchedSystem id3 = make_system(3, {kId3});
  FaceGraph g = build_face_graph(id3);
  CHECK(g.node_count() == 7);
  CHECK(g.edge_count() == 7);
  for (int v = 0; v < g.node_count(); ++v) CHECK(g.target(v, 0) == v);
}

TEST_CASE("graph shape on random systems") {
  testsupport::Rng rng(20240816);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 4);
    FaceGraph g = build_face_graph(sys);
    long pairs = face_census(n).proper_pairs.get_si();
    CHECK(g.node_count() == pairs + 1);
    CHECK(g.edge_count() == (pairs + 1) * m);
    for (int l = 0; l < m; ++l) CHECK(g.target(0, l) == 0);
    // Edges agree with direct face mapping.
    for (int v = 1; v < g.node_count(); ++v) {
      for (int l = 0; l < m; ++l) {
        FaceId img = map_face(sys.matrices[l], g.faces[v]);
        CHECK(g.target(v, l) == g.node_of(img));
      }
    }
  }
}

TEST_CASE("graph construction is deterministic") {
  SwitchedSystem sys = make_system(3, {kAvg3, kId3}, {"avg", "id"});
  FaceGraph a = build_face_graph(sys);
  FaceGraph b = build_face_graph(sys);
  CHECK(a.to == b.to);
  CHECK(to_dot(a) == to_dot(b));
  CHECK(to_dot(a).substr(0, 14) == "digraph faces ");
  CHECK(build_face_graph(sys).labels == std::vector<std::string>{"avg", "id"});
}

TEST_CASE("capacity guard on dimension") {
  SwitchedSystem sys;
  sys.n = 13;
  sys.matrices.push_back(RatMatrix::identity(13));
  CHECK_THROWS_AS(build_face_graph(sys), CapacityError);
}

TEST_CASE("stability decision on stated examples") {
  FaceGraph perm = build_face_graph(make_system(2, {kPerm2}));
  Verdict v1 = decide_problem1(perm);
  CHECK(v1.problem == Problem::AsymptoticStability);
  CHECK_FALSE(v1.answer);
  REQUIRE(v1.cycle.has_value());
  CHECK(v1.cycle->node == 1);
  CHECK(v1.cycle->face == FaceId{1, -1});
  CHECK(v1.cycle->word == Word{0});
  CHECK(verify_cycle_witness(make_system(2, {kPerm2}), *v1.cycle));

  FaceGraph avg = build_face_graph(make_system(2, {kAvg2}));
  Verdict v2 = decide_problem1(avg);
  CHECK(v2.answer);
  CHECK_FALSE(v2.cycle.has_value());

  FaceGraph id3 = build_face_graph(make_system(3, {kId3}));
  Verdict v3 = decide_problem1(id3);
  CHECK_FALSE(v3.answer);
  REQUIRE(v3.cycle.has_value());
  CHECK(verify_cycle_witness(make_system(3, {kId3}), *v3.cycle));
}

TEST_CASE("reachability decision on stated examples") {
  FaceGraph perm = build_face_graph(make_system(2, {kPerm2}));
  Verdict v1 = decide_problem2(perm);
  CHECK(v1.problem == Problem::ReachabilityOfConsensus);
  CHECK_FALSE(v1.answer);
  CHECK(v1.unreachable_nodes == std::vector<int>{1});

  FaceGraph both = build_face_graph(make_system(2, {kPerm2, kAvg2}));
  Verdict v2 = decide_problem2(both);
  CHECK(v2.answer);
  REQUIRE(v2.steering.has_value());
  REQUIRE(v2.steering->per_face_words.size() == 1);
  CHECK(v2.steering->per_face_words[0].first == 1);
  CHECK(v2.steering->per_face_words[0].second == Word{1});
  CHECK(v2.steering->universal_word == Word{1});

  FaceGraph id2 = build_face_graph(make_system(2, {{{"1", "0"}, {"0", "1"}}}));
  CHECK_FALSE(decide_problem2(id2).answer);
}

TEST_CASE("universal steering words replay to the interior") {
  FaceGraph avg = build_face_graph(make_system(2, {kAvg2}));
  CHECK(universal_steering_word(avg) == Word{0});

  FaceGraph mix = build_face_graph(make_system(3, {kId3, kAvg3}));
  Word w = universal_steering_word(mix);
  long long cap = static_cast<long long>(mix.node_count() - 1) *
                  (mix.node_count() - 1);
  CHECK(static_cast<long long>(w.size()) <= cap);
  SwitchedSystem sys = make_system(3, {kId3, kAvg3});
  for (int v = 1; v < mix.node_count(); ++v) {
    FaceId f = mix.faces[v];
    for (int l : w) f = map_face(sys.matrices[l], f);
    CHECK(face_is_interior(f));
  }

  FaceGraph perm = build_face_graph(make_system(2, {kPerm2}));
  CHECK_THROWS_AS(universal_steering_word(perm), PreconditionError);
}

TEST_CASE("cycle witness verification is independent of the search") {
  SwitchedSystem perm = make_system(2, {kPerm2});
  CycleWitness w;
  w.node = 1;
  w.face = FaceId{1, -1};
  w.face_name = "+-";
  w.word = {0};
  CHECK(verify_cycle_witness(perm, w));

  SwitchedSystem avg = make_system(2, {kAvg2});
  CHECK_FALSE(verify_cycle_witness(avg, w));  // word lands in the interior

  CycleWitness empty = w;
  empty.word.clear();
  CHECK_FALSE(verify_cycle_witness(perm, empty));

  CycleWitness wrong = w;
  wrong.word = {0, 0};  // returns to the pair: still a valid certificate
  CHECK(verify_cycle_witness(perm, wrong));
  wrong.word = {1};  // label out of range
  CHECK_FALSE(verify_cycle_witness(perm, wrong));
}

TEST_CASE("random systems: stability implies reachability") {
  testsupport::Rng rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 4);
    FaceGraph g = build_face_graph(sys);
    Verdict p1 = decide_problem1(g);
    Verdict p2 = decide_problem2(g);
    if (p1.answer) CHECK(p2.answer);
    if (!p1.answer) {
      REQUIRE(p1.cycle.has_value());
      CHECK(verify_cycle_witness(sys, *p1.cycle));
      CHECK(p1.cycle->word.size() >= 1);
      CHECK(static_cast<int>(p1.cycle->word.size()) <= g.node_count() - 1);
    }
    if (p2.answer) {
      REQUIRE(p2.steering.has_value());
      // Every per-face word replays to the interior through the raw matrices.
      for (const auto& [node, word] : p2.steering->per_face_words) {
        FaceId f = g.faces[node];
        for (int l : word) f = map_face(sys.matrices[l], f);
        CHECK(face_is_interior(f));
        CHECK(static_cast<int>(word.size()) <= g.node_count() - 1);
      }
    } else {
      CHECK_FALSE(p2.unreachable_nodes.empty());
    }
  }
}

TEST_CASE("dot export lists nodes then edges in stable order") {
  FaceGraph g = build_face_graph(make_system(2, {kPerm2, kAvg2}));
  std::string dot = to_dot(g);
  CHECK(dot.find("n0 [label=\"int\"") != std::string::npos);
  CHECK(dot.find("n1 [label=\"+-\"") != std::string::npos);
  CHECK(dot.find("n1 -> n1") != std::string::npos);
  CHECK(dot.find("n1 -> n0") != std::string::npos);
  CHECK(dot.find("digraph faces {") == 0);
  CHECK(dot.back() == '\n');
}
