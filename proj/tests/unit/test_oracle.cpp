#include <doctest.h>

#include "confaces/decide.hpp"
#include "confaces/face_graph.hpp"
#include "confaces/oracle.hpp"
#include "support/random_systems.hpp"

using namespace confaces;

namespace {

SwitchedSystem make_system(
    int n, std::vector<std::vector<std::vector<std::string>>> rows) {
  SwitchedSystem sys;
  sys.n = n;
  for (auto& r : rows) sys.matrices.push_back(RatMatrix::from_strings(r));
  return sys;
}

const std::vector<std::vector<std::string>> kPerm2 = {{"0", "1"}, {"1", "0"}};
const std::vector<std::vector<std::string>> kAvg2 = {{"1/2", "1/2"},
                                                     {"1/2", "1/2"}};
const std::vector<std::vector<std::string>> kId2 = {{"1", "0"}, {"0", "1"}};

}  // namespace

TEST_CASE("trajectories are exact") {
  SwitchedSystem avg = make_system(2, {kAvg2});
  TrajectoryTrace t = simulate(avg, parse_rational_vector("1,-1"), {0}, 1);
  REQUIRE(t.states.size() == 2);
  CHECK(t.states[0] == RatVec{Rational(1), Rational(-1)});
  CHECK(t.states[1] == RatVec{Rational(0), Rational(0)});
  CHECK(t.seminorms == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(t.word == Word{0});

  SwitchedSystem perm = make_system(2, {kPerm2});
  TrajectoryTrace o = simulate(perm, parse_rational_vector("1,-1"), {0}, 3);
  REQUIRE(o.seminorms.size() == 4);
  for (const Rational& s : o.seminorms) CHECK(s == 1);
  CHECK(o.word == Word{0, 0, 0});

  TrajectoryTrace c = simulate(perm, parse_rational_vector("5,5"), {0, 0}, 2);
  for (const Rational& s : c.seminorms) CHECK(s == 0);

  CHECK_THROWS_AS(simulate(avg, parse_rational_vector("1,0,0"), {0}, 1),
                  DimensionError);
  CHECK_THROWS_AS(simulate(avg, parse_rational_vector("1,0"), {}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(simulate(avg, parse_rational_vector("1,0"), {1}, 1),
                  PreconditionError);
}

TEST_CASE("traces serialize as CSV with exact values") {
  SwitchedSystem avg = make_system(2, {kAvg2});
  TrajectoryTrace t = simulate(avg, parse_rational_vector("1,-1/3"), {0}, 1);
  std::string csv = trace_to_csv(t);
  CHECK(csv ==
        "t,x0,x1,seminorm\n"
        "0,1,-1/3,2/3\n"
        "1,1/3,1/3,0\n");
}

TEST_CASE("simulated seminorms never increase") {
  testsupport::Rng rng(20240821);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 4);
    FaceId f = testsupport::random_face(rng, n);
    RatVec x0 = testsupport::random_point_in_face(rng, f);
    Word w = testsupport::random_word(rng, m, 1 + static_cast<int>(rng() % 5));
    TrajectoryTrace t = simulate(sys, x0, w, 2);
    for (size_t i = 1; i < t.seminorms.size(); ++i) {
      CHECK(t.seminorms[i] <= t.seminorms[i - 1]);
    }
  }
}

TEST_CASE("direct stability check on stated examples") {
  Verdict no = brute_force_problem1(make_system(2, {kPerm2}));
  CHECK_FALSE(no.answer);
  REQUIRE(no.cycle.has_value());
  CHECK(no.cycle->face == FaceId{1, -1});
  CHECK(no.cycle->word == Word{0});

  CHECK(brute_force_problem1(make_system(2, {kAvg2})).answer);
  CHECK_FALSE(brute_force_problem1(make_system(2, {kId2})).answer);
}

TEST_CASE("direct reachability check on stated examples") {
  CHECK(brute_force_problem2(make_system(2, {kPerm2, kAvg2})).answer);
  CHECK_FALSE(brute_force_problem2(make_system(2, {kId2})).answer);
  Verdict no = brute_force_problem2(make_system(2, {kPerm2}));
  CHECK_FALSE(no.answer);
  CHECK(no.unreachable_nodes == std::vector<int>{1});
}

TEST_CASE("work budget guard") {
  OracleOptions tiny;
  tiny.step_budget = 0;
  SwitchedSystem sys = make_system(2, {kPerm2, kAvg2});
  CHECK_THROWS_AS(brute_force_problem1(sys, tiny), CapacityError);
  CHECK_THROWS_AS(brute_force_problem2(sys, tiny), CapacityError);
  CHECK_THROWS_AS(decay_certificate(make_system(2, {kAvg2}), tiny),
                  CapacityError);
}

TEST_CASE("decisions agree with the graph path on random systems") {
  testsupport::Rng rng(20240822);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 4);
    FaceGraph g = build_face_graph(sys);
    CHECK(brute_force_problem1(sys).answer == decide_problem1(g).answer);
    CHECK(brute_force_problem2(sys).answer == decide_problem2(g).answer);
  }
}

TEST_CASE("contraction factor on stated examples") {
  CHECK(decay_certificate(make_system(2, {kAvg2})) == 0);
  SwitchedSystem lazy =
      make_system(2, {{{"3/4", "1/4"}, {"1/4", "3/4"}}});
  CHECK(decay_certificate(lazy) == Rational(1, 2));
  CHECK_THROWS_AS(decay_certificate(make_system(2, {kPerm2})),
                  PreconditionError);
}

TEST_CASE("contraction factor matches exhaustive word search") {
  testsupport::Rng rng(20240824);
  int positives = 0;
  for (int trial = 0; trial < 300 && positives < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int m = 1 + static_cast<int>(rng() % 2);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 4);
    if (!brute_force_problem1(sys).answer) continue;
    ++positives;

    std::vector<FaceId> faces = enumerate_faces(sys.n);
    int N = static_cast<int>(faces.size());
    long long total = 1;
    for (int k = 0; k < N; ++k) total *= m;

    Rational direct(0);
    for (long long code = 0; code < total; ++code) {
      Word w;
      long long c = code;
      for (int k = 0; k < N; ++k) {
        w.push_back(static_cast<int>(c % m));
        c /= m;
      }
      for (const FaceId& f : faces) {
        TrajectoryTrace t =
            simulate(sys, representative_point(f, sys.n), w, 1);
        if (t.seminorms.back() > direct) direct = t.seminorms.back();
      }
    }
    CHECK(decay_certificate(sys) == direct);
  }
  CHECK(positives >= 20);
}

TEST_CASE("contraction factor bounds trajectories from face points") {
  testsupport::Rng rng(20240823);
  int positives = 0;
  for (int trial = 0; trial < 80 && positives < 12; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int m = 1 + static_cast<int>(rng() % 2);
    SwitchedSystem sys = testsupport::random_system(rng, n, m, trial % 2);
    if (!brute_force_problem1(sys).answer) continue;
    ++positives;
    Rational r = decay_certificate(sys);
    CHECK(r < 1);
    int N = 0;
    {
      mpz_class pairs = face_census(n).proper_pairs;
      N = static_cast<int>(pairs.get_si());
    }
    FaceId f = testsupport::random_face(rng, n);
    RatVec x0 = representative_point(f, n);
    Word w = testsupport::random_word(rng, m, N);
    TrajectoryTrace t = simulate(sys, x0, w, 3);  // 3N steps
    Rational bound(1);
    for (int k = 1; k <= 3; ++k) {
      bound *= r;
      CHECK(t.seminorms[static_cast<size_t>(k) * N] <= bound);
    }
  }
  CHECK(positives >= 12);
}
