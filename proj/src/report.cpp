#include "confaces/report.hpp"

#include <chrono>
#include <ctime>

#include "confaces/decide.hpp"
#include "confaces/fast_pair.hpp"

namespace confaces {

namespace {

using nlohmann::ordered_json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

ordered_json word_json(const Word& w) {
  ordered_json a = ordered_json::array();
  for (int l : w) a.push_back(l);
  return a;
}

int walk(const FaceGraph& g, int node, const Word& w) {
  for (int l : w) node = g.target(node, l);
  return node;
}

// Graph-level replay of a cycle witness: the word returns to the witness
// node without touching the interior.
bool replay_cycle(const FaceGraph& g, const CycleWitness& w) {
  if (w.word.empty() || w.node <= 0 || w.node >= g.node_count()) return false;
  int node = w.node;
  for (int l : w.word) {
    if (l < 0 || l >= g.m) return false;
    node = g.target(node, l);
    if (node == 0) return false;
  }
  return node == w.node;
}

bool replay_steering(const FaceGraph& g, const SteeringWitness& sw) {
  for (const auto& [node, w] : sw.per_face_words) {
    if (walk(g, node, w) != 0) return false;
  }
  for (int u = 1; u < g.node_count(); ++u) {
    if (walk(g, u, sw.universal_word) != 0) return false;
  }
  return true;
}

ordered_json cycle_json(const CycleWitness& w, bool verified) {
  ordered_json j;
  j["node"] = w.node;
  j["face"] = w.face_name;
  j["word"] = word_json(w.word);
  j["length"] = w.word.size();
  j["verified"] = verified;
  return j;
}

ordered_json steering_json(const FaceGraph& g, const SteeringWitness& sw,
                           bool verified) {
  ordered_json per = ordered_json::array();
  for (const auto& [node, w] : sw.per_face_words) {
    ordered_json e;
    e["node"] = node;
    e["face"] = g.node_names[node];
    e["word"] = word_json(w);
    per.push_back(std::move(e));
  }
  ordered_json j;
  j["per_face_words"] = std::move(per);
  j["universal_word"] = word_json(sw.universal_word);
  j["universal_length"] = sw.universal_word.size();
  j["verified"] = verified;
  return j;
}

ordered_json tool_json() {
  ordered_json j;
  j["name"] = kToolName;
  j["version"] = kToolVersion;
  return j;
}

ordered_json system_json(const SwitchedSystem& sys, bool custom) {
  ordered_json j;
  j["n"] = sys.n;
  j["m"] = sys.m();
  ordered_json labels = ordered_json::array();
  for (int i = 0; i < sys.m(); ++i) {
    labels.push_back(sys.labels.empty() ? "A" + std::to_string(i)
                                        : sys.labels[i]);
  }
  j["labels"] = std::move(labels);
  ordered_json val;
  if (custom) {
    val["mode"] = "custom-polyhedron";
    val["ok"] = true;  // invariance was checked during graph construction
  } else {
    val["mode"] = "consensus-polyhedron";
    val["ok"] = true;
    ordered_json semis = ordered_json::array();
    for (const RatMatrix& a : sys.matrices) {
      semis.push_back(to_string(dobrushin_seminorm(a)));
    }
    val["dobrushin_seminorms"] = std::move(semis);
  }
  j["validation"] = std::move(val);
  return j;
}

ordered_json graph_json(const FaceGraph& g) {
  ordered_json j;
  j["nodes"] = g.node_count();
  j["edges"] = g.edge_count();
  return j;
}

// Problem 2 section from a built graph, with the universal word and a
// replay check of everything that goes into the report.
ordered_json problem2_json(const FaceGraph& g) {
  Verdict v = decide_problem2(g);
  ordered_json j;
  j["answer"] = v.answer;
  j["method"] = "face-graph";
  if (v.answer) {
    SteeringWitness sw = std::move(*v.steering);
    if (!replay_steering(g, sw)) {
      throw Error("steering witness failed replay before emission");
    }
    j["steering"] = steering_json(g, sw, true);
  } else {
    ordered_json un = ordered_json::array();
    for (int u : v.unreachable_nodes) {
      ordered_json e;
      e["node"] = u;
      e["face"] = g.node_names[u];
      un.push_back(std::move(e));
    }
    j["unreachable"] = std::move(un);
  }
  return j;
}

}  // namespace

AnalysisResult analyze(const SystemFile& sf, const AnalyzeOptions& opts) {
  AnalysisResult res;
  ordered_json& rep = res.report;
  rep["tool"] = tool_json();
  ordered_json run;
  run["timestamp"] = utc_timestamp();

  const SwitchedSystem& sys = sf.system;

  if (sf.polyhedron) {
    rep["system"] = system_json(sys, true);
    rep["mode"] = "custom-polyhedron";
    auto t0 = std::chrono::steady_clock::now();
    FaceGraph g = build_custom_face_graph(*sf.polyhedron, sys.matrices,
                                          sys.labels);
    run["graph_build_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    rep["graph"] = graph_json(g);

    Verdict v1 = decide_problem1(g);
    ordered_json p1;
    p1["answer"] = v1.answer;
    p1["method"] = "face-graph";
    if (!v1.answer) {
      if (!replay_cycle(g, *v1.cycle)) {
        throw Error("cycle witness failed replay before emission");
      }
      p1["cycle_witness"] = cycle_json(*v1.cycle, true);
    }
    rep["problem1"] = std::move(p1);
    rep["problem2"] = problem2_json(g);
    res.graph = std::move(g);
    rep["run"] = std::move(run);
    return res;
  }

  validate_system(sys);
  rep["system"] = system_json(sys, false);

  bool fast_eligible = sys.m() == 2 &&
                       is_undirected_stochastic(sys.matrices[0]) &&
                       is_undirected_stochastic(sys.matrices[1]);
  bool use_fast = fast_eligible && !opts.force_general;
  rep["mode"] = use_fast ? "fast-pair" : "face-graph";

  std::optional<FaceGraph> graph;
  if (!use_fast || sys.n <= opts.n_max) {
    auto t0 = std::chrono::steady_clock::now();
    graph = build_face_graph(sys, opts.n_max);
    run["graph_build_ms"] =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    rep["graph"] = graph_json(*graph);
  }

  ordered_json p1;
  if (use_fast) {
    Verdict fv = decide_two_undirected(sys.matrices[0], sys.matrices[1]);
    p1["answer"] = fv.answer;
    p1["method"] = "fast-pair";
    if (fv.failed_sequence) p1["failed_sequence"] = *fv.failed_sequence;
    if (graph) {
      Verdict gv = decide_problem1(*graph);
      if (gv.answer != fv.answer) {
        throw Error("fast path and face graph disagree on asymptotic "
                    "stability; this is a bug");
      }
      p1["cross_checked"] = true;
      if (!gv.answer) {
        if (!verify_cycle_witness(sys, *gv.cycle)) {
          throw Error("cycle witness failed replay before emission");
        }
        p1["cycle_witness"] = cycle_json(*gv.cycle, true);
      }
    }
  } else {
    Verdict gv = decide_problem1(*graph);
    p1["answer"] = gv.answer;
    p1["method"] = "face-graph";
    if (!gv.answer) {
      if (!verify_cycle_witness(sys, *gv.cycle)) {
        throw Error("cycle witness failed replay before emission");
      }
      p1["cycle_witness"] = cycle_json(*gv.cycle, true);
    }
    if (fast_eligible) {
      Verdict fv = decide_two_undirected(sys.matrices[0], sys.matrices[1]);
      if (fv.answer != gv.answer) {
        throw Error("fast path and face graph disagree on asymptotic "
                    "stability; this is a bug");
      }
      p1["fast_path_agrees"] = true;
    }
  }
  rep["problem1"] = std::move(p1);

  if (graph) {
    rep["problem2"] = problem2_json(*graph);
  } else {
    ordered_json p2;
    p2["skipped"] = "face enumeration for n = " + std::to_string(sys.n) +
                    " exceeds the guard (" + std::to_string(opts.n_max) +
                    "); rerun with --max-n to force it";
    rep["problem2"] = std::move(p2);
  }
  if (graph) res.graph = std::move(*graph);
  rep["run"] = std::move(run);
  return res;
}

OracleResult run_oracle(const SystemFile& sf, const OracleRunOptions& opts) {
  if (sf.polyhedron) {
    throw PreconditionError(
        "the brute-force oracle works on the consensus polyhedron only");
  }
  OracleResult res;
  ordered_json& rep = res.report;
  rep["tool"] = tool_json();
  ordered_json run;
  run["timestamp"] = utc_timestamp();

  const SwitchedSystem& sys = sf.system;
  validate_system(sys);
  rep["system"] = system_json(sys, false);

  Verdict v1 = brute_force_problem1(sys, opts.oracle);
  Verdict v2 = brute_force_problem2(sys, opts.oracle);
  ordered_json o;
  ordered_json p1;
  p1["answer"] = v1.answer;
  if (v1.cycle) {
    if (!verify_cycle_witness(sys, *v1.cycle)) {
      throw Error("cycle witness failed replay before emission");
    }
    p1["cycle_witness"] = cycle_json(*v1.cycle, true);
  }
  o["problem1"] = std::move(p1);
  ordered_json p2;
  p2["answer"] = v2.answer;
  if (v2.steering) {
    std::vector<FaceId> faces = enumerate_faces(sys.n, opts.n_max);
    ordered_json per = ordered_json::array();
    for (const auto& [node, w] : v2.steering->per_face_words) {
      FaceId f = faces[static_cast<std::size_t>(node) - 1];
      for (int l : w) f = map_face(sys.matrices[l], f);
      if (!f.empty()) {
        throw Error("steering witness failed replay before emission");
      }
      ordered_json e;
      e["node"] = node;
      e["word"] = word_json(w);
      per.push_back(std::move(e));
    }
    p2["per_face_words"] = std::move(per);
  }
  if (!v2.answer) {
    ordered_json un = ordered_json::array();
    for (int u : v2.unreachable_nodes) un.push_back(u);
    p2["unreachable_nodes"] = std::move(un);
  }
  o["problem2"] = std::move(p2);
  rep["oracle"] = std::move(o);

  if (opts.compare) {
    FaceGraph g = build_face_graph(sys, opts.n_max);
    Verdict g1 = decide_problem1(g);
    Verdict g2 = decide_problem2(g);
    ordered_json cmp;
    cmp["graph_problem1"] = g1.answer;
    cmp["graph_problem2"] = g2.answer;
    res.disagreement = g1.answer != v1.answer || g2.answer != v2.answer;
    cmp["agreement"] = !res.disagreement;
    rep["compare"] = std::move(cmp);
  }
  rep["run"] = std::move(run);
  return res;
}

}  // namespace confaces
