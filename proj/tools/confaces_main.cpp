#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "confaces/report.hpp"

namespace {

using namespace confaces;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write to '" + path + "'");
  out << text;
}

confaces::Word parse_word(const std::string& s) {
  confaces::Word w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item = s.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      w.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("word entry '" + item +
                       "' is not a nonnegative matrix index");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

int run_analyze(const std::string& path, const std::string& report_path,
                const std::string& dot_path, bool witness, bool force_general,
                int max_n) {
  SystemFile sf = load_system_file(path);
  AnalyzeOptions opts;
  opts.force_general = force_general;
  opts.n_max = max_n;
  AnalysisResult res = analyze(sf, opts);
  const auto& rep = res.report;

  std::cout << "mode: " << rep["mode"].get<std::string>() << "\n";
  if (rep.contains("graph")) {
    std::cout << "graph: " << rep["graph"]["nodes"] << " nodes, "
              << rep["graph"]["edges"] << " edges\n";
  }
  const auto& p1 = rep["problem1"];
  std::cout << "problem 1 (every sequence reaches consensus): "
            << (p1["answer"].get<bool>() ? "yes" : "no") << "\n";
  const auto& p2 = rep["problem2"];
  if (p2.contains("answer")) {
    std::cout << "problem 2 (some sequence reaches consensus): "
              << (p2["answer"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    std::cout << "problem 2: skipped (" << p2["skipped"].get<std::string>()
              << ")\n";
  }
  if (witness) {
    if (p1.contains("failed_sequence")) {
      std::cout << "  failing sequence: " << p1["failed_sequence"].get<std::string>()
                << "\n";
    }
    if (p1.contains("cycle_witness")) {
      const auto& w = p1["cycle_witness"];
      std::cout << "  cycle witness: face " << w["face"].get<std::string>()
                << ", word " << w["word"].dump() << "\n";
    }
    if (p2.contains("steering")) {
      std::cout << "  universal steering word: "
                << p2["steering"]["universal_word"].dump() << "\n";
    }
  }
  if (!report_path.empty()) write_text(report_path, rep.dump(2) + "\n");
  if (!dot_path.empty()) {
    if (res.graph) {
      write_text(dot_path, to_dot(*res.graph));
    } else {
      std::cerr << "note: no face graph was built, skipping --dot\n";
    }
  }
  return 0;
}

int run_oracle(const std::string& path, const std::string& report_path,
               bool compare, long long budget, int max_n) {
  SystemFile sf = load_system_file(path);
  OracleRunOptions opts;
  opts.compare = compare;
  opts.n_max = max_n;
  if (budget > 0) opts.oracle.step_budget = budget;
  OracleResult res = run_oracle(sf, opts);
  const auto& o = res.report["oracle"];
  std::cout << "oracle problem 1: "
            << (o["problem1"]["answer"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "oracle problem 2: "
            << (o["problem2"]["answer"].get<bool>() ? "yes" : "no") << "\n";
  if (compare) {
    std::cout << "graph agreement: " << (res.disagreement ? "no" : "yes")
              << "\n";
  }
  if (!report_path.empty()) write_text(report_path, res.report.dump(2) + "\n");
  return res.disagreement ? 3 : 0;
}

int run_simulate(const std::string& path, const std::string& x0_text,
                 const std::string& word_text, int periods,
                 const std::string& trace_path) {
  SystemFile sf = load_system_file(path);
  validate_system(sf.system);
  RatVec x0 = parse_rational_vector(x0_text);
  Word word = parse_word(word_text);
  TrajectoryTrace t = simulate(sf.system, x0, word, periods);
  std::string csv = trace_to_csv(t);
  if (trace_path.empty()) {
    std::cout << csv;
  } else {
    write_text(trace_path, csv);
  }
  std::cout << "final seminorm: " << to_string(t.seminorms.back()) << "\n";
  return 0;
}

int run_census(int n) {
  FaceCensus c = face_census(n);
  std::cout << "n=" << c.n << " total_faces=" << c.total_faces.get_str()
            << " proper_pairs=" << c.proper_pairs.get_str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine for switched linear consensus systems"};
  app.require_subcommand(1);

  std::string path, report_path, dot_path, x0_text, word_text, trace_path;
  bool witness = false, force_general = false, compare = false;
  int max_n = 12, periods = 1, census_n = 0;
  long long budget = 0;

  auto* an = app.add_subcommand(
      "analyze", "decide both problems and emit certificates");
  an->add_option("file", path, "system file (JSON)")->required();
  an->add_option("--report", report_path, "write the JSON report here");
  an->add_option("--dot", dot_path, "write the face graph in DOT form here");
  an->add_flag("--witness", witness, "print witness details");
  an->add_flag("--force-general", force_general,
               "skip the two-matrix fast path");
  an->add_option("--max-n", max_n, "face enumeration guard (default 12)");

  auto* orc = app.add_subcommand(
      "oracle", "brute-force decision without the face graph");
  orc->add_option("file", path, "system file (JSON)")->required();
  orc->add_option("--report", report_path, "write the JSON report here");
  orc->add_flag("--compare", compare,
                "also run the graph path; exit 3 on disagreement");
  orc->add_option("--budget", budget, "work budget in path expansions");
  orc->add_option("--max-n", max_n, "face enumeration guard (default 12)");

  auto* sim = app.add_subcommand("simulate", "exact trajectory under a word");
  sim->add_option("file", path, "system file (JSON)")->required();
  sim->add_option("--x0", x0_text, "initial state, e.g. \"1,-1\"")->required();
  sim->add_option("--word", word_text, "switching word, e.g. \"0,1\"")
      ->required();
  sim->add_option("--periods", periods, "how often to repeat the word");
  sim->add_option("--trace", trace_path, "write the CSV trace here");

  auto* cen = app.add_subcommand("census", "face counts of the polyhedron");
  cen->add_option("n", census_n, "dimension")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(an)) {
      return run_analyze(path, report_path, dot_path, witness, force_general,
                         max_n);
    }
    if (app.got_subcommand(orc)) {
      return run_oracle(path, report_path, compare, budget, max_n);
    }
    if (app.got_subcommand(sim)) {
      return run_simulate(path, x0_text, word_text, periods, trace_path);
    }
    return run_census(census_n);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const InvarianceError& e) {
    std::cerr << "invariance error: " << e.what() << "\n";
    return 2;
  } catch (const OutsidePolyhedronError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
