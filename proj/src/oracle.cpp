#include "confaces/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "confaces/faces.hpp"

namespace confaces {

TrajectoryTrace simulate(const SwitchedSystem& sys, const RatVec& x0,
                         const Word& word, int periods) {
  if (static_cast<int>(x0.size()) != sys.n) {
    throw DimensionError("initial state has dimension " +
                         std::to_string(x0.size()) + ", system has " +
                         std::to_string(sys.n));
  }
  if (word.empty()) throw PreconditionError("simulation word is empty");
  if (periods < 1) throw PreconditionError("period count must be positive");
  for (int l : word) {
    if (l < 0 || l >= sys.m()) {
      throw PreconditionError("word uses matrix index " + std::to_string(l) +
                              ", system has " + std::to_string(sys.m()) +
                              " matrices");
    }
  }
  TrajectoryTrace t;
  t.states.push_back(x0);
  t.seminorms.push_back(consensus_seminorm(x0));
  for (int p = 0; p < periods; ++p) {
    for (int l : word) {
      t.word.push_back(l);
      t.states.push_back(mat_apply(sys.matrices[l], t.states.back()));
      t.seminorms.push_back(consensus_seminorm(t.states.back()));
    }
  }
  return t;
}

std::string trace_to_csv(const TrajectoryTrace& t) {
  std::ostringstream os;
  const std::size_t n = t.states.empty() ? 0 : t.states[0].size();
  os << "t";
  for (std::size_t i = 0; i < n; ++i) os << ",x" << i;
  os << ",seminorm\n";
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    os << k;
    for (const Rational& v : t.states[k]) os << "," << to_string(v);
    os << "," << to_string(t.seminorms[k]) << "\n";
  }
  return os.str();
}

namespace {

void spend(long long& budget) {
  if (--budget < 0) {
    throw CapacityError(
        "brute-force work budget exhausted; use the face-graph path for this "
        "system");
  }
}

}  // namespace

Verdict brute_force_problem1(const SwitchedSystem& sys,
                             const OracleOptions& opts) {
  validate_system(sys);
  Verdict v;
  v.problem = Problem::AsymptoticStability;
  std::vector<FaceId> faces = enumerate_faces(sys.n);
  long long budget = opts.step_budget;

  // Depth-first over words in lexicographic prefix order, recomputing every
  // classification from the raw trajectory. Branches die on reaching the
  // interior (it is invariant) and on revisiting a face other than the
  // start: the face map is a function, so cutting the loop between the two
  // visits leaves a shorter word with the same images.
  for (std::size_t idx = 0; idx < faces.size(); ++idx) {
    const FaceId& start = faces[idx];
    std::vector<RatVec> points{representative_point(start, sys.n)};
    std::vector<FaceId> path_faces{start};
    std::vector<int> next_label{0};
    Word word;  // labels between consecutive path points
    std::set<FaceId> on_path{start};
    while (!points.empty()) {
      if (next_label.back() == sys.m()) {
        on_path.erase(path_faces.back());
        points.pop_back();
        path_faces.pop_back();
        next_label.pop_back();
        if (!word.empty()) word.pop_back();
        continue;
      }
      int l = next_label.back()++;
      spend(budget);
      RatVec y = mat_apply(sys.matrices[l], points.back());
      FaceId f = classify_point(y);
      if (f.empty()) continue;
      if (f == start) {
        v.answer = false;
        CycleWitness w;
        w.node = static_cast<int>(idx) + 1;
        w.face = start;
        w.face_name = face_to_string(start);
        w.word = word;
        w.word.push_back(l);
        v.cycle = std::move(w);
        return v;
      }
      if (on_path.count(f)) continue;
      on_path.insert(f);
      points.push_back(std::move(y));
      path_faces.push_back(std::move(f));
      next_label.push_back(0);
      word.push_back(l);
    }
  }
  v.answer = true;
  return v;
}

Verdict brute_force_problem2(const SwitchedSystem& sys,
                             const OracleOptions& opts) {
  validate_system(sys);
  Verdict v;
  v.problem = Problem::ReachabilityOfConsensus;
  std::vector<FaceId> faces = enumerate_faces(sys.n);
  long long budget = opts.step_budget;

  SteeringWitness sw;
  std::vector<int> unreachable;
  for (std::size_t idx = 0; idx < faces.size(); ++idx) {
    // Breadth-first over image faces from the representative; a visited set
    // is sound because each label maps a face to one face.
    std::vector<std::pair<RatVec, Word>> queue{
        {representative_point(faces[idx], sys.n), {}}};
    std::set<FaceId> visited{faces[idx]};
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
      for (int l = 0; l < sys.m() && !found; ++l) {
        spend(budget);
        RatVec y = mat_apply(sys.matrices[l], queue[qi].first);
        FaceId f = classify_point(y);
        Word w = queue[qi].second;
        w.push_back(l);
        if (f.empty()) {
          sw.per_face_words.emplace_back(static_cast<int>(idx) + 1,
                                         std::move(w));
          found = true;
        } else if (!visited.count(f)) {
          visited.insert(f);
          queue.emplace_back(std::move(y), std::move(w));
        }
      }
    }
    if (!found) unreachable.push_back(static_cast<int>(idx) + 1);
  }
  if (!unreachable.empty()) {
    v.answer = false;
    v.unreachable_nodes = std::move(unreachable);
    return v;
  }
  v.answer = true;
  v.steering = std::move(sw);
  return v;
}

namespace {

// Flips the sign so the first nonzero component is positive; vectors are
// tracked modulo sign throughout.
RatVec sign_canonical(RatVec g) {
  for (const Rational& v : g) {
    if (v == 0) continue;
    if (v < 0) {
      for (Rational& w : g) w = -w;
    }
    break;
  }
  return g;
}

Rational l1_norm(const RatVec& g) {
  Rational s(0);
  for (const Rational& v : g) s += abs(v);
  return s;
}

// Exact membership of p in the convex hull of T: phase-1 simplex on
// sum(lambda_j T_j) = p, sum(lambda_j) = 1, lambda >= 0 in homogeneous
// coordinates, with Bland's rule so it always terminates. Feasible iff the
// artificial objective reaches zero.
bool in_convex_hull(const std::vector<const RatVec*>& T, const RatVec& p) {
  if (T.empty()) return false;
  const std::size_t rows = p.size() + 1;
  const std::size_t cols = T.size();
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> tab(
      rows, std::vector<Rational>(width, Rational(0)));
  std::vector<Rational> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      tab[i][j] = i < p.size() ? (*T[j])[i] : Rational(1);
    }
    rhs[i] = i < p.size() ? p[i] : Rational(1);
    if (rhs[i] < 0) {
      for (Rational& v : tab[i]) v = -v;
      rhs[i] = -rhs[i];
    }
    tab[i][cols + i] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = cols + i;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width && enter == width; ++j) {
      Rational rc = j >= cols ? Rational(1) : Rational(0);
      for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= cols) rc -= tab[i][j];
      }
      if (rc < 0) enter = j;
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / tab[i][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded ray; treat as infeasible
    Rational piv = tab[leave][enter];
    for (Rational& v : tab[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave) continue;
      Rational f = tab[i][enter];
      if (f == 0) continue;
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    basis[leave] = enter;
  }
  Rational excess(0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= cols) excess += rhs[i];
  }
  return excess == 0;
}

// Removes every vector lying in the convex hull of plus/minus the others.
// Smallest first, so cheap redundancies shrink the later hull tests; the
// strict l1 maximum is extreme outright and skips its test.
void prune_to_extreme(std::vector<RatVec>& pts, long long& budget) {
  std::stable_sort(pts.begin(), pts.end(),
                   [](const RatVec& a, const RatVec& b) {
                     return l1_norm(a) < l1_norm(b);
                   });
  std::vector<RatVec> neg(pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    RatVec v(pts[j].size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -pts[j][k];
    neg[j] = std::move(v);
  }
  std::vector<bool> alive(pts.size(), true);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i + 1 == pts.size() && pts.size() > 1 &&
        l1_norm(pts[i]) > l1_norm(pts[i - 1])) {
      continue;
    }
    spend(budget);
    std::vector<const RatVec*> hull;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!alive[j] || j == i) continue;
      hull.push_back(&pts[j]);
      hull.push_back(&neg[j]);
    }
    if (in_convex_hull(hull, pts[i])) alive[i] = false;
  }
  std::vector<RatVec> kept;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (alive[i]) kept.push_back(std::move(pts[i]));
  }
  pts = std::move(kept);
}

}  // namespace

Rational decay_certificate(const SwitchedSystem& sys,
                           const OracleOptions& opts) {
  validate_system(sys);
  const int N = static_cast<int>(enumerate_faces(sys.n).size());
  long long budget = opts.step_budget;

  // The largest final seminorm over representatives and length-N words
  // equals the largest operator seminorm over length-N products: every
  // representative is a midpoint of full-sign vectors, and a full-sign
  // vector attains the operator seminorm. The seminorm of a product P is
  // half the largest l1 norm among the transposed row differences
  // P^T (e_i - e_j), and those vectors evolve linearly, one step per word
  // position: appending label l maps g to A_l^T g. So iterate the set of
  // reachable difference vectors, modulo sign and value duplicates, and
  // discard vectors inside the convex hull of the others: every future
  // quantity is a maximum of linear functionals, so hull-interior vectors
  // never attain it. Contraction keeps the pruned sets small; permutation-
  // like systems cycle through the same vectors and deduplicate instead.
  std::vector<RatMatrix> trans;
  for (const RatMatrix& a : sys.matrices) {
    RatMatrix t(sys.n);
    for (int i = 0; i < sys.n; ++i) {
      for (int j = 0; j < sys.n; ++j) t.at(i, j) = a.at(j, i);
    }
    trans.push_back(std::move(t));
  }

  std::vector<RatVec> pts;
  for (int i = 0; i < sys.n; ++i) {
    for (int j = i + 1; j < sys.n; ++j) {
      RatVec g(static_cast<std::size_t>(sys.n), Rational(0));
      g[static_cast<std::size_t>(i)] = 1;
      g[static_cast<std::size_t>(j)] = -1;
      pts.push_back(std::move(g));
    }
  }
  for (int level = 0; level < N; ++level) {
    std::set<RatVec> images;
    for (const RatVec& g : pts) {
      for (const RatMatrix& t : trans) {
        spend(budget);
        images.insert(sign_canonical(mat_apply(t, g)));
      }
    }
    pts.assign(images.begin(), images.end());
    if (level + 1 < N) prune_to_extreme(pts, budget);
  }

  Rational r(0);
  for (const RatVec& g : pts) {
    Rational s = l1_norm(g) / 2;
    if (s > r) r = s;
  }
  if (r >= 1) {
    throw PreconditionError(
        "some word of length N keeps the seminorm at " + to_string(r) +
        "; the decay certificate exists only for uniformly convergent systems");
  }
  return r;
}

}  // namespace confaces
