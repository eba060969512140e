#include "hourglass/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>

#include "hourglass/explorer.hpp"
#include "hourglass/fraser.hpp"
#include "hourglass/sieving.hpp"
#include "hourglass/trips.hpp"

namespace hourglass {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string label(const RectTableau& t) {
  std::string s;
  for (int c = 1; c <= t.cols(); ++c) {
    s += c == 1 ? "[" : " | ";
    for (int x : t.column(c)) s += std::to_string(x) + " ";
  }
  return s + "]";
}

template <class F>
std::size_t for_tableaux(int max_r, Outcome& out, F&& f) {
  std::size_t count = 0;
  for (int r = 2; r <= max_r && out.ok; ++r) {
    for (const auto& t : all_standard_tableaux(r, 2)) {
      ++count;
      f(t, out);
      if (!out.ok) break;
    }
  }
  return count;
}

RectTableau example_tableau() {
  return RectTableau::from_columns({{1, 2, 4, 5, 8, 11, 13}, {3, 6, 7, 9, 10, 12, 14}});
}

Outcome trips_equal_prom(int max_r) {
  Outcome out;
  const auto n = for_tableaux(max_r, out, [](const RectTableau& t, Outcome& o) {
    if (trip_all(fraser_map(t)) != prom_all(t)) o.fail("trip permutations differ from promotion permutations for " + label(t));
  });
  if (out.ok) out.detail = std::to_string(n) + " tableaux";
  return out;
}

Outcome golden_values(int) {
  Outcome out;
  const auto t = example_tableau();
  const char* expect[] = {"2 6 4 5 9 7 8 12 10 11 14 13 3 1", "4 7 5 9 12 8 10 14 11 13 3 1 6 2",
                          "5 9 8 12 14 10 11 1 13 3 6 2 7 4"};
  for (int i = 1; i <= 3; ++i) {
    const auto got = prom_perm(t, i).to_string();
    if (got != expect[i - 1]) out.fail("prom_" + std::to_string(i) + " = " + got);
  }
  const int v = trip_perm(fraser_map(t), 4)(1);
  if (v != 8) out.fail("trip_4(1) = " + std::to_string(v));
  if (out.ok) out.detail = "prom_1..3 and trip_4(1) = 8";
  return out;
}

Outcome fully_reduced_and_contracted(int max_r) {
  Outcome out;
  const auto n = for_tableaux(max_r, out, [](const RectTableau& t, Outcome& o) {
    const auto g = fraser_map(t);
    const auto rep = fully_reduced_report(g);
    if (!rep.fully_reduced) o.fail("not fully reduced: " + label(t) + ": " + rep.diagnosis);
    else if (!is_contracted(g) || canonical_form(normalize_contracted(g)) != canonical_form(g))
      o.fail("not contracted: " + label(t));
  });
  if (out.ok) out.detail = std::to_string(n) + " tableaux";
  return out;
}

Outcome square_criterion(int max_r) {
  Outcome out;
  std::size_t count = 0;
  for (int r = 1; r <= max_r && out.ok; ++r) {
    const int cap = r + 2;
    for (int a = 1; a <= cap; ++a)
      for (int b = 1; a + b <= cap; ++b)
        for (int c = 1; a + b + c <= cap; ++c)
          for (int d = 1; a + b + c + d <= cap; ++d)
            for (Color first : {Color::White, Color::Black}) {
              const std::vector<int> m = {a, b, c, d};
              const auto g = standalone_square(r, m, first);
              const auto fs = faces(g);
              // Squares without leaves form an isolated component and have no face.
              const bool fr = fs.size() == 1 ? square_fully_reduced(g, fs[0]) : fully_reduced(g);
              ++count;
              if (fr != (a + b + c + d <= r)) {
                out.fail("r=" + std::to_string(r) + " m=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + "," + std::to_string(d) + ") fully_reduced=" + std::to_string(fr));
              }
            }
  }
  if (out.ok) out.detail = std::to_string(count) + " squares";
  return out;
}

Outcome square_move_invariance(int max_r) {
  Outcome out;
  std::size_t moves = 0;
  for_tableaux(max_r, out, [&moves](const RectTableau& t, Outcome& o) {
    const auto g = fraser_map(t);
    const auto trips = trip_all(g);
    for (const auto& f : faces(g)) {
      if (!square_move_applies(g, f)) continue;
      ++moves;
      const auto h = apply_square_move(g, f);
      const auto rep = validate(h);
      if (!rep.ok) o.fail("square move produced an invalid graph for " + label(t) + ": " + rep.violations.front());
      else if (trip_all(h) != trips) o.fail("square move changed trips for " + label(t));
    }
  });
  if (out.ok) out.detail = std::to_string(moves) + " square moves";
  return out;
}

Outcome reconstruction(int max_r) {
  Outcome out;
  const auto n = for_tableaux(max_r, out, [](const RectTableau& t, Outcome& o) {
    if (!(recover_tableau(fraser_map(t)) == t)) o.fail("recovered tableau differs for " + label(t));
  });
  for (int r = 1; r <= 8 && out.ok; ++r) {
    const auto s = star_graph(r);
    if (!(recover_tableau(s) == RectTableau::column_tableau(r))) out.fail("star " + std::to_string(r) + " not recovered");
    for (int i = 1; i < r; ++i) {
      const auto p = trip_perm(s, i);
      for (int j = 1; j <= r; ++j) {
        if (p(j) != (j + i - 1) % r + 1) out.fail("trip_" + std::to_string(i) + " of star " + std::to_string(r));
      }
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " tableaux, stars r <= 8";
  return out;
}

Outcome equivariance(int max_r) {
  Outcome out;
  const auto n = for_tableaux(max_r, out, [](const RectTableau& t, Outcome& o) {
    const auto g = fraser_map(t);
    const auto rot = rotate(g);
    const auto ref = reflect(g);
    const auto prom_rot = prom_all(promote(t));
    const auto prom_ref = prom_all(evacuation(t));
    const int n = 2 * t.rows();
    const auto w0 = Permutation::longest_element(n);
    for (int i = 1; i < t.rows(); ++i) {
      const auto tg = trip_perm(g, i);
      const auto tr = trip_perm(rot, i);
      if (!(tr == conjugate_by_long_cycle(tg)) || !(tr == prom_rot[i - 1])) o.fail("rotation fails for " + label(t));
      const auto tf = trip_perm(ref, i);
      if (!(tf == w0 * tg.inverse() * w0) || !(tf == prom_ref[i - 1])) o.fail("reflection fails for " + label(t));
    }
  });
  if (out.ok) out.detail = std::to_string(n) + " tableaux";
  return out;
}

Outcome tamari(int) {
  Outcome out;
  const std::size_t sizes[] = {2, 5, 14, 42};
  for (int r = 4; r <= 7 && out.ok; ++r) {
    const auto rep = tamari_check(r);
    if (rep.class_size != sizes[r - 4]) out.fail("r=" + std::to_string(r) + " class size " + std::to_string(rep.class_size));
    else if (!rep.ok()) out.fail("r=" + std::to_string(r) + " flip graph differs from the triangulation flip graph");
  }
  if (out.ok) out.detail = "class sizes 2 5 14 42";
  return out;
}

Outcome ears(int max_r) {
  Outcome out;
  std::size_t removed = 0;
  const auto n = for_tableaux(max_r, out, [&removed](const RectTableau& t, Outcome& o) {
    const auto g = fraser_map(t);
    if (g.components().size() > 1) return;
    const auto m = matching_from_tableau(t);
    bool proper = false;
    for (const auto& e : find_ears(g)) {
      if (!is_proper_ear(e, m(1))) continue;
      proper = true;
      ++removed;
      // Collapsing the triangle nests the block [end of A, B, start of C].
      std::vector<int> block(e.claw_a.end() - e.p, e.claw_a.end());
      block.insert(block.end(), e.claw_b.begin(), e.claw_b.end());
      block.insert(block.end(), e.claw_c.begin(), e.claw_c.begin() + e.q);
      auto partner = m.partners();
      const int len = static_cast<int>(block.size());
      for (int k = 0; k < len; ++k) partner[block[k] - 1] = block[len - 1 - k];
      const auto expect = tableau_from_matching(NoncrossingMatching(partner));
      if (!(recover_tableau(remove_ear(g, e)) == expect)) o.fail("ear removal inconsistent for " + label(t));
    }
    if (!proper) o.fail("no proper ear for " + label(t));
  });
  if (out.ok) out.detail = std::to_string(n) + " tableaux, " + std::to_string(removed) + " ear removals";
  return out;
}

Outcome cyclic_sieving(int) {
  Outcome out;
  for (int r = 1; r <= 8 && out.ok; ++r) {
    const auto rep = csp_check(r, 2);
    if (!rep.ok()) out.fail("shape " + std::to_string(r) + "x2 fails at k=" + std::to_string(rep.first_failure()));
  }
  const auto a = promotion_fixed_counts(2, 2);
  const auto f = q_hook_poly(2, 2);
  if (a != std::vector<std::int64_t>{2, 0, 2, 0}) out.fail("2x2 fixed counts");
  if (!(f == QPolynomial({1, 0, 1}))) out.fail("2x2 hook polynomial is " + f.to_string());
  for (int k = 0; k < 4; ++k) {
    if (eval_root_of_unity(f, 4, k) != a[k]) out.fail("2x2 evaluation at k=" + std::to_string(k));
  }
  if (out.ok) out.detail = "r x 2 for r <= 8 and the 2x2 case";
  return out;
}

Outcome class_disjointness(int max_r) {
  Outcome out;
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int r = 1; r <= std::min(5, max_r) && out.ok; ++r) {
    const auto st = class_statistics(r);
    if (!st.ok()) out.fail("r=" + std::to_string(r) + ": " + st.detail);
    else if (st.classes != catalan[r]) out.fail("r=" + std::to_string(r) + " has " + std::to_string(st.classes) + " classes");
  }
  if (out.ok) out.detail = "r <= " + std::to_string(std::min(5, max_r));
  return out;
}

struct Criterion {
  const char* name;
  double limit;
  Outcome (*run)(int);
};

const Criterion kCriteria[kCriterionCount] = {
    {"trip permutations equal promotion permutations", 30, trips_equal_prom},
    {"golden promotion and trip values", 5, golden_values},
    {"Fraser graphs are fully reduced and contracted", 60, fully_reduced_and_contracted},
    {"square face criterion", 30, square_criterion},
    {"square moves preserve trip permutations", 60, square_move_invariance},
    {"reconstruction and star graphs", 30, reconstruction},
    {"rotation and reflection equivariance", 60, equivariance},
    {"superstandard classes and triangulation flips", 60, tamari},
    {"proper ears and ear removal", 60, ears},
    {"cyclic sieving", 120, cyclic_sieving},
    {"move classes partition the Fraser graphs", 60, class_disjointness},
};

}  // namespace

CriterionResult run_criterion(int id, int max_r) {
  CriterionResult res;
  res.id = id;
  if (id < 1 || id > kCriterionCount) {
    res.name = "unknown";
    res.detail = "no criterion " + std::to_string(id);
    return res;
  }
  const auto& c = kCriteria[id - 1];
  res.name = c.name;
  res.limit_seconds = c.limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto out = c.run(max_r);
    res.checks_passed = out.ok;
    res.detail = out.detail;
  } catch (const std::exception& e) {
    res.checks_passed = false;
    res.detail = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::vector<CriterionResult> verify_all(int max_r, bool parallel) {
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, max_r));
    return out;
  }
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= kCriterionCount; ++id) jobs.push_back(std::async(std::launch::async, run_criterion, id, max_r));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << std::fixed << std::setprecision(2)
     << r.seconds << " s / " << std::setprecision(0) << r.limit_seconds << " s)";
  if (!r.within_limit()) os << " over time limit";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace hourglass
