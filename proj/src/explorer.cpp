#include "hourglass/explorer.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <set>

#include "hourglass/fraser.hpp"
#include "hourglass/tableau.hpp"
#include "hourglass/trips.hpp"

namespace hourglass {

int MoveClass::index_of(const std::string& form) const {
  auto it = std::find(forms.begin(), forms.end(), form);
  return it == forms.end() ? -1 : static_cast<int>(it - forms.begin());
}

std::size_t max_class_size() {
  if (const char* env = std::getenv("HOURGLASS_MAX_CLASS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

namespace {

struct Neighbour {
  std::string form;
  HourglassGraph graph;
};

std::vector<Neighbour> square_neighbours(const HourglassGraph& g) {
  std::vector<Neighbour> out;
  for (const auto& f : faces(g)) {
    if (!square_move_applies(g, f)) continue;
    HourglassGraph h = canonicalize(apply_square_move(g, f));
    out.push_back({canonical_form(h), std::move(h)});
  }
  return out;
}

}  // namespace

MoveClass move_class(const HourglassGraph& g, std::size_t cap) {
  MoveClass mc;
  mc.trips = trip_all(g);
  std::map<std::string, int> index;
  auto add = [&](std::string form, HourglassGraph h) {
    const int id = static_cast<int>(mc.members.size());
    index.emplace(form, id);
    mc.forms.push_back(std::move(form));
    mc.members.push_back(std::move(h));
    return id;
  };
  add(canonical_form(g), canonicalize(g));

  std::set<std::pair<int, int>> edges;
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::future<std::vector<Neighbour>>> jobs;
    jobs.reserve(frontier.size());
    for (int id : frontier) {
      jobs.push_back(std::async(std::launch::async, square_neighbours, std::cref(mc.members[id])));
    }
    std::vector<std::vector<Neighbour>> results;
    for (auto& j : jobs) results.push_back(j.get());

    // Single merge point: new forms of this level are numbered in sorted order.
    std::map<std::string, HourglassGraph> fresh;
    for (auto& res : results) {
      for (auto& nb : res) {
        if (!index.count(nb.form)) fresh.emplace(nb.form, nb.graph);
      }
    }
    std::vector<int> next;
    for (auto& [form, h] : fresh) {
      if (mc.members.size() >= cap) {
        mc.complete = false;
        throw BoundedExplorationError("move class exceeds the cap of " + std::to_string(cap) + " graphs", mc);
      }
      if (trip_all(h) != mc.trips) {
        throw std::logic_error("square move changed the trip permutations of " + form);
      }
      next.push_back(add(form, h));
    }
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (const auto& nb : results[k]) {
        const int a = frontier[k];
        const int b = index.at(nb.form);
        if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
      }
    }
    frontier = std::move(next);
  }
  mc.edges.assign(edges.begin(), edges.end());
  return mc;
}

bool differ_by_flip(const WeightedPolygonGraph& a, const WeightedPolygonGraph& b) {
  if (a.s != b.s || a.boundary_weights != b.boundary_weights) return false;
  std::vector<Diagonal> only_a, only_b;
  std::set_difference(a.diagonals.begin(), a.diagonals.end(), b.diagonals.begin(), b.diagonals.end(),
                      std::back_inserter(only_a));
  std::set_difference(b.diagonals.begin(), b.diagonals.end(), a.diagonals.begin(), a.diagonals.end(),
                      std::back_inserter(only_b));
  return only_a.size() == 1 && only_b.size() == 1;
}

TamariReport tamari_check(int r) {
  if (r < 3) throw std::domain_error("tamari_check: r must be at least 3");
  TamariReport rep;
  rep.r = r;
  const auto mc = move_class(fraser_map(RectTableau::superstandard(r, 2)));
  const auto tris = triangulate_all(plain_polygon(r));
  rep.class_size = mc.size();
  rep.triangulations = tris.size();
  rep.class_edges = mc.edges.size();

  std::vector<int> member_of(tris.size(), -1);
  bool bijective = mc.size() == tris.size();
  for (std::size_t k = 0; k < mc.size() && bijective; ++k) {
    const auto rec = recover_triangulation(mc.members[k]);
    auto it = std::find(tris.begin(), tris.end(), rec.triangulation);
    if (it == tris.end() || member_of[it - tris.begin()] != -1 ||
        canonical_form(web_from_triangulation(rec.triangulation)) != mc.forms[k]) {
      bijective = false;
      break;
    }
    member_of[it - tris.begin()] = static_cast<int>(k);
    rep.triangulation_of.push_back(static_cast<int>(it - tris.begin()));
  }
  rep.bijection = bijective;

  std::set<std::pair<int, int>> flips;
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      if (differ_by_flip(tris[a], tris[b])) flips.insert({static_cast<int>(a), static_cast<int>(b)});
    }
  }
  rep.flip_edges = flips.size();
  if (rep.bijection) {
    std::set<std::pair<int, int>> mapped;
    for (auto [a, b] : mc.edges) {
      const int x = rep.triangulation_of[a], y = rep.triangulation_of[b];
      mapped.insert({std::min(x, y), std::max(x, y)});
    }
    rep.flip_graphs_agree = mapped == flips && mapped.size() == mc.edges.size();
  }

  std::vector<int> degree(mc.size(), 0);
  std::vector<std::vector<int>> adj(mc.size());
  for (auto [a, b] : mc.edges) {
    ++degree[a];
    ++degree[b];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  rep.regular = std::all_of(degree.begin(), degree.end(), [r](int d) { return d == r - 3; });
  std::vector<bool> seen(mc.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  rep.connected = count == mc.size();
  return rep;
}

ClassStatistics class_statistics(int r) {
  if (r < 1 || r > 7) throw std::domain_error("class_statistics: r must lie in 1..7");
  ClassStatistics st;
  st.r = r;
  const auto tableaux = all_standard_tableaux(r, 2);
  st.tableaux = tableaux.size();

  std::vector<std::future<MoveClass>> jobs;
  for (const auto& t : tableaux) {
    jobs.push_back(std::async(std::launch::async, [&t] { return move_class(fraser_map(t)); }));
  }
  std::map<std::string, std::size_t> owner;
  std::set<std::string> trip_sets;
  st.disjoint = true;
  st.trips_constant = true;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    MoveClass mc;
    try {
      mc = jobs[k].get();
    } catch (const std::logic_error& e) {
      st.trips_constant = false;
      st.detail = e.what();
      continue;
    }
    ++st.classes;
    st.class_sizes.push_back(mc.size());
    for (const auto& form : mc.forms) {
      auto [it, inserted] = owner.emplace(form, k);
      if (!inserted && st.disjoint) {
        st.disjoint = false;
        st.detail = "classes of tableaux " + std::to_string(it->second) + " and " + std::to_string(k) + " overlap";
      }
    }
    trip_sets.insert(to_string(mc.trips));
  }
  st.graphs = owner.size();
  st.trips_distinct = trip_sets.size() == st.classes;
  if (!st.trips_distinct && st.detail.empty()) st.detail = "two classes share trip permutations";
  return st;
}

}  // namespace hourglass
