// Command-line front end. Exit codes: 0 ok, 1 verification failure, 2 input error.
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hourglass/explorer.hpp"
#include "hourglass/fraser.hpp"
#include "hourglass/json_io.hpp"
#include "hourglass/render.hpp"
#include "hourglass/sieving.hpp"
#include "hourglass/trips.hpp"
#include "hourglass/verify.hpp"

using namespace hourglass;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

void emit(const Json& j) { std::cout << dump_canonical(j); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Json tuple_json(const PermutationTuple& t) {
  Json a = Json::array();
  for (const auto& p : t) a.push_back(to_json(p));
  return a;
}

Json face_json(const HourglassGraph& g, const Face& f, std::size_t id) {
  return {{"id", id},
          {"vertices", f.vertices},
          {"edges", f.edges},
          {"m", f.m_value},
          {"length", f.length()},
          {"square_move_applies", square_move_applies(g, f)}};
}

Json validation_json(const ValidationReport& rep) {
  Json j = {{"ok", rep.ok},
            {"standard_type", rep.standard_type},
            {"white", rep.white},
            {"black", rep.black},
            {"violations", rep.violations}};
  j["plucker_degree"] = rep.plucker_degree ? Json(*rep.plucker_degree) : Json(nullptr);
  return j;
}

HourglassGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }
RectTableau load_tableau(const std::string& path) { return tableau_from_json(read_json_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hourglass plabic graphs, promotion and web bases for r x 2 tableaux"};
  app.require_subcommand(1);
  int code = kOk;

  // tableau
  auto* tab = app.add_subcommand("tableau", "Promotion and evacuation of rectangular tableaux");
  tab->require_subcommand(1);
  std::string tab_in;
  int prom_index = 0;
  auto* t_prom = tab->add_subcommand("prom", "Promotion permutations");
  t_prom->add_option("--in", tab_in, "Tableau JSON")->required();
  t_prom->add_option("--i", prom_index, "Only prom_i");
  auto* t_promote = tab->add_subcommand("promote", "Apply promotion");
  t_promote->add_option("--in", tab_in, "Tableau JSON")->required();
  int power = 1;
  t_promote->add_option("--power", power, "Number of promotions");
  auto* t_evac = tab->add_subcommand("evac", "Apply evacuation");
  t_evac->add_option("--in", tab_in, "Tableau JSON")->required();

  t_prom->callback([&] {
    const auto t = load_tableau(tab_in);
    if (prom_index) emit({{"i", prom_index}, {"prom", to_json(prom_perm(t, prom_index))}});
    else emit({{"prom", tuple_json(prom_all(t))}});
  });
  t_promote->callback([&] { emit(to_json(promote_power(load_tableau(tab_in), power))); });
  t_evac->callback([&] { emit(to_json(evacuation(load_tableau(tab_in)))); });

  // fraser
  auto* fr = app.add_subcommand("fraser", "Fraser map from tableaux to hourglass plabic graphs");
  fr->require_subcommand(1);
  std::string fr_in, fr_tri = "fan", fr_svg;
  auto* fr_map = fr->add_subcommand("map", "Graph of a two-column tableau");
  fr_map->add_option("--in,--tableau", fr_in, "Tableau JSON")->required();
  fr_map->add_option("--triangulation", fr_tri, "fan, or a polygon JSON completing the dissection");
  fr_map->add_option("--svg", fr_svg, "Also write an SVG drawing");
  fr_map->callback([&] {
    const auto t = load_tableau(fr_in);
    HourglassGraph g;
    if (fr_tri == "fan") {
      g = fraser_map(t);
    } else {
      auto tri = polygon_from_json(read_json_file(fr_tri));
      if (tri.claw_sizes.empty()) {
        const auto d = dissection(matching_from_tableau(t));
        tri.claw_sizes = d.claw_sizes;
        tri.claw_offsets = d.claw_offsets;
      }
      g = fraser_map(t, tri);
    }
    if (!fr_svg.empty()) write_file(fr_svg, render_svg(g));
    emit(to_json(g));
  });

  // graph
  auto* gr = app.add_subcommand("graph", "Inspect hourglass plabic graphs");
  gr->require_subcommand(1);
  std::string g_in, g_format = "svg", g_out;
  bool g_segments = false;
  auto* g_validate = gr->add_subcommand("validate", "Structural checks; exit 1 when invalid");
  auto* g_trips = gr->add_subcommand("trips", "Trip permutations");
  auto* g_fr = gr->add_subcommand("fully-reduced", "Fully reduced test; exit 1 when not");
  auto* g_faces = gr->add_subcommand("faces", "Internal faces");
  auto* g_render = gr->add_subcommand("render", "SVG or DOT drawing");
  for (auto* sc : {g_validate, g_trips, g_fr, g_faces, g_render}) sc->add_option("--in,--graph", g_in, "Graph JSON")->required();
  g_trips->add_flag("--segments", g_segments, "Include every trip segment");
  g_render->add_option("--format", g_format, "svg or dot")->check(CLI::IsMember({"svg", "dot"}));
  g_render->add_option("--out", g_out, "Output file (default stdout)");

  g_validate->callback([&] {
    const auto rep = validate(load_graph(g_in));
    emit(validation_json(rep));
    if (!rep.ok) code = kFailed;
  });
  g_trips->callback([&] {
    const auto g = load_graph(g_in);
    Json j = {{"trips", tuple_json(trip_all(g))}};
    if (g_segments) {
      Json segs = Json::array();
      for (int i = 1; i < g.r; ++i) {
        for (const auto& s : all_trip_segments(g, i)) segs.push_back(to_json(s));
      }
      j["segments"] = segs;
    }
    emit(j);
  });
  g_fr->callback([&] {
    const auto g = load_graph(g_in);
    const auto v = validate(g);
    if (!v.ok) throw InputError("invalid graph: " + v.violations.front());
    const auto rep = fully_reduced_report(g);
    Json j = {{"fully_reduced", rep.fully_reduced},
              {"isolated_component", rep.isolated_component},
              {"self_intersections", rep.self_intersections.size()},
              {"diagnosis", rep.diagnosis}};
    if (rep.double_crossing) {
      j["witness"] = {{"first", to_json(rep.double_crossing->first)},
                      {"second", to_json(rep.double_crossing->second)},
                      {"reason", rep.double_crossing->reason}};
    }
    emit(j);
    if (!rep.fully_reduced) code = kFailed;
  });
  g_faces->callback([&] {
    const auto g = load_graph(g_in);
    const auto fs = faces(g);
    Json a = Json::array();
    for (std::size_t k = 0; k < fs.size(); ++k) a.push_back(face_json(g, fs[k], k));
    emit({{"faces", a}});
  });
  g_render->callback([&] {
    const auto g = load_graph(g_in);
    const auto text = g_format == "dot" ? render_dot(g) : render_svg(g);
    if (g_out.empty()) std::cout << text;
    else write_file(g_out, text);
  });

  // move
  auto* mv = app.add_subcommand("move", "Local moves");
  mv->require_subcommand(1);
  std::string mv_in;
  int mv_face = -1;
  auto* mv_square = mv->add_subcommand("square", "Square move at a face (ids as listed by graph faces)");
  mv_square->add_option("--in,--graph", mv_in, "Graph JSON")->required();
  mv_square->add_option("--face", mv_face, "Face id")->required();
  mv_square->callback([&] {
    const auto g = load_graph(mv_in);
    const auto fs = faces(g);
    if (mv_face < 0 || mv_face >= static_cast<int>(fs.size())) throw InputError("no face " + std::to_string(mv_face));
    emit(to_json(apply_square_move(g, fs[mv_face])));
  });

  // explore
  auto* ex = app.add_subcommand("explore", "Move-equivalence classes");
  ex->require_subcommand(1);
  std::string ex_in, ex_dot;
  int ex_r = 5;
  auto* ex_class = ex->add_subcommand("class", "Square-move class of a graph");
  ex_class->add_option("--in,--graph", ex_in, "Graph JSON")->required();
  ex_class->add_option("--dot", ex_dot, "Write the flip graph as DOT");
  auto* ex_tamari = ex->add_subcommand("tamari", "Superstandard class against triangulations");
  ex_tamari->add_option("--r", ex_r, "Number of rows")->required();
  ex_tamari->add_option("--dot", ex_dot, "Write the flip graph as DOT");

  auto class_json = [](const MoveClass& mc) {
    Json edges = Json::array();
    for (auto [a, b] : mc.edges) edges.push_back({a, b});
    return Json{{"size", mc.size()}, {"complete", mc.complete}, {"members", mc.forms}, {"edges", edges},
                {"trips", tuple_json(mc.trips)}};
  };
  ex_class->callback([&] {
    const auto g = load_graph(ex_in);
    const auto v = validate(g);
    if (!v.ok) throw InputError("invalid graph: " + v.violations.front());
    try {
      const auto mc = move_class(g);
      if (!ex_dot.empty()) write_file(ex_dot, flip_graph_dot(mc));
      emit(class_json(mc));
    } catch (const BoundedExplorationError& e) {
      std::cerr << e.what() << "\n";
      emit(class_json(e.partial()));
      code = kFailed;
    }
  });
  ex_tamari->callback([&] {
    const auto rep = tamari_check(ex_r);
    if (!ex_dot.empty()) write_file(ex_dot, flip_graph_dot(move_class(fraser_map(RectTableau::superstandard(ex_r, 2)))));
    // A connected 2-regular flip graph is a cycle.
    const std::string shape = rep.r == 5 && rep.connected && rep.regular ? "C" + std::to_string(rep.class_size)
                                                                         : std::to_string(rep.class_edges) + " edges";
    emit({{"r", rep.r},
          {"class_size", rep.class_size},
          {"triangulations", rep.triangulations},
          {"class_edges", rep.class_edges},
          {"flip_edges", rep.flip_edges},
          {"bijection", rep.bijection},
          {"flip_graphs_agree", rep.flip_graphs_agree},
          {"connected", rep.connected},
          {"regular", rep.regular},
          {"triangulation_of", rep.triangulation_of},
          {"summary", std::to_string(rep.class_size) + " class members, flip graph " + shape},
          {"ok", rep.ok()}});
    if (!rep.ok()) code = kFailed;
  });

  // csp
  auto* csp = app.add_subcommand("csp", "Cyclic sieving for promotion on r x d tableaux");
  int csp_r = 2, csp_d = 2;
  csp->add_option("--rows", csp_r, "Rows")->required()->check(CLI::PositiveNumber);
  csp->add_option("--cols", csp_d, "Columns")->required()->check(CLI::PositiveNumber);
  csp->callback([&] {
    const auto rep = csp_check(csp_r, csp_d);
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"k", row.k}, {"fixed_count", row.fixed_count}, {"f_value", row.f_value}, {"ok", row.ok()}});
    }
    emit({{"rows", csp_r}, {"cols", csp_d}, {"f", rep.f.to_string()}, {"table", rows}, {"ok", rep.ok()}});
    if (!rep.ok()) code = kFailed;
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Acceptance checks");
  ver->require_subcommand(1);
  int max_r = 6;
  auto* ver_all = ver->add_subcommand("all", "Run every criterion; exit 0 iff all pass");
  ver_all->add_option("--max-r", max_r, "Largest r in tableau sweeps")->check(CLI::Range(2, 7));
  ver_all->callback([&] {
    int passed = 0;
    for (const auto& r : verify_all(max_r)) {
      std::cout << format_result(r) << "\n";
      passed += r.passed();
    }
    std::cout << passed << "/" << kCriterionCount << " criteria passed\n";
    if (passed != kCriterionCount) code = kFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  } catch (const InputError& e) {
    std::cerr << dump_canonical(Json{{"error", "input"}, {"message", e.what()}});
    return kBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << dump_canonical(Json{{"error", "contract"}, {"message", e.what()}});
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << dump_canonical(Json{{"error", "contract"}, {"message", e.what()}});
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << dump_canonical(Json{{"error", "internal"}, {"message", e.what()}});
    return kFailed;
  }
  return code;
}
