#include "curvelab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "curvelab/complexes.hpp"
#include "curvelab/curves.hpp"
#include "curvelab/ends.hpp"
#include "curvelab/error.hpp"
#include "curvelab/morphisms.hpp"
#include "curvelab/pants_graphs.hpp"
#include "curvelab/surface_json.hpp"
#include "curvelab/verify.hpp"

namespace curvelab {

namespace {

struct Emit {
  std::ostream& out;
  std::string path;  // --out, when given

  void operator()(const Json& j) const {
    if (!path.empty()) {
      write_json_file(path, j);
    } else {
      out << dump(j);
    }
  }
};

Json tree_to_json(const EndTree& t, const FramedGraph& graph, int node) {
  const auto& n = t.nodes[node];
  Json vertices = Json::array();
  for (int v : n.vertices) vertices.push_back(graph.labels[v]);
  Json children = Json::array();
  for (int c : n.children) children.push_back(tree_to_json(t, graph, c));
  return Json{{"level", n.level}, {"vertices", vertices}, {"children", children}};
}

Json refs_to_json(const std::vector<CurveRef>& refs) {
  Json out = Json::array();
  for (const auto& r : refs) out.push_back(r.to_string());
  return out;
}

std::vector<CurveRef> load_inventory(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_array()) throw Error("MalformedJson", "inventory must be an array of curve refs");
  std::vector<CurveRef> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw Error("MalformedJson", "inventory entries must be strings");
    out.push_back(CurveRef::parse(item.get<std::string>()));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pants decompositions, curve complexes and their maps", "curvelab"};
  app.require_subcommand(1);

  std::string surface_path;
  std::string out_path;
  std::function<void(const Emit&)> action;
  auto surface = [&] { return load_surface(surface_path); };
  auto add_surface = [&](CLI::App* cmd) {
    cmd->add_option("surface", surface_path, "Surface JSON file")->required();
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "Write JSON here"); };

  // gen
  std::string model;
  int depth = 0;
  int genus = -1;
  int boundary = -1;
  auto* gen = app.add_subcommand("gen", "Generate a surface");
  auto* gen_model = gen->add_option("--model", model, "loch_ness | ladder | cantor_tree");
  gen->add_option("--depth", depth, "Truncation depth")->needs(gen_model);
  auto* gen_genus = gen->add_option("--genus", genus, "Finite genus")->excludes(gen_model);
  gen->add_option("--boundary", boundary, "Finite boundary count")->needs(gen_genus);
  add_out(gen);
  gen->callback([&] {
    action = [&](const Emit& emit) {
      if (!model.empty()) {
        emit(surface_to_json(build_truncation(parse_model(model), depth)));
      } else if (genus >= 0) {
        emit(surface_to_json(build_finite_surface(genus, std::max(boundary, 0))));
      } else {
        throw CLI::ValidationError("gen", "give --model and --depth, or --genus and --boundary");
      }
    };
  });

  // validate
  auto* val = app.add_subcommand("validate", "Check surface invariants");
  add_surface(val);
  int validate_status = 0;
  val->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      const auto violations = validate(g);
      Json list = Json::array();
      for (const auto& v : violations) {
        list.push_back(Json{{"kind", to_string(v.kind)}, {"detail", v.detail}});
      }
      Json j{{"valid", violations.empty()}, {"violations", list}};
      if (violations.empty()) {
        const SurfaceSignature s = signature(g);
        j["signature"] = Json{{"genus", s.genus}, {"boundary", s.boundary_count}};
      }
      emit(j);
      validate_status = violations.empty() ? 0 : 1;
    };
  });

  // classify
  std::string curve;
  auto* cls = app.add_subcommand("classify", "Classify decomposition curves");
  add_surface(cls);
  cls->add_option("--curve", curve, "Single curve id");
  cls->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      if (!curve.empty()) {
        emit(Json{{"curve", curve}, {"class", to_string(classify_curve(g, curve))}});
        return;
      }
      Json classes = Json::object();
      for (const auto& c : g.curves) {
        if (std::find(g.frontier.begin(), g.frontier.end(), c.id) != g.frontier.end()) continue;
        classes[c.id] = to_string(classify_curve(g, c.id));
      }
      emit(Json{{"classes", classes}});
    };
  });

  // adjacency
  auto* adj = app.add_subcommand("adjacency", "Curve adjacency graph A(P)");
  add_surface(adj);
  add_out(adj);
  adj->callback([&] {
    action = [&](const Emit& emit) {
      const AdjacencyGraph a = adjacency_graph(surface());
      Json edges = Json::array();
      for (const auto& [i, j] : a.edges) edges.push_back(Json::array({a.vertices[i], a.vertices[j]}));
      emit(Json{{"vertices", a.vertices}, {"edges", edges}});
    };
  });

  // ends
  std::string graph_kind = "adjacency";
  std::string base;
  int stride = kScaffoldStride;
  auto* ends_cmd = app.add_subcommand("ends", "End tree of a truncation");
  add_surface(ends_cmd);
  ends_cmd->add_option("--depth", depth, "Tree depth")->required();
  ends_cmd->add_option("--graph", graph_kind, "adjacency | pants")
      ->check(CLI::IsMember({"adjacency", "pants"}));
  ends_cmd->add_option("--base", base, "Base vertex (default: the first pants)");
  ends_cmd->add_option("--stride", stride, "Graph steps per level")->check(CLI::PositiveNumber);
  add_out(ends_cmd);
  ends_cmd->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      require_valid(g);
      const bool pants = graph_kind == "pants";
      const FramedGraph fg = pants ? pants_framed_graph(g) : adjacency_framed_graph(g);
      std::string b = base;
      if (b.empty()) b = pants ? g.pants.front() : adjacency_base_for(g, g.pants.front());
      const EndTree t = end_tree(fg, fg.require_vertex(b), depth, stride);
      emit(tree_to_json(t, fg, 0));
    };
  });

  // intersect
  std::string c1;
  std::string c2;
  auto* inter = app.add_subcommand("intersect", "Global intersection number");
  add_surface(inter);
  inter->add_option("--c1", c1, "Curve ref")->required();
  inter->add_option("--c2", c2, "Curve ref")->required();
  inter->callback([&] {
    action = [&](const Emit& emit) {
      const Intersection i = global_intersection(surface(), CurveRef::parse(c1), CurveRef::parse(c2));
      emit(Json{{"i", i ? Json(*i) : Json(nullptr)}});
    };
  });

  // triple, sch04
  std::string sa;
  std::string sb;
  std::int64_t bound = 0;
  auto* tri = app.add_subcommand("triple", "Complete a torus-window triple");
  tri->add_option("--a", sa, "Slope p/q")->required();
  tri->add_option("--b", sb, "Slope p/q")->required();
  tri->callback([&] {
    action = [&](const Emit& emit) {
      const Window w = torus_window();
      const Slope a = parse_slope(sa);
      const Slope b = parse_slope(sb);
      const auto [g1, g2] = triple_completion(w, a, b);
      emit(Json{{"g", g1.to_string()},
                {"g_prime", g2.to_string()},
                {"i_ab", window_intersection(w, a, b)},
                {"i_bg", window_intersection(w, b, g1)},
                {"i_bg_prime", window_intersection(w, b, g2)}});
    };
  });
  auto* sch = app.add_subcommand("sch04", "Common neighbours in a sphere window");
  sch->add_option("--a", sa, "Slope p/q")->required();
  sch->add_option("--b", sb, "Slope p/q")->required();
  sch->add_option("--bound", bound, "Search bound")->required();
  sch->callback([&] {
    action = [&](const Emit& emit) {
      Json list = Json::array();
      for (const Slope& s : sch04_common_neighbors(sphere_window(), parse_slope(sa), parse_slope(sb), bound)) {
        list.push_back(s.to_string());
      }
      emit(Json{{"neighbors", list}});
    };
  });

  // graph, path
  std::string mode;
  std::string inventory_path;
  std::int64_t slope_bound = 2;
  auto* graph = app.add_subcommand("graph", "Local piece of C(S), N(S) or G(S)");
  add_surface(graph);
  graph->add_option("--mode", mode, "c | n | g")->required();
  graph->add_option("--inventory", inventory_path, "JSON array of curve refs");
  graph->add_option("--slope-bound", slope_bound, "Slope bound of the default inventory");
  add_out(graph);
  graph->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      const ComplexKind kind = parse_complex_kind(mode);
      const auto inventory = inventory_path.empty() ? standard_inventory(g, slope_bound)
                                                    : load_inventory(inventory_path);
      const LocalCurveGraph lg = local_graph(g, inventory, kind);
      auto pairs = [&](const std::vector<std::pair<int, int>>& list) {
        Json j = Json::array();
        for (const auto& [a, b] : list) {
          j.push_back(Json::array({lg.vertices[a].to_string(), lg.vertices[b].to_string()}));
        }
        return j;
      };
      emit(Json{{"mode", to_string(kind)},
                {"vertices", refs_to_json(lg.vertices)},
                {"edges", pairs(lg.edges)},
                {"undefined_pairs", pairs(lg.undefined_pairs)}});
    };
  });
  std::string from;
  std::string to;
  auto* path = app.add_subcommand("path", "Certified short path between two curves");
  add_surface(path);
  path->add_option("--from", from, "Curve ref")->required();
  path->add_option("--to", to, "Curve ref")->required();
  path->add_option("--mode", mode, "c | n | g")->required();
  path->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      const CurveRef a = CurveRef::parse(from);
      const CurveRef b = CurveRef::parse(to);
      std::vector<CurveRef> p;
      if (parse_complex_kind(mode) == ComplexKind::Schmutz) {
        p = schmutz_path(g, a, b);
      } else {
        p = {a, disjointness_witness(g, a, b), b};
      }
      emit(Json{{"path", refs_to_json(p)}, {"length", p.size() - 1}});
    };
  });

  // counterexample
  std::string alpha;
  std::string gadget = "s12";
  int samples = 500;
  std::uint64_t seed = 1;
  auto* ce = app.add_subcommand("counterexample", "Cut-and-glue superinjective map");
  add_surface(ce);
  ce->add_option("--alpha", alpha, "Separating curve to cut")->required();
  ce->add_option("--gadget", gadget, "s12 | ladder | cantor");
  ce->add_option("--samples", samples, "Sampled defined pairs");
  ce->add_option("--seed", seed, "Sampling seed");
  ce->add_option("--slope-bound", slope_bound, "Slope bound of the map domain");
  add_out(ce);
  ce->callback([&] {
    action = [&](const Emit& emit) {
      const GluingGraph g = surface();
      const CutGlueResult r = cut_and_glue(g, alpha, parse_gadget(gadget), slope_bound);
      const auto report = check_superinjective(r.map, sample_defined_pairs(r.map, samples, seed));
      Json violations = Json::array();
      for (const auto& v : report.violations) {
        violations.push_back(Json{{"a", v.a.to_string()},
                                  {"b", v.b.to_string()},
                                  {"source_i", v.source_i},
                                  {"target_i", v.target_i}});
      }
      const int d = std::clamp(common_end_depth(g, r.target), 1, 3);
      emit(Json{{"violations", violations},
                {"witnesses", refs_to_json(r.witnesses)},
                {"homeomorphic", surfaces_homeomorphic(g, r.target, d)},
                {"checked", report.checked},
                {"skipped", report.skipped.size()},
                {"target", surface_to_json(r.target)}});
    };
  });

  // verify
  std::string suite;
  SuiteOptions options;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "Suite name or 'all'")->required();
  ver->add_option("--bound", options.bound, "Primary bound");
  ver->add_option("--search", options.search, "Secondary bound");
  ver->add_option("--depth", options.depth, "Depth or power");
  ver->add_option("--samples", options.samples, "Sample count");
  ver->add_option("--seed", options.seed, "Seed");
  int verify_status = 0;
  ver->callback([&] {
    action = [&](const Emit& emit) {
      std::vector<std::string> names = {suite};
      if (suite == "all") names = suite_names();
      Json results = Json::array();
      for (const auto& name : names) {
        const SuiteResult r = run_suite(name, options);
        Json j{{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}};
        if (!r.notes.empty()) j["notes"] = r.notes;
        if (r.failures > 0) verify_status = 1;
        results.push_back(j);
      }
      emit(results.size() == 1 ? results.front() : results);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    action(Emit{out, out_path});
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << dump(Json{{"error", e.code()}, {"detail", e.detail()}});
    return 1;
  } catch (const std::exception& e) {
    out << dump(Json{{"error", "Internal"}, {"detail", e.what()}});
    return 1;
  }
  return std::max(validate_status, verify_status);
}

}  // namespace curvelab
