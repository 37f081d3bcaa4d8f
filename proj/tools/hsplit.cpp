// Command-line front end. Exit codes: 0 success, 1 verification failure or
// broken precondition/contract, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hsplit/hsplit.hpp"

using namespace hsplit;

namespace {

struct Failure {
  std::string message;
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Hypergraph load(const std::string& path) { return parse_hypergraph(read_file(path)); }

std::string labels(const Hypergraph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

VertexSet terminal_set(const Hypergraph& g, const std::vector<std::string>& names) {
  return names.empty() ? g.vertices() : g.vertex_set(names);
}

// Re-indexes a hypergraph over the same labels into g's vertex order.
EdgeMap edges_in(const Hypergraph& g, const Hypergraph& other) {
  if (other.num_vertices() != g.num_vertices()) throw InputError("hypergraphs have different vertex sets");
  EdgeMap out;
  for (const auto& [e, w] : other.edges()) {
    std::vector<std::string> names;
    for (Vertex v : e) names.push_back(other.label(v));
    edge_add(out, g.vertex_set(names), w);
  }
  return out;
}

void report(const Report& r) {
  if (!r.ok) throw Failure{r.failure};
  std::cout << "verified: ok\n";
}

std::string partition_text(const Hypergraph& g, const std::vector<VertexSet>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "{" : " {") + labels(g, p) + "}";
  return out;
}

Weight binomial2(long long m) { return Weight(m) * (m - 1) / 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph splitting-off, covers, decompositions and orientations"};
  app.require_subcommand(1);

  std::string file, source, sink, vertex, script_out, req_file, base_file, appendix_u, root, out_file;
  std::string gstar_file, script_in, pinch_file, orient_file, kind;
  std::vector<std::string> terminals;
  long long k = -1, n = 0, kec = -1, wpc = -1;
  bool verify = false;

  auto* mincut = app.add_subcommand("mincut", "minimum cut between two vertices");
  mincut->add_option("file", file, "hypergraph file")->required();
  mincut->add_option("--source", source)->required();
  mincut->add_option("--sink", sink)->required();

  auto* split = app.add_subcommand("splitoff", "complete h-splitting-off at a vertex");
  split->add_option("file", file)->required();
  split->add_option("--vertex", vertex)->required();
  split->add_flag("--verify", verify, "check local connectivity of the result");
  split->add_option("--script", script_out, "write the h-merge/h-trim script here");
  split->add_option("-o,--output", out_file, "write the hypergraph here instead of stdout");

  auto* cover = app.add_subcommand("cover", "strong cover of a weak cover (JSON result)");
  cover->add_option("file", file, "the weak cover")->required();
  auto* req_opt = cover->add_option("--req", req_file, "pair requirements (req: u v r)");
  cover->add_option("--base", base_file, "hypergraph G of p = R - d_G")->needs(req_opt);
  auto* app_opt = cover->add_option("--appendix-a", appendix_u, "use the two-valued lower-bound function around vertex U");
  req_opt->excludes(app_opt);
  cover->add_flag("--verify", verify, "check the result by enumeration");

  auto* decompose = app.add_subcommand("decompose", "pinching script of a k-hyperedge-connected hypergraph");
  decompose->add_option("file", file)->required();
  decompose->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);

  auto* orient = app.add_subcommand("orient", "Steiner rooted k-hyperarc-connected orientation");
  orient->add_option("file", file)->required();
  orient->add_option("--root", root)->required();
  orient->add_option("--terminals", terminals, "terminal labels (default: all)")->delimiter(',');
  orient->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);

  auto* ver = app.add_subcommand("verify", "check a result file against a hypergraph");
  ver->add_option("file", file)->required();
  auto* o_gstar = ver->add_option("--gstar", gstar_file, "split-off result to compare");
  ver->add_option("--vertex", vertex, "split vertex for --gstar");
  auto* o_script = ver->add_option("--script", script_in, "split-off script to replay");
  auto* o_pinch = ver->add_option("--pinching", pinch_file, "pinching script to replay");
  auto* o_orient = ver->add_option("--orientation", orient_file, "orientation to check");
  ver->add_option("--root", root);
  ver->add_option("--terminals", terminals)->delimiter(',');
  ver->add_option("-k", k)->check(CLI::NonNegativeNumber);
  auto* o_kec = ver->add_option("--kec", kec, "check k-hyperedge-connectivity")->check(CLI::NonNegativeNumber);
  auto* o_wpc = ver->add_option("--wpc", wpc, "check k-weak-partition-connectivity")->check(CLI::NonNegativeNumber);
  const std::vector<CLI::Option*> ver_modes{o_gstar, o_script, o_pinch, o_orient, o_kec, o_wpc};

  auto* gen = app.add_subcommand("gen", "generate the star or the quadratic lower-bound instance");
  gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"star", "appendixA"}));
  gen->add_option("-n", n)->required()->check(CLI::Range(1, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mincut) {
      Hypergraph g = load(file);
      Vertex u = g.vertex(source), v = g.vertex(sink);
      if (u == v) throw InputError("source and sink coincide");
      auto r = min_cut_constrained(g, {u}, {v});
      std::cout << "lambda=" << r.value << "\ncut: " << labels(g, r.witness) << "\n";
    } else if (*split) {
      Hypergraph g = load(file);
      Vertex s = g.vertex(vertex);
      SplitOffResult so = complete_h_splitting_off(g, s);
      write_out(out_file, format_hypergraph(so.graph));
      if (!script_out.empty()) write_out(script_out, format_split_script(so.script, g));
      if (verify) {
        Report r = verify_local_connectivity(g, so.graph, s);
        if (r.ok && !(script_to_G_star(g, so.script) == so.graph)) r = Report::fail("script does not replay");
        if (!r.ok) throw Failure{r.failure};
        std::cerr << "verified: ok\n";
      }
    } else if (*cover) {
      Hypergraph h = load(file);
      OraclePtr p;
      std::function<ExtInt(const VertexSet&)> value;
      if (!appendix_u.empty()) {
        auto a = std::make_shared<AppendixAOracle>(h.num_vertices(), h.vertex(appendix_u));
        value = [a](const VertexSet& x) { return a->value(x); };
        p = a;
      } else if (!req_file.empty()) {
        RequirementFunction r = parse_requirements(read_file(req_file), h);
        EdgeMap base = base_file.empty() ? EdgeMap{} : edges_in(h, load(base_file));
        auto o = std::make_shared<RequirementOracle>(h.num_vertices(), h.vertices(), base, r);
        value = [o](const VertexSet& x) { return o->value(x); };
        p = o;
      } else {
        throw InputError("cover needs --req or --appendix-a");
      }
      CoverResult res = strong_cover(h.edges(), p);
      std::cout << cover_result_json(res, h).dump(2) << "\n";
      if (verify) {
        Report r = verify_cover_result(h.edges(), h.vertices(), value, res);
        if (!r.ok) throw Failure{r.failure};
        std::cerr << "verified: ok\n";
      }
    } else if (*decompose) {
      Hypergraph g = load(file);
      std::cout << format_pinching(decompose_k_ec(g, k));
    } else if (*orient) {
      Hypergraph g = load(file);
      auto oh = steiner_rooted_orientation(g, terminal_set(g, terminals), g.vertex(root), k);
      std::cout << format_orientation(oh);
    } else if (*ver) {
      std::size_t modes = 0;
      for (auto* o : ver_modes) modes += o->count() > 0;
      if (modes != 1)
        throw InputError("verify needs exactly one of --gstar, --script, --pinching, --orientation, --kec, --wpc");
      Hypergraph g = load(file);
      if (!gstar_file.empty()) {
        if (vertex.empty()) throw InputError("--gstar needs --vertex");
        Hypergraph gs = load(gstar_file);
        if (!g.same_vertices(gs)) throw InputError("vertex sets differ");
        report(verify_local_connectivity(g, gs, g.vertex(vertex)));
      } else if (!script_in.empty()) {
        SplitOffScript s = parse_split_script(read_file(script_in), g);
        Hypergraph gs;
        try {
          gs = script_to_G_star(g, s);
        } catch (const ReplayError& e) {
          throw Failure{e.what()};
        }
        report(verify_local_connectivity(g, gs, s.vertex));
      } else if (!pinch_file.empty()) {
        PinchingScript s = parse_pinching(read_file(pinch_file));
        ReplayOptions opt;
        if (k >= 0) opt.check_k = k;
        Hypergraph r;
        try {
          r = replay_pinching(s, opt);
        } catch (const ReplayError& e) {
          throw Failure{e.what()};
        }
        report(equal_labeled(r, g) ? Report{} : Report::fail("replay differs from the hypergraph"));
      } else if (!orient_file.empty()) {
        if (root.empty() || k < 0) throw InputError("--orientation needs --root and -k");
        OrientedHypergraph oh = parse_orientation(read_file(orient_file));
        if (!(oh.graph == g)) throw Failure{"orientation is of a different hypergraph"};
        report(verify_rooted_orientation(oh, terminal_set(g, terminals), g.vertex(root), k));
      } else if (kec >= 0) {
        auto c = is_k_hyperedge_connected(g, kec);
        if (!c.ok) throw Failure{"cut {" + labels(g, c.witness) + "} has value " + c.min_cut.str()};
        std::cout << "verified: ok\n";
      } else if (wpc >= 0) {
        auto w = weak_partition_connectivity(g, wpc);
        if (w.kind == WpcVerdict::Kind::no) throw Failure{"partition " + partition_text(g, w.partition)};
        if (w.kind == WpcVerdict::Kind::unknown) throw Failure{"undecided"};
        std::cout << "verified: ok\n";
      }
    } else if (*gen) {
      Hypergraph g;
      if (kind == "star") {
        std::vector<std::string> names{"s"};
        for (long long i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
        g = Hypergraph(names);
        Weight w = (Weight(1) << (n - 1)) - 1;
        if (w < 1) throw InputError("star needs n >= 2");
        for (Vertex i = 1; i <= n; ++i) g.add({0, i}, w);
      } else {
        if (n < 3) throw InputError("instance needs n >= 3");
        std::vector<std::string> names{"u"};
        for (long long i = 1; i < n; ++i) names.push_back("v" + std::to_string(i));
        g = Hypergraph(names);
        for (Vertex i = 1; i < n; ++i)
          for (Vertex j = i + 1; j < n; ++j) g.add({i, j}, 1);
        g.add({0}, binomial2(n - 1));
      }
      std::cout << format_hypergraph(g);
    }
  } catch (const Failure& f) {
    std::cout << "verified: FAIL " << f.message << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
