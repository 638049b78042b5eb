#include "raagqi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "raagqi/graph_io.hpp"
#include "raagqi/report_json.hpp"

namespace raagqi {
namespace {

// Input problems that are the caller's fault but not command-line misuse.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SimplicialGraph read_graph(const std::string& path) {
  try {
    return load_graph(path);
  } catch (const ParseError& e) {
    std::string where;
    if (e.line() > 0) where = ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    throw InputError(path + where + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!(os << text)) throw InputError("cannot write " + path);
}

Word domain_word(const SimplicialGraph& g, const json& item) {
  if (item.is_string()) {
    const std::string s = item.get<std::string>();
    if (s == "e" || s.empty()) return {};
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
      auto dot = s.find('.', start);
      tokens.push_back(s.substr(start, dot - start));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return parse_word(g, tokens);
  }
  if (item.is_array()) {
    std::vector<std::string> tokens;
    for (const auto& t : item) {
      if (!t.is_string()) throw InputError("domain letters must be strings");
      tokens.push_back(t.get<std::string>());
    }
    return parse_word(g, tokens);
  }
  throw InputError("domain entries must be letter lists or dotted strings");
}

std::vector<Word> parse_domain(const SimplicialGraph& g, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("domain is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("domain must be a JSON list of words");
  std::vector<Word> out;
  try {
    for (const auto& item : doc) out.push_back(domain_word(g, item));
  } catch (const GraphError& e) {
    throw InputError(std::string("domain: ") + e.what());
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-isometry and commensurability tools for right-angled Artin groups",
               "raagqi"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string second_path;

  auto* classify_cmd = app.add_subcommand("classify", "Type II / weak type II / weak type I");
  classify_cmd->add_option("graph", graph_path, "Graph file (.json or edge list)")->required();
  bool explain_flag = false;
  classify_cmd->add_flag("--explain", explain_flag, "Add plain-language reasons");

  auto* out_cmd = app.add_subcommand("out", "Generators of Out(G) and finiteness");
  out_cmd->add_option("graph", graph_path, "Graph file")->required();

  auto* prime_cmd = app.add_subcommand("prime", "QII classes, tuples and prime partitions");
  prime_cmd->add_option("graph", graph_path, "Graph file")->required();
  std::string vertex_label;
  prime_cmd->add_option("--vertex", vertex_label, "Only this vertex");

  auto* pg_cmd = app.add_subcommand("prime-graph", "Prime graph and commensurability index");
  pg_cmd->add_option("graph", graph_path, "Graph file (type II)")->required();
  std::string dot_path;
  std::string complex_path;
  pg_cmd->add_option("--emit-dot", dot_path, "Write the prime graph as DOT ('-' for stdout)");
  pg_cmd->add_option("--emit-complex", complex_path,
                     "Write the pocset and dual complex as JSON ('-' for stdout)");

  auto* qi_cmd = app.add_subcommand("qi", "Decide quasi-isometry of two RAAGs");
  qi_cmd->add_option("graph1", graph_path, "First graph file")->required();
  qi_cmd->add_option("graph2", second_path, "Second graph file")->required();
  std::optional<std::size_t> budget;
  qi_cmd->add_option("--budget", budget, "Largest special-subgroup domain to search");
  std::size_t cap = kDefaultCap;
  qi_cmd->add_option("--cap", cap, "Size guard for balls and intervals");

  auto* special_cmd = app.add_subcommand("special", "Special subgroup of a convex domain");
  special_cmd->add_option("graph", graph_path, "Graph file")->required();
  std::string domain_text;
  special_cmd->add_option("--domain", domain_text,
                          "JSON list of words, e.g. [[], [\"a\"], [\"a\", \"b^-1\"]]")
      ->required();
  special_cmd->add_option("--cap", cap, "Size guard for intervals");

  auto* ball_cmd = app.add_subcommand("ball", "Ball in the Cayley graph");
  ball_cmd->add_option("graph", graph_path, "Graph file")->required();
  std::size_t radius = 0;
  ball_cmd->add_option("-r,--radius", radius, "Radius")->required();
  ball_cmd->add_option("--cap", cap, "Size guard");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List, show or write the fixture graphs");
  std::string write_dir;
  std::string show_name;
  auto* write_opt = fixtures_cmd->add_option("--write", write_dir, "Write <name>.json files here");
  fixtures_cmd->add_option("--show", show_name, "Print one fixture with its expected values")
      ->excludes(write_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const auto g = read_graph(graph_path);
      const auto r = classify(g);
      json body = to_json(g, r);
      if (explain_flag) body["explanation"] = explain(g, r);
      out << render(body, "type-report");
    } else if (out_cmd->parsed()) {
      const auto g = read_graph(graph_path);
      out << render(to_json(g, out_report(g)), "out-report");
    } else if (prime_cmd->parsed()) {
      const auto g = read_graph(graph_path);
      json records = json::array();
      if (!vertex_label.empty()) {
        auto v = g.find(vertex_label);
        if (!v) throw InputError("unknown vertex " + vertex_label);
        records.push_back(to_json(g, prime_partition(g, *v)));
      } else {
        for (Vertex v = 0; v < g.order(); ++v) records.push_back(to_json(g, prime_partition(g, v)));
      }
      out << render({{"records", records},
                     {"qii_criterion", std::string(kQiiCriterion)},
                     {"prime_raag", is_prime_raag(g)}},
                    "prime-partition");
    } else if (pg_cmd->parsed()) {
      if (dot_path == "-" && complex_path == "-") {
        err << "raagqi: --emit-dot and --emit-complex cannot both use stdout\n";
        return kExitUsage;
      }
      const auto g = read_graph(graph_path);
      const auto r = prime_graph(g);
      const std::string dot = to_dot(r.prime_graph, "prime_graph");
      const std::string complex = render(to_json(r.pocset, r.complex), "cube-complex");
      if (!dot_path.empty() && dot_path != "-") write_file(dot_path, dot);
      if (!complex_path.empty() && complex_path != "-") write_file(complex_path, complex);
      if (dot_path == "-") {
        out << dot;
      } else if (complex_path == "-") {
        out << complex;
      } else {
        out << render(to_json(g, r, false), "prime-graph");
      }
    } else if (qi_cmd->parsed()) {
      const auto a = read_graph(graph_path);
      const auto b = read_graph(second_path);
      const auto d = qi_equivalent(a, b, {budget, cap});
      out << render(to_json(d), "qi-decision");
      switch (d.verdict) {
        case Verdict::yes: return kExitOk;
        case Verdict::no: return kExitNotQi;
        case Verdict::unknown: return kExitUnknown;
      }
    } else if (special_cmd->parsed()) {
      const auto g = read_graph(graph_path);
      const auto domain = parse_domain(g, domain_text);
      const auto r = special_subgroup(g, domain, cap);
      out << render(to_json(g, r, tiling_check(g, r)), "special-subgroup");
    } else if (ball_cmd->parsed()) {
      const auto g = read_graph(graph_path);
      out << render(to_json(g, ball(g, radius, cap), radius), "ball");
    } else if (fixtures_cmd->parsed()) {
      if (!show_name.empty()) {
        try {
          out << render(to_json(fixture(show_name)), "fixture");
        } catch (const std::out_of_range&) {
          throw InputError("unknown fixture " + show_name);
        }
      } else if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        for (const auto& f : fixtures()) {
          const auto file = std::filesystem::path(write_dir) / (f.name + ".json");
          write_file(file.string(), to_json_text(f.graph));
          out << file.string() << "\n";
        }
      } else {
        for (const auto& f : fixtures()) out << f.name << "\t" << f.description << "\n";
      }
    }
  } catch (const InputError& e) {
    err << "raagqi: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "raagqi: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    err << "raagqi: " << e.what() << "\n";
    return kExitInput;
  } catch (const GraphError& e) {
    err << "raagqi: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "raagqi: internal invariant failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "raagqi: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace raagqi
