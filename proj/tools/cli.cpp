#include "cli.hpp"

#include "twred/count.hpp"
#include "twred/error.hpp"
#include "twred/io.hpp"
#include "twred/reduce.hpp"
#include "twred/solve.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <optional>
#include <sstream>
#include <variant>

namespace twred::cli {
namespace {

// Widest bag the automatic solver accepts.
constexpr int kAutoMaxWidth = 25;

struct Instance {
  std::variant<WeightedCnf, Hamiltonian> value;
  bool is_formula() const { return std::holds_alternative<WeightedCnf>(value); }
  const WeightedCnf& formula() const { return std::get<WeightedCnf>(value); }
  const Hamiltonian& hamiltonian() const { return std::get<Hamiltonian>(value); }
};

bool looks_like_qubo(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b;
    ls >> a;
    if (a.empty() || a == "c" || a[0] == '#') continue;
    ls >> b;
    return a == "p" && b == "qubo";
  }
  return false;
}

Instance load_instance(const std::string& path, std::ostream& err) {
  std::string text = read_file(path);
  if (looks_like_qubo(text)) {
    ParsedQubo q = parse_qubo(text);
    for (const auto& w : q.warnings) err << "c warning: " << w << "\n";
    return {std::move(q.h)};
  }
  ParsedWcnf p = parse_wcnf(text);
  for (const auto& w : p.warnings) err << "c warning: " << w << "\n";
  return {std::move(p.formula)};
}

Graph graph_of(const Instance& inst, bool incidence) {
  if (inst.is_formula())
    return incidence ? incidence_graph(inst.formula()) : primal_graph(inst.formula());
  return incidence ? incidence_graph(inst.hamiltonian()) : primal_graph(inst.hamiltonian());
}

TreeDecomposition load_td(const std::string& path, const Graph& g, const std::string& what) {
  ParsedTd p = parse_td(read_file(path));
  if (p.num_vertices != g.num_vertices())
    throw PreconditionError(what + ": decomposition declares " + std::to_string(p.num_vertices) +
                            " vertices, graph has " + std::to_string(g.num_vertices()));
  require_valid(g, p.td, what);
  return p.td;
}

unsigned seed_from_env() {
  const char* s = std::getenv("TWRED_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end != '\0') throw PreconditionError(std::string("TWRED_SEED is not a number: ") + s);
  return static_cast<unsigned>(v);
}

TreeDecomposition decompose(const Graph& g, Heuristic strategy = Heuristic::kMinFill) {
  return heuristic_td(g, strategy, seed_from_env());
}

std::string signed_lits(const Assignment& a) {
  std::string s = "v";
  for (Var v = 1; v <= a.size(); ++v) s += " " + std::to_string(a[v] ? v : -v);
  return s;
}

std::string bits(const Assignment& a) {
  std::string s = "v ";
  for (Var v = 1; v <= a.size(); ++v) s += a[v] ? '1' : '0';
  return s;
}

struct SolveOptions {
  std::string method = "auto";
  std::string td_path;
  std::string trace_path;
  std::string original_path;
};

Optimum solve_instance(const Instance& inst, const SolveOptions& o, std::ostream& err) {
  if (o.method == "brute") {
    BruteForceOptions bf;
    bf.max_vars = 26;
    return inst.is_formula() ? brute_force_maxsat(inst.formula(), bf)
                             : brute_force_qubo(inst.hamiltonian(), bf);
  }
  bool incidence = o.method == "dp-incidence";
  if (incidence && !inst.is_formula())
    throw PreconditionError("dp-incidence needs a WCNF instance");
  if (o.method != "auto" && o.method != "dp-primal" && !incidence)
    throw PreconditionError("unknown method " + o.method);
  Graph g = graph_of(inst, incidence);
  TreeDecomposition td = o.td_path.empty() ? decompose(g) : load_td(o.td_path, g, "--td");
  int w = td.empty() ? 0 : width(td);
  if (o.method == "auto" && w > kAutoMaxWidth)
    throw PreconditionError("decomposition width " + std::to_string(w) + " exceeds " +
                            std::to_string(kAutoMaxWidth) + "; pass --method brute to force");
  err << "c width " << w << "\n";
  if (incidence) return dp_maxsat_incidence(inst.formula(), td);
  return inst.is_formula() ? dp_maxsat_primal(inst.formula(), td)
                           : dp_qubo_primal(inst.hamiltonian(), td);
}

int solve_one(const std::string& path, const SolveOptions& o, std::ostream& out,
              std::ostream& err) {
  Instance inst = load_instance(path, err);
  Optimum opt = solve_instance(inst, o, err);
  if (o.trace_path.empty()) {
    if (opt.value.is_infinite()) {
      out << "s UNSATISFIABLE\n";
      return 0;
    }
    out << "o " << opt.value << "\n";
    out << (inst.is_formula() ? signed_lits(opt.witness) : bits(opt.witness)) << "\n";
    return 0;
  }
  ReductionTrace trace = parse_trace(read_file(o.trace_path));
  if (trace.output_vars != opt.witness.size())
    throw PreconditionError("trace expects " + std::to_string(trace.output_vars) +
                            " variables, instance has " + std::to_string(opt.witness.size()));
  if (opt.value.is_infinite() || trace.signals_unsat(opt.value)) {
    out << "s UNSATISFIABLE\n";
    return 0;
  }
  Assignment back = trace.map_back(opt.witness);
  Weight value = opt.value - trace.offset;
  if (!o.original_path.empty()) {
    Instance orig = load_instance(o.original_path, err);
    if (!orig.is_formula()) throw PreconditionError("--original must be a WCNF file");
    if (orig.formula().num_vars != back.size())
      throw PreconditionError("--original does not match the trace input size");
    err << "c reduced optimum minus offset " << value << "\n";
    value = cost(orig.formula(), back);
  }
  out << "o " << value << "\n" << signed_lits(back) << "\n";
  return 0;
}

int exit_code_of(const std::exception& e) {
  if (const auto* te = dynamic_cast<const Error*>(&e)) return te->exit_code();
  return 4;
}

int solve_each(const std::string& dir, const SolveOptions& o, std::ostream& out,
               std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw PreconditionError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());

  struct Result {
    int code = 0;
    std::string out, err;
  };
  std::vector<std::future<Result>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, o] {
      Result r;
      std::ostringstream so, se;
      try {
        r.code = solve_one(f, o, so, se);
      } catch (const std::exception& e) {
        se << "c error " << e.what() << "\n";
        r.code = exit_code_of(e);
      }
      r.out = so.str();
      r.err = se.str();
      return r;
    }));
  }
  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Result r = jobs[i].get();
    out << "c file " << fs::path(files[i]).filename().string() << "\n" << r.out;
    err << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

struct ReduceOptions {
  std::string input, output, to = "qubo", td_path, trace_path, emit_td;
  bool guided = false;
};

int cmd_reduce(const ReduceOptions& o, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(o.input, err);
  ReductionResult r;
  if (o.to == "maxsat") {
    if (inst.is_formula()) throw PreconditionError("--to maxsat needs a QUBO input");
    Witness w;
    if (!o.td_path.empty()) w.primal = load_td(o.td_path, graph_of(inst, false), "--td");
    r = rule8_qubo_to_maxsat(inst.hamiltonian(), w);
  } else {
    if (!inst.is_formula()) throw PreconditionError("--to " + o.to + " needs a WCNF input");
    Target target;
    if (o.to == "3cnf") target = Target::kTernary;
    else if (o.to == "2cnf") target = Target::kBinary;
    else if (o.to == "monotone") target = Target::kMonotone;
    else if (o.to == "qubo") target = Target::kQubo;
    else throw PreconditionError("unknown target " + o.to);
    PipelineOptions po;
    if (o.guided) {
      Graph g = graph_of(inst, true);
      po.td_incidence = o.td_path.empty() ? decompose(g) : load_td(o.td_path, g, "--td");
    } else if (!o.td_path.empty()) {
      po.td_primal = load_td(o.td_path, graph_of(inst, false), "--td");
    }
    r = reduce_to(inst.formula(), target, po);
  }

  if (r.is_formula()) {
    write_file(o.output, write_wcnf(r.formula()));
    out << "c vars " << r.formula().num_vars << " clauses " << r.formula().clauses.size() << "\n";
  } else {
    write_file(o.output, write_qubo(r.hamiltonian()));
    out << "c vars " << r.hamiltonian().num_vars() << " terms " << r.hamiltonian().num_terms()
        << "\n";
  }
  out << "c offset " << r.trace.offset << "\n";
  if (r.td_primal) out << "c primal width " << width(*r.td_primal) << "\n";
  if (r.td_incidence) out << "c incidence width " << width(*r.td_incidence) << "\n";
  if (!o.trace_path.empty()) write_file(o.trace_path, write_trace(r.trace));
  if (!o.emit_td.empty()) {
    Instance res{r.instance};
    if (r.td_incidence) {
      write_file(o.emit_td, write_td(*r.td_incidence, graph_of(res, true).num_vertices()));
    } else if (r.td_primal) {
      write_file(o.emit_td, write_td(*r.td_primal, graph_of(res, false).num_vertices()));
    } else {
      throw InvariantError("reduction produced no witness decomposition");
    }
  }
  return 0;
}

int cmd_count(const std::string& input, const std::string& td_path, std::ostream& out,
              std::ostream& err) {
  Instance inst = load_instance(input, err);
  if (!inst.is_formula()) throw PreconditionError("count needs a CNF input");
  const WeightedCnf& phi = inst.formula();
  if (!phi.all_hard()) throw PreconditionError("count needs an all-hard formula");
  BigInt n = td_path.empty() ? model_count(phi)
                             : dp_count(phi, load_td(td_path, graph_of(inst, false), "--td"));
  out << "s mc " << n << "\n";
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& graph, bool exact,
                  const std::string& strategy, const std::string& output, std::ostream& out,
                  std::ostream& err) {
  Instance inst = load_instance(input, err);
  Graph g = graph_of(inst, graph == "incidence");
  TreeDecomposition td;
  if (exact) {
    td = exact_treewidth(g, 24).td;
  } else {
    td = decompose(g, strategy == "min-degree" ? Heuristic::kMinDegree : Heuristic::kMinFill);
  }
  std::string text = write_td(td, g.num_vertices());
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  err << "c width " << (td.empty() ? 0 : width(td)) << "\n";
  return 0;
}

int cmd_verify(const std::string& input, const std::string& td_path, const std::string& graph,
               std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(input, err);
  Graph g = graph_of(inst, graph == "incidence");
  ParsedTd p = parse_td(read_file(td_path));
  ValidationReport rep = validate(g, p.td);
  if (p.num_vertices != g.num_vertices())
    rep.violations.insert(rep.violations.begin(),
                          "decomposition declares " + std::to_string(p.num_vertices) +
                              " vertices, graph has " + std::to_string(g.num_vertices()));
  if (!rep.ok()) {
    for (const auto& v : rep.violations) err << "c violation: " << v << "\n";
    out << "invalid\n";
    return 3;
  }
  out << "ok width " << (p.td.empty() ? 0 : width(p.td)) << "\n";
  return 0;
}

int cmd_stats(const std::string& input, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(input, err);
  auto tw = [](const Graph& g) { return g.num_vertices() == 0 ? 0 : width(heuristic_td(g)); };
  if (inst.is_formula()) {
    const WeightedCnf& phi = inst.formula();
    std::size_t hard = 0;
    for (const auto& c : phi.clauses) hard += c.is_hard() ? 1 : 0;
    out << "c vars " << phi.num_vars << "\n"
        << "c clauses " << phi.clauses.size() << "\n"
        << "c hard " << hard << "\n"
        << "c soft " << phi.clauses.size() - hard << "\n"
        << "c max_clause " << phi.max_clause_size() << "\n"
        << "c soft_weight " << phi.soft_weight_sum() << "\n";
  } else {
    const Hamiltonian& h = inst.hamiltonian();
    out << "c vars " << h.num_vars() << "\n"
        << "c linear " << h.linear_terms().size() << "\n"
        << "c quadratic " << h.quadratic_terms().size() << "\n";
  }
  out << "c primal_width " << tw(graph_of(inst, false)) << "\n"
      << "c incidence_width " << tw(graph_of(inst, true)) << "\n";
  return 0;
}

int cmd_roundtrip(const std::string& input, bool guided, std::ostream& out, std::ostream& err) {
  Instance inst = load_instance(input, err);
  if (!inst.is_formula()) throw PreconditionError("roundtrip needs a WCNF input");
  const WeightedCnf& phi = inst.formula();
  PipelineOptions po;
  if (guided) po.td_incidence = decompose(graph_of(inst, true));
  ReductionResult q = pipeline_maxsat_to_qubo(phi, po);
  const Hamiltonian& h = q.hamiltonian();
  TreeDecomposition tdq = q.td_primal ? *q.td_primal : decompose(primal_graph(h));
  Optimum eq = dp_qubo_primal(h, tdq);
  bool unsat = q.trace.signals_unsat(eq.value);
  int bad = 0;
  auto fail = [&](const std::string& msg) {
    err << "c mismatch: " << msg << "\n";
    bad = 4;
  };

  std::optional<Weight> claimed;
  if (!unsat) {
    claimed = eq.value - q.trace.offset;
    Weight actual = cost(phi, q.trace.map_back(eq.witness));
    if (actual != *claimed)
      fail("mapped-back witness costs " + actual.to_string() + ", expected " +
           claimed->to_string());
  }

  ReductionResult back = rule8_qubo_to_maxsat(h, Witness{tdq, std::nullopt});
  Optimum em = dp_maxsat_primal(back.formula(), *back.td_primal);
  if (em.value.is_infinite() || em.value - back.trace.offset != eq.value)
    fail("QUBO to MaxSAT optimum " + em.value.to_string() + " minus offset " +
         back.trace.offset.str() + " differs from ground energy " + eq.value.to_string());
  else if (evaluate(h, back.trace.map_back(em.witness)) != eq.value.value())
    fail("QUBO to MaxSAT witness is not a ground state");

  if (phi.num_vars <= 20) {
    Optimum ref = brute_force_maxsat(phi);
    if (ref.value.is_infinite() != unsat || (!unsat && ref.value != *claimed))
      fail("brute force optimum " + ref.value.to_string() + " disagrees");
  }
  out << "c qubo vars " << h.num_vars() << " width " << width(tdq) << "\n";
  if (bad == 0) out << "c roundtrip ok " << (unsat ? std::string("unsat") : claimed->to_string())
                    << "\n";
  return bad;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Treewidth-preserving MaxSAT / QUBO reductions and exact solvers", "twred"};
  app.require_subcommand(1);

  ReduceOptions ro;
  auto* reduce = app.add_subcommand("reduce", "Reduce a WCNF or QUBO instance");
  reduce->add_option("input", ro.input, "WCNF or QUBO file")->required();
  reduce->add_option("-o,--output", ro.output, "Output instance")->required();
  reduce->add_option("--to", ro.to, "Target form")
      ->check(CLI::IsMember({"3cnf", "2cnf", "monotone", "qubo", "maxsat"}));
  reduce->add_flag("--guided", ro.guided, "Use the incidence-decomposition guided encoding");
  reduce->add_option("--td", ro.td_path,
                     "Input decomposition (incidence graph with --guided, primal otherwise)");
  reduce->add_option("--trace", ro.trace_path, "Write the reduction trace");
  reduce->add_option("--emit-td", ro.emit_td, "Write the witness decomposition of the output");

  SolveOptions so;
  std::string solve_input, each_dir;
  auto* solve = app.add_subcommand("solve", "Solve a WCNF or QUBO instance exactly");
  auto* solve_in = solve->add_option("input", solve_input, "WCNF or QUBO file");
  auto* each = solve->add_option("--each", each_dir, "Solve every file of a directory");
  solve_in->excludes(each);
  solve->add_option("--method", so.method, "Solver")
      ->check(CLI::IsMember({"auto", "brute", "dp-primal", "dp-incidence"}));
  solve->add_option("--td", so.td_path, "Decomposition for the DP solvers");
  solve->add_option("--trace", so.trace_path, "Map the optimum back through a trace");
  solve->add_option("--original", so.original_path, "Recompute the cost on the original WCNF")
      ->needs(solve->get_option("--trace"));

  std::string count_input, count_td;
  auto* count = app.add_subcommand("count", "Count models of an all-hard CNF");
  count->add_option("input", count_input, "CNF or WCNF file")->required();
  count->add_option("--td", count_td, "Primal decomposition");

  std::string dec_input, dec_graph = "primal", dec_strategy = "min-fill", dec_out;
  bool dec_exact = false;
  auto* dec = app.add_subcommand("decompose", "Tree decomposition of an instance graph");
  dec->add_option("input", dec_input, "WCNF or QUBO file")->required();
  dec->add_option("--graph", dec_graph)->check(CLI::IsMember({"primal", "incidence"}));
  dec->add_option("--strategy", dec_strategy)->check(CLI::IsMember({"min-fill", "min-degree"}));
  dec->add_flag("--exact", dec_exact, "Exact treewidth (small graphs)");
  dec->add_option("-o,--output", dec_out, "Write the .td file here instead of stdout");

  std::string ver_input, ver_td, ver_graph = "primal";
  auto* ver = app.add_subcommand("verify", "Check a decomposition against an instance");
  ver->add_option("--instance", ver_input)->required();
  ver->add_option("--td", ver_td)->required();
  ver->add_option("--graph", ver_graph)->check(CLI::IsMember({"primal", "incidence"}));

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Instance statistics");
  stats->add_option("input", stats_input)->required();

  std::string rt_input;
  bool rt_guided = false;
  auto* rt = app.add_subcommand("roundtrip", "MaxSAT to QUBO to MaxSAT with optimum checks");
  rt->add_option("input", rt_input)->required();
  rt->add_flag("--guided", rt_guided);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(ro, out, err);
    if (solve->parsed()) {
      if (!each_dir.empty()) return solve_each(each_dir, so, out, err);
      if (solve_input.empty()) {
        err << "solve: an input file or --each is required\n";
        return 1;
      }
      return solve_one(solve_input, so, out, err);
    }
    if (count->parsed()) return cmd_count(count_input, count_td, out, err);
    if (dec->parsed())
      return cmd_decompose(dec_input, dec_graph, dec_exact, dec_strategy, dec_out, out, err);
    if (ver->parsed()) return cmd_verify(ver_input, ver_td, ver_graph, out, err);
    if (stats->parsed()) return cmd_stats(stats_input, out, err);
    if (rt->parsed()) return cmd_roundtrip(rt_input, rt_guided, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_of(e);
  }
  return 1;
}

}  // namespace twred::cli
