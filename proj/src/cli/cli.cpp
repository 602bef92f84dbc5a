#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "latnorm/analysis.hpp"
#include "latnorm/cli.hpp"
#include "latnorm/constructions.hpp"
#include "latnorm/corpus.hpp"
#include "latnorm/enumerate.hpp"
#include "latnorm/error.hpp"
#include "latnorm/io.hpp"
#include "latnorm/laws.hpp"
#include "latnorm/report.hpp"

namespace latnorm {

namespace {

namespace fs = std::filesystem;

struct Loaded {
  FiniteLattice lattice;
  std::string text;
};

// A path if one exists, otherwise a corpus name (with or without ".lat").
Loaded load_lattice(const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    std::string text = read_file(arg);
    return {parse_lattice(text), text};
  }
  std::string name = fs::path(arg).filename().string();
  if (name.size() > 4 && name.ends_with(".lat")) name.resize(name.size() - 4);
  if (const CorpusEntry* e = find_corpus_entry(name)) {
    FiniteLattice L = e->build();
    std::string text = emit_lattice(L);
    return {std::move(L), std::move(text)};
  }
  throw LatticeError(ErrorCode::InvalidArgument, "'" + arg + "' is neither a file nor a corpus name");
}

std::string join_labels(const FiniteLattice& L, const std::vector<Elem>& xs) {
  std::string out;
  for (Elem x : xs) out += (out.empty() ? "" : " ") + L.label(x);
  return out.empty() ? "-" : out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

void print_witness(std::ostream& out, const FiniteLattice& L, const Witness& w) {
  out << "  " << w.law << " (" << join_labels(L, w.elements) << "): " << w.detail << "\n";
}

struct Options {
  bool json = false;
  unsigned threads = 1;
  std::string file, file2, table, out_path, square, highlight, label, a, b, law, scope_name;
  bool tnorm = false, all = false, ordinal = false, glued = false;
  bool modular = false, atomistic = false, distributive = false, use_corpus = false;
  std::size_t limit = 1, n = 0, enumerated = 0;
  std::uint64_t budget = SearchConfig{}.node_budget;
  std::vector<std::string> laws;
};

int cmd_check(const Options& o, std::ostream& out) {
  const Loaded in = load_lattice(o.file);
  const FiniteLattice& L = in.lattice;
  const ClassificationReport r = classify(L);
  if (o.json) {
    out << envelope("check", in.text, to_json(L, r)).dump(2) << "\n";
    return 0;
  }
  out << "elements: " << L.size() << "\n"
      << "atoms: " << join_labels(L, r.classes.atoms) << "\n"
      << "join_irreducible: " << join_labels(L, r.classes.join_irreducible) << "\n"
      << "meet_irreducible: " << join_labels(L, r.classes.meet_irreducible) << "\n"
      << "bi_irreducible: " << join_labels(L, r.classes.bi_irreducible) << "\n"
      << std::boolalpha << "modular: " << r.modular << "\n"
      << "distributive: " << r.distributive << "\n"
      << "one_distributive: " << r.one_distributive << "\n"
      << "atomistic: " << r.atomistic << "\n"
      << "boolean: " << r.boolean << "\n"
      << "complemented: " << r.complemented << "\n"
      << "one_distributive_elements: " << join_labels(L, r.one_distributive_elements) << "\n"
      << "rectangular: " << r.rectangular.holds << " (boundary unchecked)\n"
      << "forbidden_1_sublattice: " << (r.forbidden ? r.forbidden->law : "none") << "\n";
  if (!r.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& w : r.witnesses) print_witness(out, L, w);
  }
  return 0;
}

int cmd_forbidden(const Options& o, std::ostream& out) {
  const Loaded in = load_lattice(o.file);
  const auto w = find_forbidden_1_sublattice(in.lattice);
  if (o.json) {
    out << envelope("forbidden", in.text, w ? to_json(in.lattice, *w) : Json(nullptr)).dump(2) << "\n";
  } else if (w) {
    out << "found " << w->law << "\n";
    print_witness(out, in.lattice, *w);
  } else {
    out << "none\n";
  }
  return w ? 1 : 0;
}

int cmd_search(const Options& o, std::ostream& out) {
  const Loaded in = load_lattice(o.file);
  SearchConfig cfg;
  cfg.require_associative = o.tnorm;
  cfg.solution_limit = o.all ? std::numeric_limits<std::size_t>::max() : o.limit;
  cfg.node_budget = o.budget;
  cfg.threads = o.threads;
  const SearchOutcome r = search_operations(in.lattice, cfg);
  if (o.json) {
    out << envelope("search", in.text, to_json(r)).dump(2) << "\n";
  } else {
    out << "status: " << to_string(r.status) << "\n"
        << "solutions: " << r.solutions.size() << "\n"
        << "nodes_explored: " << r.nodes_explored << "\n"
        << "complete: " << std::boolalpha << r.complete << "\n";
    for (std::size_t i = 0; i < r.solutions.size(); ++i)
      out << "\nsolution " << i + 1 << ":\n" << emit_optable(r.solutions[i]);
  }
  switch (r.status) {
    case SearchStatus::Found: return 0;
    case SearchStatus::ExhaustedNone: return 1;
    case SearchStatus::BudgetExceeded: return 3;
  }
  return 2;
}

int cmd_planar(const Options& o, std::ostream& out) {
  const Loaded in = load_lattice(o.file);
  const FiniteLattice& L = in.lattice;
  const OpTable T = construct_planar(L, L.index_of(o.a), L.index_of(o.b));
  emit(out, o.out_path, emit_optable(T));
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Loaded in = load_lattice(o.file);
  const auto L = std::make_shared<const FiniteLattice>(in.lattice);
  const OpTable T = parse_optable(read_file(o.table), L);
  std::vector<Law> laws;
  for (const auto& name : o.laws) {
    const auto law = parse_law(name);
    if (!law) throw LatticeError(ErrorCode::InvalidArgument, "unknown law '" + name + "'");
    laws.push_back(*law);
  }
  if (laws.empty()) laws.assign(kAllLaws.begin(), kAllLaws.end());
  const VerificationReport r = verify_laws(T, laws);
  if (o.json) {
    out << envelope("verify", in.text + read_file(o.table), to_json(*L, r)).dump(2) << "\n";
  } else {
    for (Law law : laws) {
      const auto& res = *r.get(law);
      out << to_string(law) << ": " << (res.pass ? "pass" : "FAIL") << "\n";
      if (res.witness) print_witness(out, *L, *res.witness);
    }
  }
  return r.all_pass() ? 0 : 1;
}

int cmd_sum(const Options& o, std::ostream& out) {
  if (o.ordinal == o.glued) throw LatticeError(ErrorCode::InvalidArgument, "choose exactly one of --ordinal, --glued");
  const FiniteLattice a = load_lattice(o.file).lattice;
  const FiniteLattice b = load_lattice(o.file2).lattice;
  emit(out, o.out_path, emit_lattice(o.ordinal ? ordinal_sum(a, b) : glued_sum(a, b)));
  return 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  emit(out, o.out_path, emit_lattice(direct_product(load_lattice(o.file).lattice, load_lattice(o.file2).lattice)));
  return 0;
}

int cmd_eye(const Options& o, std::ostream& out) {
  const FiniteLattice L = load_lattice(o.file).lattice;
  const auto parts = split_commas(o.square);
  if (parts.size() != 4) throw LatticeError(ErrorCode::InvalidArgument, "--square expects lo,x,y,hi");
  Square sq{};
  for (std::size_t i = 0; i < 4; ++i) sq[i] = L.index_of(parts[i]);
  emit(out, o.out_path, emit_lattice(add_eye(L, sq, o.label)));
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto ls = enumerate_lattices(o.n, {o.modular, o.atomistic, o.distributive});
  if (!o.out_path.empty()) {
    fs::create_directories(o.out_path);
    for (std::size_t i = 0; i < ls.size(); ++i)
      write_file((fs::path(o.out_path) / ("n" + std::to_string(o.n) + "_" + std::to_string(i) + ".lat")).string(),
                 emit_lattice(ls[i]));
  }
  if (o.json) {
    Json a = Json::array();
    for (const auto& L : ls) a.push_back(emit_lattice(L));
    out << envelope("enumerate", std::to_string(o.n), Json{{"n", o.n}, {"count", ls.size()}, {"lattices", a}}).dump(2)
        << "\n";
  } else {
    out << "count: " << ls.size() << "\n";
    if (o.out_path.empty())
      for (const auto& L : ls) out << "\n" << emit_lattice(L);
  }
  return 0;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  if (o.scope_name == "list") {
    for (const auto& e : corpus())
      out << e.name << "  " << e.labels.size() << "  " << hash_hex(e.content_hash()) << "  " << e.provenance << "\n";
  } else if (o.scope_name == "show") {
    const CorpusEntry* e = find_corpus_entry(o.file);
    if (!e) throw LatticeError(ErrorCode::InvalidArgument, "no corpus entry '" + o.file + "'");
    out << "# " << e->name << ": " << e->provenance << "\n" << emit_lattice(e->build());
  } else {
    fs::create_directories(o.file);
    for (const auto& e : corpus()) write_file((fs::path(o.file) / (e.name + ".lat")).string(), emit_lattice(e.build()));
    out << "exported " << corpus().size() << " lattices to " << o.file << "\n";
  }
  return 0;
}

int cmd_laws(const Options& o, std::ostream& out) {
  if (o.use_corpus == (o.enumerated > 0))
    throw LatticeError(ErrorCode::InvalidArgument, "choose exactly one of --corpus, --enumerated N");
  SearchConfig cfg;
  cfg.node_budget = o.budget;
  cfg.threads = o.threads;
  const auto scope = o.use_corpus ? LawSuiteScope::corpus() : LawSuiteScope::enumerated(o.enumerated);
  const LawSuiteReport r = run_law_suite(scope, cfg);
  if (o.json) {
    out << envelope("laws", r.scope, to_json(r)).dump(2) << "\n";
  } else {
    out << "scope: " << r.scope << "\nlattices: " << r.lattices << "\npairs: " << r.pairs << "\n";
    for (const auto& [law, count] : r.checks) out << "law " << law << ": " << count << " checks\n";
    out << "counterexamples: " << r.counterexamples.size() << "\n";
    for (const auto& c : r.counterexamples) out << "  (" << c.law << ") " << c.subject << ": " << c.detail << "\n";
    out << "converse witnesses (not expected to hold): " << r.converse_witnesses.size() << "\n";
    for (const auto& c : r.converse_witnesses) out << "  " << c.subject << ": " << c.detail << "\n";
    if (!r.budget_exceeded.empty()) {
      out << "budget exceeded:";
      for (const auto& s : r.budget_exceeded) out << " " << s;
      out << "\n";
    }
  }
  return r.clean() ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  const FiniteLattice L = load_lattice(o.file).lattice;
  std::vector<Elem> hl;
  if (!o.highlight.empty())
    for (const auto& l : split_commas(o.highlight)) hl.push_back(L.index_of(l));
  emit(out, o.out_path, emit_dot(L, hl));
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattices and triangular norms", "latnorm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  auto* check = app.add_subcommand("check", "Classify a lattice");
  check->add_option("FILE", o.file)->required();
  check->add_flag("--json", o.json);

  auto* forbidden = app.add_subcommand("forbidden", "Find M3, M3,2 or M3,4 as a 1-sublattice (exit 1 if found)");
  forbidden->add_option("FILE", o.file)->required();
  forbidden->add_flag("--json", o.json);

  auto* search = app.add_subcommand("search", "Search join-distributive pseudo-t-norms or t-norms");
  search->add_option("FILE", o.file)->required();
  search->add_flag("--tnorm", o.tnorm, "Require associativity");
  search->add_flag("--all", o.all, "Collect every solution");
  search->add_option("--limit", o.limit, "Stop after N solutions")->check(CLI::PositiveNumber);
  search->add_option("--node-budget", o.budget)->check(CLI::PositiveNumber);
  search->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--json", o.json);

  auto* construct = app.add_subcommand("construct", "Build a table from a construction");
  construct->require_subcommand(1);
  auto* planar = construct->add_subcommand("planar", "Planar join-distributive pseudo-t-norm");
  planar->add_option("FILE", o.file)->required();
  planar->add_option("--a", o.a)->required();
  planar->add_option("--b", o.b)->required();
  planar->add_option("-o", o.out_path);

  auto* verify = app.add_subcommand("verify", "Check laws of an operation table (exit 1 on any failure)");
  verify->add_option("FILE", o.file)->required();
  verify->add_option("TABLE", o.table)->required();
  verify->add_option("--law", o.laws, "Law to check (repeatable); default all");
  verify->add_flag("--json", o.json);

  auto* sum = app.add_subcommand("sum", "Ordinal or glued sum");
  sum->add_flag("--ordinal", o.ordinal);
  sum->add_flag("--glued", o.glued);
  sum->add_option("A", o.file)->required();
  sum->add_option("B", o.file2)->required();
  sum->add_option("-o", o.out_path);

  auto* product = app.add_subcommand("product", "Direct product");
  product->add_option("A", o.file)->required();
  product->add_option("B", o.file2)->required();
  product->add_option("-o", o.out_path);

  auto* eye = app.add_subcommand("eye", "Add an eye to a covering square");
  eye->add_option("FILE", o.file)->required();
  eye->add_option("--square", o.square, "lo,x,y,hi")->required();
  eye->add_option("--label", o.label);
  eye->add_option("-o", o.out_path);

  auto* enumerate = app.add_subcommand("enumerate", "All n-element lattices up to isomorphism");
  enumerate->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--modular", o.modular);
  enumerate->add_flag("--atomistic", o.atomistic);
  enumerate->add_flag("--distributive", o.distributive);
  enumerate->add_option("-o", o.out_path, "Write one .lat file per lattice into DIR");
  enumerate->add_flag("--json", o.json);

  auto* corp = app.add_subcommand("corpus", "Named lattices");
  corp->require_subcommand(1);
  auto* c_list = corp->add_subcommand("list");
  auto* c_show = corp->add_subcommand("show");
  c_show->add_option("NAME", o.file)->required();
  auto* c_export = corp->add_subcommand("export");
  c_export->add_option("DIR", o.file)->required();

  auto* laws = app.add_subcommand("laws", "Check the structural equivalences (exit 1 on a counterexample)");
  laws->add_flag("--corpus", o.use_corpus);
  laws->add_option("--enumerated", o.enumerated)->check(CLI::PositiveNumber);
  laws->add_option("--node-budget", o.budget)->check(CLI::PositiveNumber);
  laws->add_option("--threads", o.threads, "Worker threads per search")->check(CLI::PositiveNumber);
  laws->add_flag("--json", o.json);

  auto* render = app.add_subcommand("render", "Hasse diagram as DOT");
  render->add_option("FILE", o.file)->required();
  render->add_option("-o", o.out_path);
  render->add_option("--highlight", o.highlight, "e1,e2,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (forbidden->parsed()) return cmd_forbidden(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (planar->parsed()) return cmd_planar(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (product->parsed()) return cmd_product(o, out);
    if (eye->parsed()) return cmd_eye(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (corp->parsed()) {
      o.scope_name = c_list->parsed() ? "list" : c_show->parsed() ? "show" : "export";
      return cmd_corpus(o, out);
    }
    if (laws->parsed()) return cmd_laws(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> copy = args;
  std::vector<char*> argv;
  for (auto& a : copy) argv.push_back(a.data());
  argv.push_back(nullptr);
  return run_cli(static_cast<int>(copy.size()), argv.data(), out, err);
}

}  // namespace latnorm
