// Command-line front end: witness generation, operations on DFA files,
// measurements, and verification sweeps over the bound registry.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcomp/algebra.hpp"
#include "qcomp/atoms.hpp"
#include "qcomp/automata.hpp"
#include "qcomp/dfa_io.hpp"
#include "qcomp/errors.hpp"
#include "qcomp/operations.hpp"
#include "qcomp/registry.hpp"
#include "qcomp/report.hpp"
#include "qcomp/sweep.hpp"
#include "qcomp/witnesses.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

/// Usage problems detected after CLI11 has parsed the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_set(const qcomp::StateSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](qcomp::State q) {
    os << (first ? "" : ",") << q;
    first = false;
  });
  os << '}';
  return os.str();
}

void emit_dfa(const qcomp::Dfa& d, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << qcomp::render_dfa(d);
  } else {
    qcomp::write_dfa_file(path, d);
  }
}

int run_witness(const std::string& cls_name, std::size_t n,
                const std::string& dialect, const std::string& out) {
  const auto cls = qcomp::parse_witness_class(cls_name);
  if (!cls) throw UsageError("unknown witness class '" + cls_name + "'");
  qcomp::Dfa d = qcomp::build_witness(*cls, n);
  if (!dialect.empty()) d = qcomp::apply_dialect(d, qcomp::parse_dialect(dialect));
  emit_dfa(d, out);
  return 0;
}

int run_op(const std::string& name, const std::string& lhs_path,
           const std::string& rhs_path, const std::string& universe,
           const std::string& emit) {
  const qcomp::Dfa lhs = qcomp::read_dfa_file(lhs_path);
  std::optional<qcomp::OpResult> result;
  if (name == "star" || name == "reverse" || name == "complement") {
    if (!rhs_path.empty()) throw UsageError("'" + name + "' takes one DFA");
    if (name == "star") {
      result = qcomp::star(lhs);
    } else if (name == "reverse") {
      result = qcomp::reverse(lhs);
    } else {
      const qcomp::Alphabet u =
          universe.empty() ? lhs.alphabet() : qcomp::Alphabet(universe);
      result = qcomp::complement(lhs, u);
    }
  } else {
    if (rhs_path.empty()) throw UsageError("'" + name + "' needs two DFAs");
    const qcomp::Dfa rhs = qcomp::read_dfa_file(rhs_path);
    if (name == "product") {
      result = qcomp::product(lhs, rhs);
    } else if (const auto op = qcomp::parse_boolean_op(name)) {
      result = qcomp::boolean(*op, lhs, rhs);
    } else {
      throw UsageError("unknown operation '" + name + "'");
    }
  }
  std::cout << "kappa=" << result->kappa << '\n';
  if (!emit.empty()) emit_dfa(result->dfa, emit);
  return 0;
}

int run_measure(const std::string& what, const std::string& path) {
  const qcomp::Dfa input = qcomp::read_dfa_file(path);
  if (what == "kappa") {
    std::cout << "kappa=" << qcomp::quotient_complexity(input) << '\n';
    return 0;
  }
  if (what == "semigroup") {
    std::cout << "semigroup=" << qcomp::syntactic_semigroup_size(input) << '\n';
    return 0;
  }
  if (what == "quotients") {
    for (qcomp::State q = 0; q < input.state_count(); ++q) {
      std::cout << "state " << q
                << " kappa=" << qcomp::quotient_complexity_of_state(input, q)
                << '\n';
    }
    return 0;
  }
  // Atoms are indexed by states of the minimal DFA over the language
  // alphabet; keep the file's numbering when it already is one.
  qcomp::Dfa d = input;
  if (qcomp::language_alphabet(d) != d.alphabet() ||
      qcomp::minimize(d).state_count() != d.state_count()) {
    d = qcomp::trim_alphabet(input);
    std::cerr << "note: atoms refer to states of the minimal DFA over '"
              << d.alphabet().letters() << "'\n";
  }
  const auto found = qcomp::atoms(d);
  if (what == "atoms") {
    std::cout << "atoms=" << found.size() << '\n';
    return 0;
  }
  if (what == "atom-complexities") {
    for (const auto& s : found) {
      std::cout << "S=" << format_set(s)
                << " kappa=" << qcomp::atom_complexity(d, s) << '\n';
    }
    return 0;
  }
  throw UsageError("unknown measurement '" + what + "'");
}

std::size_t upper_default(const std::vector<const qcomp::BoundEntry*>& entries,
                          bool lhs_axis) {
  std::size_t hi = 0;
  for (const auto* e : entries) {
    const auto cls = lhs_axis ? e->lhs.cls : (e->rhs ? e->rhs->cls : e->lhs.cls);
    hi = std::max(hi, qcomp::default_range(cls).hi);
  }
  return hi;
}

int run_verify(const std::string& ids, const std::string& m_range,
               const std::string& n_range, const std::string& format_name,
               std::size_t jobs, bool large) {
  qcomp::SweepOptions options;
  options.jobs = jobs;
  if (!ids.empty()) {
    std::stringstream ss(ids);
    for (std::string id; std::getline(ss, id, ',');) {
      if (!id.empty()) options.ids.push_back(id);
    }
  }
  auto range = [](const std::string& text, const char* flag)
      -> std::optional<qcomp::GridRange> {
    if (text.empty()) return std::nullopt;
    const auto r = qcomp::parse_grid_range(text);
    if (!r) throw UsageError(std::string("bad ") + flag + " range '" + text + "'");
    return r;
  };
  options.m_range = range(m_range, "--m");
  options.n_range = range(n_range, "--n");
  const auto format = qcomp::parse_report_format(format_name);
  if (!format) throw UsageError("unknown format '" + format_name + "'");

  std::vector<const qcomp::BoundEntry*> entries;
  try {
    entries = qcomp::select_entries(options.ids);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!large) {
    if ((options.m_range && options.m_range->hi > upper_default(entries, true)) ||
        (options.n_range && options.n_range->hi > upper_default(entries, false))) {
      throw UsageError("range exceeds the default grid; pass --large to allow it");
    }
  }

  const qcomp::SweepResult result = qcomp::run_sweep(options);
  for (const auto& notice : result.notices) std::cerr << "notice: " << notice << '\n';
  for (const auto& row : result.rows) {
    if (!row.match) {
      std::cerr << "mismatch: " << row.id << " m="
                << (row.m ? std::to_string(*row.m) : "-") << " n=" << row.n
                << " expected " << row.expected << " measured " << row.measured;
      if (!row.diagnostic.empty()) std::cerr << " (" << row.diagnostic << ")";
      std::cerr << '\n';
    }
  }
  std::cout << qcomp::emit_report(result.rows, *format);
  return qcomp::all_match(result.rows) ? 0 : kExitMismatch;
}

int run_registry_list() {
  for (const auto& e : qcomp::registry()) {
    const auto range_n = qcomp::default_range(e.rhs ? e.rhs->cls : e.lhs.cls);
    std::cout << e.id << '\t' << qcomp::to_string(e.measure);
    if (e.op) std::cout << ':' << qcomp::to_string(*e.op);
    std::cout << '\t' << e.formula_text << '\t' << e.lhs.to_string();
    if (e.rhs) std::cout << " x " << e.rhs->to_string();
    std::cout << '\t';
    if (e.binary()) {
      const auto range_m = qcomp::default_range(e.lhs.cls);
      std::cout << "m=" << range_m.lo << ".." << range_m.hi << ' ';
    }
    std::cout << "n=" << range_n.lo << ".." << range_n.hi << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quotient complexity of operations on languages over different alphabets"};
  app.require_subcommand(1);

  auto* witness = app.add_subcommand("witness", "Witness DFAs");
  witness->require_subcommand(1);
  auto* gen = witness->add_subcommand("gen", "Write a witness DFA");
  std::string cls_name;
  std::size_t n = 0;
  std::string dialect;
  std::string out;
  gen->add_option("class", cls_name, "regular|right|left|twosided")->required();
  gen->add_option("n", n, "Number of states")->required();
  gen->add_option("--dialect", dialect, "Partial permutation, e.g. a,b,-,c");
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  auto* op = app.add_subcommand("op", "Apply an operation and report kappa");
  std::string op_name;
  std::string lhs_path;
  std::string rhs_path;
  std::string universe;
  std::string emit;
  op->add_option("operation", op_name,
                 "product|union|symdiff|diff|inter|star|reverse|complement "
                 "(also revdiff|nor|nand|xnor|implies|converse)")
      ->required();
  op->add_option("lhs", lhs_path, "Left operand DFA file")->required();
  op->add_option("rhs", rhs_path, "Right operand DFA file");
  op->add_option("--universe", universe, "Complement universe letters, e.g. abc");
  op->add_option("--emit", emit, "Write the result DFA ('-' for stdout)");

  auto* measure = app.add_subcommand("measure", "Measure a DFA file");
  std::string what;
  std::string measure_path;
  measure->add_option("what", what, "kappa|semigroup|atoms|atom-complexities|quotients")
      ->required();
  measure->add_option("file", measure_path, "DFA file")->required();

  auto* verify = app.add_subcommand("verify", "Check registered bounds");
  std::string ids;
  std::string m_range;
  std::string n_range;
  std::string format = "csv";
  std::size_t jobs = 1;
  bool large = false;
  verify->add_option("--ids", ids, "Comma-separated ids; a trailing * matches a prefix");
  verify->add_option("--m", m_range, "m range A..B");
  verify->add_option("--n", n_range, "n range A..B");
  verify->add_option("--format", format, "csv|markdown");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--large", large, "Allow ranges beyond the default grid");

  auto* reg = app.add_subcommand("registry", "Inspect the bound registry");
  reg->require_subcommand(1);
  auto* list = reg->add_subcommand("list", "List every registered claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_witness(cls_name, n, dialect, out);
    if (*op) return run_op(op_name, lhs_path, rhs_path, universe, emit);
    if (*measure) return run_measure(what, measure_path);
    if (*verify) return run_verify(ids, m_range, n_range, format, jobs, large);
    if (*list) return run_registry_list();
  } catch (const qcomp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
