#include "qcomp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qcomp/algebra.hpp"
#include "qcomp/atoms.hpp"
#include "qcomp/automata.hpp"
#include "qcomp/operations.hpp"

namespace qcomp {

namespace {

struct Measurement {
  std::uint64_t value = 0;
  std::string diagnostic;
};

Measurement count_quotients(const BoundEntry& entry, const Dfa& d,
                            std::size_t n) {
  Measurement out;
  std::ostringstream detail;
  for (State q = 0; q < d.state_count(); ++q) {
    const std::size_t want =
        entry.final_quotient_trivial && d.is_final(q) ? 1 : n;
    const std::size_t got = quotient_complexity_of_state(d, q);
    if (got == want) {
      ++out.value;
    } else {
      detail << "state " << q << ": kappa " << got << ", expected " << want
             << "; ";
    }
  }
  out.diagnostic = detail.str();
  return out;
}

Measurement count_formula_atoms(const BoundEntry& entry, const Dfa& d,
                                std::size_t n) {
  Measurement out;
  std::ostringstream detail;
  for (const StateSet& s : atoms(d)) {
    const auto want = atom_formula(entry.lhs.cls, n, s);
    const std::size_t got = atom_complexity(d, s);
    if (want && *want == got) {
      ++out.value;
    } else {
      detail << "S={";
      bool first = true;
      s.for_each([&](State q) {
        detail << (first ? "" : ",") << q;
        first = false;
      });
      detail << "}: kappa " << got << ", formula "
             << (want ? std::to_string(*want) : std::string("undefined"))
             << "; ";
    }
  }
  out.diagnostic = detail.str();
  return out;
}

Measurement measure(const BoundEntry& entry, std::optional<std::size_t> m,
                    std::size_t n) {
  if (entry.binary()) {
    const Dfa lhs = entry.lhs.build(*m);
    const Dfa rhs = entry.rhs->build(n);
    if (entry.measure == Measure::kProduct) return {product(lhs, rhs).kappa, {}};
    return {boolean(*entry.op, lhs, rhs).kappa, {}};
  }
  const Dfa d = entry.lhs.build(n);
  switch (entry.measure) {
    case Measure::kKappa:
      return {quotient_complexity(d), {}};
    case Measure::kSemigroup:
      return {syntactic_semigroup_size(d), {}};
    case Measure::kQuotients:
      return count_quotients(entry, d, n);
    case Measure::kReverse:
      return {reverse(d).kappa, {}};
    case Measure::kAtomCount:
      return {atoms(d).size(), {}};
    case Measure::kAtomComplexities:
      return count_formula_atoms(entry, d, n);
    case Measure::kStar:
      return {star(d).kappa, {}};
    case Measure::kProduct:
    case Measure::kBoolean:
      break;
  }
  throw std::logic_error("binary measure on a unary entry");
}

struct Cell {
  const BoundEntry* entry;
  std::optional<std::size_t> m;
  std::size_t n;
};

}  // namespace

std::vector<const BoundEntry*> select_entries(const std::vector<std::string>& ids) {
  std::vector<const BoundEntry*> out;
  if (ids.empty()) {
    for (const auto& e : registry()) out.push_back(&e);
    return out;
  }
  for (const auto& id : ids) {
    bool matched = false;
    const bool wildcard = !id.empty() && id.back() == '*';
    const std::string_view stem =
        wildcard ? std::string_view(id).substr(0, id.size() - 1) : id;
    for (const auto& e : registry()) {
      const bool hit = wildcard ? e.id.starts_with(stem) : e.id == id;
      if (hit) {
        matched = true;
        if (std::find(out.begin(), out.end(), &e) == out.end()) out.push_back(&e);
      }
    }
    if (!matched) throw std::invalid_argument("unknown registry id '" + id + "'");
  }
  return out;
}

VerificationRow evaluate_cell(const BoundEntry& entry,
                              std::optional<std::size_t> m, std::size_t n) {
  VerificationRow row;
  row.id = entry.id;
  row.m = m;
  row.n = n;
  row.expected = entry.formula(m.value_or(0), n);
  const auto start = std::chrono::steady_clock::now();
  try {
    Measurement got = measure(entry, m, n);
    row.measured = got.value;
    row.diagnostic = std::move(got.diagnostic);
  } catch (const std::exception& e) {
    row.measured = 0;
    row.diagnostic = std::string("construction failed: ") + e.what();
  }
  row.elapsed = std::chrono::steady_clock::now() - start;
  row.match = row.expected == row.measured && row.diagnostic.empty();
  return row;
}

SweepResult run_sweep(const SweepOptions& options) {
  SweepResult result;
  std::vector<Cell> cells;

  auto values = [&](WitnessClass cls, const std::optional<GridRange>& requested,
                    const std::string& id, char axis) {
    const GridRange range = requested.value_or(default_range(cls));
    std::vector<std::size_t> out;
    for (std::size_t v = range.lo; v <= range.hi; ++v) {
      if (v < min_states(cls)) {
        result.notices.push_back(id + ": skipped " + axis + "=" +
                                 std::to_string(v) + " (needs " + axis +
                                 " >= " + std::to_string(min_states(cls)) + ")");
        continue;
      }
      out.push_back(v);
    }
    return out;
  };

  for (const BoundEntry* e : select_entries(options.ids)) {
    const auto ns = values(e->rhs ? e->rhs->cls : e->lhs.cls, options.n_range,
                           e->id, 'n');
    if (e->binary()) {
      for (std::size_t m : values(e->lhs.cls, options.m_range, e->id, 'm')) {
        for (std::size_t n : ns) cells.push_back({e, m, n});
      }
    } else {
      for (std::size_t n : ns) cells.push_back({e, std::nullopt, n});
    }
  }

  result.rows.resize(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      result.rows[i] = evaluate_cell(*cells[i].entry, cells[i].m, cells[i].n);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < std::min(jobs, cells.size()); ++j) {
      pool.emplace_back(worker);
    }
  }

  std::sort(result.rows.begin(), result.rows.end(),
            [](const VerificationRow& a, const VerificationRow& b) {
              return std::tie(a.id, a.m, a.n) < std::tie(b.id, b.m, b.n);
            });
  return result;
}

}  // namespace qcomp
