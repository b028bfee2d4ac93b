// Acceptance checks: one PASS/FAIL line per criterion, exact integers.
// Values are computed here directly from the library; formulas are written
// out independently of the registry.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qcomp/algebra.hpp"
#include "qcomp/atoms.hpp"
#include "qcomp/automata.hpp"
#include "qcomp/dfa_io.hpp"
#include "qcomp/operations.hpp"
#include "qcomp/witnesses.hpp"

using namespace qcomp;
using u64 = std::uint64_t;

namespace {

constexpr auto kReg = WitnessClass::kRegular;
constexpr auto kRight = WitnessClass::kRightIdeal;
constexpr auto kLeft = WitnessClass::kLeftIdeal;
constexpr auto kTwo = WitnessClass::kTwoSidedIdeal;

u64 p2(u64 k) { return u64{1} << k; }
u64 pw(u64 b, u64 e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Dfa w(WitnessClass cls, std::size_t n, const char* spec) {
  return apply_dialect(build_witness(cls, n), parse_dialect(spec));
}

struct Criterion {
  int number;
  std::string title;
  std::size_t cells = 0;
  std::size_t exact = 0;
  std::vector<std::string> misses;

  void expect(const std::string& where, u64 expected, u64 measured) {
    ++cells;
    if (expected == measured) {
      ++exact;
    } else {
      misses.push_back(where + ": expected " + std::to_string(expected) +
                       ", measured " + std::to_string(measured));
    }
  }
  void expect_true(const std::string& where, bool ok) {
    ++cells;
    if (ok) {
      ++exact;
    } else {
      misses.push_back(where);
    }
  }
  bool passed() const { return cells > 0 && exact == cells; }
};

std::string cell(std::size_t m, std::size_t n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

void grid(Criterion& c, const std::string& label, WitnessClass cls,
          std::size_t lo, std::size_t hi,
          const std::function<u64(const Dfa&, const Dfa&)>& measure,
          const char* lhs, const char* rhs,
          const std::function<u64(u64, u64)>& formula) {
  for (std::size_t m = lo; m <= hi; ++m) {
    for (std::size_t n = lo; n <= hi; ++n) {
      c.expect(label + " " + cell(m, n), formula(m, n),
               measure(w(cls, m, lhs), w(cls, n, rhs)));
    }
  }
}

u64 prod(const Dfa& l, const Dfa& r) { return product(l, r).kappa; }

std::function<u64(const Dfa&, const Dfa&)> bool_of(BooleanOp op) {
  return [op](const Dfa& l, const Dfa& r) { return u64{boolean(op, l, r).kappa}; };
}

Dfa two_state(std::string_view letters, char last) {
  std::vector<Transformation> delta;
  for (char c : letters) {
    delta.push_back(c == last ? Transformation({1, 1}) : Transformation({0, 0}));
  }
  return Dfa(2, Alphabet(letters), delta, 0, StateSet(2, {1}));
}

Dfa random_dfa(std::mt19937_64& rng, std::size_t max_states, std::size_t pool) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(1, max_states);
  std::string letters;
  for (std::size_t i = 0; i < pool; ++i) {
    if (pick(0, 1) == 1) letters += static_cast<char>('a' + i);
  }
  if (letters.empty()) letters = "a";
  std::vector<Transformation> delta;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::vector<State> img(n);
    for (auto& q : img) q = static_cast<State>(pick(0, n - 1));
    delta.emplace_back(img);
  }
  StateSet finals(n);
  for (State q = 0; q < n; ++q) {
    if (pick(0, 2) == 0) finals.insert(q);
  }
  return Dfa(n, Alphabet(letters), delta, 0, finals);
}

// The ten formulas for the unrestricted boolean table.
u64 table_formula(BooleanOp op, u64 m, u64 n) {
  switch (op) {
    case BooleanOp::kUnion:
    case BooleanOp::kNor:
    case BooleanOp::kSymDiff:
    case BooleanOp::kXnor:
      return (m + 1) * (n + 1);
    case BooleanOp::kImplies:
      return m * n + m + 1;
    case BooleanOp::kConverse:
      return m * n + n + 1;
    case BooleanOp::kDiff:
      return m * n + m;
    case BooleanOp::kRevDiff:
      return m * n + n;
    case BooleanOp::kNand:
      return m * n + 1;
    case BooleanOp::kInter:
      return m * n;
  }
  return 0;
}

void atom_rows(Criterion& c, WitnessClass cls, std::size_t n, const char* spec) {
  const Dfa d = w(cls, n, spec);
  const auto all = atoms(d);
  for (const auto& s : all) {
    const auto f = atom_formula(cls, n, s);
    std::string name = std::string(to_string(cls)) + " n=" + std::to_string(n) + " S={";
    bool first = true;
    for (State q : s.members()) {
      name += (first ? "" : ",") + std::to_string(q);
      first = false;
    }
    name += "}";
    if (!f) {
      c.misses.push_back(name + ": non-empty atom outside the closed form");
      ++c.cells;
      continue;
    }
    c.expect(name, *f, atom_complexity(d, s));
  }
}

}  // namespace

int main() {
  std::vector<Criterion> out;

  {
    Criterion c{1, "unrestricted regular product m2^n+2^(n-1)"};
    grid(c, "product", kReg, 3, 5, prod, "a,b,-,c", "b,a,-,d",
         [](u64 m, u64 n) { return m * p2(n) + p2(n - 1); });
    out.push_back(c);
  }
  {
    Criterion c{2, "restricted regular product m2^n-2^(n-1)"};
    grid(c, "product", kReg, 3, 5, prod, "a,b,c", "a,b,c",
         [](u64 m, u64 n) { return m * p2(n) - p2(n - 1); });
    out.push_back(c);
  }
  {
    Criterion c{3, "ten unrestricted boolean operations on the regular pair"};
    for (auto op : kAllBooleanOps) {
      grid(c, std::string(to_string(op)), kReg, 3, 5, bool_of(op), "a,b,-,c", "b,a,-,d",
           [op](u64 m, u64 n) { return table_formula(op, m, n); });
    }
    out.push_back(c);
  }
  {
    Criterion c{4, "union of {a,b}*b and {a,c}*c"};
    c.expect("union", 6, boolean(BooleanOp::kUnion, two_state("ab", 'b'), two_state("ac", 'c')).kappa);
    out.push_back(c);
  }
  {
    Criterion c{5, "ideal products, unrestricted and restricted"};
    grid(c, "right unrestricted", kRight, 3, 5, prod, "a,b,-,d,e", "a,b,-,d,c",
         [](u64 m, u64 n) { return m + p2(n - 2) + p2(n - 1) + 1; });
    grid(c, "left unrestricted", kLeft, 4, 5, prod, "a,b,-,d,e", "a,d,c,-,e",
         [](u64 m, u64 n) { return m * n + m + n; });
    grid(c, "two-sided unrestricted", kTwo, 5, 6, prod, "a,b,-,-,e,f", "a,c,-,-,e,f",
         [](u64 m, u64 n) { return m + 2 * n; });
    grid(c, "right restricted", kRight, 3, 5, prod, "a,b,-,d", "a,b,-,d",
         [](u64 m, u64 n) { return m + p2(n - 2); });
    grid(c, "left restricted", kLeft, 4, 5, prod, "a,-,-,-,e", "a,-,-,-,e",
         [](u64 m, u64 n) { return m + n - 1; });
    grid(c, "two-sided restricted", kTwo, 5, 6, prod, "a,-,-,-,e,f", "a,-,-,-,e,f",
         [](u64 m, u64 n) { return m + n - 1; });
    out.push_back(c);
  }
  {
    Criterion c{6, "unrestricted ideal booleans (m+1)(n+1) / mn+m / mn"};
    auto up = [](u64 m, u64 n) { return (m + 1) * (n + 1); };
    auto dif = [](u64 m, u64 n) { return m * n + m; };
    auto mn = [](u64 m, u64 n) { return m * n; };
    const auto U = bool_of(BooleanOp::kUnion), X = bool_of(BooleanOp::kSymDiff),
               D = bool_of(BooleanOp::kDiff), I = bool_of(BooleanOp::kInter);
    grid(c, "right union", kRight, 3, 5, U, "a,b,-,d,e", "e,c,-,d,a", up);
    grid(c, "right symdiff", kRight, 3, 5, X, "a,b,-,d,e", "e,c,-,d,a", up);
    grid(c, "right diff", kRight, 3, 5, D, "a,b,-,d,e", "e,-,-,d,a", dif);
    grid(c, "right inter", kRight, 3, 5, I, "a,-,-,d,e", "e,-,-,d,a", mn);
    grid(c, "left union", kLeft, 4, 5, U, "a,-,c,d,e", "a,b,e,-,c", up);
    grid(c, "left symdiff", kLeft, 4, 5, X, "a,-,c,d,e", "a,b,e,-,c", up);
    grid(c, "left diff", kLeft, 4, 5, D, "a,-,c,d,e", "a,-,e,-,c", dif);
    grid(c, "left inter", kLeft, 4, 5, I, "a,-,c,-,e", "a,-,e,-,c", mn);
    grid(c, "two-sided union", kTwo, 5, 6, U, "a,b,c,-,e,f", "a,e,d,-,b,f", up);
    grid(c, "two-sided symdiff", kTwo, 5, 6, X, "a,b,c,-,e,f", "a,e,d,-,b,f", up);
    grid(c, "two-sided diff", kTwo, 5, 6, D, "a,b,c,-,e,f", "a,e,-,-,b,f", dif);
    grid(c, "two-sided inter", kTwo, 5, 6, I, "a,b,-,-,e,f", "a,e,-,-,b,f", mn);
    out.push_back(c);
  }
  {
    Criterion c{7, "restricted two-sided booleans"};
    const char* l = "a,b,-,d,e,f";
    const char* r = "b,a,-,d,e,f";
    grid(c, "inter", kTwo, 5, 6, bool_of(BooleanOp::kInter), l, r,
         [](u64 m, u64 n) { return m * n; });
    grid(c, "symdiff", kTwo, 5, 6, bool_of(BooleanOp::kSymDiff), l, r,
         [](u64 m, u64 n) { return m * n; });
    grid(c, "diff", kTwo, 5, 6, bool_of(BooleanOp::kDiff), l, r,
         [](u64 m, u64 n) { return m * n - (m - 1); });
    grid(c, "union", kTwo, 5, 6, bool_of(BooleanOp::kUnion), l, r,
         [](u64 m, u64 n) { return m * n - (m + n - 2); });
    out.push_back(c);
  }
  {
    Criterion c{8, "syntactic semigroup sizes"};
    for (std::size_t n = 3; n <= 5; ++n) {
      c.expect("regular n=" + std::to_string(n), pw(n, n),
               syntactic_semigroup_size(w(kReg, n, "a,b,c")));
      c.expect("right n=" + std::to_string(n), pw(n, n - 1),
               syntactic_semigroup_size(w(kRight, n, "a,b,c,d")));
    }
    for (std::size_t n = 4; n <= 5; ++n) {
      c.expect("left n=" + std::to_string(n), pw(n, n - 1) + n - 1,
               syntactic_semigroup_size(w(kLeft, n, "a,b,c,d,e")));
    }
    for (std::size_t n = 5; n <= 6; ++n) {
      c.expect("two-sided n=" + std::to_string(n), pw(n, n - 2) + (n - 2) * p2(n - 2) + 1,
               syntactic_semigroup_size(w(kTwo, n, "a,b,c,d,e,f")));
    }
    out.push_back(c);
  }
  {
    Criterion c{9, "reversal and atom counts"};
    struct Row {
      WitnessClass cls;
      std::size_t lo, hi;
      const char* spec;
      std::function<u64(u64)> f;
    };
    const std::vector<Row> rows{
        {kReg, 3, 5, "a,b,c", [](u64 n) { return p2(n); }},
        {kRight, 3, 5, "a,-,-,d", [](u64 n) { return p2(n - 1); }},
        {kLeft, 4, 5, "a,-,c,d,e", [](u64 n) { return p2(n - 1) + 1; }},
        {kTwo, 5, 6, "a,-,-,d,e,f", [](u64 n) { return p2(n - 1) + 1; }},
    };
    for (const auto& r : rows) {
      for (std::size_t n = r.lo; n <= r.hi; ++n) {
        const Dfa d = w(r.cls, n, r.spec);
        const std::string at = std::string(to_string(r.cls)) + " n=" + std::to_string(n);
        const u64 rev = reverse(d).kappa;
        const u64 count = atoms(d).size();
        c.expect(at + " reverse", r.f(n), rev);
        c.expect(at + " atoms", r.f(n), count);
        c.expect(at + " atoms vs reverse", rev, count);
      }
    }
    std::mt19937_64 rng(909);
    for (int i = 0; i < 200; ++i) {
      const Dfa d = trim_alphabet(random_dfa(rng, 6, 3));
      c.expect("random #" + std::to_string(i) + " atoms vs reverse", reverse(d).kappa,
               atoms(d).size());
    }
    out.push_back(c);
  }
  {
    Criterion c{10, "atom complexities meet the closed forms"};
    for (std::size_t n = 3; n <= 4; ++n) atom_rows(c, kReg, n, "a,b,c");
    for (std::size_t n = 3; n <= 4; ++n) atom_rows(c, kRight, n, "a,b,c,d");
    atom_rows(c, kLeft, 4, "a,b,c,d,e");
    atom_rows(c, kTwo, 5, "a,b,c,d,e,f");
    out.push_back(c);
  }
  {
    Criterion c{11, "star"};
    for (std::size_t n = 3; n <= 5; ++n) {
      c.expect("regular n=" + std::to_string(n), p2(n - 1) + p2(n - 2),
               star(w(kReg, n, "a,b")).kappa);
      c.expect("right n=" + std::to_string(n), n + 1, star(w(kRight, n, "a,-,-,d")).kappa);
    }
    for (std::size_t n = 4; n <= 5; ++n) {
      c.expect("left n=" + std::to_string(n), n + 1, star(w(kLeft, n, "a,-,-,-,e")).kappa);
    }
    for (std::size_t n = 5; n <= 6; ++n) {
      c.expect("two-sided n=" + std::to_string(n), n + 1,
               star(w(kTwo, n, "a,-,-,-,e,f")).kappa);
    }
    out.push_back(c);
  }
  {
    Criterion c{12, "property suite"};
    std::mt19937_64 rng(1212);
    std::size_t agree = 0;
    for (int i = 0; i < 1000; ++i) {
      const Dfa d = random_dfa(rng, 8, 4);
      agree += is_isomorphic(minimize(d), brzozowski_minimize(d)) ? 1 : 0;
    }
    c.expect("minimize vs double reversal on 1000 automata", 1000, agree);

    std::size_t de_morgan = 0;
    for (int i = 0; i < 100; ++i) {
      const Dfa x = random_dfa(rng, 5, 4);
      const Dfa y = random_dfa(rng, 5, 4);
      const Alphabet all = Alphabet::union_of(x.alphabet(), y.alphabet());
      const Dfa lhs = complement(boolean(BooleanOp::kUnion, x, y).dfa, all).dfa;
      const Dfa rhs = boolean(BooleanOp::kInter, complement(x, all).dfa,
                              complement(y, all).dfa).dfa;
      de_morgan += equivalent(lhs, rhs) ? 1 : 0;
    }
    c.expect("De Morgan on 100 pairs", 100, de_morgan);

    std::size_t pairs = 0;
    std::size_t within = 0;
    while (pairs < 500) {
      const Dfa x = trim_alphabet(random_dfa(rng, 5, 5));
      const Dfa y = trim_alphabet(random_dfa(rng, 5, 5));
      const u64 m = x.state_count();
      const u64 n = y.state_count();
      if (m > 5 || n > 5) continue;
      ++pairs;
      bool ok = product(x, y).kappa <= m * p2(n) + p2(n) / 2;
      for (auto op : kAllBooleanOps) ok = ok && boolean(op, x, y).kappa <= (m + 1) * (n + 1);
      within += ok ? 1 : 0;
    }
    c.expect("upper bounds on 500 pairs", 500, within);

    std::size_t round_trips = 0;
    for (int i = 0; i < 300; ++i) {
      const Dfa d = random_dfa(rng, 12, 6);
      const std::string text = render_dfa(d);
      round_trips += (parse_dfa(text) == d && render_dfa(parse_dfa(text)) == text) ? 1 : 0;
    }
    c.expect("file round-trips on 300 automata", 300, round_trips);
    out.push_back(c);
  }

  int failed = 0;
  for (const auto& c : out) {
    std::printf("%s criterion %2d: %s [%zu/%zu exact]\n", c.passed() ? "PASS" : "FAIL",
                c.number, c.title.c_str(), c.exact, c.cells);
    if (!c.passed()) {
      ++failed;
      for (const auto& m : c.misses) std::printf("       %s\n", m.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, out.size());
  return failed == 0 ? 0 : 1;
}
