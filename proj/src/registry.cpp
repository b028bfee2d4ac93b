#include "qcomp/registry.hpp"

#include <charconv>
#include <cctype>

namespace qcomp {

namespace {

using Formula = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

constexpr auto kReg = WitnessClass::kRegular;
constexpr auto kRight = WitnessClass::kRightIdeal;
constexpr auto kLeft = WitnessClass::kLeftIdeal;
constexpr auto kTwo = WitnessClass::kTwoSidedIdeal;

std::uint64_t pow2(std::uint64_t k) { return std::uint64_t{1} << k; }

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

WitnessRecipe recipe(WitnessClass cls, std::string_view dialect) {
  return {cls, parse_dialect(dialect)};
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Builder {
 public:
  void unary(std::string id, std::string text, Measure measure,
             WitnessRecipe witness, Formula f, bool trivial_final = false) {
    BoundEntry e{std::move(id), std::move(text), measure, std::nullopt,
                 std::move(witness), std::nullopt, std::move(f), trivial_final};
    entries_.push_back(std::move(e));
  }

  void product(std::string id, std::string text, WitnessRecipe lhs,
               WitnessRecipe rhs, Formula f) {
    entries_.push_back({std::move(id), std::move(text), Measure::kProduct,
                        std::nullopt, std::move(lhs), std::move(rhs),
                        std::move(f)});
  }

  void boolean(std::string id, std::string text, BooleanOp op,
               WitnessRecipe lhs, WitnessRecipe rhs, Formula f) {
    entries_.push_back({std::move(id), std::move(text), Measure::kBoolean, op,
                        std::move(lhs), std::move(rhs), std::move(f)});
  }

  /// The ten unrestricted boolean complexities of Remark-style tables.
  void boolean_table(const std::string& prefix, const WitnessRecipe& lhs,
                     const WitnessRecipe& rhs) {
    for (BooleanOp op : kAllBooleanOps) {
      auto [text, f] = unrestricted_boolean_bound(op);
      boolean(prefix + upper(to_string(op)), text, op, lhs, rhs, f);
    }
  }

  std::vector<BoundEntry> take() { return std::move(entries_); }

 private:
  static std::pair<std::string, Formula> unrestricted_boolean_bound(BooleanOp op) {
    switch (op) {
      case BooleanOp::kUnion:
      case BooleanOp::kNor:
      case BooleanOp::kSymDiff:
      case BooleanOp::kXnor:
        return {"(m+1)(n+1)", [](auto m, auto n) { return (m + 1) * (n + 1); }};
      case BooleanOp::kImplies:
        return {"mn+m+1", [](auto m, auto n) { return m * n + m + 1; }};
      case BooleanOp::kConverse:
        return {"mn+n+1", [](auto m, auto n) { return m * n + n + 1; }};
      case BooleanOp::kDiff:
        return {"mn+m", [](auto m, auto n) { return m * n + m; }};
      case BooleanOp::kRevDiff:
        return {"mn+n", [](auto m, auto n) { return m * n + n; }};
      case BooleanOp::kNand:
        return {"mn+1", [](auto m, auto n) { return m * n + 1; }};
      case BooleanOp::kInter:
        return {"mn", [](auto m, auto n) { return m * n; }};
    }
    return {"?", [](auto, auto) { return std::uint64_t{0}; }};
  }

  std::vector<BoundEntry> entries_;
};

const Formula kIdentityN = [](std::uint64_t, std::uint64_t n) { return n; };
const Formula kMn = [](std::uint64_t m, std::uint64_t n) { return m * n; };
const Formula kUnionBound = [](std::uint64_t m, std::uint64_t n) {
  return (m + 1) * (n + 1);
};
const Formula kDiffBound = [](std::uint64_t m, std::uint64_t n) {
  return m * n + m;
};
const Formula kNPlusOne = [](std::uint64_t, std::uint64_t n) { return n + 1; };

void register_regular(Builder& b) {
  const auto full = recipe(kReg, "a,b,c,d");
  const auto abc = recipe(kReg, "a,b,c");
  b.unary("REG-KAPPA", "n", Measure::kKappa, full, kIdentityN);
  b.unary("REG-SEMIGROUP", "n^n", Measure::kSemigroup, abc,
          [](auto, auto n) { return power(n, n); });
  b.unary("REG-QUOTIENTS", "n", Measure::kQuotients, recipe(kReg, "a"),
          kIdentityN);
  b.unary("REG-REVERSE", "2^n", Measure::kReverse, abc,
          [](auto, auto n) { return pow2(n); });
  b.unary("REG-ATOMS", "2^n", Measure::kAtomCount, abc,
          [](auto, auto n) { return pow2(n); });
  b.unary("REG-ATOM-KAPPA", "atoms meeting the closed form = 2^n",
          Measure::kAtomComplexities, abc,
          [](auto, auto n) { return pow2(n); });
  b.unary("REG-STAR", "2^(n-1)+2^(n-2)", Measure::kStar, recipe(kReg, "a,b"),
          [](auto, auto n) { return pow2(n - 1) + pow2(n - 2); });

  b.product("REG-PROD-R", "m2^n-2^(n-1)", abc, abc,
            [](auto m, auto n) { return m * pow2(n) - pow2(n - 1); });
  b.product("REG-PROD-U", "m2^n+2^(n-1)", recipe(kReg, "a,b,-,c"),
            recipe(kReg, "b,a,-,d"),
            [](auto m, auto n) { return m * pow2(n) + pow2(n - 1); });

  for (BooleanOp op : kAllBooleanOps) {
    b.boolean("REG-BOOL-R-" + upper(to_string(op)), "mn", op,
              recipe(kReg, "a,b"), recipe(kReg, "b,a"), kMn);
  }
  const auto lhs = recipe(kReg, "a,b,-,c");
  const auto rhs = recipe(kReg, "b,a,-,d");
  b.boolean("REG-BOOL-U-UNION", "(m+1)(n+1)", BooleanOp::kUnion, lhs, rhs,
            kUnionBound);
  b.boolean("REG-BOOL-U-SYMDIFF", "(m+1)(n+1)", BooleanOp::kSymDiff, lhs, rhs,
            kUnionBound);
  b.boolean("REG-BOOL-U-DIFF", "mn+m", BooleanOp::kDiff, lhs,
            recipe(kReg, "b,a"), kDiffBound);
  b.boolean("REG-BOOL-U-INTER", "mn", BooleanOp::kInter, recipe(kReg, "a,b"),
            recipe(kReg, "b,a"), kMn);
  b.boolean_table("REG-REM1-", lhs, rhs);
}

void register_right(Builder& b) {
  b.unary("RID-KAPPA", "n", Measure::kKappa, recipe(kRight, "a,b,c,d,e"),
          kIdentityN);
  b.unary("RID-SEMIGROUP", "n^(n-1)", Measure::kSemigroup,
          recipe(kRight, "a,b,c,d"), [](auto, auto n) { return power(n, n - 1); });
  const auto ad = recipe(kRight, "a,-,-,d");
  b.unary("RID-QUOTIENTS", "n (final quotient: 1)", Measure::kQuotients, ad,
          kIdentityN, true);
  b.unary("RID-REVERSE", "2^(n-1)", Measure::kReverse, ad,
          [](auto, auto n) { return pow2(n - 1); });
  b.unary("RID-ATOMS", "2^(n-1)", Measure::kAtomCount, ad,
          [](auto, auto n) { return pow2(n - 1); });
  b.unary("RID-ATOM-KAPPA", "atoms meeting the closed form", Measure::kAtomComplexities,
          recipe(kRight, "a,b,c,d"), [](auto, auto n) { return pow2(n - 1); });
  b.unary("RID-STAR", "n+1", Measure::kStar, ad, kNPlusOne);

  const auto abd = recipe(kRight, "a,b,-,d");
  b.product("RID-PROD-R", "m+2^(n-2)", abd, abd,
            [](auto m, auto n) { return m + pow2(n - 2); });
  b.product("RID-PROD-U", "m+2^(n-2)+2^(n-1)+1", recipe(kRight, "a,b,-,d,e"),
            recipe(kRight, "a,b,-,d,c"),
            [](auto m, auto n) { return m + pow2(n - 2) + pow2(n - 1) + 1; });

  const auto restricted_rhs = recipe(kRight, "b,a,-,d");
  b.boolean("RID-BOOL-R-INTER", "mn", BooleanOp::kInter, abd, restricted_rhs, kMn);
  b.boolean("RID-BOOL-R-SYMDIFF", "mn", BooleanOp::kSymDiff, abd, restricted_rhs,
            kMn);
  b.boolean("RID-BOOL-R-DIFF", "mn-(m-1)", BooleanOp::kDiff, abd, restricted_rhs,
            [](auto m, auto n) { return m * n - (m - 1); });
  b.boolean("RID-BOOL-R-UNION", "mn-(m+n-2)", BooleanOp::kUnion, abd,
            restricted_rhs, [](auto m, auto n) { return m * n - (m + n - 2); });

  const auto lhs = recipe(kRight, "a,b,-,d,e");
  const auto rhs = recipe(kRight, "e,c,-,d,a");
  b.boolean("RID-BOOL-U-UNION", "(m+1)(n+1)", BooleanOp::kUnion, lhs, rhs,
            kUnionBound);
  b.boolean("RID-BOOL-U-SYMDIFF", "(m+1)(n+1)", BooleanOp::kSymDiff, lhs, rhs,
            kUnionBound);
  b.boolean("RID-BOOL-U-DIFF", "mn+m", BooleanOp::kDiff, lhs,
            recipe(kRight, "e,-,-,d,a"), kDiffBound);
  b.boolean("RID-BOOL-U-INTER", "mn", BooleanOp::kInter,
            recipe(kRight, "a,-,-,d,e"), recipe(kRight, "e,-,-,d,a"), kMn);
  b.boolean_table("RID-REM1-", lhs, rhs);
}

void register_left(Builder& b) {
  const auto full = recipe(kLeft, "a,b,c,d,e");
  b.unary("LID-KAPPA", "n", Measure::kKappa, full, kIdentityN);
  b.unary("LID-SEMIGROUP", "n^(n-1)+n-1", Measure::kSemigroup, full,
          [](auto, auto n) { return power(n, n - 1) + n - 1; });
  b.unary("LID-QUOTIENTS", "n", Measure::kQuotients,
          recipe(kLeft, "a,-,-,d,e"), kIdentityN);
  const auto acde = recipe(kLeft, "a,-,c,d,e");
  b.unary("LID-REVERSE", "2^(n-1)+1", Measure::kReverse, acde,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  b.unary("LID-ATOMS", "2^(n-1)+1", Measure::kAtomCount, acde,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  b.unary("LID-ATOM-KAPPA", "atoms meeting the closed form",
          Measure::kAtomComplexities, full,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  b.unary("LID-STAR", "n+1", Measure::kStar, recipe(kLeft, "a,-,-,-,e"),
          kNPlusOne);

  const auto ae = recipe(kLeft, "a,-,-,-,e");
  b.product("LID-PROD-R", "m+n-1", ae, ae,
            [](auto m, auto n) { return m + n - 1; });
  b.product("LID-PROD-U", "mn+m+n", recipe(kLeft, "a,b,-,d,e"),
            recipe(kLeft, "a,d,c,-,e"),
            [](auto m, auto n) { return m * n + m + n; });

  for (BooleanOp op : kAllBooleanOps) {
    b.boolean("LID-BOOL-R-" + upper(to_string(op)), "mn", op,
              recipe(kLeft, "a,-,c,-,e"), recipe(kLeft, "a,-,e,-,c"), kMn);
  }
  const auto lhs = recipe(kLeft, "a,-,c,d,e");
  const auto rhs = recipe(kLeft, "a,b,e,-,c");
  b.boolean("LID-BOOL-U-UNION", "(m+1)(n+1)", BooleanOp::kUnion, lhs, rhs,
            kUnionBound);
  b.boolean("LID-BOOL-U-SYMDIFF", "(m+1)(n+1)", BooleanOp::kSymDiff, lhs, rhs,
            kUnionBound);
  b.boolean("LID-BOOL-U-DIFF", "mn+m", BooleanOp::kDiff, lhs,
            recipe(kLeft, "a,-,e,-,c"), kDiffBound);
  b.boolean("LID-BOOL-U-INTER", "mn", BooleanOp::kInter,
            recipe(kLeft, "a,-,c,-,e"), recipe(kLeft, "a,-,e,-,c"), kMn);
  b.boolean_table("LID-REM1-", lhs, rhs);
}

void register_two_sided(Builder& b) {
  const auto full = recipe(kTwo, "a,b,c,d,e,f");
  b.unary("TID-KAPPA", "n", Measure::kKappa, full, kIdentityN);
  b.unary("TID-SEMIGROUP", "n^(n-2)+(n-2)2^(n-2)+1", Measure::kSemigroup, full,
          [](auto, auto n) { return power(n, n - 2) + (n - 2) * pow2(n - 2) + 1; });
  const auto adef = recipe(kTwo, "a,-,-,d,e,f");
  b.unary("TID-QUOTIENTS", "n", Measure::kQuotients, adef, kIdentityN);
  b.unary("TID-REVERSE", "2^(n-1)+1", Measure::kReverse, adef,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  b.unary("TID-ATOMS", "2^(n-1)+1", Measure::kAtomCount, adef,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  b.unary("TID-ATOM-KAPPA", "atoms meeting the closed form",
          Measure::kAtomComplexities, full,
          [](auto, auto n) { return pow2(n - 1) + 1; });
  const auto aef = recipe(kTwo, "a,-,-,-,e,f");
  b.unary("TID-STAR", "n+1", Measure::kStar, aef, kNPlusOne);

  b.product("TID-PROD-R", "m+n-1", aef, aef,
            [](auto m, auto n) { return m + n - 1; });
  b.product("TID-PROD-U", "m+2n", recipe(kTwo, "a,b,-,-,e,f"),
            recipe(kTwo, "a,c,-,-,e,f"), [](auto m, auto n) { return m + 2 * n; });

  const auto rl = recipe(kTwo, "a,b,-,d,e,f");
  const auto rr = recipe(kTwo, "b,a,-,d,e,f");
  b.boolean("TID-BOOL-R-INTER", "mn", BooleanOp::kInter, rl, rr, kMn);
  b.boolean("TID-BOOL-R-SYMDIFF", "mn", BooleanOp::kSymDiff, rl, rr, kMn);
  b.boolean("TID-BOOL-R-DIFF", "mn-(m-1)", BooleanOp::kDiff, rl, rr,
            [](auto m, auto n) { return m * n - (m - 1); });
  b.boolean("TID-BOOL-R-UNION", "mn-(m+n-2)", BooleanOp::kUnion, rl, rr,
            [](auto m, auto n) { return m * n - (m + n - 2); });

  const auto lhs = recipe(kTwo, "a,b,c,-,e,f");
  const auto rhs = recipe(kTwo, "a,e,d,-,b,f");
  b.boolean("TID-BOOL-U-UNION", "(m+1)(n+1)", BooleanOp::kUnion, lhs, rhs,
            kUnionBound);
  b.boolean("TID-BOOL-U-SYMDIFF", "(m+1)(n+1)", BooleanOp::kSymDiff, lhs, rhs,
            kUnionBound);
  b.boolean("TID-BOOL-U-DIFF", "mn+m", BooleanOp::kDiff, lhs,
            recipe(kTwo, "a,e,-,-,b,f"), kDiffBound);
  b.boolean("TID-BOOL-U-INTER", "mn", BooleanOp::kInter,
            recipe(kTwo, "a,b,-,-,e,f"), recipe(kTwo, "a,e,-,-,b,f"), kMn);
  b.boolean_table("TID-REM1-", lhs, rhs);
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::kKappa:
      return "kappa";
    case Measure::kSemigroup:
      return "semigroup";
    case Measure::kQuotients:
      return "quotients";
    case Measure::kReverse:
      return "reverse";
    case Measure::kAtomCount:
      return "atoms";
    case Measure::kAtomComplexities:
      return "atom-complexities";
    case Measure::kStar:
      return "star";
    case Measure::kProduct:
      return "product";
    case Measure::kBoolean:
      return "boolean";
  }
  return "?";
}

std::optional<GridRange> parse_grid_range(std::string_view s) noexcept {
  auto number = [](std::string_view t) -> std::optional<std::size_t> {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      return std::nullopt;
    }
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const auto v = number(s);
    if (!v) return std::nullopt;
    return GridRange{*v, *v};
  }
  const auto lo = number(s.substr(0, dots));
  const auto hi = number(s.substr(dots + 2));
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return GridRange{*lo, *hi};
}

const std::vector<BoundEntry>& registry() {
  static const std::vector<BoundEntry> entries = [] {
    Builder b;
    register_regular(b);
    register_right(b);
    register_left(b);
    register_two_sided(b);
    return b.take();
  }();
  return entries;
}

const BoundEntry* find_entry(std::string_view id) noexcept {
  for (const auto& e : registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

GridRange default_range(WitnessClass cls) noexcept {
  switch (cls) {
    case WitnessClass::kRegular:
    case WitnessClass::kRightIdeal:
      return {3, 5};
    case WitnessClass::kLeftIdeal:
      return {4, 5};
    case WitnessClass::kTwoSidedIdeal:
      return {5, 6};
  }
  return {0, 0};
}

}  // namespace qcomp
