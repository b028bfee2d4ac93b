#include <doctest.h>

#include <algorithm>

#include "qcomp/automata.hpp"
#include "qcomp/errors.hpp"
#include "qcomp/operations.hpp"
#include "qcomp/witnesses.hpp"
#include "support.hpp"

using namespace qcomp;

namespace {

Dfa ends_with(std::string_view letters, char last) {
  std::vector<Transformation> delta;
  for (char c : letters) {
    delta.push_back(c == last ? Transformation({1, 1}) : Transformation({0, 0}));
  }
  return Dfa(2, Alphabet(letters), delta, 0, StateSet(2, {1}));
}

Dfa a_star() {
  return Dfa(1, Alphabet("a"), {Transformation({0})}, 0, StateSet(1, {0}));
}

Dfa reg(std::size_t n, std::string_view spec) {
  return apply_dialect(build_regular(n), parse_dialect(spec));
}

qtest::Member lift(BooleanOp op, const Dfa& l, const Dfa& r) {
  return [=](std::string_view w) {
    return evaluate(op, qtest::member(l, w), qtest::member(r, w));
  };
}

}  // namespace

TEST_SUITE("operations") {

TEST_CASE("truth tables") {
  CHECK(evaluate(BooleanOp::kImplies, true, false) == false);
  CHECK(evaluate(BooleanOp::kConverse, false, true) == false);
  CHECK(evaluate(BooleanOp::kXnor, false, false));
  CHECK(evaluate(BooleanOp::kRevDiff, false, true));
  CHECK(evaluate(BooleanOp::kNand, true, false));
  for (auto op : kAllBooleanOps) {
    CHECK(parse_boolean_op(to_string(op)) == op);
    // Proper: depends on both arguments.
    bool on_l = false, on_r = false;
    for (bool x : {false, true}) {
      on_l = on_l || evaluate(op, true, x) != evaluate(op, false, x);
      on_r = on_r || evaluate(op, x, true) != evaluate(op, x, false);
    }
    CHECK(on_l);
    CHECK(on_r);
  }
  CHECK_FALSE(parse_boolean_op("xor"));
}

TEST_CASE("union over different alphabets") {
  const Dfa l = ends_with("ab", 'b');
  const Dfa r = ends_with("ac", 'c');
  const auto u = boolean(BooleanOp::kUnion, l, r);
  CHECK(u.kappa == 6);
  CHECK(u.combined_alphabet.letters() == "abc");
  CHECK(qtest::brute_kappa(lift(BooleanOp::kUnion, l, r), "abc", 7) == 6);
}

TEST_CASE("products") {
  const auto p = product(reg(3, "a,b,-,c"), reg(3, "b,a,-,d"));
  CHECK(p.kappa == 28);
  CHECK(p.dfa.state_count() == 28);
  CHECK(product(reg(3, "a,b,c"), reg(3, "a,b,c")).kappa == 20);
  CHECK(product(a_star(), a_star()).kappa == 1);
}

TEST_CASE("booleans on the unrestricted witnesses") {
  CHECK(boolean(BooleanOp::kUnion, reg(3, "a,b,-,c"), reg(3, "b,a,-,d")).kappa == 16);
  CHECK(boolean(BooleanOp::kDiff, reg(3, "a,b,-,c"), reg(3, "b,a")).kappa == 12);
  CHECK(boolean(BooleanOp::kInter, reg(3, "a,b"), reg(3, "b,a")).kappa == 9);
}

TEST_CASE("complement") {
  const Dfa not_a_star(2, Alphabet("ab"),
                       {Transformation({0, 1}), Transformation({1, 1})}, 0,
                       StateSet(2, {1}));
  const auto c = complement(not_a_star, Alphabet("ab"));
  CHECK(c.kappa == 1);
  CHECK(equivalent(c.dfa, a_star()));

  const Dfa w = reg(4, "a,b,c");
  const auto twice = complement(complement(w, Alphabet("abc")).dfa, Alphabet("abc"));
  CHECK(equivalent(twice.dfa, w));

  const Dfa empty(1, Alphabet("a"), {Transformation({0})}, 0, StateSet(1));
  const auto all = complement(empty, Alphabet("a"));
  CHECK(all.kappa == 1);
  CHECK(equivalent(all.dfa, a_star()));

  CHECK_THROWS_AS(complement(w, Alphabet("ab")), StructuralError);
}

TEST_CASE("star") {
  CHECK(star(reg(4, "a,b")).kappa == 12);
  CHECK(star(apply_dialect(build_right_ideal(4), parse_dialect("a,-,-,d"))).kappa == 5);
  CHECK(star(a_star()).kappa == 1);
}

TEST_CASE("reverse") {
  CHECK(reverse(reg(3, "a,b,c")).kappa == 8);
  CHECK(reverse(apply_dialect(build_left_ideal(4), parse_dialect("a,-,c,d,e"))).kappa == 9);
  const Dfa single(3, Alphabet("a"), {Transformation({1, 2, 2})}, 0, StateSet(3, {1}));
  CHECK(reverse(single).kappa == 3);
}

TEST_CASE("ideal predicates") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const Dfa r = build_right_ideal(n);
    CHECK(is_right_ideal(r));
    CHECK_FALSE(is_left_ideal(r));
    CHECK_FALSE(is_two_sided_ideal(r));
  }

  // a*b over {a,b}: some word of {a,b}*a*b lies outside a*b.
  const Dfa astar_b(3, Alphabet("ab"),
                    {Transformation({0, 2, 2}), Transformation({1, 2, 2})}, 0,
                    StateSet(3, {1}));
  bool escapes = false;
  for (const auto& u : qtest::words_up_to("ab", 3)) {
    for (const auto& w : qtest::words_up_to("ab", 3)) {
      escapes = escapes || (qtest::member(astar_b, w) && !qtest::member(astar_b, u + w));
    }
  }
  CHECK(escapes);
  CHECK_FALSE(is_left_ideal(astar_b));

  // {a,b}*b is a left ideal.
  CHECK(is_left_ideal(ends_with("ab", 'b')));

  const Dfa empty(1, Alphabet("a"), {Transformation({0})}, 0, StateSet(1));
  CHECK_FALSE(is_right_ideal(empty));
  CHECK_FALSE(is_left_ideal(empty));
  CHECK_FALSE(is_two_sided_ideal(empty));
}

TEST_CASE("equivalence") {
  const Dfa w = reg(4, "a,b,c,d");
  CHECK(equivalent(w, minimize(w)));
  CHECK(equivalent(ends_with("ab", 'b'), complete_over(ends_with("ab", 'b'), Alphabet("abz"))));

  const Dfa l = reg(3, "a,b");
  const Dfa r = reg(3, "b,a");
  CHECK_FALSE(equivalent(l, r));

  // De Morgan over the union alphabet.
  const Dfa x = reg(3, "a,b,-,c");
  const Dfa y = reg(3, "b,a,-,d");
  const Alphabet all = Alphabet::union_of(x.alphabet(), y.alphabet());
  const auto lhs = complement(boolean(BooleanOp::kUnion, x, y).dfa, all);
  const auto rhs = boolean(BooleanOp::kInter, complement(x, all).dfa, complement(y, all).dfa);
  CHECK(equivalent(lhs.dfa, rhs.dfa));
  CHECK(equivalent(lhs.dfa, boolean(BooleanOp::kNor, x, y).dfa));
}

TEST_CASE("operations agree with the membership oracle") {
  qtest::Generator gen(404);
  for (int i = 0; i < 25; ++i) {
    const Dfa l = gen.dfa(gen.uniform(1, 2), gen.letters(3, 2));
    const Dfa r = gen.dfa(gen.uniform(1, 2), gen.letters(3, 2));
    const auto all = Alphabet::union_of(l.alphabet(), r.alphabet());
    const std::string letters(all.letters());
    const auto ml = qtest::member_of(l);
    const auto mr = qtest::member_of(r);

    for (auto op : {BooleanOp::kUnion, BooleanOp::kImplies, BooleanOp::kXnor,
                    BooleanOp::kRevDiff}) {
      const auto got = boolean(op, l, r);
      CHECK(qtest::brute_kappa(lift(op, l, r), letters, got.kappa + 1) == got.kappa);
    }

    const auto p = product(l, r);
    const qtest::Member in_p = [&](std::string_view w) { return qtest::in_product(ml, mr, w); };
    CHECK(qtest::brute_kappa(in_p, letters, p.kappa + 1) == p.kappa);

    const auto s = star(l);
    const qtest::Member in_s = [&](std::string_view w) { return qtest::in_star(ml, w); };
    CHECK(qtest::brute_kappa(in_s, l.alphabet().letters(), s.kappa + 1) == s.kappa);

    const auto rv = reverse(r);
    const qtest::Member in_r = [&](std::string_view w) {
      return mr(std::string(w.rbegin(), w.rend()));
    };
    CHECK(qtest::brute_kappa(in_r, r.alphabet().letters(), rv.kappa + 1) == rv.kappa);

    const auto c = complement(l, all);
    const qtest::Member in_c = [&](std::string_view w) { return !ml(w); };
    CHECK(qtest::brute_kappa(in_c, letters, c.kappa + 1) == c.kappa);
  }
}

TEST_CASE("results are minimal over their own alphabet") {
  const auto p = product(reg(3, "a,b,-,c"), reg(3, "b,a,-,d"));
  CHECK(p.dfa.alphabet() == language_alphabet(p.dfa));
  CHECK(minimize(p.dfa) == p.dfa);
  const auto s = star(reg(4, "a,b"));
  CHECK(s.dfa.state_count() == s.kappa);
}

}  // TEST_SUITE
