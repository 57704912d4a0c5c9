#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wshift/core.hpp"
#include "wshift/error.hpp"
#include "wshift/expression.hpp"

using namespace wshift;
using wshift::testing::q;

namespace {

WeightSequence constant_tail(std::vector<Rational> prefix, const Rational& c) {
  return WeightSequence(std::move(prefix), ConstantTail{c});
}

WeightSequence expression_tail(std::vector<Rational> prefix, const char* expr,
                               std::size_t horizon = WeightSequence::kDefaultHorizon) {
  return WeightSequence(std::move(prefix), ExpressionTail{Expression::parse(expr)}, horizon);
}

// 1, 2, 3, 3, 3, ...
WeightSequence one_two_three() { return constant_tail({q(1), q(2), q(3)}, q(3)); }

// k, k, 1 - 1/(n+1) for n >= 3
WeightSequence example_two(const Rational& k, std::size_t horizon = 2000) {
  return expression_tail({k, k}, "1 - 1/(n+1)", horizon);
}

}  // namespace

TEST_CASE("weight") {
  CHECK(one_two_three().weight(5) == 3);
  CHECK(constant_tail({q(1)}, q(1)).weight(100) == 1);
  CHECK(example_two(q(1, 2)).weight(3) == q(3, 4));
  CHECK(one_two_three().weight(0) == 0);

  const WeightSequence bare({q(1), q(2)});
  CHECK_THROWS_AS(bare.weight(3), ShiftError);
  try {
    bare.weight(3);
  } catch (const ShiftError& e) {
    CHECK(e.kind() == ErrorKind::kIndexBeyondPrefix);
  }
  const WeightSequence bad_tail = expression_tail({q(1)}, "1 - 10/n");
  try {
    bad_tail.weight(3);
    FAIL("expected a domain error");
  } catch (const ShiftError& e) {
    CHECK(e.kind() == ErrorKind::kExpressionDomain);
  }
}

TEST_CASE("construction rejects invalid weights") {
  CHECK_THROWS_AS(WeightSequence({q(1), q(0)}), ShiftError);
  CHECK_THROWS_AS(WeightSequence({q(-1)}), ShiftError);
  CHECK_THROWS_AS(WeightSequence(std::vector<Rational>{}), ShiftError);
  CHECK_THROWS_AS(constant_tail({q(1)}, q(0)), ShiftError);
  CHECK_THROWS_AS(expression_tail({q(1)}, "n"), ShiftError);  // unbounded
  CHECK_THROWS_AS(WeightSequence({q(1), q(2), q(3)}, NoTail{}, 2), ShiftError);
}

TEST_CASE("q_diagonal") {
  const std::vector<Rational> expected_a = {q(1), q(3), q(5), q(0), q(0)};
  CHECK(q_diagonal_range(one_two_three(), 5) == expected_a);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(q_diagonal(one_two_three(), n) == expected_a[n - 1]);

  const std::vector<Rational> expected_b = {q(1), q(0), q(0)};
  CHECK(q_diagonal_range(constant_tail({q(1)}, q(1)), 3) == expected_b);

  const std::vector<Rational> expected_c = {q(1, 4), q(0), q(5, 16), q(31, 400)};
  CHECK(q_diagonal_range(example_two(q(1, 2)), 4) == expected_c);
}

TEST_CASE("ratio_squared") {
  const auto w = one_two_three();
  CHECK(ratio_squared(w, 1).value == 3);
  CHECK(ratio_squared(w, 2).value == q(20, 3));
  CHECK(ratio_squared(w, 3).value == 0);
  CHECK(ratio_squared(w, 4).value == 0);
  CHECK_FALSE(ratio_squared(w, 3).kernel_escape);

  const auto iso = constant_tail({q(1)}, q(1));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(ratio_squared(iso, n).value == 0);
    CHECK_FALSE(ratio_squared(iso, n).kernel_escape);
  }

  const auto ex2 = example_two(q(1, 2));
  CHECK(ratio_squared(ex2, 2).kernel_escape);
  CHECK(ratio_squared(ex2, 2).value == 0);
  CHECK_FALSE(ratio_squared(ex2, 1).kernel_escape);

  const auto decreasing = WeightSequence({q(2), q(1), q(1)});
  try {
    ratio_squared(decreasing, 1);
    FAIL("expected NotHyponormalAt");
  } catch (const ShiftError& e) {
    CHECK(e.kind() == ErrorKind::kNotHyponormalAt);
    CHECK(*e.index() == 2);
  }
  CHECK(ratio_display(ratio_squared(w, 1)) == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("is_hyponormal") {
  CHECK(is_hyponormal(constant_tail({q(1)}, q(1))).proven_yes());
  CHECK(is_hyponormal(example_two(q(1, 2))).proven_yes());
  // k = 3/4 still satisfies a_2 <= a_3.
  CHECK(is_hyponormal(example_two(q(3, 4))).proven_yes());
  const Verdict above = is_hyponormal(example_two(q(4, 5)));
  CHECK(above.proven_no());
  CHECK(*above.witness == 2);

  const Verdict v = is_hyponormal(WeightSequence({q(2), q(1)}));
  CHECK(v.proven_no());
  CHECK(*v.witness == 1);

  const Verdict tail_drop = is_hyponormal(constant_tail({q(1), q(3)}, q(2)));
  CHECK(tail_drop.proven_no());
  CHECK(*tail_drop.witness == 2);

  CHECK(is_hyponormal(WeightSequence({q(1), q(2)})).answer == Answer::kUnknown);
  // 1 + 1/n decreases.
  CHECK(is_hyponormal(expression_tail({q(1, 2)}, "1 + 1/n", 100)).proven_no());
}

TEST_CASE("plateau_structure") {
  CHECK(plateau_structure(one_two_three()) ==
        PlateauStructure{PlateauKind::kStrictThenConstant, 3});
  CHECK(plateau_structure(example_two(q(1, 2))) ==
        PlateauStructure{PlateauKind::kEqualityThenIncrease, 1});
  CHECK(plateau_structure(constant_tail({q(1)}, q(1))) ==
        PlateauStructure{PlateauKind::kStrictThenConstant, 1});
  CHECK(plateau_structure(example_two(q(3, 4))) ==
        PlateauStructure{PlateauKind::kEqualityThenIncrease, 2});
  CHECK(plateau_structure(expression_tail({q(1, 2)}, "1 - 1/(n+1)", 500)).kind ==
        PlateauKind::kStrictlyIncreasing);
  CHECK(plateau_structure(WeightSequence({q(1), q(2)})).kind ==
        PlateauKind::kUnknownBeyondHorizon);
  CHECK(plateau_structure(WeightSequence({q(1), q(1), q(2)})) ==
        PlateauStructure{PlateauKind::kEqualityThenIncrease, 1});
  // Constant expression tail behaves like a constant tail.
  CHECK(plateau_structure(expression_tail({q(1), q(2)}, "6/2", 50)) ==
        PlateauStructure{PlateauKind::kStrictThenConstant, 3});
  CHECK_THROWS_AS(plateau_structure(WeightSequence({q(2), q(1)})), ShiftError);
}

TEST_CASE("sup_analysis") {
  const SupAnalysis a = sup_analysis(one_two_three());
  CHECK(a.estimate == q(20, 3));
  CHECK(a.grade == SupGrade::kProven);
  CHECK(a.argmax == 2);

  const SupAnalysis iso = sup_analysis(constant_tail({q(1)}, q(1)));
  CHECK(iso.estimate == 0);
  CHECK(iso.grade == SupGrade::kProven);

  // Strictly increasing n/(n+1): b_n^2 climbs towards 1 without reaching it.
  const SupAnalysis inc = sup_analysis(expression_tail({q(1, 2)}, "1 - 1/(n+1)", 1000));
  REQUIRE(inc.limit);
  CHECK(*inc.limit == 1);
  CHECK(inc.estimate == 1);
  CHECK(inc.grade == SupGrade::kProven);
  const Rational last_seen = ratio_squared(expression_tail({q(1, 2)}, "1 - 1/(n+1)"), 1000).value;
  CHECK(last_seen < 1);
  CHECK(to_long_double(last_seen) > 0.99L);

  // Prefix-only and strictly increasing: horizon evidence.
  const SupAnalysis open = sup_analysis(WeightSequence({q(1), q(2), q(3)}));
  CHECK(open.grade == SupGrade::kEvidence);
  CHECK(open.estimate == q(20, 3));

  CHECK_THROWS_AS(sup_analysis(example_two(q(1, 2))), ShiftError);
}

TEST_CASE("divergence heuristic") {
  // b_n^2 = n^3 grows by 10^3 per decade: diverges.
  std::vector<Rational> cubic;
  for (long n = 1; n <= 2000; ++n) cubic.push_back(q(n * n * n));
  const TrendResult grow = classify_trend(cubic);
  CHECK(grow.grade == SupGrade::kDiverges);
  REQUIRE(grow.last_decade_growth);

  // Bounded and increasing: evidence only.
  std::vector<Rational> bounded;
  for (long n = 1; n <= 2000; ++n) bounded.push_back(q(n, n + 1));
  CHECK(classify_trend(bounded).grade == SupGrade::kEvidence);

  // Large but not sustained over three decades.
  std::vector<Rational> spike(2000, q(1));
  spike[1500] = q(10'000'000);
  CHECK(classify_trend(spike).grade == SupGrade::kEvidence);
}

TEST_CASE("kernel_invariance") {
  CHECK(kernel_invariance(one_two_three()).proven_yes());
  const Verdict ex2 = kernel_invariance(example_two(q(1, 2)));
  CHECK(ex2.proven_no());
  CHECK(*ex2.witness == 2);
  CHECK(kernel_invariance(constant_tail({q(1)}, q(1))).proven_yes());
  CHECK(*kernel_invariance(example_two(q(3, 4))).witness == 3);
  CHECK_THROWS_AS(kernel_invariance(WeightSequence({q(2), q(1)})), ShiftError);
}

TEST_CASE("classify_near_subnormal") {
  CHECK(classify_near_subnormal(one_two_three()).verdict.proven_yes());
  const auto ex2 = classify_near_subnormal(example_two(q(1, 2)));
  CHECK(ex2.verdict.proven_no());
  CHECK(*ex2.verdict.witness == 2);
  REQUIRE(ex2.kernel);
  CHECK(ex2.kernel->proven_no());
  CHECK(classify_near_subnormal(constant_tail({q(1)}, q(1))).verdict.proven_yes());

  const auto not_hypo = classify_near_subnormal(WeightSequence({q(2), q(1)}));
  CHECK(not_hypo.verdict.proven_no());
  CHECK(not_hypo.plateau->kind == PlateauKind::kNotMonotone);

  const auto open = classify_near_subnormal(WeightSequence({q(1), q(2), q(3)}));
  CHECK(open.verdict.answer == Answer::kUnknown);
  REQUIRE(open.sup);

  const auto bad = classify_near_subnormal(expression_tail({q(1)}, "2 - 10/n", 50));
  CHECK(bad.verdict.answer == Answer::kUnknown);
}

TEST_CASE("d_near_subnormal_scalar") {
  const auto w = one_two_three();
  const std::vector<Rational> d = q_diagonal_range(w, 11);
  for (std::size_t last : {3u, 5u, 10u}) {
    const AdmissibleM m = d_near_subnormal_scalar(w, d, last);
    REQUIRE(m.sup);
    CHECK(*m.sup == q(3, 20));
    CHECK(m.holds);
  }

  const auto ones = constant_tail({q(1)}, q(1));
  const std::vector<Rational> all_ones(12, q(1));
  const AdmissibleM unit = d_near_subnormal_scalar(ones, all_ones, 10);
  CHECK(*unit.sup == 1);
  CHECK(unit.holds);

  const auto ex2 = example_two(q(1, 2));
  const AdmissibleM blocked = d_near_subnormal_scalar(ex2, q_diagonal_range(ex2, 11), 10);
  CHECK_FALSE(blocked.holds);
  CHECK(*blocked.blocking_index == 2);

  const std::vector<Rational> negative = {q(1), q(-1), q(1)};
  try {
    d_near_subnormal_scalar(w, negative, 2);
    FAIL("expected NegativeD");
  } catch (const ShiftError& e) {
    CHECK(e.kind() == ErrorKind::kNegativeD);
    CHECK(*e.index() == 2);
  }
  // No index constrains m when D vanishes from index 2 on.
  const std::vector<Rational> front = {q(1), q(0), q(0), q(0)};
  const AdmissibleM free = d_near_subnormal_scalar(w, front, 3);
  CHECK_FALSE(free.sup);
  CHECK(free.holds);
}

// Brute-force reading of the strict-then-constant criterion on an explicit
// list: once two neighbours are equal, every later neighbour pair is equal.
namespace {

bool equalities_upward_closed(const std::vector<Rational>& a) {
  bool seen_equal = false;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    const bool equal = a[k] == a[k + 1];
    if (seen_equal && !equal) return false;
    seen_equal = seen_equal || equal;
  }
  return true;
}

std::vector<Rational> expand(const WeightSequence& w, std::size_t extra) {
  return w.weights(w.prefix().size() + extra);
}

}  // namespace

TEST_CASE("property: near subnormal iff strict-then-constant, on constant tails") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightSequence w = wshift::testing::random_hyponormal_constant_tail(rng);
    const auto result = classify_near_subnormal(w);
    const bool oracle = equalities_upward_closed(expand(w, 5));
    REQUIRE(result.plateau);
    CHECK((result.plateau->kind == PlateauKind::kStrictThenConstant) == oracle);
    CHECK(result.verdict.grade == Grade::kProven);
    CHECK((result.verdict.answer == Answer::kYes) == oracle);
  }
}

TEST_CASE("property: kernel escape flags and kernel_invariance agree") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightSequence w = wshift::testing::random_hyponormal_constant_tail(rng);
    const std::size_t last = w.prefix().size() + 2;
    const auto ratios = ratio_sequence(w, last);
    std::optional<std::size_t> first_escape;
    for (std::size_t n = 1; n <= last && !first_escape; ++n) {
      if (ratios[n - 1].kernel_escape) first_escape = n;
    }
    const Verdict k = kernel_invariance(w);
    CHECK((k.answer == Answer::kNo) == first_escape.has_value());
    if (first_escape) CHECK(*k.witness == *first_escape);
  }
}

TEST_CASE("property: scalar reduction matches the ratio sequence") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightSequence w = wshift::testing::random_hyponormal_constant_tail(rng);
    const std::size_t last = w.prefix().size() + 3;
    const auto d = q_diagonal_range(w, last + 1);
    const auto ratios = ratio_sequence(w, last);
    const AdmissibleM m = d_near_subnormal_scalar(w, d, last);

    bool escape = false;
    Rational max_b2 = 0;
    for (const auto& r : ratios) {
      escape = escape || r.kernel_escape;
      if (r.value > max_b2) max_b2 = r.value;
    }
    CHECK(m.holds == !escape);
    if (m.holds && m.sup && max_b2 > 0) CHECK(*m.sup * max_b2 == 1);
    if (m.holds && max_b2 == 0) CHECK_FALSE(m.sup);
  }
}

TEST_CASE("property: proven verdicts do not change with the horizon") {
  std::mt19937_64 rng(11);
  const char* tails[] = {"1 - 1/(n+1)", "2 - 1/n", "3 - 1/n^2", "(2*n + 1)/(n + 1)"};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> prefix = wshift::testing::random_nondecreasing(rng, 3);
    for (auto& p : prefix) p = p / 100;  // keep the prefix below the tails
    const char* tail = tails[trial % 4];
    const WeightSequence small(prefix, ExpressionTail{Expression::parse(tail)}, 60);
    const WeightSequence large = small.with_horizon(600);
    const auto a = classify_near_subnormal(small);
    const auto b = classify_near_subnormal(large);
    if (a.verdict.grade == Grade::kProven) {
      CHECK(a.verdict.answer == b.verdict.answer);
      CHECK(b.verdict.grade == Grade::kProven);
    }
    if (a.hyponormal.grade == Grade::kProven) CHECK(a.hyponormal.answer == b.hyponormal.answer);
  }
}
