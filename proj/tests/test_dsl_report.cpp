#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wshift/dsl.hpp"
#include "wshift/error.hpp"
#include "wshift/expression.hpp"
#include "wshift/report.hpp"

using namespace wshift;
using wshift::testing::q;

namespace {

std::size_t parse_error_position(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const ShiftError& e) {
    if (e.kind() == ErrorKind::kParse && e.index()) return *e.index();
    return static_cast<std::size_t>(-2);
  }
  return static_cast<std::size_t>(-1);
}

ErrorKind error_kind(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const ShiftError& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::kDomain;
}

}  // namespace

TEST_CASE("parse_spec") {
  const WeightSequence ex1 = parse_spec("prefix=[1,2]; tail=const(3)");
  CHECK(ex1.weights(5) == std::vector<Rational>{q(1), q(2), q(3), q(3), q(3)});

  const WeightSequence ex2 = parse_spec("prefix=[1/2,1/2]; tail=expr(1 - 1/(n+1))");
  CHECK(ex2.weights(4) == std::vector<Rational>{q(1, 2), q(1, 2), q(3, 4), q(4, 5)});

  const WeightSequence single = parse_spec("prefix=[1]");
  CHECK_FALSE(single.has_tail());
  CHECK(single.prefix() == std::vector<Rational>{q(1)});

  const WeightSequence spaced = parse_spec("  prefix = [ 0.75 , 3/4 ] ; tail = const( 1.5 ) ; horizon = 40 ");
  CHECK(spaced.prefix() == std::vector<Rational>{q(3, 4), q(3, 4)});
  CHECK(spaced.weight(3) == q(3, 2));
  CHECK(spaced.horizon() == 40);
}

TEST_CASE("parse_spec errors") {
  CHECK(parse_error_position("prefix=[1,,2]") == 10);
  CHECK(parse_error_position("prefx=[1]") == 0);
  CHECK(parse_error_position("prefix=[1]; tail=sin(n)") == 17);
  CHECK(parse_error_position("prefix=[1]; tail=expr(1 + * n)") == 26);
  CHECK(parse_error_position("prefix=[1]; tail=expr(1 - 1/(n+1)") != static_cast<std::size_t>(-1));
  CHECK(parse_error_position("prefix=[1] trailing") == 11);

  CHECK(error_kind("prefix=[1, 0]") == ErrorKind::kDomain);
  CHECK(error_kind("prefix=[-1]") == ErrorKind::kDomain);
  CHECK(error_kind("prefix=[1]; tail=const(0)") == ErrorKind::kDomain);
  CHECK(error_kind("prefix=[1/0]") == ErrorKind::kParse);
}

TEST_CASE("print_spec") {
  CHECK(print_spec(parse_spec("prefix=[1,2]; tail=const(3)")) == "prefix=[1, 2]; tail=const(3)");
  CHECK(print_spec(parse_spec("prefix=[0.5]; horizon=300")) == "prefix=[1/2]; horizon=300");
  CHECK(print_spec(parse_spec("prefix=[1]; tail=expr(1-1/(n+1))")) ==
        "prefix=[1]; tail=expr(1 - 1/(n + 1))");
}

TEST_CASE("property: print then parse round-trips") {
  std::mt19937_64 rng(2026);
  const char* tails[] = {"1 - 1/(n+1)", "2 - 1/n^2", "(3*n + 0.25)/(n + 7)", "5/3"};
  std::uniform_int_distribution<int> tail_kind(0, 2);
  std::uniform_int_distribution<std::size_t> horizon(8, 20'000);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rational> prefix = wshift::testing::random_nondecreasing(rng, 6, 0.3);
    Tail tail = NoTail{};
    switch (tail_kind(rng)) {
      case 1: tail = ConstantTail{wshift::testing::random_positive(rng)}; break;
      case 2: tail = ExpressionTail{Expression::parse(tails[trial % 4])}; break;
      default: break;
    }
    const WeightSequence w(prefix, tail, horizon(rng));
    const std::string text = print_spec(w);
    const WeightSequence back = parse_spec(text);
    CHECK(back == w);
    CHECK(print_spec(back) == text);
  }
}

TEST_CASE("run_classify") {
  const ClassificationReport ex1 = run_classify("prefix=[1,2]; tail=const(3)");
  CHECK(ex1.hyponormal.answer == Answer::kYes);
  CHECK(ex1.near_subnormal.proven_yes());
  CHECK(ex1.subnormal.proven_no());
  CHECK(ex1.label == ClassLabel::kNearSubnormalNotSubnormal);

  const ClassificationReport ex2 = run_classify("prefix=[1/2,1/2]; tail=expr(1 - 1/(n+1))");
  CHECK(ex2.hyponormal.answer == Answer::kYes);
  CHECK(ex2.near_subnormal.proven_no());
  CHECK(*ex2.near_subnormal.witness == 2);
  CHECK(ex2.subnormal.proven_no());
  CHECK(ex2.label == ClassLabel::kHyponormalNotNearSubnormal);

  const ClassificationReport iso = run_classify("prefix=[1]; tail=const(1)");
  CHECK(iso.hyponormal.proven_yes());
  CHECK(iso.near_subnormal.proven_yes());
  CHECK(iso.subnormal.proven_yes());
  CHECK(iso.label == ClassLabel::kSubnormal);

  const ClassificationReport open = run_classify("prefix=[1, 2, 3]");
  CHECK(open.near_subnormal.answer == Answer::kUnknown);
  CHECK(respects_class_inclusion(open));
}

TEST_CASE("gallery validates itself") {
  const auto results = run_gallery();
  CHECK(results.size() == 9);
  for (const auto& r : results) {
    INFO(r.entry.name);
    CHECK(r.matches());
    CHECK(respects_class_inclusion(r.report));
    CHECK_FALSE(r.entry.criterion.empty());
  }
}

TEST_CASE("machine report schema and determinism") {
  const std::string spec = "prefix=[1/2,1/2]; tail=expr(1 - 1/(n+1))";
  const Json first = to_json(run_classify(spec));
  const Json second = to_json(run_classify(spec));
  CHECK(first.dump() == second.dump());

  for (const char* key : {"input", "mode", "horizon", "max_order", "tol", "verdicts", "label",
                          "witnesses", "timing"}) {
    CHECK(first.contains(key));
  }
  CHECK_FALSE(first["timing"].contains("wall_ms"));
  for (const char* v : {"hyponormal", "near_subnormal", "subnormal"}) {
    CHECK(first["verdicts"][v].contains("answer"));
    CHECK(first["verdicts"][v].contains("grade"));
  }
  CHECK(first["verdicts"]["near_subnormal"]["witness"] == 2);
  CHECK(first["mode"] == "exact");

  ClassifyOptions timed;
  timed.wall_clock = true;
  CHECK(to_json(run_classify(spec, timed))["timing"].contains("wall_ms"));

  const std::string table = to_table(run_classify(spec));
  CHECK(table.find("near subnormal") != std::string::npos);
}
