#include "wshift/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scan.hpp"
#include "wshift/error.hpp"

namespace wshift {

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::kYes: return "yes";
    case Answer::kNo: return "no";
    case Answer::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view to_string(Grade grade) {
  return grade == Grade::kProven ? "proven" : "evidence";
}

std::string_view to_string(PlateauKind kind) {
  switch (kind) {
    case PlateauKind::kStrictlyIncreasing: return "StrictlyIncreasing";
    case PlateauKind::kStrictThenConstant: return "StrictThenConstant";
    case PlateauKind::kEqualityThenIncrease: return "EqualityThenIncrease";
    case PlateauKind::kNotMonotone: return "NotMonotone";
    case PlateauKind::kUnknownBeyondHorizon: return "UnknownBeyondHorizon";
  }
  return "UnknownBeyondHorizon";
}

std::string_view to_string(SupGrade grade) {
  switch (grade) {
    case SupGrade::kProven: return "proven";
    case SupGrade::kEvidence: return "evidence";
    case SupGrade::kDiverges: return "diverges";
  }
  return "evidence";
}

namespace detail {

Scan scan(const WeightSequence& w) {
  Scan s;
  s.has_tail = w.has_tail();
  s.a = w.prefix();
  if (const auto* c = std::get_if<ConstantTail>(&w.tail())) {
    s.a.push_back(c->value);
    s.a.push_back(c->value);
    s.beyond = Beyond::kConstant;
  } else if (const auto* e = std::get_if<ExpressionTail>(&w.tail())) {
    const std::size_t last = w.horizon() + 2;
    s.a.reserve(last);
    for (std::size_t n = s.a.size() + 1; n <= last; ++n) s.a.push_back(w.weight(n));
    const TailCertificate cert =
        certify_tail(e->expr.as_rational_function(), Rational(static_cast<unsigned long>(last)),
                     e->expr.singular_guard());
    if (cert.positive) {
      switch (cert.trend) {
        case TailTrend::kConstant: s.beyond = Beyond::kConstant; break;
        case TailTrend::kStrictlyIncreasing: s.beyond = Beyond::kStrictlyIncreasing; break;
        case TailTrend::kStrictlyDecreasing: s.beyond = Beyond::kStrictlyDecreasing; break;
        case TailTrend::kUndecided: s.beyond = Beyond::kUnknown; break;
      }
    }
  }
  return s;
}

}  // namespace detail

namespace {

using detail::Beyond;
using detail::Scan;

std::vector<Rational> diagonal_of(const Scan& s) {
  std::vector<Rational> d(s.size());
  Rational previous_square = 0;  // a_0 = 0
  for (std::size_t k = 0; k < s.size(); ++k) {
    Rational square = s.a[k] * s.a[k];
    d[k] = square - previous_square;
    previous_square = std::move(square);
  }
  return d;
}

RatioEntry ratio_from(const Rational& a, const Rational& d_n, const Rational& d_next,
                      std::size_t n) {
  if (d_n < 0) {
    throw ShiftError(ErrorKind::kNotHyponormalAt,
                     "d_" + std::to_string(n) + " < 0: shift is not hyponormal", n);
  }
  if (d_next < 0) {
    throw ShiftError(ErrorKind::kNotHyponormalAt,
                     "d_" + std::to_string(n + 1) + " < 0: shift is not hyponormal", n + 1);
  }
  if (d_n == 0) return {Rational(0), d_next > 0};
  return {a * a * d_next / d_n, false};
}

std::vector<RatioEntry> ratios_of(const Scan& s, const std::vector<Rational>& d,
                                  std::size_t last) {
  std::vector<RatioEntry> out;
  out.reserve(last);
  for (std::size_t n = 1; n <= last; ++n) out.push_back(ratio_from(s.at(n), d[n - 1], d[n], n));
  return out;
}

Verdict hyponormal_of(const Scan& s) {
  for (std::size_t n = 1; n < s.size(); ++n) {
    if (s.at(n) > s.at(n + 1)) {
      return Verdict::no(Grade::kProven, n,
                         "a_" + std::to_string(n) + " > a_" + std::to_string(n + 1));
    }
  }
  switch (s.beyond) {
    case Beyond::kConstant:
    case Beyond::kStrictlyIncreasing:
      return Verdict::yes(Grade::kProven);
    case Beyond::kStrictlyDecreasing:
      return Verdict::no(Grade::kProven, s.size(),
                         "tail expression decreases from index " + std::to_string(s.size()));
    case Beyond::kUnknown:
      break;
  }
  return Verdict::unknown(s.has_tail
                              ? "nondecreasing through index " + std::to_string(s.size()) +
                                    "; tail monotonicity not certified beyond it"
                              : "nondecreasing on the prefix; no tail given");
}

void require_not_decreasing(const Scan& s, std::string_view op) {
  const Verdict h = hyponormal_of(s);
  if (h.answer == Answer::kNo) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     std::string(op) + " requires a hyponormal shift (" + h.note + ")",
                     h.witness);
  }
}

PlateauStructure plateau_of(const Scan& s) {
  for (std::size_t j = 1; j + 2 <= s.size(); ++j) {
    if (s.at(j) == s.at(j + 1) && s.at(j + 1) < s.at(j + 2)) {
      return {PlateauKind::kEqualityThenIncrease, j};
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.at(i) == s.at(i + 1)) {
      // No equality is followed by an increase, so a_i = a_n through the range.
      if (s.beyond == Beyond::kConstant) return {PlateauKind::kStrictThenConstant, i};
      return {PlateauKind::kUnknownBeyondHorizon, 0};
    }
  }
  if (s.beyond == Beyond::kStrictlyIncreasing) return {PlateauKind::kStrictlyIncreasing, 0};
  return {PlateauKind::kUnknownBeyondHorizon, 0};
}

bool strictly_increasing_range(const Scan& s) {
  for (std::size_t n = 1; n < s.size(); ++n) {
    if (!(s.at(n) < s.at(n + 1))) return false;
  }
  return true;
}

SupAnalysis sup_of(const WeightSequence& w, const Scan& s, const PlateauStructure& plateau) {
  const bool open_but_strict =
      plateau.kind == PlateauKind::kUnknownBeyondHorizon && strictly_increasing_range(s);
  if (plateau.kind != PlateauKind::kStrictThenConstant &&
      plateau.kind != PlateauKind::kStrictlyIncreasing && !open_but_strict) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "sup analysis requires strictly increasing or strict-then-constant "
                     "weights, got " + std::string(to_string(plateau.kind)));
  }
  const auto d = diagonal_of(s);
  const std::size_t last =
      plateau.kind == PlateauKind::kStrictThenConstant ? plateau.index : s.size() - 1;
  const auto ratios = ratios_of(s, d, last);

  SupAnalysis out;
  out.evaluated_to = last;
  out.estimate = 0;
  std::vector<Rational> values;
  values.reserve(ratios.size());
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    if (ratios[k].value > out.estimate) {
      out.estimate = ratios[k].value;
      out.argmax = k + 1;
    }
    values.push_back(ratios[k].value);
  }

  if (plateau.kind == PlateauKind::kStrictThenConstant) {
    // Every b_n^2 past the plateau index is zero.
    out.grade = SupGrade::kProven;
    return out;
  }
  const TrendResult trend = classify_trend(values);
  out.last_decade_growth = trend.last_decade_growth;
  if (plateau.kind == PlateauKind::kStrictlyIncreasing) {
    // Certified strictly increasing rational tail f: d_{n+1}/d_n -> 1 and
    // a_n -> lim f, so b_n^2 converges to (lim f)^2 and the sup is finite.
    const auto& tail = std::get<ExpressionTail>(w.tail());
    const Rational lim = tail.expr.as_rational_function().limit_at_infinity();
    out.limit = lim * lim;
    if (*out.limit > out.estimate) out.estimate = *out.limit;
    out.grade = SupGrade::kProven;
    return out;
  }
  out.grade = trend.grade;
  return out;
}

Verdict kernel_of(const Scan& s) {
  const auto d = diagonal_of(s);
  for (std::size_t n = 1; n < s.size(); ++n) {
    if (d[n - 1] == 0 && d[n] > 0) {
      return Verdict::no(Grade::kProven, n,
                         "d_" + std::to_string(n) + " = 0 but d_" + std::to_string(n + 1) +
                             " > 0: S e_" + std::to_string(n) + " leaves the kernel of Q_S");
    }
  }
  if (s.beyond == Beyond::kConstant || s.beyond == Beyond::kStrictlyIncreasing) {
    return Verdict::yes(Grade::kProven);
  }
  return Verdict::unknown("zero set of d upward closed through index " +
                          std::to_string(s.size()));
}

}  // namespace

Rational q_diagonal(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw ShiftError(ErrorKind::kDomain, "indices start at 1");
  const Rational a = w.weight(n);
  const Rational prev = w.weight(n - 1);
  return a * a - prev * prev;
}

std::vector<Rational> q_diagonal_range(const WeightSequence& w, std::size_t last) {
  Scan s;
  s.a = w.weights(last);
  return diagonal_of(s);
}

RatioEntry ratio_squared(const WeightSequence& w, std::size_t n) {
  if (n == 0) throw ShiftError(ErrorKind::kDomain, "indices start at 1");
  return ratio_from(w.weight(n), q_diagonal(w, n), q_diagonal(w, n + 1), n);
}

std::vector<RatioEntry> ratio_sequence(const WeightSequence& w, std::size_t last) {
  Scan s;
  s.a = w.weights(last + 1);
  return ratios_of(s, diagonal_of(s), last);
}

long double ratio_display(const RatioEntry& entry) {
  return std::sqrt(to_long_double(entry.value));
}

Verdict is_hyponormal(const WeightSequence& w) {
  try {
    return hyponormal_of(detail::scan(w));
  } catch (const ShiftError& e) {
    return Verdict::unknown(e.what());
  }
}

PlateauStructure plateau_structure(const WeightSequence& w) {
  const Scan s = detail::scan(w);
  require_not_decreasing(s, "plateau_structure");
  return plateau_of(s);
}

SupAnalysis sup_analysis(const WeightSequence& w) {
  const Scan s = detail::scan(w);
  require_not_decreasing(s, "sup_analysis");
  return sup_of(w, s, plateau_of(s));
}

TrendResult classify_trend(std::span<const Rational> ratio_squares) {
  std::vector<Rational> maxima;
  std::size_t begin = 1;
  std::size_t end = 10;
  while (begin <= ratio_squares.size()) {
    Rational best = 0;
    for (std::size_t n = begin; n < end && n <= ratio_squares.size(); ++n) {
      if (ratio_squares[n - 1] > best) best = ratio_squares[n - 1];
    }
    maxima.push_back(best);
    begin = end;
    end *= 10;
  }
  TrendResult out;
  const std::size_t k = maxima.size();
  if (k >= 2 && maxima[k - 2] > 0) {
    out.last_decade_growth = to_long_double(maxima[k - 1] / maxima[k - 2]);
  }
  if (k >= 3 && maxima[k - 3] < maxima[k - 2] && maxima[k - 2] < maxima[k - 1] &&
      maxima[k - 1] > maxima[0] * Rational(kDivergenceFactor)) {
    out.grade = SupGrade::kDiverges;
  }
  return out;
}

Verdict kernel_invariance(const WeightSequence& w) {
  const Scan s = detail::scan(w);
  require_not_decreasing(s, "kernel_invariance");
  return kernel_of(s);
}

NearSubnormalResult classify_near_subnormal(const WeightSequence& w) {
  NearSubnormalResult out;
  try {
    const Scan s = detail::scan(w);
    out.hyponormal = hyponormal_of(s);
    if (out.hyponormal.answer == Answer::kNo) {
      out.plateau = PlateauStructure{PlateauKind::kNotMonotone, *out.hyponormal.witness};
      out.verdict = Verdict::no(Grade::kProven, out.hyponormal.witness,
                                "not hyponormal, hence not near subnormal");
      return out;
    }
    out.plateau = plateau_of(s);
    out.kernel = kernel_of(s);
    const PlateauStructure& plateau = *out.plateau;
    switch (plateau.kind) {
      case PlateauKind::kStrictThenConstant:
        out.sup = sup_of(w, s, plateau);
        out.verdict = Verdict::yes(Grade::kProven,
                                   "strictly increasing up to index " +
                                       std::to_string(plateau.index) + ", then constant");
        break;
      case PlateauKind::kEqualityThenIncrease:
        out.verdict = Verdict::no(Grade::kProven, out.kernel->witness,
                                  "a_" + std::to_string(plateau.index) + " = a_" +
                                      std::to_string(plateau.index + 1) +
                                      " is followed by a strict increase");
        break;
      case PlateauKind::kStrictlyIncreasing:
        out.sup = sup_of(w, s, plateau);
        if (out.sup->grade == SupGrade::kProven) {
          out.verdict = Verdict::yes(Grade::kProven, "sup of b_n^2 is finite");
        } else if (out.sup->grade == SupGrade::kDiverges) {
          out.verdict = Verdict::no(Grade::kEvidence, std::nullopt, "b_n^2 grows without bound");
        } else {
          out.verdict = Verdict::yes(Grade::kEvidence, "b_n^2 bounded over the horizon");
        }
        break;
      case PlateauKind::kNotMonotone:
      case PlateauKind::kUnknownBeyondHorizon:
        if (strictly_increasing_range(s)) {
          out.sup = sup_of(w, s, plateau);
          if (out.sup->grade == SupGrade::kDiverges) {
            out.verdict =
                Verdict::no(Grade::kEvidence, std::nullopt, "b_n^2 grows without bound");
            break;
          }
        }
        out.verdict = Verdict::unknown("weight pattern not decided beyond index " +
                                       std::to_string(s.size()));
        break;
    }
  } catch (const ShiftError& e) {
    out.verdict = Verdict::unknown(e.what());
  }
  return out;
}

AdmissibleM d_near_subnormal_scalar(const WeightSequence& w, std::span<const Rational> d,
                                    std::size_t last) {
  if (last > w.evaluable_end()) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "range end " + std::to_string(last) + " exceeds the evaluable range " +
                         std::to_string(w.evaluable_end()));
  }
  if (d.size() < last + 1) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "diagonal must provide D_1 .. D_" + std::to_string(last + 1));
  }
  for (std::size_t n = 1; n <= last + 1; ++n) {
    if (d[n - 1] < 0) {
      throw ShiftError(ErrorKind::kNegativeD, "D_" + std::to_string(n) + " is negative", n);
    }
  }
  AdmissibleM out;
  for (std::size_t n = 1; n <= last; ++n) {
    const Rational a = w.weight(n);
    const Rational load = a * a * d[n];
    if (load == 0) continue;
    const Rational bound = d[n - 1] / load;
    if (bound == 0 && !out.blocking_index) out.blocking_index = n;
    if (!out.sup || bound < *out.sup) out.sup = bound;
  }
  out.holds = !out.blocking_index;
  return out;
}

}  // namespace wshift
