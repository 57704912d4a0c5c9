#include "wshift/subnormal.hpp"

#include <algorithm>
#include <string>

#include "wshift/core.hpp"
#include "wshift/error.hpp"

namespace wshift {

MomentSequence moments(const WeightSequence& w, std::size_t up_to) {
  if (up_to > w.evaluable_end()) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "moments requested up to " + std::to_string(up_to) +
                         " beyond the evaluable range " + std::to_string(w.evaluable_end()));
  }
  MomentSequence m;
  m.beta.reserve(up_to + 1);
  m.beta.emplace_back(1);
  for (std::size_t n = 1; n <= up_to; ++n) {
    const Rational a = w.weight(n);
    m.beta.push_back(m.beta.back() * a * a);
  }
  return m;
}

HankelPair hankel_pair(const MomentSequence& m, std::size_t order) {
  if (2 * order + 1 > m.last_index()) {
    throw ShiftError(ErrorKind::kPreconditionViolation,
                     "Hankel order " + std::to_string(order) + " needs moments up to " +
                         std::to_string(2 * order + 1));
  }
  HankelPair pair{order, finsec::SectionMatrix(order + 1), finsec::SectionMatrix(order + 1)};
  for (std::size_t i = 0; i <= order; ++i) {
    for (std::size_t j = 0; j <= order; ++j) {
      pair.a(i + 1, j + 1) = m.beta[i + j];
      pair.b(i + 1, j + 1) = m.beta[i + j + 1];
    }
  }
  return pair;
}

HankelResult hankel_necessary_check(const WeightSequence& w, std::size_t max_order,
                                    finsec::Mode mode, long double tol) {
  if (max_order < 1) {
    throw ShiftError(ErrorKind::kPreconditionViolation, "Hankel max order must be at least 1");
  }
  const std::size_t end = w.evaluable_end();
  const std::size_t usable = end >= 3 ? (end - 1) / 2 : 0;
  const std::size_t top = std::min(max_order, usable);

  HankelResult out;
  if (top == 0) return out;
  const MomentSequence m = moments(w, 2 * top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    const HankelPair pair = hankel_pair(m, k);
    out.tested_order = k;
    for (const auto& [matrix, name] : {std::pair{&pair.a, 'A'}, std::pair{&pair.b, 'B'}}) {
      const finsec::PsdResult psd = finsec::psd_check(*matrix, mode, tol);
      if (!psd.psd) {
        out.refuted = true;
        out.grade = mode == finsec::Mode::kExact ? Grade::kProven : Grade::kEvidence;
        out.failing_order = k;
        out.failing_matrix = name;
        out.witness = psd.witness;
        out.real_witness = psd.real_witness;
        return out;
      }
    }
  }
  return out;
}

SubnormalResult classify_subnormal(const WeightSequence& w, std::size_t max_order,
                                   finsec::Mode mode, long double tol) {
  SubnormalResult out;
  const NearSubnormalResult near = classify_near_subnormal(w);
  try {
    out.hankel = hankel_necessary_check(w, max_order, mode, tol);
  } catch (const ShiftError& e) {
    out.basis = std::string("Hankel check failed: ") + e.what();
  }
  const HankelResult* hankel = out.hankel ? &*out.hankel : nullptr;
  const auto hankel_refutation = [&](const std::string& prefix) {
    out.verdict = Verdict::no(hankel->grade, hankel->failing_order,
                              prefix + "Hankel matrix " + hankel->failing_matrix + "(" +
                                  std::to_string(*hankel->failing_order) +
                                  ") is not positive semidefinite");
  };

  if (near.hyponormal.answer == Answer::kNo) {
    out.basis = "not hyponormal";
    out.verdict = Verdict::no(Grade::kProven, near.hyponormal.witness, out.basis);
    return out;
  }
  if (near.plateau && near.plateau->kind == PlateauKind::kStrictThenConstant) {
    const std::size_t i = near.plateau->index;
    out.plateau_index = i;
    if (i <= 2) {
      out.basis = "strictly increasing then constant from plateau index " + std::to_string(i) +
                  " <= 2";
      out.verdict = Verdict::yes(Grade::kProven, out.basis);
    } else {
      out.basis = "strictly increasing then constant from plateau index " + std::to_string(i) +
                  " >= 3";
      out.verdict = Verdict::no(Grade::kProven, i, out.basis);
    }
    return out;
  }
  if (hankel && hankel->refuted && hankel->grade == Grade::kProven) {
    out.basis = "Hankel positivity fails";
    hankel_refutation("");
    return out;
  }
  if (near.verdict.answer == Answer::kNo) {
    out.basis = "not near subnormal";
    out.verdict = Verdict::no(near.verdict.grade, near.verdict.witness,
                              "not near subnormal, hence not subnormal");
    return out;
  }
  if (hankel && hankel->refuted) {
    out.basis = "Hankel positivity fails (tolerance-based)";
    hankel_refutation("");
    return out;
  }
  if (!hankel || hankel->tested_order == 0) {
    if (out.basis.empty()) out.basis = "too few weights for a Hankel test";
    out.verdict = Verdict::unknown(out.basis);
    return out;
  }
  out.basis = "Hankel pair positive semidefinite through order " +
              std::to_string(hankel->tested_order);
  if (near.verdict.answer == Answer::kYes) {
    out.verdict = Verdict::yes(Grade::kEvidence, out.basis);
  } else {
    out.verdict = Verdict::unknown(out.basis);
  }
  return out;
}

}  // namespace wshift
