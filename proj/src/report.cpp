#include "wshift/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "wshift/dsl.hpp"
#include "wshift/error.hpp"

namespace wshift {

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::kNotHyponormal: return "NotHyponormal";
    case ClassLabel::kHyponormalNotNearSubnormal: return "HyponormalNotNearSubnormal";
    case ClassLabel::kNearSubnormalNotSubnormal: return "NearSubnormalNotSubnormal";
    case ClassLabel::kSubnormal: return "Subnormal";
    case ClassLabel::kSubnormalEvidence: return "SubnormalEvidence";
    case ClassLabel::kUndetermined: return "Undetermined";
  }
  return "Undetermined";
}

ClassLabel label_of(const Verdict& hyponormal, const Verdict& near_subnormal,
                    const Verdict& subnormal) {
  if (hyponormal.answer == Answer::kNo) return ClassLabel::kNotHyponormal;
  if (near_subnormal.answer == Answer::kNo) return ClassLabel::kHyponormalNotNearSubnormal;
  if (near_subnormal.answer != Answer::kYes) return ClassLabel::kUndetermined;
  if (subnormal.answer == Answer::kNo) return ClassLabel::kNearSubnormalNotSubnormal;
  if (subnormal.answer == Answer::kYes) {
    return subnormal.grade == Grade::kProven ? ClassLabel::kSubnormal
                                             : ClassLabel::kSubnormalEvidence;
  }
  return ClassLabel::kUndetermined;
}

bool respects_class_inclusion(const ClassificationReport& r) {
  const auto implies = [](const Verdict& smaller, const Verdict& larger) {
    return !(smaller.answer == Answer::kYes && larger.answer == Answer::kNo);
  };
  return implies(r.subnormal, r.near_subnormal) && implies(r.near_subnormal, r.hyponormal) &&
         implies(r.subnormal, r.hyponormal);
}

namespace {

// Range on which Q_S >= m S* Q_S S is evaluated for the report.
std::optional<std::size_t> admissible_range(const WeightSequence& w,
                                            const NearSubnormalResult& near) {
  if (near.plateau && near.plateau->kind == PlateauKind::kStrictThenConstant) {
    return near.plateau->index;  // d vanishes past the plateau
  }
  const std::size_t end = w.evaluable_end();
  if (!w.has_tail()) return end >= 2 ? std::optional(end - 1) : std::nullopt;
  return end;
}

}  // namespace

ClassificationReport classify(const WeightSequence& input, const ClassifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const WeightSequence w = options.horizon ? input.with_horizon(*options.horizon) : input;
  ClassificationReport report{print_spec(w), w, options};

  report.near_detail = classify_near_subnormal(w);
  report.subnormal_detail = classify_subnormal(w, options.max_order, options.mode, options.tol);
  report.hyponormal = report.near_detail.hyponormal;
  report.near_subnormal = report.near_detail.verdict;
  report.subnormal = report.subnormal_detail.verdict;

  if (report.hyponormal.answer != Answer::kNo) {
    if (auto last = admissible_range(w, report.near_detail)) {
      try {
        const std::vector<Rational> d = q_diagonal_range(w, *last + 1);
        report.admissible_m = d_near_subnormal_scalar(w, d, *last);
        report.admissible_range_end = *last;
      } catch (const ShiftError&) {
        report.admissible_m.reset();
      }
    }
  }
  report.label = label_of(report.hyponormal, report.near_subnormal, report.subnormal);
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

ClassificationReport run_classify(std::string_view spec, const ClassifyOptions& options) {
  return classify(parse_spec(spec), options);
}

namespace {

Json tail_json(const Tail& tail) {
  if (const auto* c = std::get_if<ConstantTail>(&tail)) {
    return Json{{"kind", "const"}, {"value", to_string(c->value)}};
  }
  if (const auto* e = std::get_if<ExpressionTail>(&tail)) {
    return Json{{"kind", "expr"}, {"expression", e->expr.to_string()}};
  }
  return Json{{"kind", "none"}};
}

Json verdict_json(const Verdict& v) {
  Json out{{"answer", to_string(v.answer)}, {"grade", to_string(v.grade)}};
  out["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json rational_json(const Rational& r) {
  return Json{{"exact", to_string(r)}, {"approx", static_cast<double>(to_long_double(r))}};
}

std::string mode_name(finsec::Mode mode) {
  return mode == finsec::Mode::kExact ? "exact" : "real";
}

std::string format_tol(long double tol) {
  std::ostringstream os;
  os << std::setprecision(6) << static_cast<double>(tol);
  return os.str();
}

}  // namespace

Json to_json(const ClassificationReport& r) {
  Json input{{"spec", r.input}};
  Json prefix = Json::array();
  for (const auto& a : r.weights.prefix()) prefix.push_back(to_string(a));
  input["prefix"] = prefix;
  input["tail"] = tail_json(r.weights.tail());

  Json out;
  out["input"] = input;
  out["mode"] = mode_name(r.options.mode);
  out["horizon"] = r.weights.horizon();
  out["max_order"] = r.options.max_order;
  out["tol"] = format_tol(r.options.tol);
  out["verdicts"] = Json{{"hyponormal", verdict_json(r.hyponormal)},
                         {"near_subnormal", verdict_json(r.near_subnormal)},
                         {"subnormal", verdict_json(r.subnormal)}};
  out["label"] = to_string(r.label);

  Json witnesses;
  if (const auto& p = r.near_detail.plateau) {
    witnesses["plateau"] = Json{{"kind", to_string(p->kind)},
                                {"index", p->index == 0 ? Json(nullptr) : Json(p->index)}};
  } else {
    witnesses["plateau"] = nullptr;
  }
  if (const auto& k = r.near_detail.kernel) {
    witnesses["kernel_invariance"] = verdict_json(*k);
  } else {
    witnesses["kernel_invariance"] = nullptr;
  }
  if (const auto& s = r.near_detail.sup) {
    Json sup{{"estimate", rational_json(s->estimate)},
             {"grade", to_string(s->grade)},
             {"argmax", s->argmax},
             {"evaluated_to", s->evaluated_to}};
    sup["limit"] = s->limit ? rational_json(*s->limit) : Json(nullptr);
    sup["last_decade_growth"] =
        s->last_decade_growth ? Json(*s->last_decade_growth) : Json(nullptr);
    witnesses["sup_ratio_squared"] = sup;
  } else {
    witnesses["sup_ratio_squared"] = nullptr;
  }
  if (const auto& h = r.subnormal_detail.hankel) {
    Json hankel{{"refuted", h->refuted},
                {"grade", to_string(h->grade)},
                {"tested_order", h->tested_order}};
    if (h->refuted) {
      hankel["failing_order"] = *h->failing_order;
      hankel["failing_matrix"] = std::string(1, h->failing_matrix);
      hankel["witness"] = r.options.mode == finsec::Mode::kExact
                              ? rational_json(h->witness)
                              : Json{{"approx", static_cast<double>(h->real_witness)}};
    }
    witnesses["hankel"] = hankel;
  } else {
    witnesses["hankel"] = nullptr;
  }
  witnesses["subnormal_basis"] = r.subnormal_detail.basis;
  if (r.admissible_m) {
    const AdmissibleM& m = *r.admissible_m;
    Json interval{{"range", Json::array({1, r.admissible_range_end})}, {"holds", m.holds}};
    interval["lower_exclusive"] = "0";
    interval["upper"] = m.sup ? Json(to_string(*m.sup)) : Json("infinity");
    interval["blocking_index"] = m.blocking_index ? Json(*m.blocking_index) : Json(nullptr);
    witnesses["admissible_m"] = interval;
  } else {
    witnesses["admissible_m"] = nullptr;
  }
  out["witnesses"] = witnesses;

  Json timing{{"evaluated_to", r.near_detail.sup ? r.near_detail.sup->evaluated_to : 0},
              {"hankel_orders_tested",
               r.subnormal_detail.hankel ? r.subnormal_detail.hankel->tested_order : 0}};
  if (r.options.wall_clock) timing["wall_ms"] = r.wall_ms;
  out["timing"] = timing;
  return out;
}

std::string to_table(const ClassificationReport& r) {
  std::ostringstream os;
  os << "input    " << r.input << '\n'
     << "mode     " << mode_name(r.options.mode) << "   horizon " << r.weights.horizon()
     << "   max-order " << r.options.max_order << '\n'
     << '\n';
  os << std::left << std::setw(16) << "property" << std::setw(10) << "answer" << std::setw(10)
     << "grade" << std::setw(9) << "witness" << "note" << '\n';
  const auto row = [&](std::string_view name, const Verdict& v) {
    os << std::left << std::setw(16) << name << std::setw(10) << to_string(v.answer)
       << std::setw(10) << to_string(v.grade) << std::setw(9)
       << (v.witness ? std::to_string(*v.witness) : std::string("-")) << v.note << '\n';
  };
  row("hyponormal", r.hyponormal);
  row("near subnormal", r.near_subnormal);
  row("subnormal", r.subnormal);
  os << '\n' << "label    " << to_string(r.label) << '\n';
  if (const auto& p = r.near_detail.plateau) {
    os << "plateau  " << to_string(p->kind);
    if (p->index != 0) os << " (index " << p->index << ')';
    os << '\n';
  }
  if (const auto& s = r.near_detail.sup) {
    os << "sup b^2  " << to_string(s->estimate) << " (" << to_string(s->grade) << ", n <= "
       << s->evaluated_to << ")\n";
  }
  if (r.admissible_m) {
    os << "m range  (0, " << (r.admissible_m->sup ? to_string(*r.admissible_m->sup) : "inf")
       << "] on [1, " << r.admissible_range_end << "]"
       << (r.admissible_m->holds ? "" : "  -- no admissible m") << '\n';
  }
  return os.str();
}

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"example1(1,2,3)", "prefix=[1, 2]; tail=const(3)",
       "plateau index 3: near subnormal but not subnormal",
       ClassLabel::kNearSubnormalNotSubnormal},
      {"example1(1/2,1,2)", "prefix=[1/2, 1]; tail=const(2)",
       "plateau index 3: near subnormal but not subnormal",
       ClassLabel::kNearSubnormalNotSubnormal},
      {"example1(2,3,5)", "prefix=[2, 3]; tail=const(5)",
       "plateau index 3: near subnormal but not subnormal",
       ClassLabel::kNearSubnormalNotSubnormal},
      {"example2(1/4)", "prefix=[1/4, 1/4]; tail=expr(1 - 1/(n + 1))",
       "equality followed by an increase: hyponormal but not near subnormal",
       ClassLabel::kHyponormalNotNearSubnormal},
      {"example2(1/2)", "prefix=[1/2, 1/2]; tail=expr(1 - 1/(n + 1))",
       "equality followed by an increase: hyponormal but not near subnormal",
       ClassLabel::kHyponormalNotNearSubnormal},
      {"example2(7/10)", "prefix=[7/10, 7/10]; tail=expr(1 - 1/(n + 1))",
       "equality followed by an increase: hyponormal but not near subnormal",
       ClassLabel::kHyponormalNotNearSubnormal},
      {"isometry", "prefix=[1]; tail=const(1)",
       "plateau index 1: subnormal", ClassLabel::kSubnormal},
      {"plateau2(1,2)", "prefix=[1]; tail=const(2)",
       "plateau index 2: subnormal", ClassLabel::kSubnormal},
      {"increasing(n/(n+1))", "prefix=[1/2]; tail=expr(1 - 1/(n + 1))",
       "strictly increasing with bounded transformed weights: near subnormal",
       ClassLabel::kSubnormalEvidence},
  };
  return entries;
}

std::vector<GalleryResult> run_gallery(const ClassifyOptions& options) {
  std::vector<GalleryResult> out;
  for (const auto& entry : gallery_entries()) {
    out.push_back({entry, run_classify(entry.spec, options)});
  }
  return out;
}

Json to_json(const GalleryResult& result) {
  return Json{{"name", result.entry.name},
              {"criterion", result.entry.criterion},
              {"expected", to_string(result.entry.expected)},
              {"matches", result.matches()},
              {"report", to_json(result.report)}};
}

}  // namespace wshift
