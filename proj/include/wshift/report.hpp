#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wshift/core.hpp"
#include "wshift/finsec.hpp"
#include "wshift/subnormal.hpp"
#include "wshift/weight_sequence.hpp"

namespace wshift {

using Json = nlohmann::ordered_json;

struct ClassifyOptions {
  std::size_t max_order = kDefaultMaxOrder;
  finsec::Mode mode = finsec::Mode::kExact;
  long double tol = 1e-10L;
  /// Overrides the horizon written in the spec.
  std::optional<std::size_t> horizon;
  /// Adds wall-clock milliseconds to the timing block. Off by default so
  /// that machine reports are byte-for-byte reproducible.
  bool wall_clock = false;
};

enum class ClassLabel {
  kNotHyponormal,
  kHyponormalNotNearSubnormal,
  kNearSubnormalNotSubnormal,
  kSubnormal,          // subnormal, proven
  kSubnormalEvidence,  // near subnormal, Hankel positivity holds to the tested order
  kUndetermined,
};

std::string_view to_string(ClassLabel label);

struct ClassificationReport {
  ClassificationReport(std::string input_text, WeightSequence w, ClassifyOptions opts)
      : input(std::move(input_text)), weights(std::move(w)), options(opts) {}

  std::string input;  // canonical spec text
  WeightSequence weights;
  ClassifyOptions options;

  Verdict hyponormal;
  Verdict near_subnormal;
  Verdict subnormal;

  NearSubnormalResult near_detail;
  SubnormalResult subnormal_detail;

  /// Admissible m for Q_S >= m S* Q_S S over [1, admissible_range_end].
  std::optional<AdmissibleM> admissible_m;
  std::size_t admissible_range_end = 0;

  ClassLabel label = ClassLabel::kUndetermined;
  double wall_ms = 0.0;
};

ClassificationReport classify(const WeightSequence& w, const ClassifyOptions& options = {});

ClassLabel label_of(const Verdict& hyponormal, const Verdict& near_subnormal,
                    const Verdict& subnormal);

/// subnormal => near subnormal => hyponormal, Unknown answers non-binding.
bool respects_class_inclusion(const ClassificationReport& report);

Json to_json(const ClassificationReport& report);
std::string to_table(const ClassificationReport& report);

/// Parses `spec` and classifies it.
ClassificationReport run_classify(std::string_view spec, const ClassifyOptions& options = {});

struct GalleryEntry {
  std::string name;
  std::string spec;
  std::string criterion;  // which classification result the entry instantiates
  ClassLabel expected;
};

const std::vector<GalleryEntry>& gallery_entries();

struct GalleryResult {
  GalleryEntry entry;
  ClassificationReport report;
  bool matches() const { return report.label == entry.expected; }
};

std::vector<GalleryResult> run_gallery(const ClassifyOptions& options = {});

Json to_json(const GalleryResult& result);

}  // namespace wshift
