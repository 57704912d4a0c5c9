#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace wshift {

enum class Answer { kYes, kNo, kUnknown };

// Proven: decided exactly, valid for the whole infinite sequence.
// Evidence: holds on the evaluated range or up to a tested order only.
enum class Grade { kProven, kEvidence };

struct Verdict {
  Answer answer = Answer::kUnknown;
  Grade grade = Grade::kEvidence;
  std::optional<std::size_t> witness;
  std::string note;

  static Verdict yes(Grade grade, std::string note = {}) {
    return {Answer::kYes, grade, std::nullopt, std::move(note)};
  }
  static Verdict no(Grade grade, std::optional<std::size_t> witness, std::string note = {}) {
    return {Answer::kNo, grade, witness, std::move(note)};
  }
  static Verdict unknown(std::string note = {}) {
    return {Answer::kUnknown, Grade::kEvidence, std::nullopt, std::move(note)};
  }

  bool proven_yes() const { return answer == Answer::kYes && grade == Grade::kProven; }
  bool proven_no() const { return answer == Answer::kNo && grade == Grade::kProven; }
};

std::string_view to_string(Answer answer);
std::string_view to_string(Grade grade);

}  // namespace wshift
