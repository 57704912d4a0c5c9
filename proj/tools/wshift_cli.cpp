/*
  wshift: classify unilateral weighted shifts.

  Subcommands
  -----------
    classify SPEC    hyponormal / near subnormal / subnormal verdicts
    ratios SPEC      d_n, b_n^2 and kernel-escape flags over an index range
    moments SPEC     beta_0 .. beta_K
    hankel SPEC      Stieltjes positivity of the Hankel pairs A(k), B(k)
    def1 SPEC        D >= m S*DS for diagonal D (default D = Q_S)
    gallery          built-in corpus of hyponormal-not-subnormal examples

  Exit codes
  ----------
    0  success, whatever the verdict (Unknown included)
    2  parse or domain error in the input
    3  internal error
*/

#include <chrono>
#include <exception>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wshift/core.hpp"
#include "wshift/dsl.hpp"
#include "wshift/error.hpp"
#include "wshift/finsec.hpp"
#include "wshift/report.hpp"
#include "wshift/subnormal.hpp"

namespace {

using wshift::Json;
using wshift::Rational;

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3 };

struct CommonFlags {
  std::optional<std::size_t> horizon;
  std::size_t max_order = wshift::kDefaultMaxOrder;
  std::string mode = "exact";
  double tol = 1e-10;
  std::string format = "json";
  bool wall_clock = false;
};

wshift::ClassifyOptions options_from(const CommonFlags& f) {
  wshift::ClassifyOptions o;
  o.horizon = f.horizon;
  o.max_order = f.max_order;
  o.mode = f.mode == "real" ? wshift::finsec::Mode::kReal : wshift::finsec::Mode::kExact;
  o.tol = f.tol;
  o.wall_clock = f.wall_clock;
  return o;
}

wshift::WeightSequence load(const std::string& spec, const CommonFlags& f) {
  wshift::WeightSequence w = wshift::parse_spec(spec);
  return f.horizon ? w.with_horizon(*f.horizon) : w;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

Json rational_json(const Rational& r) { return wshift::to_string(r); }

std::vector<Rational> parse_list(const std::string& text) {
  std::string body = text;
  const auto open = body.find('[');
  const auto close = body.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw wshift::ShiftError(wshift::ErrorKind::kParse, "diagonal list must look like [d1, d2, ...]");
  }
  body = body.substr(open + 1, close - open - 1);
  std::vector<Rational> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    const std::string token =
        first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    auto value = wshift::parse_rational(token);
    if (!value) {
      throw wshift::ShiftError(wshift::ErrorKind::kParse, "bad diagonal entry '" + token + "'");
    }
    out.push_back(*value);
  }
  return out;
}

int cmd_classify(const std::string& spec, const CommonFlags& f) {
  const auto report = wshift::classify(wshift::parse_spec(spec), options_from(f));
  if (f.format == "table") {
    std::cout << wshift::to_table(report);
  } else {
    emit(wshift::to_json(report));
  }
  return kOk;
}

int cmd_ratios(const std::string& spec, const CommonFlags& f, std::size_t from, std::size_t to) {
  const auto w = load(spec, f);
  if (from < 1 || to < from) {
    throw wshift::ShiftError(wshift::ErrorKind::kPreconditionViolation, "need 1 <= from <= to");
  }
  const auto d = wshift::q_diagonal_range(w, to + 1);
  const auto b = wshift::ratio_sequence(w, to);
  Json rows = Json::array();
  for (std::size_t n = from; n <= to; ++n) {
    rows.push_back(Json{{"n", n},
                        {"a", rational_json(w.weight(n))},
                        {"d", rational_json(d[n - 1])},
                        {"b2", rational_json(b[n - 1].value)},
                        {"b", static_cast<double>(wshift::ratio_display(b[n - 1]))},
                        {"kernel_escape", b[n - 1].kernel_escape}});
  }
  if (f.format == "table") {
    std::cout << std::left << std::setw(7) << "n" << std::setw(16) << "a_n" << std::setw(20)
              << "d_n" << std::setw(24) << "b_n^2" << "flag\n";
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(7) << r["n"].get<std::size_t>() << std::setw(16)
                << r["a"].get<std::string>() << std::setw(20) << r["d"].get<std::string>()
                << std::setw(24) << r["b2"].get<std::string>()
                << (r["kernel_escape"].get<bool>() ? "KernelEscape" : "") << '\n';
    }
  } else {
    emit(Json{{"input", wshift::print_spec(w)}, {"rows", rows}});
  }
  return kOk;
}

int cmd_moments(const std::string& spec, const CommonFlags& f, std::size_t up_to) {
  const auto w = load(spec, f);
  const auto m = wshift::moments(w, up_to);
  Json beta = Json::array();
  for (const auto& value : m.beta) beta.push_back(rational_json(value));
  if (f.format == "table") {
    for (std::size_t n = 0; n < m.beta.size(); ++n) {
      std::cout << std::left << std::setw(6) << n << wshift::to_string(m.beta[n]) << '\n';
    }
  } else {
    emit(Json{{"input", wshift::print_spec(w)}, {"beta", beta}});
  }
  return kOk;
}

int cmd_hankel(const std::string& spec, const CommonFlags& f) {
  const auto w = load(spec, f);
  const auto o = options_from(f);
  const auto h = wshift::hankel_necessary_check(w, f.max_order, o.mode, o.tol);
  Json doc{{"input", wshift::print_spec(w)},
           {"mode", f.mode},
           {"max_order", f.max_order},
           {"tested_order", h.tested_order},
           {"verdict", h.refuted ? "NotSubnormal" : "SubnormalEvidence"},
           {"grade", wshift::to_string(h.grade)}};
  if (h.refuted) {
    doc["failing_order"] = *h.failing_order;
    doc["failing_matrix"] = std::string(1, h.failing_matrix);
    doc["witness"] = o.mode == wshift::finsec::Mode::kExact
                         ? Json(rational_json(h.witness))
                         : Json(static_cast<double>(h.real_witness));
  }
  if (f.format == "table") {
    std::cout << doc["verdict"].get<std::string>() << " (" << doc["grade"].get<std::string>()
              << "), orders tested: " << h.tested_order;
    if (h.refuted) {
      std::cout << ", " << h.failing_matrix << '(' << *h.failing_order
                << ") fails with witness " << doc["witness"].dump();
    }
    std::cout << '\n';
  } else {
    emit(doc);
  }
  return kOk;
}

int cmd_def1(const std::string& spec, const CommonFlags& f, const std::string& d_list,
             const std::string& d_spec, const std::string& m_text, std::size_t order) {
  const auto w = load(spec, f);
  if (order < 2) {
    throw wshift::ShiftError(wshift::ErrorKind::kPreconditionViolation, "--n must be at least 2");
  }
  std::vector<Rational> d;
  std::string source = "q";
  if (!d_list.empty()) {
    d = parse_list(d_list);
    source = "list";
  } else if (!d_spec.empty()) {
    d = wshift::parse_spec(d_spec).weights(order);
    source = "spec";
  } else {
    d = wshift::q_diagonal_range(w, order);
  }
  if (d.size() < order) {
    throw wshift::ShiftError(wshift::ErrorKind::kPreconditionViolation,
                             "diagonal supplies fewer than " + std::to_string(order) + " entries");
  }
  const auto scalar = wshift::d_near_subnormal_scalar(w, d, order - 1);
  Json doc{{"input", wshift::print_spec(w)},
           {"d_source", source},
           {"range", Json::array({1, order - 1})},
           {"admissible_m_sup", scalar.sup ? Json(rational_json(*scalar.sup)) : Json("infinity")},
           {"holds", scalar.holds},
           {"blocking_index", scalar.blocking_index ? Json(*scalar.blocking_index) : Json(nullptr)}};
  if (!m_text.empty()) {
    auto m = wshift::parse_rational(m_text);
    if (!m || *m <= 0) {
      throw wshift::ShiftError(wshift::ErrorKind::kDomain, "--m must be a positive rational");
    }
    const auto o = options_from(f);
    const bool section = wshift::finsec::definition1_section_check(w, d, *m, order, o.mode, o.tol);
    const bool scalar_at_m = scalar.holds && (!scalar.sup || *m <= *scalar.sup);
    doc["m"] = rational_json(*m);
    doc["section_order"] = order;
    doc["section_psd"] = section;
    doc["scalar_at_m"] = scalar_at_m;
  }
  if (f.format == "table") {
    std::cout << "admissible m on [1, " << order - 1 << "]: (0, "
              << (scalar.sup ? wshift::to_string(*scalar.sup) : "inf") << "]"
              << (scalar.holds ? "" : " -- none, blocked") << '\n';
    if (doc.contains("section_psd")) {
      std::cout << "section check at m = " << doc["m"].get<std::string>() << ": "
                << (doc["section_psd"].get<bool>() ? "PSD" : "not PSD") << '\n';
    }
  } else {
    emit(doc);
  }
  return kOk;
}

int cmd_gallery(const CommonFlags& f) {
  const auto results = wshift::run_gallery(options_from(f));
  if (f.format == "table") {
    for (const auto& r : results) {
      std::cout << std::left << std::setw(22) << r.entry.name << std::setw(30)
                << wshift::to_string(r.report.label) << (r.matches() ? "ok  " : "MISMATCH  ")
                << r.entry.criterion << '\n';
    }
  } else {
    Json doc = Json::array();
    for (const auto& r : results) doc.push_back(wshift::to_json(r));
    emit(doc);
  }
  return kOk;
}

void add_common(CLI::App* cmd, CommonFlags& f, bool with_algebra) {
  cmd->add_option("--horizon", f.horizon, "Index range for evaluation (overrides the spec)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  if (with_algebra) {
    cmd->add_option("--max-order", f.max_order, "Highest Hankel order tested")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mode", f.mode, "Positivity checks in exact or real arithmetic")
        ->check(CLI::IsMember({"exact", "real"}));
    cmd->add_option("--tol", f.tol, "Tolerance for real-mode checks")
        ->check(CLI::NonNegativeNumber);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of unilateral weighted shifts"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string spec;
  std::size_t from = 1;
  std::size_t to = 20;
  std::size_t up_to = 10;
  std::string d_list;
  std::string d_spec;
  std::string m_text;
  std::size_t order = 20;

  auto* classify = app.add_subcommand("classify", "Classify a weight sequence");
  classify->add_option("spec", spec, "Weight sequence, e.g. \"prefix=[1,2]; tail=const(3)\"")
      ->required();
  add_common(classify, flags, true);
  classify->add_flag("--wall-clock", flags.wall_clock, "Include wall-clock time in the report");

  auto* ratios = app.add_subcommand("ratios", "Print d_n, b_n^2 and kernel-escape flags");
  ratios->add_option("spec", spec)->required();
  ratios->add_option("--from", from, "First index");
  ratios->add_option("--to", to, "Last index");
  add_common(ratios, flags, false);

  auto* moments = app.add_subcommand("moments", "Print the moment sequence");
  moments->add_option("spec", spec)->required();
  moments->add_option("--up-to", up_to, "Last moment index");
  add_common(moments, flags, false);

  auto* hankel = app.add_subcommand("hankel", "Hankel positivity check");
  hankel->add_option("spec", spec)->required();
  add_common(hankel, flags, true);

  auto* def1 = app.add_subcommand("def1", "Check D >= m S*DS for a diagonal D");
  def1->add_option("spec", spec)->required();
  auto* list_opt = def1->add_option("--d-list", d_list, "Diagonal entries, e.g. \"[1, 3, 5, 0]\"");
  def1->add_option("--d-spec", d_spec, "Diagonal given as a weight spec")->excludes(list_opt);
  def1->add_option("--m", m_text, "Constant m to test on the finite section");
  def1->add_option("--n", order, "Section order N; the scalar check covers [1, N-1]");
  add_common(def1, flags, true);

  auto* gallery = app.add_subcommand("gallery", "Run the built-in example corpus");
  add_common(gallery, flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*classify) return cmd_classify(spec, flags);
    if (*ratios) return cmd_ratios(spec, flags, from, to);
    if (*moments) return cmd_moments(spec, flags, up_to);
    if (*hankel) return cmd_hankel(spec, flags);
    if (*def1) return cmd_def1(spec, flags, d_list, d_spec, m_text, order);
    if (*gallery) return cmd_gallery(flags);
  } catch (const wshift::ShiftError& e) {
    Json error{{"kind", wshift::to_string(e.kind())}, {"message", e.what()}};
    error["index"] = e.index() ? Json(*e.index()) : Json(nullptr);
    emit(Json{{"error", error}});
    std::cerr << "wshift: " << e.what() << '\n';
    return e.kind() == wshift::ErrorKind::kNonSymmetric ? kInternalError : kInputError;
  } catch (const std::exception& e) {
    emit(Json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}});
    std::cerr << "wshift: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
