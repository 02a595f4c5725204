#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qaffine {

struct Mismatch {
  std::string where;
  std::string lhs;
  std::string rhs;
};

// Outcome of an identity verifier. Failures are data, not exceptions: the
// report keeps the first failing coefficient with both sides verbatim.
struct Report {
  std::string id;
  std::string title;
  bool passed = true;
  std::uint64_t checks = 0;
  std::optional<Mismatch> first_failure;
  std::string error;
  std::string note;  // e.g. why a verifier was skipped
  std::vector<Report> parts;

  Report() = default;
  Report(std::string id_, std::string title_)
      : id(std::move(id_)), title(std::move(title_)) {}

  // make() is only invoked on failure and returns the Mismatch to record.
  template <class MakeMismatch>
  bool expect(bool ok, MakeMismatch&& make) {
    ++checks;
    if (!ok) {
      if (passed || !first_failure) {
        if (!first_failure) first_failure = make();
      }
      passed = false;
    }
    return ok;
  }

  void fail(std::string message) {
    passed = false;
    if (error.empty()) error = std::move(message);
  }

  void add_part(Report part) {
    checks += part.checks;
    if (!part.passed) {
      passed = false;
      if (!first_failure && part.first_failure) {
        Mismatch m = *part.first_failure;
        m.where = part.id + ": " + m.where;
        first_failure = std::move(m);
      }
      if (error.empty() && !part.error.empty()) error = part.id + ": " + part.error;
    }
    parts.push_back(std::move(part));
  }
};

nlohmann::ordered_json to_json(const Report& r);
std::string summary_line(const Report& r);

}  // namespace qaffine
