#pragma once

#include <string>

#include "covhom/betti.hpp"

namespace covhom {

enum class Status { Pass, Fail, NotApplicable, InvalidInstance };

const char* status_str(Status s);

/// Outcome of one verification check on one instance. `left` and `right` are
/// the two Betti tables being compared; on FAIL, `detail` names a degree
/// where they differ.
struct Report {
  std::string instance;
  std::string check;
  Status status = Status::Pass;
  BettiTable left, right;
  std::string left_label, right_label;
  std::string detail;
  std::string trace_ref;
  double ms = 0.0;

  bool ok() const { return status == Status::Pass || status == Status::NotApplicable; }
};

/// Fills status/detail from comparing left and right tables degree by degree.
void finish_comparison(Report& rep);

}  // namespace covhom
