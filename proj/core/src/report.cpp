#include "covhom/report.hpp"

#include <set>
#include <sstream>

namespace covhom {

const char* status_str(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT-APPLICABLE";
    case Status::InvalidInstance: return "INVALID-INSTANCE";
  }
  return "?";
}

void finish_comparison(Report& rep) {
  if (rep.left == rep.right) {
    rep.status = Status::Pass;
    return;
  }
  rep.status = Status::Fail;
  std::set<int> degrees;
  for (const auto& [m, v] : rep.left.entries()) degrees.insert(m);
  for (const auto& [m, v] : rep.right.entries()) degrees.insert(m);
  for (int m : degrees) {
    if (rep.left.at(m) != rep.right.at(m)) {
      std::ostringstream os;
      os << "tables differ at degree " << m << ": " << rep.left.at(m) << " vs " << rep.right.at(m);
      rep.detail = os.str();
      break;
    }
  }
}

}  // namespace covhom
