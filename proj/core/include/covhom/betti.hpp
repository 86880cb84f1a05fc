#pragma once

#include <map>
#include <string>

namespace covhom {

/// Map degree -> dim H^degree, finitely supported; zero entries are not stored.
class BettiTable {
 public:
  BettiTable() = default;

  long at(int m) const {
    auto it = dims_.find(m);
    return it == dims_.end() ? 0 : it->second;
  }

  void set(int m, long value);
  bool empty() const { return dims_.empty(); }

  /// shifted(k)[m] == (*this)[m + k]; matches cohomology(shift(c, k)).
  BettiTable shifted(int k) const;

  long euler() const;  // sum of (-1)^m dim H^m

  const std::map<int, long>& entries() const { return dims_; }

  /// "{0:1, 2:1}"; "{}" when empty.
  std::string str() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.dims_ == b.dims_; }
  friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

 private:
  std::map<int, long> dims_;
};

}  // namespace covhom
