#include "covhom/cover_term.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covhom {

const std::vector<CoverTerm> FormalComplex::kNone = {};

CoverTerm CoverTerm::of_blocks(std::vector<std::vector<int>> blocks) {
  if (blocks.empty()) throw std::invalid_argument("CoverTerm: no blocks");
  std::set<int> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("CoverTerm: empty block");
    std::sort(b.begin(), b.end());
    for (int i : b) {
      if (i < 1) throw std::invalid_argument("CoverTerm: indices are 1-based");
      if (!seen.insert(i).second)
        throw std::invalid_argument("CoverTerm: blocks are not disjoint");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  CoverTerm t;
  t.blocks_ = std::move(blocks);
  return t;
}

CoverTerm CoverTerm::singletons(const std::vector<int>& indices) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(indices.size());
  for (int i : indices) blocks.push_back({i});
  return of_blocks(std::move(blocks));
}

int CoverTerm::max_index() const {
  int m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.back());
  return m;
}

std::vector<int> CoverTerm::support() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool CoverTerm::has_block(const std::vector<int>& block) const {
  return std::find(blocks_.begin(), blocks_.end(), block) != blocks_.end();
}

std::string CoverTerm::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) os << ",";
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) os << "∩";
      os << blocks_[b][i];
    }
  }
  os << ")";
  return os.str();
}

// --- FormalComplex -----------------------------------------------------------

void FormalComplex::add(int degree, CoverTerm t) {
  auto& lst = slots_[degree];
  lst.insert(std::upper_bound(lst.begin(), lst.end(), t), std::move(t));
}

void FormalComplex::remove(int degree, const CoverTerm& t) {
  auto it = slots_.find(degree);
  if (it != slots_.end()) {
    auto pos = std::lower_bound(it->second.begin(), it->second.end(), t);
    if (pos != it->second.end() && *pos == t) {
      it->second.erase(pos);
      if (it->second.empty()) slots_.erase(it);
      return;
    }
  }
  throw std::invalid_argument("FormalComplex: term " + t.str() + " absent in degree " +
                              std::to_string(degree));
}

bool FormalComplex::contains(int degree, const CoverTerm& t) const {
  auto it = slots_.find(degree);
  if (it == slots_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), t);
}

const std::vector<CoverTerm>& FormalComplex::at(int degree) const {
  auto it = slots_.find(degree);
  return it == slots_.end() ? kNone : it->second;
}

int FormalComplex::lo() const { return slots_.empty() ? 0 : slots_.begin()->first; }
int FormalComplex::hi() const { return slots_.empty() ? -1 : slots_.rbegin()->first; }

long FormalComplex::term_count() const {
  long n = 0;
  for (const auto& [d, lst] : slots_) n += static_cast<long>(lst.size());
  return n;
}

std::string FormalComplex::str() const {
  if (slots_.empty()) return "0";
  std::ostringstream os;
  if (lo() > 0) os << "0 -> ";
  for (int d = lo(); d <= hi(); ++d) {
    if (d > lo()) os << " -> ";
    const auto& lst = at(d);
    if (lst.empty()) {
      os << "0";
      continue;
    }
    for (size_t i = 0; i < lst.size(); ++i) {
      if (i) os << " + ";
      os << lst[i].str();
    }
  }
  return os.str();
}

// --- Rewriting ----------------------------------------------------------------

const char* step_kind_str(StepKind k) {
  return k == StepKind::InitialElimination ? "initial-elimination" : "pair-merge";
}

FormalComplex initial_complex(int r) {
  if (r < 1) throw std::invalid_argument("initial_complex: r >= 1 required");
  FormalComplex c;
  std::vector<int> all(r);
  for (int i = 0; i < r; ++i) all[i] = i + 1;
  c.add(0, CoverTerm::singletons(all));
  // Degree p: for every |J| = p, singleton blocks over the complement of J.
  std::vector<int> J;
  auto rec = [&](auto&& self, int start) -> void {
    const int p = static_cast<int>(J.size());
    if (p >= 1 && p <= r - 1) {
      std::vector<int> comp;
      size_t ji = 0;
      for (int i = 1; i <= r; ++i) {
        if (ji < J.size() && J[ji] == i) {
          ++ji;
        } else {
          comp.push_back(i);
        }
      }
      c.add(p, CoverTerm::singletons(comp));
    }
    if (p == r - 1) return;
    for (int i = start; i <= r; ++i) {
      J.push_back(i);
      self(self, i + 1);
      J.pop_back();
    }
  };
  rec(rec, 1);
  return c;
}

std::pair<FormalComplex, RewriteStep> mv_step(const FormalComplex& c, int degree,
                                              const CoverTerm& target) {
  if (!c.contains(degree, target))
    throw std::invalid_argument("mv_step: target " + target.str() + " absent in degree " +
                                std::to_string(degree));
  if (target.block_count() < 2)
    throw std::invalid_argument("mv_step: target " + target.str() +
                                " has a single block, nothing to split");

  // The two blocks with largest minima are the ones merged, mirroring the
  // proof's covering by dropping one of the two largest indices.
  const auto& blocks = target.blocks();
  const size_t n = blocks.size();
  std::vector<std::vector<int>> rest(blocks.begin(), blocks.end() - 2);
  const std::vector<int>& x = blocks[n - 2];
  const std::vector<int>& y = blocks[n - 1];

  auto with_block = [&](const std::vector<int>& b) {
    std::vector<std::vector<int>> bl = rest;
    bl.push_back(b);
    return CoverTerm::of_blocks(std::move(bl));
  };
  std::vector<int> merged_block = x;
  merged_block.insert(merged_block.end(), y.begin(), y.end());

  MvTriple triple;
  triple.eliminated = target;
  triple.part_a = with_block(x);
  triple.part_b = with_block(y);
  triple.merged = with_block(merged_block);

  if (!c.contains(degree + 1, triple.part_a) || !c.contains(degree + 1, triple.part_b))
    throw std::invalid_argument("mv_step: target " + target.str() +
                                " not eligible: cover parts " + triple.part_a.str() + ", " +
                                triple.part_b.str() + " absent in degree " +
                                std::to_string(degree + 1));

  RewriteStep step;
  step.before = c;
  step.degree = degree;
  step.triple = triple;
  step.kind = (degree == c.lo() && c.at(degree).size() == 1) ? StepKind::InitialElimination
                                                             : StepKind::PairMerge;

  FormalComplex after = c;
  after.remove(degree, target);
  after.remove(degree + 1, triple.part_a);
  after.remove(degree + 1, triple.part_b);
  after.add(degree + 1, triple.merged);
  step.after = after;
  return {std::move(after), std::move(step)};
}

RewriteTrace reduce(int r) {
  if (r < 1) throw std::invalid_argument("reduce: r >= 1 required");
  RewriteTrace trace;
  trace.r = r;
  trace.initial = initial_complex(r);

  FormalComplex c = trace.initial;
  std::vector<std::vector<int>> atoms;
  for (int i = 1; i <= r; ++i) atoms.push_back({i});
  int base = 0;

  while (atoms.size() >= 2) {
    const size_t s = atoms.size();
    const std::vector<int> x = atoms[s - 2];
    const std::vector<int> y = atoms[s - 1];

    // Eliminate the leading full term.
    auto [c1, step] = mv_step(c, base, CoverTerm::of_blocks(atoms));
    c = std::move(c1);
    trace.steps.push_back(std::move(step));

    // Sweep the Q-terms (both merge blocks present) left to right.
    for (int p = base + 1; p <= base + static_cast<int>(s) - 2; ++p) {
      std::vector<CoverTerm> targets;
      for (const auto& t : c.at(p))
        if (t.has_block(x) && t.has_block(y)) targets.push_back(t);
      for (const auto& t : targets) {
        auto [cn, st] = mv_step(c, p, t);
        c = std::move(cn);
        trace.steps.push_back(std::move(st));
      }
    }

    std::vector<int> merged = x;
    merged.insert(merged.end(), y.begin(), y.end());
    std::sort(merged.begin(), merged.end());
    atoms.pop_back();
    atoms.pop_back();
    atoms.push_back(std::move(merged));
    ++base;
  }

  trace.final_complex = c;
  return trace;
}

std::string render_trace(const RewriteTrace& trace) {
  std::ostringstream os;
  os << "reduce r=" << trace.r << "\n";
  os << "initial: " << trace.initial.str() << "\n";
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const RewriteStep& s = trace.steps[i];
    os << "step " << (i + 1) << " [" << step_kind_str(s.kind) << "] eliminate "
       << s.triple.eliminated.str() << " @ degree " << s.degree << " via "
       << s.triple.part_a.str() << " + " << s.triple.part_b.str() << " -> "
       << s.triple.merged.str() << "\n";
    os << "  " << s.after.str() << "\n";
  }
  os << "final: " << trace.final_complex.str() << "\n";
  return os.str();
}

}  // namespace covhom
