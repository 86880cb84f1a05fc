// Instance file parsing/serialization, seeded random generation and the
// suite runner behind the command line tool.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covhom/cover.hpp"
#include "covhom/report.hpp"
#include "covhom/simplicial.hpp"
#include "covhom/space_pair.hpp"

namespace covhom {

/// Malformed instance text: syntax errors or schema violations, with the
/// offending field in the message.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid file whose contents violate an instance invariant
/// (e.g. the cover condition); the violated invariant is named.
struct InstanceError : std::runtime_error {
  explicit InstanceError(const std::string& what) : std::runtime_error(what) {}
};

/// On-disk form of an instance. Facet lists only; closures are computed on
/// load. `closed` holds the E_i (space-pair) or A_i (cover) families.
struct InstanceFile {
  struct ClosedFamily {
    std::string name;
    std::vector<Simplex> facets;
  };
  struct Companion {
    int vertices = 0;
    std::vector<Simplex> facets;
    std::vector<ClosedFamily> closed;
    int shift = 0;
  };

  int schema = 1;
  std::string kind;  // "space-pair" | "cover" | "cover-with-companion"
  std::string name;
  std::string notes;
  int vertices = 0;
  std::vector<Simplex> facets;
  std::vector<ClosedFamily> closed;
  std::optional<Companion> companion;
};

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& f);

/// Builds the validated in-memory instance. Throws InstanceError on invariant
/// violations (cover condition named explicitly).
SpacePairInstance to_space_pair(const InstanceFile& f);
CoverInstance to_cover(const InstanceFile& f);

struct GenParams {
  std::string kind = "cover";  // "space-pair" or "cover"
  int vertices = 7;
  int dimension = 2;
  int r = 2;
  double density = 0.5;
};

/// Deterministic for a fixed (seed, params): same inputs give byte-identical
/// serialized instances. Generated covers satisfy the cover condition by
/// construction (bounded discard-and-retry). Bounds: vertices <= 12,
/// dimension <= 3, r <= 4.
InstanceFile generate_random(std::uint64_t seed, const GenParams& params);

struct SuiteOptions {
  int workers = 1;      // > 1 distributes instances across threads
  int trace_r = 0;      // verify-trace: override r (0 = instance's own r)
};

/// Runs `command` over the instances; reports are ordered by instance name.
/// command is one of verify-resolution, verify-final, verify-theorem,
/// verify-trace.
std::vector<Report> run_suite(const std::string& command,
                              const std::vector<InstanceFile>& instances,
                              const SuiteOptions& opts = {});

/// 0 when every report is PASS or NOT-APPLICABLE, else 1.
int suite_exit_code(const std::vector<Report>& reports);

/// Human-readable report block, one line per report plus a summary.
std::string render_human(const std::vector<Report>& reports);

/// Machine-readable JSON array, byte-stable across reruns (timing excluded).
std::string render_machine(const std::vector<Report>& reports);

}  // namespace covhom
