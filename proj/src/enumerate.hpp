#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "count.hpp"

namespace hbn {

// Finite sweep domain: ranks k_min..k_max, parts in [part_min, part_max],
// genus from u(e) to u(e) + genus_slack for each type e, and either every
// twist degree 0..k-1 or a fixed list (entries outside [0, k-1] are skipped
// for that rank).
struct SweepDomain {
  int k_min = 2;
  int k_max = 5;
  int part_min = -5;
  int part_max = 5;
  int genus_slack = 4;
  std::optional<std::vector<int>> p_list;
};

// Throws errc::domain unless k_min >= lowest_k, k_min <= k_max,
// part_min <= part_max, genus_slack >= 0 and requested p values are >= 0.
void validate_domain(const SweepDomain& domain, int lowest_k);

// Ample degrees to report for a rank-k type under this domain.
std::vector<int> domain_ample_degrees(const SweepDomain& domain, int rank);

// Lexicographic stream of all nondecreasing k-tuples with parts in
// [part_min, part_max], optionally filtered by total degree.  Each type
// appears exactly once.
class SplittingTypeEnumerator {
 public:
  SplittingTypeEnumerator(int k, int part_min, int part_max,
                          std::optional<Integer> degree = std::nullopt);
  std::optional<SplittingType> next();

 private:
  bool advance();

  int k_;
  long lo_;
  long hi_;
  std::optional<Integer> degree_;
  std::vector<long> current_;
  bool exhausted_ = false;
  bool fresh_ = true;
};

// Number of nondecreasing k-tuples with parts in [part_min, part_max]:
// C(part_max - part_min + k, k).
Integer splitting_type_count(int k, int part_min, int part_max);

// Deterministic stream of every valid datum in the domain: k ascending,
// types lexicographic, genus ascending from u(e).
class DatumEnumerator {
 public:
  explicit DatumEnumerator(const SweepDomain& domain);
  std::optional<BNDatum> next();

 private:
  SweepDomain domain_;
  int k_;
  std::optional<SplittingTypeEnumerator> types_;
  std::optional<SplittingType> current_type_;
  Integer genus_offset_ = 0;
};

struct Violation {
  std::string property;
  Integer g;
  SplittingType e;
  std::optional<int> p;
  std::string observed;
  std::string expected;
};

struct VerifyOptions {
  SweepDomain domain;
  std::vector<std::string> properties;  // empty selects every known property
  Mutation mutation = Mutation::none;   // fault injection for self-tests
  int jobs = 0;                         // 0 = hardware concurrency
};

struct VerifyReport {
  SweepDomain domain;
  std::vector<std::string> properties;  // resolved selection, in canonical order
  Mutation mutation = Mutation::none;
  std::uint64_t types = 0;   // splitting types visited
  std::uint64_t data = 0;    // valid (g, e) pairs visited
  std::uint64_t checks = 0;  // property instances evaluated
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Canonical list of property identifiers the verifier knows.
const std::vector<std::string>& known_properties();

// Exhaustively re-checks every selected invariant over the domain.  The
// violation list is empty exactly when all properties hold, and its order is
// independent of the number of worker threads.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hbn
