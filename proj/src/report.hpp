#pragma once

#include <string>
#include <vector>

#include "enumerate.hpp"

namespace hbn {

enum class Format { json, csv, plain };

Format format_from_name(const std::string& name);  // errc::parse on unknown names
const char* format_name(Format format);

// The audit block attached to every report.
struct Invariants {
  int k = 0;
  Integer deg_e;
  Integer u;
  Integer rho;
  Integer h0;
  Integer r;
  Integer deg_l;
  int nonneg = 0;
};

Invariants compute_invariants(const BNDatum& d);

struct PerDegreeEntry {
  int p = 0;
  Decision rel;
  Decision birel;
  CountReport count;
  bool count_in_domain = false;  // exactly p+1 nonnegative parts
};

// Everything the classify subcommand (and one table row) reports about a
// datum.
struct ClassifyReport {
  BNDatum datum;
  bool reordered = false;  // parts were sorted on input
  Invariants invariants;
  Decision bpf;
  Decision birat_va;
  Decision va;
  std::vector<PerDegreeEntry> per_degree;
};

// ps empty means every p in [0, k-1].  Counts for p values that miss the
// exactly-(p+1)-nonnegative-parts precondition are evaluated permissively and
// tagged NotApplicable.
ClassifyReport build_classify_report(const BNDatum& d, const std::vector<int>& ps, bool reordered);

std::string render_classify(const ClassifyReport& report, Format format);

// Table rendering shares the classify row shape.  CSV columns are fixed:
// g, e1..e{k_max}, u, rho, h0, r, degL, bpf, bpf_case, birat_va, va, va_case,
// then rel_p{P}, rel_case_p{P}, birel_p{P}, N_p{P} for each reported p.
// Ranks below k_max leave their unused columns empty; out-of-domain counts
// render as NA.
std::string table_csv_header(int k_max, const std::vector<int>& ps);
std::string table_csv_row(const ClassifyReport& report, int k_max, const std::vector<int>& ps);

std::string render_count(const BNDatum& d, int p, const CountReport& count, Format format);

// One enumerated splitting type: JSON array, bare CSV list, or "(a, b, c)".
std::string render_type_line(const SplittingType& e, Format format);

std::string render_verify(const VerifyReport& report, Format format);

// Structured error object for value-level refusals and malformed input.
std::string render_error(errc code, const std::string& message, Format format);

}  // namespace hbn
