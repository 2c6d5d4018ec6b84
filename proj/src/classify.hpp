#pragma once

#include <array>
#include <optional>
#include <string>

#include "core.hpp"

namespace hbn {

// Tag naming the clause of the classification that decided a question.
// Every classifier scans its clauses in order and reports the first that
// holds; the verdict is the plain disjunction, so clause order never changes
// the boolean value, only the label.
enum class CaseLabel {
  none,
  bpf_subbundle,   // a trivial summand sits inside the nonnegative part
  bpf_pullback,    // general member is pulled back from the line
  birel_nonneg,    // at least p+1 nonnegative parts
  rel_va_1,
  rel_va_2,
  rel_va_3,
  rel_va_4,
  rel_va_5,
  birat_va_1,
  birat_va_2,
  birat_va_3,
  va_1,
  va_2,
  va_3,
  va_4,
  va_5,
  va_6,
  va_7,
};

const char* case_label_name(CaseLabel label);  // e.g. "VA.Case7", "Bpf.Subbundle", "None"
int case_number(CaseLabel label);              // clause index within its theorem, 0 for none

struct Decision {
  bool value = false;
  CaseLabel case_label = CaseLabel::none;
  std::string note;  // short clause text for human-readable output
  // Set when basepoint_free decides via the pullback clause: the general
  // member is the pullback of a line bundle of this degree on P^1.
  std::optional<Integer> pullback_twist;
};

// Raw clause values, exposed so sweeps can re-check that each verdict is the
// order-independent disjunction of its clauses.  All classifier entry points
// (clause evaluators included) reject rank-1 types with errc::rank_too_small
// and twist degrees outside [0, k-1] with errc::bad_ample_degree.

// (1) e_{k-1} >= 0; (2) e_k >= 0, e_{k-1} - e_1 <= 1, rho' = 0.
std::array<bool, 2> basepoint_free_clauses(const BNDatum& d);
// (1) >= p+2 nonneg parts; (2) p=0 pullback-style; (3) p=k-2 balanced-top;
// (4) p=k-1 all parts nonneg; (5) g=0 with >= p+1 nonneg parts.
std::array<bool, 5> rel_pva_clauses(const BNDatum& d, int p);
// (1) >= 3 nonneg parts; (2) e_{k-1} >= 0 and e_k >= 1; (3) g=0 with
// >= 2 nonneg parts.
std::array<bool, 3> birationally_va_clauses(const BNDatum& d);
// (1) >= 3 nonneg parts and r >= 3; (2) k=3, e_2 >= 1, e_3-e_2 <= 1, rho'=0;
// (3) k=2, e_1 >= 1; (4) k=2, e = (0,g) or (0,g+1); (5) g=0 with >= 2 nonneg
// parts; (6) g=1, e = (-1,0,1) or (-1,...,-1,0,0,0); (7) g=3, e = (-2,0,1)
// or (-2,-1,...,-1,0,0,0).  The two dotted patterns allow zero -1 entries.
std::array<bool, 7> very_ample_clauses(const BNDatum& d);

// Is the general line bundle with this splitting type basepoint-free?
Decision basepoint_free(const BNDatum& d);

// Does the general member separate any p+1 points lying in a single fiber
// of the cover, up to finitely many exceptional fibers (birational relative
// p-very-ampleness)?  Single criterion: at least p+1 nonnegative parts.
Decision birationally_rel_pva(const BNDatum& d, int p);

// Does the general member separate every degree-(p+1) subscheme of every
// fiber (relative p-very-ampleness)?
Decision rel_pva(const BNDatum& d, int p);

// Does the general member embed the curve away from finitely many points?
Decision birationally_va(const BNDatum& d);

// Is the general member very ample?
Decision very_ample(const BNDatum& d);

// Sufficient twist-chain conditions (not necessary): the full chain
// e_k >= p, e_{k-1} >= p, e_{k-2} >= p-1, ..., e_{k-p-1} >= 0 forces
// p-very-ampleness and needs k >= p+2 (otherwise reported false); the
// birational chain e_{k-j} >= p-j for j = 0..p forces the birational
// variant.
bool pva_sufficient(const BNDatum& d, int p);
bool birat_pva_sufficient(const BNDatum& d, int p);

// Conjectural p-very-ampleness test: at least p+2 nonnegative parts and
// r >= 2p+1.  For p = 1 this coincides with clause (1) of very_ample.
bool conjectured_pva(const BNDatum& d, int p);

// Classical Brill-Noether numbers for a general curve without gonality
// constraints: rho(g, r, d) = g - (r+1)(g - d + r).
Integer classical_rho(const Integer& g, const Integer& r, const Integer& d);

// Very ampleness of a general g^r_d on a general genus-g curve: true iff
// r >= 3 or (g, r, d) is one of (0,1,1), (0,2,2), (1,2,3), (3,2,4).
// Requires g, r, d >= 0 (errc::domain) and rho >= 0 (errc::empty_locus).
bool classical_va(const Integer& g, const Integer& r, const Integer& d);

}  // namespace hbn
