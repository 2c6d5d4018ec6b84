#pragma once

#include "classify.hpp"

namespace hbn {

// Why a relative p-very-ampleness count can vanish: genus zero, one of the
// rigid clauses (2)-(4) of the relative classification, or none of these
// (the count is then positive).  not_applicable marks out-of-domain queries.
enum class EdgeCase {
  genus_zero,
  rel_va_case2,
  rel_va_case3,
  rel_va_case4,
  positive,
  not_applicable,
};

const char* edge_case_name(EdgeCase value);

// Named fault injections for the verifier's self-test: each perturbs exactly
// one binomial argument or one sign in the closed-form count, leaving the
// assembled route untouched, so a healthy checker must notice.  `none` is the
// production path.
enum class Mutation {
  none,
  shift_binom_1,  // C(k-1, p)      -> C(k, p)
  shift_binom_2,  // C(k, p+1)      -> C(k+1, p+1)
  shift_binom_3,  // C(k-2, p-1)    -> C(k-2, p)
  flip_sign_2,    // top-part term added instead of subtracted
  flip_sign_3,    // Euler-characteristic term added instead of subtracted
};

Mutation mutation_from_name(const std::string& name);  // errc::parse on unknown names
const char* mutation_name(Mutation m);
const std::vector<std::string>& known_mutations();

// Degree of the incidence correction from ramification:
// (2g - 2 + 2k) C(p+1, 2) (k-2)!/(k-p-1)!, and 0 when p = 0 (no correction
// is needed to separate single points, and the factorial quotient is not a
// whole number there).  Requires k >= 2, 0 <= p <= k-1, g >= 0 (errc::domain).
Integer deg_z(const Integer& g, int k, int p);

// Degree of the finite collapsing map between incidence strata: k!/(k-p-1)!.
Integer deg_h(int k, int p);

// Degree of the projection from the fiberwise (p+1)-point stratum: (k-1)!/(k-p-1)!.
Integer deg_pi(int k, int p);

// Number of fibral divisors of degree p+1 that the general member fails to
// separate, counted with multiplicity.  Meaningful when the splitting type
// has exactly p+1 nonnegative parts.  Two independent routes:
//
// closed:    C(k-1,p) (deg e + g + k - 1) - C(k,p+1) (e_{k-p}+...+e_k)
//            - (g-1+k) C(k-2,p-1)
// assembled: [(p+1) deg_pi (deg e + g + k - 1) - deg_h (e_{k-p}+...+e_k)
//            - deg_z] / (p+1)!
//
// Both require a valid datum with k >= 2 and 0 <= p <= k-1; neither checks
// the nonnegative-part precondition (CountReport does).
Integer dependent_count_closed(const BNDatum& d, int p, Mutation m = Mutation::none);
Integer dependent_count_assembled(const BNDatum& d, int p);

// The assembled numerator before division by (p+1)! (always divisible).
Integer assembled_bracket(const BNDatum& d, int p);

// Which vanishing explanation applies; same precondition as the strict count
// (exactly p+1 nonnegative parts, errc::nonneg_parts_precondition).  Decided
// from the classification clauses alone, never from the count value, so the
// reported reason independently cross-checks the computed number.
EdgeCase edge_case_classify(const BNDatum& d, int p);

struct CountReport {
  Integer n_closed;
  Integer n_assembled;  // always equals n_closed; both kept for auditing
  Integer deg_z;
  Integer deg_h;
  Integer deg_pi;
  Integer deg_l;
  EdgeCase edge_case = EdgeCase::not_applicable;
};

enum class CountDomain {
  strict,      // errc::nonneg_parts_precondition unless exactly p+1 nonneg parts
  permissive,  // evaluate the formulas anyway and tag not_applicable
};

CountReport dependent_divisor_count(const BNDatum& d, int p,
                                    CountDomain domain = CountDomain::strict);

// Intersection of a curve of class (e_2 + g + 1)F + 2D on the Hirzebruch
// surface F_{e_2} with the directrix D (D^2 = -e_2): g + 1 - e_2.  Context:
// k = 2 types (0, e_2).
Integer directrix_intersection(const Integer& g, const Integer& e2);

}  // namespace hbn
