#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace hbn {

// Nondecreasing integer tuple e_1 <= ... <= e_k: the splitting type of a
// rank-k vector bundle O(e_1) + ... + O(e_k) on the projective line.  In this
// toolkit it records how the pushforward of a line bundle under a degree-k
// cover of P^1 splits.
class SplittingType {
 public:
  // Rejects empty tuples (errc::empty_type) and tuples that are not
  // nondecreasing (errc::unsorted_parts).
  explicit SplittingType(std::vector<Integer> parts);

  // Normalizing constructor: sorts the parts before validating.
  static SplittingType sorted(std::vector<Integer> parts);

  const std::vector<Integer>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  const Integer& smallest() const { return parts_.front(); }
  const Integer& largest() const { return parts_.back(); }

  // 1-based accessor matching the e_i naming; i must be in [1, k].
  const Integer& part(int i) const;

  bool operator==(const SplittingType&) const = default;

 private:
  std::vector<Integer> parts_;
};

// deg(e) = e_1 + ... + e_k.
Integer degree(const SplittingType& e);

// u(e) = sum_{i<j} max(0, e_j - e_i - 1), the h^1 of End(O(e)); this is the
// codimension of the stratum of bundles with splitting type e.  Invariant
// under uniform twists.
Integer u_invariant(const SplittingType& e);

// rho'(g, e) = g - u(e): the expected dimension of the locus of line bundles
// on a general genus-g, degree-k cover whose pushforward splits as e.  The
// locus is nonempty exactly when rho' >= 0.
Integer rho_prime(const Integer& genus, const SplittingType& e);

// h0(e) = sum_i max(0, e_i + 1): global sections of O(e), equivalently of the
// line bundle upstairs.
Integer h0(const SplittingType& e);

// r(e) = h0(e) - 1, the projective dimension of the complete linear series
// (can be -1 when there are no sections).
Integer series_rank(const SplittingType& e);

// h0 of the twist O(e)(n) = sum_i max(0, e_i + n + 1).
Integer h0_twisted(const SplittingType& e, const Integer& n);

// Uniform twist: shifts every part by n.
SplittingType twist(const SplittingType& e, const Integer& n);

int nonneg_parts(const SplittingType& e);  // #{i : e_i >= 0}
int nonpos_parts(const SplittingType& e);  // #{i : e_i <= 0}
int neg_parts(const SplittingType& e);     // #{i : e_i < 0}

// Balanced means e_k - e_1 <= 1; equivalent to u(e) = 0.
bool is_balanced(const SplittingType& e);

// Recovers the splitting type from sampled twisted section counts
// n -> h0(O(e)(n)).  The samples must cover a contiguous window of twists
// whose first value is 0 and whose first differences are nonnegative and
// nondecreasing with a positive final difference; every violation means no
// splitting type produces the profile (errc::inconsistent_profile).
SplittingType splitting_from_h0_profile(const std::map<Integer, Integer>& samples);

// Genus of a smooth plane curve of the given degree: (d-1)(d-2)/2.
Integer plane_curve_genus(const Integer& deg);

// Genus g paired with a splitting type whose locus is nonempty on a general
// cover: construction enforces g >= 0 and rho'(g, e) >= 0.
class BNDatum {
 public:
  BNDatum(Integer genus, SplittingType e);  // errc::negative_genus / errc::empty_locus
  const Integer& genus() const { return genus_; }
  const SplittingType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  bool operator==(const BNDatum&) const = default;

 private:
  Integer genus_;
  SplittingType type_;
};

// Degree of the line bundle upstairs: deg(e) + g + k - 1 (Riemann-Roch for
// the pushforward).
Integer line_bundle_degree(const BNDatum& d);

// Twist degree p for relative p-very-ampleness questions; valid range is
// 0 <= p <= k-1 relative to the rank of the paired splitting type.
class AmpleDegree {
 public:
  AmpleDegree(int p, const SplittingType& e);  // errc::bad_ample_degree
  int value() const { return p_; }

 private:
  int p_;
};

// Parses "a,b,c" into integers (whitespace around entries tolerated).
std::vector<Integer> parse_parts(const std::string& csv);

// Renders "(e_1, ..., e_k)".
std::string format_parts(const SplittingType& e);

}  // namespace hbn
