#include "core.hpp"

#include <algorithm>
#include <sstream>

namespace hbn {

SplittingType::SplittingType(std::vector<Integer> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(errc::empty_type, "a splitting type needs at least one part");
  for (size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i - 1] > parts_[i]) {
      fail(errc::unsorted_parts, "parts not nondecreasing at position " + std::to_string(i + 1));
    }
  }
}

SplittingType SplittingType::sorted(std::vector<Integer> parts) {
  std::sort(parts.begin(), parts.end());
  return SplittingType(std::move(parts));
}

const Integer& SplittingType::part(int i) const {
  if (i < 1 || i > rank()) fail(errc::internal, "part index out of range");
  return parts_[static_cast<size_t>(i) - 1];
}

Integer degree(const SplittingType& e) {
  Integer sum = 0;
  for (const Integer& p : e.parts()) sum += p;
  return sum;
}

Integer u_invariant(const SplittingType& e) {
  const auto& parts = e.parts();
  Integer total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = i + 1; j < parts.size(); ++j) {
      Integer gap = parts[j] - parts[i] - 1;
      if (gap > 0) total += gap;
    }
  }
  return total;
}

Integer rho_prime(const Integer& genus, const SplittingType& e) {
  return genus - u_invariant(e);
}

Integer h0(const SplittingType& e) { return h0_twisted(e, 0); }

Integer series_rank(const SplittingType& e) { return h0(e) - 1; }

Integer h0_twisted(const SplittingType& e, const Integer& n) {
  Integer total = 0;
  for (const Integer& p : e.parts()) {
    Integer sections = p + n + 1;
    if (sections > 0) total += sections;
  }
  return total;
}

SplittingType twist(const SplittingType& e, const Integer& n) {
  std::vector<Integer> shifted = e.parts();
  for (Integer& p : shifted) p += n;
  return SplittingType(std::move(shifted));
}

int nonneg_parts(const SplittingType& e) {
  int count = 0;
  for (const Integer& p : e.parts()) count += (p >= 0);
  return count;
}

int nonpos_parts(const SplittingType& e) {
  int count = 0;
  for (const Integer& p : e.parts()) count += (p <= 0);
  return count;
}

int neg_parts(const SplittingType& e) { return e.rank() - nonneg_parts(e); }

bool is_balanced(const SplittingType& e) { return e.largest() - e.smallest() <= 1; }

SplittingType splitting_from_h0_profile(const std::map<Integer, Integer>& samples) {
  if (samples.size() < 2) {
    fail(errc::inconsistent_profile, "need at least two consecutive twist samples");
  }
  // Contiguity of the twist window.
  for (auto it = std::next(samples.begin()); it != samples.end(); ++it) {
    if (it->first != std::prev(it)->first + 1) {
      fail(errc::inconsistent_profile, "twist samples are not contiguous");
    }
  }
  if (samples.begin()->second != 0) {
    fail(errc::inconsistent_profile, "window does not reach h0 = 0 at its lower end");
  }
  for (const auto& [n, value] : samples) {
    if (value < 0) fail(errc::inconsistent_profile, "negative section count in profile");
  }
  // The first difference at twist n counts the parts with e_i >= -n, so it
  // must be nonnegative, nondecreasing, and each jump j at twist n puts j
  // parts equal to -n.
  std::vector<Integer> parts;
  Integer previous_delta = 0;
  for (auto it = std::next(samples.begin()); it != samples.end(); ++it) {
    Integer delta = it->second - std::prev(it)->second;
    if (delta < previous_delta) {
      fail(errc::inconsistent_profile,
           "first differences decrease at twist " + to_decimal(it->first));
    }
    Integer jump = delta - previous_delta;
    if (!jump.fits_slong_p()) fail(errc::inconsistent_profile, "profile jump too large");
    for (long c = 0; c < jump.get_si(); ++c) parts.push_back(-it->first);
    previous_delta = delta;
  }
  if (parts.empty()) {
    fail(errc::inconsistent_profile, "window shows no positive section counts");
  }
  std::reverse(parts.begin(), parts.end());  // jumps arrive largest part first
  return SplittingType(std::move(parts));
}

Integer plane_curve_genus(const Integer& deg) { return (deg - 1) * (deg - 2) / 2; }

BNDatum::BNDatum(Integer genus, SplittingType e) : genus_(std::move(genus)), type_(std::move(e)) {
  if (genus_ < 0) fail(errc::negative_genus, "genus must be nonnegative");
  if (rho_prime(genus_, type_) < 0) {
    fail(errc::empty_locus, "rho' = " + to_decimal(rho_prime(genus_, type_)) +
                                " < 0: no line bundle on a general cover has this splitting type");
  }
}

Integer line_bundle_degree(const BNDatum& d) {
  return degree(d.type()) + d.genus() + d.rank() - 1;
}

AmpleDegree::AmpleDegree(int p, const SplittingType& e) : p_(p) {
  if (p < 0 || p > e.rank() - 1) {
    fail(errc::bad_ample_degree,
         "p = " + std::to_string(p) + " outside [0, " + std::to_string(e.rank() - 1) + "]");
  }
}

std::vector<Integer> parse_parts(const std::string& csv) {
  std::vector<Integer> parts;
  std::string token;
  std::stringstream stream(csv);
  bool saw_token = false;
  while (std::getline(stream, token, ',')) {
    parts.push_back(parse_integer(token));
    saw_token = true;
  }
  if (!saw_token || csv.empty()) fail(errc::empty_type, "no parts given");
  if (!csv.empty() && csv.back() == ',') fail(errc::parse, "trailing comma in part list");
  return parts;
}

std::string format_parts(const SplittingType& e) {
  std::string out = "(";
  for (int i = 0; i < e.rank(); ++i) {
    if (i) out += ", ";
    out += to_decimal(e.parts()[static_cast<size_t>(i)]);
  }
  out += ")";
  return out;
}

}  // namespace hbn
