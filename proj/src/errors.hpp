#pragma once

#include <stdexcept>
#include <string>

namespace hbn {

// Failure taxonomy shared by the C++ core, the C API status codes, and the
// CLI exit-code mapping.
enum class errc {
  parse,                      // malformed numeral, tuple, or option value
  unsorted_parts,             // parts not nondecreasing and no normalization requested
  empty_type,                 // zero-length splitting type
  negative_genus,             // g < 0
  empty_locus,                // rho' < 0 (resp. rho < 0): no such line bundles exist
  rank_too_small,             // k = 1 asked a classification question
  bad_ample_degree,           // p outside [0, k-1]
  nonneg_parts_precondition,  // count requires exactly p+1 nonnegative parts
  inconsistent_profile,       // no splitting type reproduces the sampled h0 values
  domain,                     // argument outside a stated formula domain
  internal,                   // invariant breach inside the library
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::parse: return "parse-error";
    case errc::unsorted_parts: return "unsorted-parts";
    case errc::empty_type: return "empty-type";
    case errc::negative_genus: return "negative-genus";
    case errc::empty_locus: return "empty-locus";
    case errc::rank_too_small: return "rank-too-small";
    case errc::bad_ample_degree: return "bad-ample-degree";
    case errc::nonneg_parts_precondition: return "nonneg-parts-precondition";
    case errc::inconsistent_profile: return "inconsistent-profile";
    case errc::domain: return "domain-violation";
    case errc::internal: return "internal-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace hbn
