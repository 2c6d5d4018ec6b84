// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on any
// failure.  Criteria 1-6 sweep the library directly; criterion 7 drives the
// installed CLI binary end to end.
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "enumerate.hpp"

using hbn::BNDatum;
using hbn::Integer;
using hbn::SplittingType;

namespace {

constexpr int kPartMin = -5;
constexpr int kPartMax = 5;
constexpr int kRankMax = 5;
constexpr int kGenusSlack = 4;

std::vector<SplittingType> all_types(int k_min, int k_max) {
  std::vector<SplittingType> types;
  for (int k = k_min; k <= k_max; ++k) {
    hbn::SplittingTypeEnumerator stream(k, kPartMin, kPartMax);
    while (auto e = stream.next()) types.push_back(std::move(*e));
  }
  return types;
}

// Every valid datum of the default sweep domain: k in [2,5], parts in [-5,5],
// genus from u(e) to u(e) + 4.
void for_each_datum(const std::function<void(const BNDatum&)>& body) {
  for (const SplittingType& e : all_types(2, kRankMax)) {
    Integer base = hbn::u_invariant(e);
    for (int offset = 0; offset <= kGenusSlack; ++offset) body(BNDatum(base + offset, e));
  }
}

std::string describe(const BNDatum& d, int p) {
  return "g = " + hbn::to_decimal(d.genus()) + ", e = " + hbn::format_parts(d.type()) +
         ", p = " + std::to_string(p);
}

int run_cli(const std::string& args) {
  std::string command = std::string("\"") + HBN_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// 1. The closed-form count and the assembled intersection-theoretic count
//    agree on every in-domain instance of the default sweep.
bool criterion_count_routes_agree(std::string& detail) {
  long data = 0, instances = 0, disagreements = 0;
  std::string first;
  for_each_datum([&](const BNDatum& d) {
    ++data;
    int nonneg = hbn::nonneg_parts(d.type());
    if (nonneg < 1) return;
    int p = nonneg - 1;
    ++instances;
    Integer closed = hbn::dependent_count_closed(d, p);
    Integer assembled = hbn::dependent_count_assembled(d, p);
    if (closed != assembled && first.empty()) {
      ++disagreements;
      first = describe(d, p) + ": closed " + hbn::to_decimal(closed) + " vs assembled " +
              hbn::to_decimal(assembled);
    }
  });
  detail = std::to_string(instances) + " in-domain instances over " + std::to_string(data) +
           " data";
  if (data != 21780 || instances != 20550) {
    detail += " (expected 21780 and 20550: sweep domain drifted)";
    return false;
  }
  if (disagreements) detail += "; first disagreement: " + first;
  return disagreements == 0;
}

// 2. The count vanishes exactly when the classification predicts it: genus 0
//    or one of the three rigid relative clauses.
bool criterion_vanishing_matches_classification(std::string& detail) {
  long instances = 0, mismatches = 0;
  std::string first;
  for_each_datum([&](const BNDatum& d) {
    int nonneg = hbn::nonneg_parts(d.type());
    if (nonneg < 1) return;
    int p = nonneg - 1;
    ++instances;
    bool zero = hbn::dependent_count_closed(d, p) == 0;
    auto clauses = hbn::rel_pva_clauses(d, p);
    bool predicted = d.genus() == 0 || clauses[1] || clauses[2] || clauses[3];
    if (zero != predicted && first.empty()) {
      ++mismatches;
      first = describe(d, p);
    }
  });
  detail = std::to_string(instances) + " instances";
  if (mismatches) detail += "; first mismatch: " + first;
  return mismatches == 0;
}

// 3. The decision procedures cohere: the relative verdict decomposes into the
//    birational verdict plus the count, relative 0-very-ampleness is
//    basepoint-freeness, very ampleness implies the weaker notions, the
//    sufficient chain implies very ampleness, and the conjectural p = 1
//    criterion coincides with the first very-ampleness clause.
bool criterion_classifiers_cohere(std::string& detail) {
  long checks = 0, failures = 0;
  std::string first;
  auto flag = [&](const std::string& what) {
    ++failures;
    if (first.empty()) first = what;
  };
  for_each_datum([&](const BNDatum& d) {
    const bool bpf = hbn::basepoint_free(d).value;
    const bool birva = hbn::birationally_va(d).value;
    const bool va = hbn::very_ample(d).value;
    const int nonneg = hbn::nonneg_parts(d.type());

    ++checks;
    if (hbn::rel_pva(d, 0).value != bpf) flag("rel0 != bpf at " + describe(d, 0));
    ++checks;
    if (va && !(hbn::rel_pva(d, 1).value && bpf && birva)) {
      flag("va without its implications at " + describe(d, 1));
    }
    ++checks;
    if (hbn::pva_sufficient(d, 1) && !va) flag("1-chain without va at " + describe(d, 1));
    ++checks;
    if (hbn::conjectured_pva(d, 1) != hbn::very_ample_clauses(d)[0]) {
      flag("conjecture differs from clause 1 at " + describe(d, 1));
    }
    for (int p = 0; p < d.rank(); ++p) {
      ++checks;
      bool rel = hbn::rel_pva(d, p).value;
      bool expected = false;
      if (nonneg >= p + 2) {
        expected = true;
      } else if (nonneg == p + 1) {
        expected = hbn::dependent_count_closed(d, p) == 0;
      }
      if (rel != expected) flag("relative verdict decomposition fails at " + describe(d, p));
    }
  });
  detail = std::to_string(checks) + " coherence checks";
  if (failures) detail += "; first failure: " + first;
  return failures == 0;
}

// 4. Frozen geometric families: the two rigid plane-curve types, the
//    hyperelliptic surface families with their directrix intersections, and
//    the classical very-ampleness table for general curves.
bool criterion_model_families(std::string& detail) {
  long checks = 0, failures = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && first.empty()) first = what;
    if (!ok) ++failures;
  };

  BNDatum cubic(1, SplittingType({-1, 0, 1}));
  BNDatum quartic(3, SplittingType({-2, 0, 1}));
  expect(hbn::very_ample(cubic).value && hbn::line_bundle_degree(cubic) == 3 &&
             hbn::plane_curve_genus(3) == cubic.genus(),
         "rigid cubic model");
  expect(hbn::very_ample(quartic).value && hbn::line_bundle_degree(quartic) == 4 &&
             hbn::plane_curve_genus(4) == quartic.genus(),
         "rigid quartic model");

  for (long g = 0; g <= 8; ++g) {
    BNDatum tight(g, SplittingType({Integer(0), Integer(g)}));
    BNDatum loose(g, SplittingType({Integer(0), Integer(g + 1)}));
    expect(hbn::very_ample(tight).value &&
               hbn::directrix_intersection(g, Integer(g)) == 1,
           "surface family (0, g) at g = " + std::to_string(g));
    expect(hbn::very_ample(loose).value &&
               hbn::directrix_intersection(g, Integer(g + 1)) == 0,
           "surface family (0, g+1) at g = " + std::to_string(g));
  }

  auto exceptional = [](long g, long r, long d) {
    return (g == 0 && r == 1 && d == 1) || (g == 0 && r == 2 && d == 2) ||
           (g == 1 && r == 2 && d == 3) || (g == 3 && r == 2 && d == 4);
  };
  for (long g = 0; g <= 6; ++g) {
    for (long r = 0; r <= 2; ++r) {
      for (long d = 0; d <= 12; ++d) {
        if (hbn::classical_rho(g, r, d) < 0) continue;
        expect(hbn::classical_va(g, r, d) == exceptional(g, r, d),
               "classical table at (" + std::to_string(g) + "," + std::to_string(r) + "," +
                   std::to_string(d) + ")");
      }
    }
  }
  expect(hbn::classical_va(5, 3, 8), "classical r >= 3 instance");

  detail = std::to_string(checks) + " family checks";
  if (failures) detail += "; first failure: " + first;
  return failures == 0;
}

// 5. Every splitting type with parts in [-5,5] and rank at most 5 is
//    recovered exactly from its window of twisted section counts.
bool criterion_profile_roundtrip(std::string& detail) {
  long types = 0, failures = 0;
  std::string first;
  for (const SplittingType& e : all_types(1, kRankMax)) {
    ++types;
    std::map<Integer, Integer> window;
    for (Integer n = -e.largest() - 2; n <= -e.smallest() + 1; ++n) {
      window[n] = hbn::h0_twisted(e, n);
    }
    bool ok = false;
    try {
      ok = hbn::splitting_from_h0_profile(window) == e;
    } catch (const hbn::error&) {
      ok = false;
    }
    if (!ok) {
      ++failures;
      if (first.empty()) first = hbn::format_parts(e);
    }
  }
  detail = std::to_string(types) + " types";
  if (types != 4367) {
    detail += " (expected 4367: enumeration drifted)";
    return false;
  }
  if (failures) detail += "; first failure: " + first;
  return failures == 0;
}

// 6. Degeneration identities: no dependent divisors at full twist degree when
//    every part is nonnegative, no ramification correction at p = 0, and the
//    assembled numerator is always divisible by (p+1)!.
bool criterion_degenerations(std::string& detail) {
  long checks = 0, failures = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && first.empty()) first = what;
    if (!ok) ++failures;
  };
  for (int k = 2; k <= kRankMax; ++k) {
    for (long g = 0; g <= 24; ++g) {
      expect(hbn::deg_z(g, k, 0) == 0,
             "deg_z(p=0) at k = " + std::to_string(k) + ", g = " + std::to_string(g));
    }
  }
  for_each_datum([&](const BNDatum& d) {
    int nonneg = hbn::nonneg_parts(d.type());
    if (nonneg == d.rank()) {
      expect(hbn::dependent_count_closed(d, d.rank() - 1) == 0,
             "full-degree count at " + describe(d, d.rank() - 1));
    }
    if (nonneg >= 1) {
      int p = nonneg - 1;
      expect(hbn::divides(hbn::factorial(p + 1), hbn::assembled_bracket(d, p)),
             "bracket divisibility at " + describe(d, p));
    }
  });
  detail = std::to_string(checks) + " degeneration checks";
  if (failures) detail += "; first failure: " + first;
  return failures == 0;
}

// 7. The CLI verification sweep passes on the default domain and, for every
//    named fault injection, notices the fault and exits nonzero.
bool criterion_cli_self_test(std::string& detail) {
  int healthy = run_cli("verify");
  if (healthy != 0) {
    detail = "healthy default sweep exited " + std::to_string(healthy);
    return false;
  }
  std::string failures;
  for (const std::string& mutation : hbn::known_mutations()) {
    int code = run_cli("verify --kmax 4 --emin -3 --emax 3 --gslack 2 --mutate " + mutation);
    if (code != 1) {
      if (!failures.empty()) failures += ", ";
      failures += mutation + " exited " + std::to_string(code);
    }
  }
  if (!failures.empty()) {
    detail = "undetected fault injections: " + failures;
    return false;
  }
  detail = "default sweep clean; all " + std::to_string(hbn::known_mutations().size()) +
           " fault injections detected";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::string&);
  };
  const Criterion criteria[] = {
      {"count routes agree on the default sweep domain", criterion_count_routes_agree},
      {"count vanishing matches the classification", criterion_vanishing_matches_classification},
      {"decision procedures cohere", criterion_classifiers_cohere},
      {"frozen geometric families check out", criterion_model_families},
      {"section-count profiles determine the splitting type", criterion_profile_roundtrip},
      {"degeneration identities hold", criterion_degenerations},
      {"CLI verify passes clean and catches every fault injection", criterion_cli_self_test},
  };

  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    std::string detail;
    bool ok = criterion.run(detail);
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", index, criterion.name,
                detail.c_str());
    if (!ok) ++failed;
  }
  return failed;
}
