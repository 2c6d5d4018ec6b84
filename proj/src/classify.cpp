#include "classify.hpp"

#include <algorithm>

namespace hbn {
namespace {

void require_classifiable(const BNDatum& d) {
  if (d.rank() < 2) {
    fail(errc::rank_too_small, "classification requires rank k >= 2 (k=1 pushforwards are "
                               "line bundles on the base and carry no fiber geometry)");
  }
}

void require_ample_degree(const BNDatum& d, int p) {
  AmpleDegree validated(p, d.type());
  (void)validated;
}

// True when the tuple is m >= 0 copies of `filler` followed by exactly three
// zeros, optionally preceded by a single `head` part (used by the plane-curve
// clauses of very_ample).
bool matches_tail_pattern(const SplittingType& e, const std::optional<Integer>& head,
                          const Integer& filler) {
  const auto& parts = e.parts();
  size_t i = 0;
  if (head) {
    if (parts.size() < 4 || parts[0] != *head) return false;
    i = 1;
  } else if (parts.size() < 3) {
    return false;
  }
  size_t zeros_from = parts.size() - 3;
  for (; i < zeros_from; ++i) {
    if (parts[i] != filler) return false;
  }
  for (; i < parts.size(); ++i) {
    if (parts[i] != 0) return false;
  }
  return true;
}

Decision decide(const bool* clauses, size_t count, CaseLabel first_label,
                const char* const* notes) {
  Decision decision;
  for (size_t i = 0; i < count; ++i) {
    if (clauses[i]) {
      decision.value = true;
      decision.case_label = static_cast<CaseLabel>(static_cast<int>(first_label) + static_cast<int>(i));
      decision.note = notes[i];
      return decision;
    }
  }
  decision.note = "no clause applies";
  return decision;
}

}  // namespace

const char* case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::none: return "None";
    case CaseLabel::bpf_subbundle: return "Bpf.Subbundle";
    case CaseLabel::bpf_pullback: return "Bpf.Pullback";
    case CaseLabel::birel_nonneg: return "BiRelVA.Nonneg";
    case CaseLabel::rel_va_1: return "RelVA.Case1";
    case CaseLabel::rel_va_2: return "RelVA.Case2";
    case CaseLabel::rel_va_3: return "RelVA.Case3";
    case CaseLabel::rel_va_4: return "RelVA.Case4";
    case CaseLabel::rel_va_5: return "RelVA.Case5";
    case CaseLabel::birat_va_1: return "BirVA.Case1";
    case CaseLabel::birat_va_2: return "BirVA.Case2";
    case CaseLabel::birat_va_3: return "BirVA.Case3";
    case CaseLabel::va_1: return "VA.Case1";
    case CaseLabel::va_2: return "VA.Case2";
    case CaseLabel::va_3: return "VA.Case3";
    case CaseLabel::va_4: return "VA.Case4";
    case CaseLabel::va_5: return "VA.Case5";
    case CaseLabel::va_6: return "VA.Case6";
    case CaseLabel::va_7: return "VA.Case7";
  }
  return "None";
}

int case_number(CaseLabel label) {
  switch (label) {
    case CaseLabel::none: return 0;
    case CaseLabel::bpf_subbundle: return 1;
    case CaseLabel::bpf_pullback: return 2;
    case CaseLabel::birel_nonneg: return 1;
    case CaseLabel::rel_va_1: return 1;
    case CaseLabel::rel_va_2: return 2;
    case CaseLabel::rel_va_3: return 3;
    case CaseLabel::rel_va_4: return 4;
    case CaseLabel::rel_va_5: return 5;
    case CaseLabel::birat_va_1: return 1;
    case CaseLabel::birat_va_2: return 2;
    case CaseLabel::birat_va_3: return 3;
    case CaseLabel::va_1: return 1;
    case CaseLabel::va_2: return 2;
    case CaseLabel::va_3: return 3;
    case CaseLabel::va_4: return 4;
    case CaseLabel::va_5: return 5;
    case CaseLabel::va_6: return 6;
    case CaseLabel::va_7: return 7;
  }
  return 0;
}

std::array<bool, 2> basepoint_free_clauses(const BNDatum& d) {
  require_classifiable(d);
  const SplittingType& e = d.type();
  const int k = e.rank();
  bool subbundle = e.part(k - 1) >= 0;
  bool pullback = e.largest() >= 0 && e.part(k - 1) - e.smallest() <= 1 &&
                  rho_prime(d.genus(), e) == 0;
  return {subbundle, pullback};
}

Decision basepoint_free(const BNDatum& d) {
  auto clauses = basepoint_free_clauses(d);
  static const char* const notes[] = {
      "O + (nonnegative part) splits off: sections of the pushforward already generate",
      "rigid balanced-below-top type: the general member is pulled back from the line",
  };
  Decision decision = decide(clauses.data(), clauses.size(), CaseLabel::bpf_subbundle, notes);
  if (decision.case_label == CaseLabel::bpf_pullback) {
    decision.pullback_twist = d.type().largest();
  }
  return decision;
}

std::array<bool, 5> rel_pva_clauses(const BNDatum& d, int p) {
  require_classifiable(d);
  require_ample_degree(d, p);
  const SplittingType& e = d.type();
  const int k = e.rank();
  const int nonneg = nonneg_parts(e);
  bool zero_rho = rho_prime(d.genus(), e) == 0;
  bool c1 = nonneg >= p + 2;
  bool c2 = p == 0 && e.largest() >= 0 && e.part(k - 1) - e.smallest() <= 1 && zero_rho;
  bool c3 = p == k - 2 && e.part(2) >= 0 && e.largest() - e.part(2) <= 1 && zero_rho;
  bool c4 = p == k - 1 && e.smallest() >= 0;
  bool c5 = d.genus() == 0 && nonneg >= p + 1;
  return {c1, c2, c3, c4, c5};
}

Decision rel_pva(const BNDatum& d, int p) {
  auto clauses = rel_pva_clauses(d, p);
  static const char* const notes[] = {
      "at least p+2 nonnegative parts",
      "p = 0 rigid type with balanced lower parts (pullback geometry)",
      "p = k-2 rigid type with e_2 >= 0 and balanced top",
      "p = k-1 with every part nonnegative",
      "genus 0: birational relative very-ampleness is automatic",
  };
  return decide(clauses.data(), clauses.size(), CaseLabel::rel_va_1, notes);
}

Decision birationally_rel_pva(const BNDatum& d, int p) {
  require_classifiable(d);
  require_ample_degree(d, p);
  Decision decision;
  if (nonneg_parts(d.type()) >= p + 1) {
    decision.value = true;
    decision.case_label = CaseLabel::birel_nonneg;
    decision.note = "at least p+1 nonnegative parts";
  } else {
    decision.note = "fewer than p+1 nonnegative parts";
  }
  return decision;
}

std::array<bool, 3> birationally_va_clauses(const BNDatum& d) {
  require_classifiable(d);
  const SplittingType& e = d.type();
  const int k = e.rank();
  const int nonneg = nonneg_parts(e);
  bool c1 = nonneg >= 3;
  bool c2 = e.part(k - 1) >= 0 && e.largest() >= 1;
  bool c3 = d.genus() == 0 && nonneg >= 2;
  return {c1, c2, c3};
}

Decision birationally_va(const BNDatum& d) {
  auto clauses = birationally_va_clauses(d);
  static const char* const notes[] = {
      "at least 3 nonnegative parts",
      "e_{k-1} >= 0 and e_k >= 1",
      "genus 0 with at least 2 nonnegative parts",
  };
  return decide(clauses.data(), clauses.size(), CaseLabel::birat_va_1, notes);
}

std::array<bool, 7> very_ample_clauses(const BNDatum& d) {
  require_classifiable(d);
  const SplittingType& e = d.type();
  const int k = e.rank();
  const Integer& g = d.genus();
  bool zero_rho = rho_prime(g, e) == 0;
  bool c1 = nonneg_parts(e) >= 3 && series_rank(e) >= 3;
  bool c2 = k == 3 && e.part(2) >= 1 && e.part(3) - e.part(2) <= 1 && zero_rho;
  bool c3 = k == 2 && e.smallest() >= 1;
  bool c4 = k == 2 && e.smallest() == 0 && (e.largest() == g || e.largest() == g + 1);
  bool c5 = g == 0 && nonneg_parts(e) >= 2;
  bool c6 = g == 1 && (e == SplittingType({-1, 0, 1}) ||
                       matches_tail_pattern(e, std::nullopt, -1));
  bool c7 = g == 3 && (e == SplittingType({-2, 0, 1}) ||
                       matches_tail_pattern(e, Integer(-2), Integer(-1)));
  return {c1, c2, c3, c4, c5, c6, c7};
}

Decision very_ample(const BNDatum& d) {
  auto clauses = very_ample_clauses(d);
  static const char* const notes[] = {
      "at least 3 nonnegative parts and r >= 3",
      "trigonal rigid type with e_2 >= 1 and balanced top",
      "hyperelliptic with e_1 >= 1",
      "hyperelliptic exceptional pair e = (0, g) or (0, g+1)",
      "genus 0 with at least 2 nonnegative parts",
      "genus 1 plane-cubic type (-1,...,-1,0,0,0) with any number of -1 parts, or (-1,0,1)",
      "genus 3 plane-quartic type (-2,-1,...,-1,0,0,0) with any number of -1 parts, or (-2,0,1)",
  };
  return decide(clauses.data(), clauses.size(), CaseLabel::va_1, notes);
}

bool pva_sufficient(const BNDatum& d, int p) {
  require_classifiable(d);
  require_ample_degree(d, p);
  const SplittingType& e = d.type();
  const int k = e.rank();
  if (k < p + 2) return false;
  // e_{k-j} >= p for j = 0,1 and e_{k-j} >= p - j + 1 for j = 2..p+1.
  for (int j = 0; j <= p + 1; ++j) {
    Integer bound = (j <= 1) ? Integer(p) : Integer(p - j + 1);
    if (e.part(k - j) < bound) return false;
  }
  return true;
}

bool birat_pva_sufficient(const BNDatum& d, int p) {
  require_classifiable(d);
  require_ample_degree(d, p);
  const SplittingType& e = d.type();
  const int k = e.rank();
  for (int j = 0; j <= p; ++j) {
    if (e.part(k - j) < p - j) return false;
  }
  return true;
}

bool conjectured_pva(const BNDatum& d, int p) {
  require_classifiable(d);
  require_ample_degree(d, p);
  return nonneg_parts(d.type()) >= p + 2 && series_rank(d.type()) >= 2 * p + 1;
}

Integer classical_rho(const Integer& g, const Integer& r, const Integer& d) {
  return g - (r + 1) * (g - d + r);
}

bool classical_va(const Integer& g, const Integer& r, const Integer& d) {
  if (g < 0 || r < 0 || d < 0) fail(errc::domain, "classical_va needs g, r, d >= 0");
  if (classical_rho(g, r, d) < 0) {
    fail(errc::empty_locus, "rho(g, r, d) < 0: a general curve carries no such series");
  }
  if (r >= 3) return true;
  auto is = [&](long gg, long rr, long dd) { return g == gg && r == rr && d == dd; };
  return is(0, 1, 1) || is(0, 2, 2) || is(1, 2, 3) || is(3, 2, 4);
}

}  // namespace hbn
