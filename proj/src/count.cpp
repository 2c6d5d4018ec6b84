#include "count.hpp"

namespace hbn {
namespace {

void require_count_domain(const BNDatum& d, int p) {
  if (d.rank() < 2) fail(errc::domain, "counts require rank k >= 2");
  AmpleDegree validated(p, d.type());
  (void)validated;
}

// e_{k-p} + ... + e_k: sum of the top p+1 parts.
Integer top_part_sum(const SplittingType& e, int p) {
  const int k = e.rank();
  Integer sum = 0;
  for (int i = k - p; i <= k; ++i) sum += e.part(i);
  return sum;
}

}  // namespace

const char* edge_case_name(EdgeCase value) {
  switch (value) {
    case EdgeCase::genus_zero: return "GenusZero";
    case EdgeCase::rel_va_case2: return "RelVACase2";
    case EdgeCase::rel_va_case3: return "RelVACase3";
    case EdgeCase::rel_va_case4: return "RelVACase4";
    case EdgeCase::positive: return "Positive";
    case EdgeCase::not_applicable: return "NotApplicable";
  }
  return "NotApplicable";
}

Mutation mutation_from_name(const std::string& name) {
  for (int m = 0; m <= static_cast<int>(Mutation::flip_sign_3); ++m) {
    if (name == mutation_name(static_cast<Mutation>(m))) return static_cast<Mutation>(m);
  }
  fail(errc::parse, "unknown mutation '" + name + "'");
}

const char* mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::shift_binom_1: return "shift-binom-1";
    case Mutation::shift_binom_2: return "shift-binom-2";
    case Mutation::shift_binom_3: return "shift-binom-3";
    case Mutation::flip_sign_2: return "flip-sign-2";
    case Mutation::flip_sign_3: return "flip-sign-3";
  }
  return "none";
}

const std::vector<std::string>& known_mutations() {
  static const std::vector<std::string> names = {
      "shift-binom-1", "shift-binom-2", "shift-binom-3", "flip-sign-2", "flip-sign-3"};
  return names;
}

Integer deg_z(const Integer& g, int k, int p) {
  if (k < 2 || p < 0 || p > k - 1 || g < 0) {
    fail(errc::domain, "deg_z needs k >= 2, 0 <= p <= k-1, g >= 0");
  }
  if (p == 0) return 0;
  return (2 * g - 2 + 2 * k) * binomial(p + 1, 2) * factorial_quotient(k - 2, k - p - 1);
}

Integer deg_h(int k, int p) {
  if (k < 2 || p < 0 || p > k - 1) fail(errc::domain, "deg_h needs k >= 2, 0 <= p <= k-1");
  return factorial_quotient(k, k - p - 1);
}

Integer deg_pi(int k, int p) {
  if (k < 2 || p < 0 || p > k - 1) fail(errc::domain, "deg_pi needs k >= 2, 0 <= p <= k-1");
  return factorial_quotient(k - 1, k - p - 1);
}

Integer dependent_count_closed(const BNDatum& d, int p, Mutation m) {
  require_count_domain(d, p);
  const int k = d.rank();
  const Integer& g = d.genus();

  Integer coeff1 = binomial(m == Mutation::shift_binom_1 ? k : k - 1, p);
  Integer coeff2 = binomial(m == Mutation::shift_binom_2 ? k + 1 : k, p + 1);
  Integer coeff3 = binomial(k - 2, m == Mutation::shift_binom_3 ? p : p - 1);
  int sign2 = (m == Mutation::flip_sign_2) ? 1 : -1;
  int sign3 = (m == Mutation::flip_sign_3) ? 1 : -1;

  return coeff1 * line_bundle_degree(d) + sign2 * coeff2 * top_part_sum(d.type(), p) +
         sign3 * (g - 1 + k) * coeff3;
}

Integer assembled_bracket(const BNDatum& d, int p) {
  require_count_domain(d, p);
  const int k = d.rank();
  return (p + 1) * deg_pi(k, p) * line_bundle_degree(d) -
         deg_h(k, p) * top_part_sum(d.type(), p) - deg_z(d.genus(), k, p);
}

Integer dependent_count_assembled(const BNDatum& d, int p) {
  return exact_quotient(assembled_bracket(d, p), factorial(p + 1));
}

EdgeCase edge_case_classify(const BNDatum& d, int p) {
  require_count_domain(d, p);
  if (nonneg_parts(d.type()) != p + 1) {
    fail(errc::nonneg_parts_precondition,
         "edge classification expects exactly p+1 nonnegative parts");
  }
  if (d.genus() == 0) return EdgeCase::genus_zero;
  auto clauses = rel_pva_clauses(d, p);
  if (clauses[1]) return EdgeCase::rel_va_case2;
  if (clauses[2]) return EdgeCase::rel_va_case3;
  if (clauses[3]) return EdgeCase::rel_va_case4;
  return EdgeCase::positive;
}

CountReport dependent_divisor_count(const BNDatum& d, int p, CountDomain domain) {
  require_count_domain(d, p);
  const bool in_domain = nonneg_parts(d.type()) == p + 1;
  if (!in_domain && domain == CountDomain::strict) {
    fail(errc::nonneg_parts_precondition,
         "count requires exactly p+1 nonnegative parts (have " +
             std::to_string(nonneg_parts(d.type())) + ", p = " + std::to_string(p) + ")");
  }
  CountReport report;
  report.n_closed = dependent_count_closed(d, p);
  report.n_assembled = dependent_count_assembled(d, p);
  if (report.n_closed != report.n_assembled) {
    fail(errc::internal, "count routes disagree: closed " + to_decimal(report.n_closed) +
                             " vs assembled " + to_decimal(report.n_assembled));
  }
  report.deg_z = deg_z(d.genus(), d.rank(), p);
  report.deg_h = deg_h(d.rank(), p);
  report.deg_pi = deg_pi(d.rank(), p);
  report.deg_l = line_bundle_degree(d);
  report.edge_case = in_domain ? edge_case_classify(d, p) : EdgeCase::not_applicable;
  return report;
}

Integer directrix_intersection(const Integer& g, const Integer& e2) { return g + 1 - e2; }

}  // namespace hbn
