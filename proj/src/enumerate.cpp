#include "enumerate.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace hbn {

void validate_domain(const SweepDomain& domain, int lowest_k) {
  if (domain.k_min < lowest_k) {
    fail(errc::domain, "k_min must be at least " + std::to_string(lowest_k) + " here");
  }
  if (domain.k_min > domain.k_max) fail(errc::domain, "k_min exceeds k_max");
  if (domain.part_min > domain.part_max) fail(errc::domain, "part_min exceeds part_max");
  if (domain.genus_slack < 0) fail(errc::domain, "genus_slack must be nonnegative");
  if (domain.p_list) {
    for (int p : *domain.p_list) {
      if (p < 0) fail(errc::domain, "requested p values must be nonnegative");
    }
  }
}

std::vector<int> domain_ample_degrees(const SweepDomain& domain, int rank) {
  std::vector<int> ps;
  if (domain.p_list) {
    for (int p : *domain.p_list) {
      if (p >= 0 && p <= rank - 1) ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  } else {
    for (int p = 0; p <= rank - 1; ++p) ps.push_back(p);
  }
  return ps;
}

SplittingTypeEnumerator::SplittingTypeEnumerator(int k, int part_min, int part_max,
                                                 std::optional<Integer> degree)
    : k_(k), lo_(part_min), hi_(part_max), degree_(std::move(degree)),
      current_(static_cast<size_t>(std::max(k, 1)), part_min) {
  if (k < 1) fail(errc::domain, "enumeration needs k >= 1");
  if (part_min > part_max) fail(errc::domain, "empty part range");
}

bool SplittingTypeEnumerator::advance() {
  // Bump the rightmost part that can still grow and reset everything to its
  // right to the same value; this walks the nondecreasing tuples in
  // lexicographic order.
  for (int i = k_ - 1; i >= 0; --i) {
    if (current_[static_cast<size_t>(i)] < hi_) {
      long v = current_[static_cast<size_t>(i)] + 1;
      for (int j = i; j < k_; ++j) current_[static_cast<size_t>(j)] = v;
      return true;
    }
  }
  return false;
}

std::optional<SplittingType> SplittingTypeEnumerator::next() {
  while (!exhausted_) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      exhausted_ = true;
      break;
    }
    if (degree_) {
      long sum = 0;
      for (long v : current_) sum += v;
      if (Integer(sum) != *degree_) continue;
    }
    return SplittingType(std::vector<Integer>(current_.begin(), current_.end()));
  }
  return std::nullopt;
}

Integer splitting_type_count(int k, int part_min, int part_max) {
  if (k < 1) fail(errc::domain, "enumeration needs k >= 1");
  if (part_min > part_max) fail(errc::domain, "empty part range");
  return binomial(part_max - part_min + k, k);
}

DatumEnumerator::DatumEnumerator(const SweepDomain& domain) : domain_(domain), k_(domain.k_min) {
  validate_domain(domain_, 2);
  types_.emplace(k_, domain_.part_min, domain_.part_max);
}

std::optional<BNDatum> DatumEnumerator::next() {
  while (true) {
    if (!current_type_) {
      current_type_ = types_->next();
      if (!current_type_) {
        if (k_ >= domain_.k_max) return std::nullopt;
        ++k_;
        types_.emplace(k_, domain_.part_min, domain_.part_max);
        continue;
      }
      genus_offset_ = 0;
    }
    if (genus_offset_ > domain_.genus_slack) {
      current_type_.reset();
      continue;
    }
    Integer g = u_invariant(*current_type_) + genus_offset_;
    ++genus_offset_;
    return BNDatum(std::move(g), *current_type_);
  }
}

namespace {

const char* const kPropertyIds[] = {
    "u-twist-invariant",
    "h0-profile-roundtrip",
    "h0-profile-monotone",
    "balanced-rho-full",
    "plane-degree-families",
    "rel0-equals-bpf",
    "va-implies-rel1",
    "va-implies-bpf",
    "va-implies-birva",
    "chain-implies-va",
    "chain-implies-rel",
    "birat-chain-implies-birel",
    "conjecture-matches-va1",
    "clause-order-invariance",
    "rel-implies-birel",
    "rel-equals-birel-plus-count",
    "count-oracle-identity",
    "count-edge-equivalence",
    "count-nonnegative",
    "count-full-rank-zero",
    "degz-p0-zero",
    "bracket-divisibility",
    "balance-bound-when-zero",
    "enumeration-cardinality",
};

struct Selection {
  std::set<std::string> ids;
  bool on(const char* id) const { return ids.count(id) != 0; }
};

Selection resolve_selection(const std::vector<std::string>& requested) {
  Selection sel;
  if (requested.empty()) {
    for (const char* id : kPropertyIds) sel.ids.insert(id);
    return sel;
  }
  for (const std::string& id : requested) {
    bool known = false;
    for (const char* candidate : kPropertyIds) {
      if (id == candidate) {
        known = true;
        break;
      }
    }
    if (!known) fail(errc::parse, "unknown property '" + id + "'");
    sel.ids.insert(id);
  }
  return sel;
}

struct WorkerOutput {
  std::vector<Violation> violations;
  std::uint64_t data = 0;
  std::uint64_t checks = 0;
};

std::string bool_name(bool v) { return v ? "true" : "false"; }

class PropertyChecker {
 public:
  PropertyChecker(const Selection& sel, const SweepDomain& domain, Mutation mutation,
                  WorkerOutput& out)
      : sel_(sel), domain_(domain), mutation_(mutation), out_(out) {}

  void check_type(const SplittingType& e) {
    const Integer u = u_invariant(e);
    if (want("u-twist-invariant")) {
      for (long n : {-3L, -1L, 1L, 4L}) {
        if (u_invariant(twist(e, n)) != u) {
          report("u-twist-invariant", u, e, std::nullopt,
                 "u changes under twist by " + std::to_string(n), "u(twist(e,n)) = u(e)");
          break;
        }
      }
    }
    if (want("h0-profile-roundtrip")) {
      std::map<Integer, Integer> profile;
      Integer lo = -e.largest() - 2;
      Integer hi = -e.smallest() + 1;
      for (Integer n = lo; n <= hi; ++n) profile[n] = h0_twisted(e, n);
      bool ok = false;
      std::string observed = "profile not recovered";
      try {
        ok = splitting_from_h0_profile(profile) == e;
      } catch (const error& err) {
        observed = err.what();
      }
      if (!ok) report("h0-profile-roundtrip", u, e, std::nullopt, observed, format_parts(e));
    }
    if (want("h0-profile-monotone")) {
      Integer lo = -e.largest() - 2;
      Integer hi = -e.smallest() + 2;
      bool ok = true;
      Integer previous = h0_twisted(e, lo);
      for (Integer n = lo + 1; n <= hi && ok; ++n) {
        Integer value = h0_twisted(e, n);
        ok = value >= previous;
        previous = value;
      }
      // Past -e_1 every part contributes, so the count is linear in n.
      for (Integer n = -e.smallest(); n <= hi && ok; ++n) {
        ok = h0_twisted(e, n) == e.rank() * (n + 1) + degree(e);
      }
      if (!ok) {
        report("h0-profile-monotone", u, e, std::nullopt, "profile not monotone or tail not linear",
               "nondecreasing profile with linear tail k(n+1)+deg(e)");
      }
    }
    if (want("balanced-rho-full")) {
      if ((u == 0) != is_balanced(e)) {
        report("balanced-rho-full", u, e, std::nullopt,
               "u = " + to_decimal(u) + ", balanced = " + bool_name(is_balanced(e)),
               "u(e) = 0 exactly for balanced types (e_k - e_1 <= 1)");
      }
    }
  }

  void check_datum(const BNDatum& d) {
    const Decision bpf = basepoint_free(d);
    const Decision bva = birationally_va(d);
    const Decision va = very_ample(d);
    const Decision rel0 = rel_pva(d, 0);
    const Decision rel1 = rel_pva(d, 1);

    if (want("rel0-equals-bpf") && rel0.value != bpf.value) {
      report("rel0-equals-bpf", d, std::nullopt,
             "rel_pva(d,0) = " + bool_name(rel0.value) + ", bpf = " + bool_name(bpf.value),
             "identical verdicts");
    }
    if (want("va-implies-rel1") && va.value && !rel1.value) {
      report("va-implies-rel1", d, std::nullopt, "va true but rel_pva(d,1) false",
             "very ample members separate fibral pairs");
    }
    if (want("va-implies-bpf") && va.value && !bpf.value) {
      report("va-implies-bpf", d, std::nullopt, "va true but bpf false",
             "very ample members are basepoint-free");
    }
    if (want("va-implies-birva") && va.value && !bva.value) {
      report("va-implies-birva", d, std::nullopt, "va true but birationally_va false",
             "embeddings are birational embeddings");
    }
    if (want("chain-implies-va") && pva_sufficient(d, 1) && !va.value) {
      report("chain-implies-va", d, std::nullopt, "1-chain holds but va false",
             "the sufficient twist chain forces very ampleness");
    }
    if (want("conjecture-matches-va1")) {
      bool conjecture = conjectured_pva(d, 1);
      bool clause1 = very_ample_clauses(d)[0];
      if (conjecture != clause1) {
        report("conjecture-matches-va1", d, std::nullopt,
               "conjectured_pva(d,1) = " + bool_name(conjecture) + ", va clause 1 = " +
                   bool_name(clause1),
               "identical predicates at p = 1");
      }
    }
    if (want("clause-order-invariance")) {
      auto bpf_clauses = basepoint_free_clauses(d);
      check_disjunction("bpf", d, std::nullopt, bpf, bpf_clauses.data(), bpf_clauses.size(),
                        CaseLabel::bpf_subbundle);
      auto bva_clauses = birationally_va_clauses(d);
      check_disjunction("birationally_va", d, std::nullopt, bva, bva_clauses.data(),
                        bva_clauses.size(), CaseLabel::birat_va_1);
      auto va_clauses = very_ample_clauses(d);
      check_disjunction("very_ample", d, std::nullopt, va, va_clauses.data(), va_clauses.size(),
                        CaseLabel::va_1);
    }

    for (int p : domain_ample_degrees(domain_, d.rank())) check_ample_degree(d, p);
  }

 private:
  bool want(const char* id) {
    if (!sel_.on(id)) return false;
    ++out_.checks;
    return true;
  }

  void report(const char* property, const Integer& g, const SplittingType& e, std::optional<int> p,
              std::string observed, std::string expected) {
    out_.violations.push_back({property, g, e, p, std::move(observed), std::move(expected)});
  }

  void report(const char* property, const BNDatum& d, std::optional<int> p, std::string observed,
              std::string expected) {
    report(property, d.genus(), d.type(), p, std::move(observed), std::move(expected));
  }

  void check_disjunction(const std::string& theorem, const BNDatum& d, std::optional<int> p,
                         const Decision& decision, const bool* clauses, size_t count,
                         CaseLabel first_label) {
    bool any = false;
    CaseLabel expected_label = CaseLabel::none;
    for (size_t i = 0; i < count; ++i) {
      if (clauses[i]) {
        any = true;
        expected_label =
            static_cast<CaseLabel>(static_cast<int>(first_label) + static_cast<int>(i));
        break;
      }
    }
    if (decision.value != any || decision.case_label != expected_label) {
      report("clause-order-invariance", d, p,
             theorem + " verdict " + bool_name(decision.value) + " [" +
                 case_label_name(decision.case_label) + "]",
             "disjunction " + bool_name(any) + " [" + case_label_name(expected_label) + "]");
    }
  }

  void check_ample_degree(const BNDatum& d, int p) {
    const Decision rel = rel_pva(d, p);
    const Decision birel = birationally_rel_pva(d, p);
    const int nonneg = nonneg_parts(d.type());
    const bool count_in_domain = nonneg == p + 1;

    if (want("rel-implies-birel") && rel.value && !birel.value) {
      report("rel-implies-birel", d, p, "rel_pva true but birationally_rel_pva false",
             "relative very-ampleness implies its birational form");
    }
    if (want("clause-order-invariance")) {
      auto clauses = rel_pva_clauses(d, p);
      check_disjunction("rel_pva", d, p, rel, clauses.data(), clauses.size(), CaseLabel::rel_va_1);
    }
    if (want("birat-chain-implies-birel") && birat_pva_sufficient(d, p) && !birel.value) {
      report("birat-chain-implies-birel", d, p, "birational chain holds but birel false",
             "the birational twist chain is sufficient");
    }
    if (want("chain-implies-rel") && pva_sufficient(d, p) && !rel.value) {
      report("chain-implies-rel", d, p, "full chain holds but rel_pva false",
             "the twist chain is sufficient for relative very-ampleness");
    }
    if (want("degz-p0-zero") && p == 0) {
      Integer z = deg_z(d.genus(), d.rank(), 0);
      if (z != 0) {
        report("degz-p0-zero", d, p, "deg_z = " + to_decimal(z), "0 at p = 0");
      }
    }

    std::optional<Integer> n_value;
    if (count_in_domain) {
      Integer n_closed = dependent_count_closed(d, p, mutation_);
      Integer n_assembled = dependent_count_assembled(d, p);
      n_value = n_closed;
      if (want("count-oracle-identity") && n_closed != n_assembled) {
        report("count-oracle-identity", d, p,
               "closed = " + to_decimal(n_closed) + ", assembled = " + to_decimal(n_assembled),
               "equal values from both routes");
      }
      if (want("count-nonnegative") && n_closed < 0) {
        report("count-nonnegative", d, p, "N = " + to_decimal(n_closed), "N >= 0");
      }
      if (want("count-edge-equivalence")) {
        EdgeCase tag = edge_case_classify(d, p);
        if ((n_closed == 0) != (tag != EdgeCase::positive)) {
          report("count-edge-equivalence", d, p,
                 "N = " + to_decimal(n_closed) + ", tag = " + edge_case_name(tag),
                 "N vanishes exactly for genus-zero or rigid clauses 2-4");
        }
      }
      if (want("count-full-rank-zero") && p == d.rank() - 1 && n_closed != 0) {
        report("count-full-rank-zero", d, p, "N = " + to_decimal(n_closed),
               "N(d, k-1) = 0 when every part is nonnegative");
      }
      if (want("bracket-divisibility") &&
          !divides(factorial(p + 1), assembled_bracket(d, p))) {
        report("bracket-divisibility", d, p,
               "bracket = " + to_decimal(assembled_bracket(d, p)),
               "(p+1)! divides the assembled numerator");
      }
      if (want("balance-bound-when-zero") && n_closed == 0 && d.genus() > 0 &&
          rho_prime(d.genus(), d.type()) == 0) {
        long lhs = static_cast<long>(p + 1) * (d.rank() - 1 - p);
        if (lhs > d.rank() - 1) {
          report("balance-bound-when-zero", d, p,
                 "(p+1)(k-1-p) = " + std::to_string(lhs),
                 "at most k-1 = " + std::to_string(d.rank() - 1));
        }
      }
    }
    if (want("rel-equals-birel-plus-count")) {
      bool expected = nonneg >= p + 1 && (nonneg >= p + 2 || (n_value && *n_value == 0));
      if (rel.value != expected) {
        report("rel-equals-birel-plus-count", d, p,
               "rel_pva = " + bool_name(rel.value) + " vs recomputed " + bool_name(expected),
               "rel_pva holds iff birationally so and no dependent divisor obstructs");
      }
    }
  }

  const Selection& sel_;
  const SweepDomain& domain_;
  Mutation mutation_;
  WorkerOutput& out_;
};

void check_plane_families(const Selection& sel, const SweepDomain& domain, VerifyReport& report) {
  if (!sel.ids.count("plane-degree-families")) return;
  auto run = [&](const BNDatum& d, long expected_degree, CaseLabel expected_case) {
    ++report.checks;
    Integer deg_l = line_bundle_degree(d);
    Decision va = very_ample(d);
    bool ok = deg_l == expected_degree && plane_curve_genus(deg_l) == d.genus() && va.value &&
              va.case_label == expected_case;
    if (!ok) {
      report.violations.push_back(
          {"plane-degree-families", d.genus(), d.type(), std::nullopt,
           "degL = " + to_decimal(deg_l) + ", va = " + bool_name(va.value) + " [" +
               case_label_name(va.case_label) + "]",
           "degL = " + std::to_string(expected_degree) +
               " satisfying the plane genus-degree relation, case " +
               case_label_name(expected_case)});
    }
  };
  // Genus-1 plane cubics: (-1,...,-1,0,0,0) for every rank in range.
  for (int k = std::max(3, domain.k_min); k <= domain.k_max; ++k) {
    long lowest_used = (k > 3) ? -1 : 0;
    if (domain.part_min > lowest_used || domain.part_max < 0) continue;
    std::vector<Integer> parts(static_cast<size_t>(k - 3), Integer(-1));
    parts.insert(parts.end(), 3, Integer(0));
    run(BNDatum(1, SplittingType(std::move(parts))), 3, CaseLabel::va_6);
  }
  // Genus-3 plane quartics: (-2,-1,...,-1,0,0,0).
  for (int k = std::max(4, domain.k_min); k <= domain.k_max; ++k) {
    if (domain.part_min > -2 || domain.part_max < 0) continue;
    std::vector<Integer> parts{Integer(-2)};
    parts.insert(parts.end(), static_cast<size_t>(k - 4), Integer(-1));
    parts.insert(parts.end(), 3, Integer(0));
    run(BNDatum(3, SplittingType(std::move(parts))), 4, CaseLabel::va_7);
  }
  // The two rigid trigonal plane models.
  if (domain.k_min <= 3 && 3 <= domain.k_max && domain.part_min <= -1 && domain.part_max >= 1) {
    run(BNDatum(1, SplittingType({-1, 0, 1})), 3, CaseLabel::va_6);
  }
  if (domain.k_min <= 3 && 3 <= domain.k_max && domain.part_min <= -2 && domain.part_max >= 1) {
    run(BNDatum(3, SplittingType({-2, 0, 1})), 4, CaseLabel::va_7);
  }
}

}  // namespace

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> ids(std::begin(kPropertyIds), std::end(kPropertyIds));
  return ids;
}

VerifyReport run_verify(const VerifyOptions& options) {
  validate_domain(options.domain, 1);
  const Selection sel = resolve_selection(options.properties);
  const SweepDomain& domain = options.domain;

  VerifyReport report;
  report.domain = domain;
  report.mutation = options.mutation;
  for (const char* id : kPropertyIds) {
    if (sel.on(id)) report.properties.push_back(id);
  }

  std::vector<SplittingType> types;
  for (int k = domain.k_min; k <= domain.k_max; ++k) {
    size_t before = types.size();
    SplittingTypeEnumerator stream(k, domain.part_min, domain.part_max);
    while (auto t = stream.next()) types.push_back(std::move(*t));
    if (sel.on("enumeration-cardinality")) {
      ++report.checks;
      Integer expected = splitting_type_count(k, domain.part_min, domain.part_max);
      if (Integer(static_cast<unsigned long>(types.size() - before)) != expected) {
        report.violations.push_back(
            {"enumeration-cardinality", Integer(0),
             SplittingType(std::vector<Integer>(static_cast<size_t>(k), Integer(domain.part_min))),
             std::nullopt, std::to_string(types.size() - before) + " tuples enumerated",
             to_decimal(expected) + " nondecreasing tuples"});
      }
    }
  }
  report.types = types.size();

  check_plane_families(sel, domain, report);

  int jobs = options.jobs > 0 ? options.jobs
                              : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, static_cast<int>(std::max<size_t>(types.size(), 1)));

  std::vector<WorkerOutput> outputs(static_cast<size_t>(jobs));
  auto work = [&](int w) {
    WorkerOutput& out = outputs[static_cast<size_t>(w)];
    size_t begin = types.size() * static_cast<size_t>(w) / static_cast<size_t>(jobs);
    size_t end = types.size() * static_cast<size_t>(w + 1) / static_cast<size_t>(jobs);
    PropertyChecker checker(sel, domain, options.mutation, out);
    for (size_t i = begin; i < end; ++i) {
      const SplittingType& e = types[i];
      try {
        checker.check_type(e);
        Integer base = u_invariant(e);
        for (int offset = 0; offset <= domain.genus_slack; ++offset) {
          BNDatum d(base + offset, e);
          ++out.data;
          if (d.rank() >= 2) checker.check_datum(d);
        }
      } catch (const std::exception& ex) {
        out.violations.push_back({"internal-error", u_invariant(e), e, std::nullopt, ex.what(),
                                  "no exception during the sweep"});
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }

  for (WorkerOutput& out : outputs) {
    report.data += out.data;
    report.checks += out.checks;
    std::move(out.violations.begin(), out.violations.end(), std::back_inserter(report.violations));
  }
  return report;
}

}  // namespace hbn
