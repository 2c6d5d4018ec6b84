#include "hbn/hbn.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include "report.hpp"

namespace {

thread_local std::string g_last_error;

hbn_status status_of(hbn::errc code) {
  using hbn::errc;
  switch (code) {
    case errc::parse: return HBN_ERR_PARSE;
    case errc::unsorted_parts: return HBN_ERR_UNSORTED_PARTS;
    case errc::empty_type: return HBN_ERR_EMPTY_TYPE;
    case errc::negative_genus: return HBN_ERR_NEGATIVE_GENUS;
    case errc::empty_locus: return HBN_ERR_EMPTY_LOCUS;
    case errc::rank_too_small: return HBN_ERR_RANK_TOO_SMALL;
    case errc::bad_ample_degree: return HBN_ERR_BAD_AMPLE_DEGREE;
    case errc::nonneg_parts_precondition: return HBN_ERR_NONNEG_PARTS;
    case errc::inconsistent_profile: return HBN_ERR_INCONSISTENT_PROFILE;
    case errc::domain: return HBN_ERR_DOMAIN;
    case errc::internal: return HBN_ERR_INTERNAL;
  }
  return HBN_ERR_INTERNAL;
}

// Runs the body and converts the exception taxonomy to status codes.
template <typename Fn>
hbn_status guarded(Fn&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const hbn::error& err) {
    g_last_error = err.what();
    return status_of(err.code());
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return HBN_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return HBN_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void fill_decision(const hbn::Decision& decision, hbn_decision* out) {
  out->value = decision.value ? 1 : 0;
  out->case_number = hbn::case_number(decision.case_label);
  std::snprintf(out->case_label, sizeof out->case_label, "%s",
                hbn::case_label_name(decision.case_label));
}

hbn::Format format_of(hbn_format format) {
  switch (format) {
    case HBN_FORMAT_JSON: return hbn::Format::json;
    case HBN_FORMAT_CSV: return hbn::Format::csv;
    case HBN_FORMAT_PLAIN: return hbn::Format::plain;
  }
  hbn::fail(hbn::errc::parse, "unknown format selector");
}

hbn::SweepDomain domain_of(const hbn_domain& domain) {
  hbn::SweepDomain out;
  out.k_min = domain.k_min;
  out.k_max = domain.k_max;
  out.part_min = domain.part_min;
  out.part_max = domain.part_max;
  out.genus_slack = domain.genus_slack;
  if (domain.ps && domain.n_ps > 0) {
    out.p_list = std::vector<int>(domain.ps, domain.ps + domain.n_ps);
  }
  return out;
}

std::vector<std::string> split_csv(const char* text) {
  std::vector<std::string> out;
  if (!text || !*text) return out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto begin = token.find_first_not_of(" \t");
    auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      hbn::fail(hbn::errc::parse, "empty entry in list");
    }
    out.push_back(token.substr(begin, end - begin + 1));
  }
  return out;
}

}  // namespace

struct hbn_datum {
  hbn::BNDatum datum;
  bool reordered = false;
};

struct hbn_type_stream {
  hbn::SplittingTypeEnumerator stream;
};

struct hbn_table_stream {
  hbn::SweepDomain domain;
  hbn::Format format;
  hbn::DatumEnumerator data;
  int k_max;
  bool header_pending;
};

extern "C" {

const char* hbn_status_name(hbn_status status) {
  switch (status) {
    case HBN_OK: return "ok";
    case HBN_END: return "end-of-stream";
    case HBN_ERR_NULL_ARGUMENT: return "null-argument";
    case HBN_ERR_PARSE: return "parse-error";
    case HBN_ERR_UNSORTED_PARTS: return "unsorted-parts";
    case HBN_ERR_EMPTY_TYPE: return "empty-type";
    case HBN_ERR_NEGATIVE_GENUS: return "negative-genus";
    case HBN_ERR_EMPTY_LOCUS: return "empty-locus";
    case HBN_ERR_RANK_TOO_SMALL: return "rank-too-small";
    case HBN_ERR_BAD_AMPLE_DEGREE: return "bad-ample-degree";
    case HBN_ERR_NONNEG_PARTS: return "nonneg-parts-precondition";
    case HBN_ERR_INCONSISTENT_PROFILE: return "inconsistent-profile";
    case HBN_ERR_DOMAIN: return "domain-violation";
    case HBN_ERR_VIOLATIONS: return "violations-found";
    case HBN_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* hbn_last_error_message(void) { return g_last_error.c_str(); }

const char* hbn_version(void) { return "1.0.0"; }

void hbn_string_free(char* text) { std::free(text); }

hbn_status hbn_datum_create(const char* genus, const char* parts, int sort_parts,
                            hbn_datum** out) {
  if (!genus || !parts || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::Integer g = hbn::parse_integer(genus);
    std::vector<hbn::Integer> raw = hbn::parse_parts(parts);
    bool sorted = std::is_sorted(raw.begin(), raw.end());
    if (!sorted && !sort_parts) {
      hbn::fail(hbn::errc::unsorted_parts,
                "parts not nondecreasing (pass the sort option to normalize)");
    }
    hbn::SplittingType e = sorted ? hbn::SplittingType(std::move(raw))
                                  : hbn::SplittingType::sorted(std::move(raw));
    *out = new hbn_datum{hbn::BNDatum(std::move(g), std::move(e)), !sorted};
    return HBN_OK;
  });
}

void hbn_datum_destroy(hbn_datum* datum) { delete datum; }

int hbn_datum_rank(const hbn_datum* datum) { return datum ? datum->datum.rank() : 0; }

int hbn_datum_was_reordered(const hbn_datum* datum) {
  return datum && datum->reordered ? 1 : 0;
}

hbn_status hbn_datum_invariant(const hbn_datum* datum, hbn_invariant which, char** out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::Invariants inv = hbn::compute_invariants(datum->datum);
    hbn::Integer value;
    switch (which) {
      case HBN_INV_GENUS: value = datum->datum.genus(); break;
      case HBN_INV_RANK: value = inv.k; break;
      case HBN_INV_DEG_E: value = inv.deg_e; break;
      case HBN_INV_U: value = inv.u; break;
      case HBN_INV_RHO: value = inv.rho; break;
      case HBN_INV_H0: value = inv.h0; break;
      case HBN_INV_R: value = inv.r; break;
      case HBN_INV_DEG_L: value = inv.deg_l; break;
      case HBN_INV_NONNEG_PARTS: value = inv.nonneg; break;
      default: hbn::fail(hbn::errc::parse, "unknown invariant selector");
    }
    *out = copy_string(hbn::to_decimal(value));
    return HBN_OK;
  });
}

hbn_status hbn_h0_twisted(const char* parts, const char* n, char** out) {
  if (!parts || !n || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::SplittingType e(hbn::parse_parts(parts));
    *out = copy_string(hbn::to_decimal(hbn::h0_twisted(e, hbn::parse_integer(n))));
    return HBN_OK;
  });
}

hbn_status hbn_twist(const char* parts, const char* n, char** out) {
  if (!parts || !n || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::SplittingType e(hbn::parse_parts(parts));
    hbn::SplittingType shifted = hbn::twist(e, hbn::parse_integer(n));
    std::string text;
    for (int i = 0; i < shifted.rank(); ++i) {
      if (i) text += ',';
      text += hbn::to_decimal(shifted.parts()[static_cast<size_t>(i)]);
    }
    *out = copy_string(text);
    return HBN_OK;
  });
}

hbn_status hbn_type_from_h0_profile(const char* samples, char** out) {
  if (!samples || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    std::map<hbn::Integer, hbn::Integer> profile;
    for (const std::string& entry : split_csv(samples)) {
      auto colon = entry.find(':');
      if (colon == std::string::npos) {
        hbn::fail(hbn::errc::parse, "profile entries look like twist:h0");
      }
      profile[hbn::parse_integer(entry.substr(0, colon))] =
          hbn::parse_integer(entry.substr(colon + 1));
    }
    hbn::SplittingType e = hbn::splitting_from_h0_profile(profile);
    std::string text;
    for (int i = 0; i < e.rank(); ++i) {
      if (i) text += ',';
      text += hbn::to_decimal(e.parts()[static_cast<size_t>(i)]);
    }
    *out = copy_string(text);
    return HBN_OK;
  });
}

hbn_status hbn_basepoint_free(const hbn_datum* datum, hbn_decision* out, char** pullback_twist) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  if (pullback_twist) *pullback_twist = nullptr;
  return guarded([&]() {
    hbn::Decision decision = hbn::basepoint_free(datum->datum);
    fill_decision(decision, out);
    if (pullback_twist && decision.pullback_twist) {
      *pullback_twist = copy_string(hbn::to_decimal(*decision.pullback_twist));
    }
    return HBN_OK;
  });
}

hbn_status hbn_birationally_rel_pva(const hbn_datum* datum, int p, hbn_decision* out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    fill_decision(hbn::birationally_rel_pva(datum->datum, p), out);
    return HBN_OK;
  });
}

hbn_status hbn_rel_pva(const hbn_datum* datum, int p, hbn_decision* out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    fill_decision(hbn::rel_pva(datum->datum, p), out);
    return HBN_OK;
  });
}

hbn_status hbn_birationally_va(const hbn_datum* datum, hbn_decision* out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    fill_decision(hbn::birationally_va(datum->datum), out);
    return HBN_OK;
  });
}

hbn_status hbn_very_ample(const hbn_datum* datum, hbn_decision* out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    fill_decision(hbn::very_ample(datum->datum), out);
    return HBN_OK;
  });
}

hbn_status hbn_pva_sufficient(const hbn_datum* datum, int p, int birational, int* holds) {
  if (!datum || !holds) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    *holds = (birational ? hbn::birat_pva_sufficient(datum->datum, p)
                         : hbn::pva_sufficient(datum->datum, p))
                 ? 1
                 : 0;
    return HBN_OK;
  });
}

hbn_status hbn_conjectured_pva(const hbn_datum* datum, int p, int* holds) {
  if (!datum || !holds) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    *holds = hbn::conjectured_pva(datum->datum, p) ? 1 : 0;
    return HBN_OK;
  });
}

hbn_status hbn_classical_va(const char* g, const char* r, const char* d, int* value) {
  if (!g || !r || !d || !value) return HBN_ERR_NULL_ARGUMENT;
  return guarded([&]() {
    *value = hbn::classical_va(hbn::parse_integer(g), hbn::parse_integer(r),
                               hbn::parse_integer(d))
                 ? 1
                 : 0;
    return HBN_OK;
  });
}

hbn_status hbn_classical_rho(const char* g, const char* r, const char* d, char** out) {
  if (!g || !r || !d || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    *out = copy_string(hbn::to_decimal(hbn::classical_rho(
        hbn::parse_integer(g), hbn::parse_integer(r), hbn::parse_integer(d))));
    return HBN_OK;
  });
}

hbn_status hbn_dependent_divisor_count(const hbn_datum* datum, int p, hbn_count* out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  std::memset(out, 0, sizeof *out);
  return guarded([&]() {
    hbn::CountReport report = hbn::dependent_divisor_count(datum->datum, p);
    out->n = copy_string(hbn::to_decimal(report.n_closed));
    out->deg_z = copy_string(hbn::to_decimal(report.deg_z));
    out->deg_h = copy_string(hbn::to_decimal(report.deg_h));
    out->deg_pi = copy_string(hbn::to_decimal(report.deg_pi));
    out->deg_l = copy_string(hbn::to_decimal(report.deg_l));
    std::snprintf(out->edge_case, sizeof out->edge_case, "%s",
                  hbn::edge_case_name(report.edge_case));
    return HBN_OK;
  });
}

void hbn_count_clear(hbn_count* count) {
  if (!count) return;
  std::free(count->n);
  std::free(count->deg_z);
  std::free(count->deg_h);
  std::free(count->deg_pi);
  std::free(count->deg_l);
  std::memset(count, 0, sizeof *count);
}

hbn_status hbn_directrix_intersection(const char* g, const char* e2, char** out) {
  if (!g || !e2 || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    *out = copy_string(hbn::to_decimal(
        hbn::directrix_intersection(hbn::parse_integer(g), hbn::parse_integer(e2))));
    return HBN_OK;
  });
}

hbn_status hbn_classify_report(const hbn_datum* datum, const int* ps, size_t n_ps,
                               hbn_format format, char** out) {
  if (!datum || !out || (n_ps > 0 && !ps)) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    std::vector<int> degrees;
    if (ps && n_ps > 0) degrees.assign(ps, ps + n_ps);
    hbn::ClassifyReport report =
        hbn::build_classify_report(datum->datum, degrees, datum->reordered);
    *out = copy_string(hbn::render_classify(report, format_of(format)));
    return HBN_OK;
  });
}

hbn_status hbn_count_report(const hbn_datum* datum, int p, hbn_format format, char** out) {
  if (!datum || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::CountReport count = hbn::dependent_divisor_count(datum->datum, p);
    *out = copy_string(hbn::render_count(datum->datum, p, count, format_of(format)));
    return HBN_OK;
  });
}

hbn_status hbn_type_stream_create(int k, int part_min, int part_max, const char* degree_or_null,
                                  hbn_type_stream** out) {
  if (!out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    std::optional<hbn::Integer> degree;
    if (degree_or_null && *degree_or_null) degree = hbn::parse_integer(degree_or_null);
    *out = new hbn_type_stream{
        hbn::SplittingTypeEnumerator(k, part_min, part_max, std::move(degree))};
    return HBN_OK;
  });
}

hbn_status hbn_type_stream_next(hbn_type_stream* stream, hbn_format format, char** line) {
  if (!stream || !line) return HBN_ERR_NULL_ARGUMENT;
  *line = nullptr;
  return guarded([&]() {
    std::optional<hbn::SplittingType> e = stream->stream.next();
    if (!e) return HBN_END;
    *line = copy_string(hbn::render_type_line(*e, format_of(format)));
    return HBN_OK;
  });
}

void hbn_type_stream_destroy(hbn_type_stream* stream) { delete stream; }

hbn_status hbn_table_stream_create(const hbn_domain* domain, hbn_format format,
                                   hbn_table_stream** out) {
  if (!domain || !out) return HBN_ERR_NULL_ARGUMENT;
  *out = nullptr;
  return guarded([&]() {
    hbn::SweepDomain sweep = domain_of(*domain);
    hbn::Format fmt = format_of(format);
    if (fmt == hbn::Format::plain) {
      hbn::fail(hbn::errc::parse, "table output is json or csv");
    }
    *out = new hbn_table_stream{sweep, fmt, hbn::DatumEnumerator(sweep), sweep.k_max,
                                fmt == hbn::Format::csv};
    return HBN_OK;
  });
}

hbn_status hbn_table_stream_next(hbn_table_stream* stream, char** line) {
  if (!stream || !line) return HBN_ERR_NULL_ARGUMENT;
  *line = nullptr;
  return guarded([&]() {
    if (stream->header_pending) {
      stream->header_pending = false;
      std::vector<int> ps = hbn::domain_ample_degrees(stream->domain, stream->k_max);
      *line = copy_string(hbn::table_csv_header(stream->k_max, ps));
      return HBN_OK;
    }
    std::optional<hbn::BNDatum> d = stream->data.next();
    if (!d) return HBN_END;
    std::vector<int> row_ps = hbn::domain_ample_degrees(stream->domain, d->rank());
    hbn::ClassifyReport report = hbn::build_classify_report(*d, row_ps, false);
    if (stream->format == hbn::Format::csv) {
      std::vector<int> ps = hbn::domain_ample_degrees(stream->domain, stream->k_max);
      *line = copy_string(hbn::table_csv_row(report, stream->k_max, ps));
    } else {
      *line = copy_string(hbn::render_classify(report, hbn::Format::json));
    }
    return HBN_OK;
  });
}

void hbn_table_stream_destroy(hbn_table_stream* stream) { delete stream; }

hbn_status hbn_verify(const hbn_verify_options* options, hbn_format format, char** report,
                      long* violations) {
  if (!options || !report) return HBN_ERR_NULL_ARGUMENT;
  *report = nullptr;
  if (violations) *violations = 0;
  return guarded([&]() {
    hbn::VerifyOptions opts;
    opts.domain = domain_of(options->domain);
    opts.properties = split_csv(options->properties);
    if (options->mutation && *options->mutation) {
      opts.mutation = hbn::mutation_from_name(options->mutation);
    }
    opts.jobs = options->jobs;
    hbn::VerifyReport result = hbn::run_verify(opts);
    *report = copy_string(hbn::render_verify(result, format_of(format)));
    if (violations) *violations = static_cast<long>(result.violations.size());
    return result.ok() ? HBN_OK : HBN_ERR_VIOLATIONS;
  });
}

char* hbn_known_properties(void) {
  std::string text;
  for (const std::string& id : hbn::known_properties()) {
    if (!text.empty()) text += ',';
    text += id;
  }
  return copy_string(text);
}

char* hbn_known_mutations(void) {
  std::string text;
  for (const std::string& id : hbn::known_mutations()) {
    if (!text.empty()) text += ',';
    text += id;
  }
  return copy_string(text);
}

}  // extern "C"
