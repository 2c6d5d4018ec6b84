#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace hbn {
namespace {

// Minimal deterministic JSON emitter; needed because report integers are
// arbitrary precision and must be written as exact base-10 numerals.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { punctuate(); out_ += '{'; fresh_.push_back(true); }
  void end_object() { out_ += '}'; fresh_.pop_back(); }
  void begin_array() { punctuate(); out_ += '['; fresh_.push_back(true); }
  void end_array() { out_ += ']'; fresh_.pop_back(); }

  void key(const std::string& name) {
    punctuate();
    literal_string(name);
    out_ += ':';
    pending_value_ = true;
  }

  void value(const Integer& v) { punctuate(); out_ += to_decimal(v); }
  void value(long v) { punctuate(); out_ += std::to_string(v); }
  void value(std::uint64_t v) { punctuate(); out_ += std::to_string(v); }
  void value(bool v) { punctuate(); out_ += v ? "true" : "false"; }
  void value(const std::string& v) { punctuate(); literal_string(v); }
  void value(const char* v) { punctuate(); literal_string(v); }
  void null() { punctuate(); out_ += "null"; }

 private:
  void punctuate() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!fresh_.empty()) {
      if (!fresh_.back()) out_ += ',';
      fresh_.back() = false;
    }
  }

  void literal_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> fresh_;
  bool pending_value_ = false;
};

void write_parts(JsonWriter& w, const SplittingType& e) {
  w.begin_array();
  for (const Integer& part : e.parts()) w.value(part);
  w.end_array();
}

void write_invariants(JsonWriter& w, const Invariants& inv) {
  w.begin_object();
  w.key("k"); w.value(static_cast<long>(inv.k));
  w.key("deg_e"); w.value(inv.deg_e);
  w.key("u"); w.value(inv.u);
  w.key("rho"); w.value(inv.rho);
  w.key("h0"); w.value(inv.h0);
  w.key("r"); w.value(inv.r);
  w.key("degL"); w.value(inv.deg_l);
  w.key("nonneg_parts"); w.value(static_cast<long>(inv.nonneg));
  w.end_object();
}

void write_decision(JsonWriter& w, const Decision& decision, bool with_twist) {
  w.begin_object();
  w.key("value"); w.value(decision.value);
  w.key("case"); w.value(case_label_name(decision.case_label));
  if (with_twist) {
    w.key("pullback_twist");
    if (decision.pullback_twist) w.value(*decision.pullback_twist);
    else w.null();
  }
  w.end_object();
}

void write_count_entry(JsonWriter& w, const PerDegreeEntry& entry) {
  w.begin_object();
  w.key("p"); w.value(static_cast<long>(entry.p));
  w.key("N"); w.value(entry.count.n_closed);
  w.key("degZ"); w.value(entry.count.deg_z);
  w.key("degH"); w.value(entry.count.deg_h);
  w.key("degPi"); w.value(entry.count.deg_pi);
  w.key("degL"); w.value(entry.count.deg_l);
  w.key("edge_case"); w.value(edge_case_name(entry.count.edge_case));
  w.end_object();
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string csv_join(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line;
}

std::string plain_decision(const Decision& decision) {
  std::string text = bool_text(decision.value);
  text += " [";
  text += case_label_name(decision.case_label);
  text += "]";
  if (!decision.note.empty()) text += " -- " + decision.note;
  if (decision.pullback_twist) {
    text += " (pullback of degree " + to_decimal(*decision.pullback_twist) + ")";
  }
  return text;
}

}  // namespace

Format format_from_name(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  fail(errc::parse, "unknown format '" + name + "' (expected json, csv, or plain)");
}

const char* format_name(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::plain: return "plain";
  }
  return "json";
}

Invariants compute_invariants(const BNDatum& d) {
  Invariants inv;
  inv.k = d.rank();
  inv.deg_e = degree(d.type());
  inv.u = u_invariant(d.type());
  inv.rho = rho_prime(d.genus(), d.type());
  inv.h0 = h0(d.type());
  inv.r = series_rank(d.type());
  inv.deg_l = line_bundle_degree(d);
  inv.nonneg = nonneg_parts(d.type());
  return inv;
}

ClassifyReport build_classify_report(const BNDatum& d, const std::vector<int>& ps,
                                     bool reordered) {
  ClassifyReport report{d, reordered, compute_invariants(d), basepoint_free(d),
                        birationally_va(d), very_ample(d), {}};
  std::vector<int> degrees = ps;
  if (degrees.empty()) {
    for (int p = 0; p <= d.rank() - 1; ++p) degrees.push_back(p);
  }
  for (int p : degrees) {
    PerDegreeEntry entry;
    entry.p = p;
    entry.rel = rel_pva(d, p);
    entry.birel = birationally_rel_pva(d, p);
    entry.count = dependent_divisor_count(d, p, CountDomain::permissive);
    entry.count_in_domain = nonneg_parts(d.type()) == p + 1;
    report.per_degree.push_back(std::move(entry));
  }
  return report;
}

static void write_classify_json(JsonWriter& w, const ClassifyReport& report) {
  w.begin_object();
  w.key("input");
  w.begin_object();
  w.key("g"); w.value(report.datum.genus());
  w.key("e"); write_parts(w, report.datum.type());
  w.end_object();
  w.key("invariants");
  write_invariants(w, report.invariants);
  w.key("decisions");
  w.begin_object();
  w.key("bpf"); write_decision(w, report.bpf, true);
  w.key("birational_va"); write_decision(w, report.birat_va, false);
  w.key("va"); write_decision(w, report.va, false);
  w.key("rel_pva");
  w.begin_array();
  for (const PerDegreeEntry& entry : report.per_degree) {
    w.begin_object();
    w.key("p"); w.value(static_cast<long>(entry.p));
    w.key("value"); w.value(entry.rel.value);
    w.key("case"); w.value(case_label_name(entry.rel.case_label));
    w.end_object();
  }
  w.end_array();
  w.key("counts");
  w.begin_array();
  for (const PerDegreeEntry& entry : report.per_degree) write_count_entry(w, entry);
  w.end_array();
  w.end_object();
  if (report.reordered) {
    w.key("warnings");
    w.begin_array();
    w.value("parts reordered to nondecreasing");
    w.end_array();
  }
  w.end_object();
}

std::string render_classify(const ClassifyReport& report, Format format) {
  if (format == Format::json) {
    JsonWriter w;
    write_classify_json(w, report);
    std::string out = w.take();
    out += '\n';
    return out;
  }
  if (format == Format::csv) {
    std::vector<int> ps;
    for (const PerDegreeEntry& entry : report.per_degree) ps.push_back(entry.p);
    return table_csv_header(report.datum.rank(), ps) + table_csv_row(report, report.datum.rank(), ps);
  }
  std::ostringstream out;
  out << "input: g = " << to_decimal(report.datum.genus()) << ", e = "
      << format_parts(report.datum.type()) << '\n';
  if (report.reordered) out << "warning: parts reordered to nondecreasing\n";
  const Invariants& inv = report.invariants;
  out << "invariants: k = " << inv.k << ", deg(e) = " << to_decimal(inv.deg_e)
      << ", u = " << to_decimal(inv.u) << ", rho' = " << to_decimal(inv.rho)
      << ", h0 = " << to_decimal(inv.h0) << ", r = " << to_decimal(inv.r)
      << ", deg(L) = " << to_decimal(inv.deg_l) << ", nonneg parts = " << inv.nonneg << '\n';
  out << "basepoint_free: " << plain_decision(report.bpf) << '\n';
  out << "birationally_va: " << plain_decision(report.birat_va) << '\n';
  out << "very_ample: " << plain_decision(report.va) << '\n';
  for (const PerDegreeEntry& entry : report.per_degree) {
    out << "rel_pva p=" << entry.p << ": " << plain_decision(entry.rel) << '\n';
    out << "birationally_rel_pva p=" << entry.p << ": " << plain_decision(entry.birel) << '\n';
    out << "count p=" << entry.p << ": ";
    if (entry.count_in_domain) {
      out << "N = " << to_decimal(entry.count.n_closed);
    } else {
      out << "out of domain (needs exactly p+1 nonnegative parts); raw N = "
          << to_decimal(entry.count.n_closed);
    }
    out << ", degZ = " << to_decimal(entry.count.deg_z)
        << ", degH = " << to_decimal(entry.count.deg_h)
        << ", degPi = " << to_decimal(entry.count.deg_pi)
        << ", degL = " << to_decimal(entry.count.deg_l)
        << ", edge case = " << edge_case_name(entry.count.edge_case) << '\n';
  }
  return out.str();
}

std::string table_csv_header(int k_max, const std::vector<int>& ps) {
  std::vector<std::string> cells{"g"};
  for (int i = 1; i <= k_max; ++i) cells.push_back("e" + std::to_string(i));
  for (const char* name : {"u", "rho", "h0", "r", "degL", "bpf", "bpf_case", "birat_va", "va",
                           "va_case"}) {
    cells.push_back(name);
  }
  for (int p : ps) {
    cells.push_back("rel_p" + std::to_string(p));
    cells.push_back("rel_case_p" + std::to_string(p));
    cells.push_back("birel_p" + std::to_string(p));
    cells.push_back("N_p" + std::to_string(p));
  }
  return csv_join(cells) + "\n";
}

std::string table_csv_row(const ClassifyReport& report, int k_max, const std::vector<int>& ps) {
  std::vector<std::string> cells{to_decimal(report.datum.genus())};
  const auto& parts = report.datum.type().parts();
  for (int i = 0; i < k_max; ++i) {
    cells.push_back(i < report.datum.rank() ? to_decimal(parts[static_cast<size_t>(i)]) : "");
  }
  const Invariants& inv = report.invariants;
  cells.push_back(to_decimal(inv.u));
  cells.push_back(to_decimal(inv.rho));
  cells.push_back(to_decimal(inv.h0));
  cells.push_back(to_decimal(inv.r));
  cells.push_back(to_decimal(inv.deg_l));
  cells.push_back(bool_text(report.bpf.value));
  cells.push_back(case_label_name(report.bpf.case_label));
  cells.push_back(bool_text(report.birat_va.value));
  cells.push_back(bool_text(report.va.value));
  cells.push_back(case_label_name(report.va.case_label));
  for (int p : ps) {
    const PerDegreeEntry* found = nullptr;
    for (const PerDegreeEntry& entry : report.per_degree) {
      if (entry.p == p) {
        found = &entry;
        break;
      }
    }
    if (!found) {
      for (int c = 0; c < 4; ++c) cells.push_back("");
      continue;
    }
    cells.push_back(bool_text(found->rel.value));
    cells.push_back(case_label_name(found->rel.case_label));
    cells.push_back(bool_text(found->birel.value));
    cells.push_back(found->count_in_domain ? to_decimal(found->count.n_closed) : "NA");
  }
  return csv_join(cells) + "\n";
}

std::string render_count(const BNDatum& d, int p, const CountReport& count, Format format) {
  if (format == Format::json) {
    JsonWriter w;
    w.begin_object();
    w.key("input");
    w.begin_object();
    w.key("g"); w.value(d.genus());
    w.key("e"); write_parts(w, d.type());
    w.key("p"); w.value(static_cast<long>(p));
    w.end_object();
    w.key("invariants");
    write_invariants(w, compute_invariants(d));
    w.key("count");
    w.begin_object();
    w.key("p"); w.value(static_cast<long>(p));
    w.key("N"); w.value(count.n_closed);
    w.key("degZ"); w.value(count.deg_z);
    w.key("degH"); w.value(count.deg_h);
    w.key("degPi"); w.value(count.deg_pi);
    w.key("degL"); w.value(count.deg_l);
    w.key("edge_case"); w.value(edge_case_name(count.edge_case));
    w.end_object();
    w.end_object();
    return w.take() + "\n";
  }
  if (format == Format::csv) {
    std::vector<std::string> header{"g", "e", "p", "N", "degZ", "degH", "degPi", "degL",
                                    "edge_case"};
    std::vector<std::string> row{to_decimal(d.genus()),
                                 format_parts(d.type()),
                                 std::to_string(p),
                                 to_decimal(count.n_closed),
                                 to_decimal(count.deg_z),
                                 to_decimal(count.deg_h),
                                 to_decimal(count.deg_pi),
                                 to_decimal(count.deg_l),
                                 edge_case_name(count.edge_case)};
    // The tuple cell carries commas, so quote it.
    row[1] = "\"" + row[1] + "\"";
    return csv_join(header) + "\n" + csv_join(row) + "\n";
  }
  std::ostringstream out;
  out << "input: g = " << to_decimal(d.genus()) << ", e = " << format_parts(d.type())
      << ", p = " << p << '\n';
  out << "N = " << to_decimal(count.n_closed) << " (closed and assembled routes agree)\n";
  out << "degZ = " << to_decimal(count.deg_z) << ", degH = " << to_decimal(count.deg_h)
      << ", degPi = " << to_decimal(count.deg_pi) << ", degL = " << to_decimal(count.deg_l)
      << '\n';
  out << "edge case: " << edge_case_name(count.edge_case) << '\n';
  return out.str();
}

std::string render_type_line(const SplittingType& e, Format format) {
  if (format == Format::json) {
    JsonWriter w;
    write_parts(w, e);
    return w.take() + "\n";
  }
  if (format == Format::csv) {
    std::vector<std::string> cells;
    for (const Integer& part : e.parts()) cells.push_back(to_decimal(part));
    return csv_join(cells) + "\n";
  }
  return format_parts(e) + "\n";
}

std::string render_verify(const VerifyReport& report, Format format) {
  if (format == Format::json) {
    JsonWriter w;
    w.begin_object();
    w.key("domain");
    w.begin_object();
    w.key("k_min"); w.value(static_cast<long>(report.domain.k_min));
    w.key("k_max"); w.value(static_cast<long>(report.domain.k_max));
    w.key("part_min"); w.value(static_cast<long>(report.domain.part_min));
    w.key("part_max"); w.value(static_cast<long>(report.domain.part_max));
    w.key("genus_slack"); w.value(static_cast<long>(report.domain.genus_slack));
    w.end_object();
    w.key("properties");
    w.begin_array();
    for (const std::string& id : report.properties) w.value(id);
    w.end_array();
    w.key("mutation");
    if (report.mutation == Mutation::none) w.null();
    else w.value(mutation_name(report.mutation));
    w.key("instances");
    w.begin_object();
    w.key("types"); w.value(report.types);
    w.key("data"); w.value(report.data);
    w.key("checks"); w.value(report.checks);
    w.end_object();
    w.key("violations");
    w.begin_array();
    for (const Violation& v : report.violations) {
      w.begin_object();
      w.key("property"); w.value(v.property);
      w.key("g"); w.value(v.g);
      w.key("e"); write_parts(w, v.e);
      w.key("p");
      if (v.p) w.value(static_cast<long>(*v.p));
      else w.null();
      w.key("observed"); w.value(v.observed);
      w.key("expected"); w.value(v.expected);
      w.end_object();
    }
    w.end_array();
    w.key("ok"); w.value(report.ok());
    w.end_object();
    return w.take() + "\n";
  }
  if (format == Format::csv) {
    std::string out = "property,g,e,p,observed,expected\n";
    for (const Violation& v : report.violations) {
      std::vector<std::string> cells{v.property,
                                     to_decimal(v.g),
                                     "\"" + format_parts(v.e) + "\"",
                                     v.p ? std::to_string(*v.p) : "",
                                     "\"" + v.observed + "\"",
                                     "\"" + v.expected + "\""};
      out += csv_join(cells) + "\n";
    }
    return out;
  }
  std::ostringstream out;
  out << "domain: k in [" << report.domain.k_min << ", " << report.domain.k_max << "], parts in ["
      << report.domain.part_min << ", " << report.domain.part_max << "], genus slack "
      << report.domain.genus_slack << '\n';
  out << "properties: " << report.properties.size() << " selected\n";
  if (report.mutation != Mutation::none) {
    out << "mutation: " << mutation_name(report.mutation) << '\n';
  }
  out << "instances: " << report.types << " types, " << report.data << " data, " << report.checks
      << " checks\n";
  if (report.ok()) {
    out << "ok: all properties hold\n";
  } else {
    out << "violations: " << report.violations.size() << '\n';
    for (const Violation& v : report.violations) {
      out << "  [" << v.property << "] g = " << to_decimal(v.g) << ", e = " << format_parts(v.e);
      if (v.p) out << ", p = " << *v.p;
      out << ": " << v.observed << " (expected " << v.expected << ")\n";
    }
  }
  return out.str();
}

std::string render_error(errc code, const std::string& message, Format format) {
  if (format == Format::json) {
    JsonWriter w;
    w.begin_object();
    w.key("error");
    w.begin_object();
    w.key("code"); w.value(errc_name(code));
    w.key("message"); w.value(message);
    w.end_object();
    w.end_object();
    return w.take() + "\n";
  }
  return std::string("error [") + errc_name(code) + "]: " + message + "\n";
}

}  // namespace hbn
