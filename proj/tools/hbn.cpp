// Command-line front end; everything substantive happens behind the C API.
#include <hbn/hbn.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

// 0 = success, 1 = value-level refusal or failed verification,
// 2 = malformed input.
int exit_code_for(hbn_status status) {
  switch (status) {
    case HBN_OK:
    case HBN_END:
      return 0;
    case HBN_ERR_NULL_ARGUMENT:
    case HBN_ERR_PARSE:
    case HBN_ERR_UNSORTED_PARTS:
    case HBN_ERR_EMPTY_TYPE:
    case HBN_ERR_NEGATIVE_GENUS:
      return 2;
    default:
      return 1;
  }
}

std::string json_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

int report_failure(hbn_status status, const std::string& format) {
  std::string message = hbn_last_error_message();
  if (format == "json") {
    std::printf("{\"error\":{\"code\":\"%s\",\"message\":\"%s\"}}\n", hbn_status_name(status),
                json_escape(message).c_str());
  } else {
    std::fprintf(stderr, "error [%s]: %s\n", hbn_status_name(status), message.c_str());
  }
  return exit_code_for(status);
}

int parse_failure(const std::string& message, const std::string& format) {
  if (format == "json") {
    std::printf("{\"error\":{\"code\":\"parse-error\",\"message\":\"%s\"}}\n",
                json_escape(message).c_str());
  } else {
    std::fprintf(stderr, "error [parse-error]: %s\n", message.c_str());
  }
  return 2;
}

bool format_code(const std::string& name, hbn_format* out) {
  if (name == "json") *out = HBN_FORMAT_JSON;
  else if (name == "csv") *out = HBN_FORMAT_CSV;
  else if (name == "plain") *out = HBN_FORMAT_PLAIN;
  else return false;
  return true;
}

// HBN_JOBS caps the verifier's parallelism; unset or invalid means automatic.
int jobs_from_environment() {
  const char* env = std::getenv("HBN_JOBS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || value < 1) {
    std::fprintf(stderr, "warning: ignoring invalid HBN_JOBS value '%s'\n", env);
    return 0;
  }
  return static_cast<int>(value);
}

struct DatumArgs {
  std::string genus;
  std::string parts;
  bool sort = false;
};

void add_datum_options(CLI::App* cmd, DatumArgs& args) {
  cmd->add_option("--g", args.genus, "genus (base-10 integer)")->required();
  cmd->add_option("--e", args.parts, "splitting type as comma-separated parts")->required();
  cmd->add_flag("--sort", args.sort, "normalize unordered parts instead of refusing them");
}

int run_classify(const DatumArgs& args, const std::vector<int>& ps, const std::string& format) {
  hbn_format fmt;
  if (!format_code(format, &fmt)) return parse_failure("unknown format '" + format + "'", "plain");
  hbn_datum* datum = nullptr;
  hbn_status status = hbn_datum_create(args.genus.c_str(), args.parts.c_str(),
                                       args.sort ? 1 : 0, &datum);
  if (status != HBN_OK) return report_failure(status, format);
  char* report = nullptr;
  status = hbn_classify_report(datum, ps.empty() ? nullptr : ps.data(), ps.size(), fmt, &report);
  int code = 0;
  if (status != HBN_OK) {
    code = report_failure(status, format);
  } else {
    std::fputs(report, stdout);
  }
  hbn_string_free(report);
  hbn_datum_destroy(datum);
  return code;
}

int run_count(const DatumArgs& args, int p, const std::string& format) {
  hbn_format fmt;
  if (!format_code(format, &fmt)) return parse_failure("unknown format '" + format + "'", "plain");
  hbn_datum* datum = nullptr;
  hbn_status status = hbn_datum_create(args.genus.c_str(), args.parts.c_str(),
                                       args.sort ? 1 : 0, &datum);
  if (status != HBN_OK) return report_failure(status, format);
  char* report = nullptr;
  status = hbn_count_report(datum, p, fmt, &report);
  int code = 0;
  if (status != HBN_OK) {
    code = report_failure(status, format);
  } else {
    std::fputs(report, stdout);
  }
  hbn_string_free(report);
  hbn_datum_destroy(datum);
  return code;
}

int run_enum(int k, int emin, int emax, const std::string& degree, long limit,
             const std::string& format) {
  hbn_format fmt;
  if (!format_code(format, &fmt)) return parse_failure("unknown format '" + format + "'", "plain");
  hbn_type_stream* stream = nullptr;
  hbn_status status =
      hbn_type_stream_create(k, emin, emax, degree.empty() ? nullptr : degree.c_str(), &stream);
  if (status != HBN_OK) return report_failure(status, format);
  long emitted = 0;
  int code = 0;
  while (limit < 0 || emitted < limit) {
    char* line = nullptr;
    status = hbn_type_stream_next(stream, fmt, &line);
    if (status == HBN_END) break;
    if (status != HBN_OK) {
      code = report_failure(status, format);
      break;
    }
    std::fputs(line, stdout);
    hbn_string_free(line);
    ++emitted;
  }
  hbn_type_stream_destroy(stream);
  return code;
}

int run_table(const hbn_domain& domain, long limit, const std::string& format) {
  hbn_format fmt;
  if (!format_code(format, &fmt)) return parse_failure("unknown format '" + format + "'", "plain");
  hbn_table_stream* stream = nullptr;
  hbn_status status = hbn_table_stream_create(&domain, fmt, &stream);
  if (status != HBN_OK) return report_failure(status, format);
  long emitted = 0;
  bool header_expected = fmt == HBN_FORMAT_CSV;
  int code = 0;
  while (true) {
    char* line = nullptr;
    status = hbn_table_stream_next(stream, &line);
    if (status == HBN_END) break;
    if (status != HBN_OK) {
      code = report_failure(status, format);
      break;
    }
    std::fputs(line, stdout);
    hbn_string_free(line);
    if (header_expected) {
      header_expected = false;  // the CSV header does not count against --limit
    } else {
      ++emitted;
      if (limit >= 0 && emitted >= limit) break;
    }
  }
  hbn_table_stream_destroy(stream);
  return code;
}

int run_verify(const hbn_domain& domain, const std::string& props, const std::string& mutate,
               const std::string& format) {
  hbn_format fmt;
  if (!format_code(format, &fmt)) return parse_failure("unknown format '" + format + "'", "plain");
  hbn_verify_options options;
  options.domain = domain;
  options.properties = props.empty() ? nullptr : props.c_str();
  options.mutation = mutate.empty() ? nullptr : mutate.c_str();
  options.jobs = jobs_from_environment();
  char* report = nullptr;
  long violations = 0;
  hbn_status status = hbn_verify(&options, fmt, &report, &violations);
  if (status != HBN_OK && status != HBN_ERR_VIOLATIONS) {
    hbn_string_free(report);
    return report_failure(status, format);
  }
  std::fputs(report, stdout);
  hbn_string_free(report);
  return status == HBN_OK ? 0 : 1;
}

// Joins "--opt value" into "--opt=value" so values with a leading dash
// (negative numbers, part lists) survive flag parsing.
std::vector<std::string> preprocess_args(int argc, char** argv) {
  static const char* const value_options[] = {
      "--g",    "--e",    "--p",      "--deg",   "--props", "--mutate", "--format",
      "--kmin", "--kmax", "--emin",   "--emax",  "--gslack", "--k",     "--limit",
  };
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    bool joined = false;
    for (const char* opt : value_options) {
      if (arg == opt && i + 1 < argc) {
        out.push_back(arg + "=" + argv[i + 1]);
        ++i;
        joined = true;
        break;
      }
    }
    if (!joined) out.push_back(std::move(arg));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ampleness classification for line bundles on covers of the line, "
               "from pushforward splitting types"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json, csv, or plain")
      ->capture_default_str();

  DatumArgs classify_args;
  std::vector<int> classify_ps;
  CLI::App* classify = app.add_subcommand("classify", "decide every ampleness question for one datum");
  classify->fallthrough();  // lets the global --format appear after the subcommand
  add_datum_options(classify, classify_args);
  classify->add_option("--p", classify_ps, "twist degrees to report (default: all of 0..k-1)")
      ->delimiter(',');

  DatumArgs count_args;
  int count_p = 0;
  CLI::App* count = app.add_subcommand("count", "count dependent fibral divisors for one datum");
  count->fallthrough();
  add_datum_options(count, count_args);
  count->add_option("--p", count_p, "twist degree p (needs exactly p+1 nonnegative parts)")
      ->required();

  int enum_k = 0, enum_emin = -5, enum_emax = 5;
  std::string enum_deg;
  long enum_limit = -1;
  CLI::App* enumerate = app.add_subcommand("enum", "list splitting types of one rank");
  enumerate->fallthrough();
  enumerate->add_option("--k", enum_k, "rank (number of parts)")->required();
  enumerate->add_option("--emin", enum_emin, "smallest part")->capture_default_str();
  enumerate->add_option("--emax", enum_emax, "largest part")->capture_default_str();
  enumerate->add_option("--deg", enum_deg, "only types with this total degree");
  enumerate->add_option("--limit", enum_limit, "stop after this many types");

  hbn_domain table_domain{2, 5, -5, 5, 4, nullptr, 0};
  std::vector<int> table_ps;
  long table_limit = -1;
  CLI::App* table = app.add_subcommand("table", "classification table over a sweep domain");
  table->fallthrough();
  table->add_option("--kmin", table_domain.k_min, "smallest rank")->capture_default_str();
  table->add_option("--kmax", table_domain.k_max, "largest rank")->capture_default_str();
  table->add_option("--emin", table_domain.part_min, "smallest part")->capture_default_str();
  table->add_option("--emax", table_domain.part_max, "largest part")->capture_default_str();
  table->add_option("--gslack", table_domain.genus_slack,
                    "genus runs from u(e) to u(e)+gslack")->capture_default_str();
  table->add_option("--p", table_ps, "twist degrees to report")->delimiter(',');
  table->add_option("--limit", table_limit, "stop after this many rows");

  hbn_domain verify_domain{2, 5, -5, 5, 4, nullptr, 0};
  std::string verify_props, verify_mutate;
  CLI::App* verify = app.add_subcommand("verify", "re-check every invariant over a sweep domain");
  verify->fallthrough();
  verify->add_option("--kmin", verify_domain.k_min, "smallest rank")->capture_default_str();
  verify->add_option("--kmax", verify_domain.k_max, "largest rank")->capture_default_str();
  verify->add_option("--emin", verify_domain.part_min, "smallest part")->capture_default_str();
  verify->add_option("--emax", verify_domain.part_max, "largest part")->capture_default_str();
  verify->add_option("--gslack", verify_domain.genus_slack,
                     "genus runs from u(e) to u(e)+gslack")->capture_default_str();
  verify->add_option("--props", verify_props,
                     "comma-separated property ids (default: all)");
  verify->add_option("--mutate", verify_mutate,
                     "fault-injection name for the self-test (must make verify fail)");

  std::vector<std::string> args = preprocess_args(argc, argv);
  std::vector<char*> argv2{argv[0]};
  for (std::string& arg : args) argv2.push_back(arg.data());
  try {
    app.parse(static_cast<int>(argv2.size()), argv2.data());
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    std::string fmt = format == "json" || format == "csv" || format == "plain" ? format : "plain";
    return parse_failure(err.what(), fmt);
  }

  if (classify->parsed()) return run_classify(classify_args, classify_ps, format);
  if (count->parsed()) return run_count(count_args, count_p, format);
  if (enumerate->parsed()) {
    return run_enum(enum_k, enum_emin, enum_emax, enum_deg, enum_limit, format);
  }
  if (table->parsed()) {
    if (!table_ps.empty()) {
      table_domain.ps = table_ps.data();
      table_domain.n_ps = table_ps.size();
    }
    return run_table(table_domain, table_limit, format);
  }
  if (verify->parsed()) return run_verify(verify_domain, verify_props, verify_mutate, format);
  return 2;
}
