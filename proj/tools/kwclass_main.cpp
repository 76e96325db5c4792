// kwclass: command-line front end over the kwclass C API (kwclass.h).
//
// Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
// 3 capacity error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kwclass.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitCapacity = 3;

int exit_code_for(kw_status status) {
  switch (status) {
    case KW_OK:
      return kExitOk;
    case KW_ERR_CAPACITY_EXCEEDED:
    case KW_ERR_COMPONENT_TOO_LARGE:
      return kExitCapacity;
    case KW_ERR_VERIFICATION_FAILED:
      return kExitVerification;
    default:
      return kExitUsage;
  }
}

// Aborts the command on any API failure.
struct CommandError {
  int code;
  std::string message;
};

void check(kw_status status) {
  if (status == KW_OK) return;
  throw CommandError{exit_code_for(status),
                     std::string(kw_status_name(status)) + ": " +
                         kw_last_error()};
}

std::string take_string(char* raw) {
  std::string out = raw ? raw : "";
  kw_string_free(raw);
  return out;
}

// "82392" -> "82,392" for the human-readable mode.
std::string group_digits(const std::string& digits) {
  std::string out;
  const std::size_t len = digits.size();
  for (std::size_t at = 0; at < len; ++at) {
    if (at > 0 && (len - at) % 3 == 0) out += ',';
    out += digits[at];
  }
  return out;
}

std::string group_digits(std::uint64_t value) {
  return group_digits(std::to_string(value));
}

std::vector<std::string> split_words(const std::string& joined) {
  std::vector<std::string> out;
  std::istringstream stream(joined);
  for (std::string token; stream >> token;) out.push_back(token);
  return out;
}

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
      throw CommandError{kExitUsage, "cannot open output file " + path};
    file << payload;
  }
};

struct HistogramRows {
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

struct Partition {
  std::unique_ptr<kw_partition, decltype(&kw_partition_free)> handle{
      nullptr, kw_partition_free};

  Partition(const std::string& keyword, int n, int workers) {
    kw_partition* raw = nullptr;
    check(kw_partition_build(keyword.c_str(), n, workers, &raw));
    handle.reset(raw);
  }

  std::uint64_t class_count() const {
    std::uint64_t count = 0;
    check(kw_partition_class_count(handle.get(), &count));
    return count;
  }

  HistogramRows histogram() const {
    std::uint64_t* sizes = nullptr;
    std::uint64_t* counts = nullptr;
    std::size_t length = 0;
    check(kw_partition_histogram(handle.get(), &sizes, &counts, &length));
    HistogramRows rows;
    rows.sizes.assign(sizes, sizes + length);
    rows.counts.assign(counts, counts + length);
    kw_buffer_free(sizes);
    kw_buffer_free(counts);
    for (std::uint64_t c : rows.counts) rows.total += c;
    return rows;
  }

  std::string histogram_csv() const {
    char* raw = nullptr;
    check(kw_partition_histogram_csv(handle.get(), &raw));
    return take_string(raw);
  }

  std::string histogram_json() const {
    char* raw = nullptr;
    check(kw_partition_histogram_json(handle.get(), &raw));
    return take_string(raw);
  }
};

// Shared options.
struct CommonOpts {
  std::string format = "text";
  int workers = 0;  // 0 = all hardware threads
  OutputTarget out;
};

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--workers", opts.workers,
                  "Worker threads for partition builds (0 = auto)");
  cmd->add_option("--out", opts.out.path, "Write output to a file");
}

std::vector<int> parse_n_range(const std::string& spec) {
  const auto dots = spec.find("..");
  std::vector<int> values;
  try {
    if (dots == std::string::npos) {
      values.push_back(std::stoi(spec));
    } else {
      const int lo = std::stoi(spec.substr(0, dots));
      const int hi = std::stoi(spec.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty range");
      for (int n = lo; n <= hi; ++n) values.push_back(n);
    }
  } catch (const std::exception&) {
    throw CommandError{kExitUsage, "bad n range \"" + spec + "\""};
  }
  return values;
}

// ------------------------------------------------------------------ count

int run_count(const std::string& keyword, const std::vector<int>& ns,
              const CommonOpts& opts) {
  std::ostringstream payload;
  bool all_match = true;
  const int workers = effective_workers(opts.workers);
  if (opts.format == "csv") payload << "keyword,n,classes,expected\n";
  std::string json_rows;
  for (int n : ns) {
    const Partition partition(keyword, n, workers);
    const std::uint64_t classes = partition.class_count();
    char* expected_raw = nullptr;
    // keyword length is validated by the partition build above
    check(kw_partial_sum(static_cast<int>(keyword.size()) - 1, n,
                         &expected_raw));
    const std::string expected = take_string(expected_raw);
    const bool match = expected == std::to_string(classes);
    all_match = all_match && match;
    if (opts.format == "text") {
      payload << "keyword " << keyword << " n=" << n
              << " classes=" << group_digits(classes)
              << " expected=" << group_digits(expected)
              << (match ? "" : " MISMATCH") << '\n';
    } else if (opts.format == "csv") {
      payload << keyword << ',' << n << ',' << classes << ',' << expected
              << '\n';
    } else {
      if (!json_rows.empty()) json_rows += ", ";
      json_rows += "{\"keyword\": \"" + keyword +
                   "\", \"n\": " + std::to_string(n) +
                   ", \"classes\": " + std::to_string(classes) +
                   ", \"expected\": " + expected + "}";
    }
  }
  if (opts.format == "json") payload << '[' << json_rows << "]\n";
  opts.out.write(payload.str());
  return all_match ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------- histogram

std::string histogram_text(const std::string& keyword, int n,
                           const HistogramRows& rows) {
  std::ostringstream out;
  out << "keyword " << keyword << ", n=" << n << '\n';
  for (std::size_t at = 0; at < rows.sizes.size(); ++at)
    out << "s=" << rows.sizes[at] << "  " << group_digits(rows.counts[at])
        << '\n';
  out << "total  " << group_digits(rows.total) << '\n';
  return out.str();
}

int run_histogram(const std::string& keyword, const std::vector<int>& ns,
                  const CommonOpts& opts) {
  std::ostringstream payload;
  const int workers = effective_workers(opts.workers);
  std::string json_rows;
  for (int n : ns) {
    const Partition partition(keyword, n, workers);
    if (opts.format == "text") {
      payload << histogram_text(keyword, n, partition.histogram());
    } else if (opts.format == "csv") {
      if (ns.size() > 1) payload << "# n=" << n << '\n';
      payload << partition.histogram_csv();
    } else {
      if (!json_rows.empty()) json_rows += ", ";
      json_rows += partition.histogram_json();
    }
  }
  if (opts.format == "json")
    payload << (ns.size() == 1 ? json_rows : '[' + json_rows + "]") << '\n';
  opts.out.write(payload.str());
  return kExitOk;
}

// ------------------------------------------------------------------ table

struct TableSpec {
  std::vector<std::string> keywords;
  std::vector<int> lengths;
};

TableSpec table_spec(int id) {
  switch (id) {
    case 1:
      return {{"110", "101"}, {4, 5, 6}};
    case 2:
      return {{"10001", "01001"}, {11, 12}};
    case 3:
      return {{"10000", "01000"}, {17}};
    default:
      throw CommandError{kExitUsage, "table id must be 1, 2 or 3"};
  }
}

int run_table(int id, const CommonOpts& opts) {
  const TableSpec spec = table_spec(id);
  const int workers = effective_workers(opts.workers);
  std::ostringstream payload;
  std::string json_rows;
  if (opts.format == "csv") payload << "n,keyword,s,count\n";
  for (int n : spec.lengths) {
    std::vector<HistogramRows> histograms;
    for (const auto& keyword : spec.keywords)
      histograms.push_back(Partition(keyword, n, workers).histogram());

    if (opts.format == "text") {
      std::uint64_t max_size = 1;
      for (const auto& rows : histograms)
        if (!rows.sizes.empty()) max_size = std::max(max_size, rows.sizes.back());
      payload << "n=" << n;
      for (const auto& keyword : spec.keywords) payload << "\ta=" << keyword;
      payload << '\n';
      for (std::uint64_t s = 1; s <= max_size; ++s) {
        payload << "s=" << s;
        for (const auto& rows : histograms) {
          std::uint64_t count = 0;
          for (std::size_t at = 0; at < rows.sizes.size(); ++at)
            if (rows.sizes[at] == s) count = rows.counts[at];
          payload << '\t' << group_digits(count);
        }
        payload << '\n';
      }
      payload << "total";
      for (const auto& rows : histograms)
        payload << '\t' << group_digits(rows.total);
      payload << "\n\n";
    } else if (opts.format == "csv") {
      for (std::size_t at = 0; at < spec.keywords.size(); ++at)
        for (std::size_t row = 0; row < histograms[at].sizes.size(); ++row)
          payload << n << ',' << spec.keywords[at] << ','
                  << histograms[at].sizes[row] << ','
                  << histograms[at].counts[row] << '\n';
    } else {
      for (std::size_t at = 0; at < spec.keywords.size(); ++at) {
        const Partition partition(spec.keywords[at], n, workers);
        if (!json_rows.empty()) json_rows += ", ";
        json_rows += partition.histogram_json();
      }
    }
  }
  if (opts.format == "json") payload << '[' << json_rows << "]\n";
  opts.out.write(payload.str());
  return kExitOk;
}

// ----------------------------------------------------------------- verify

int run_verify(const std::string& suite, int max_m, int max_n, int cross_n,
               bool dedupe, const CommonOpts& opts) {
  char* report_raw = nullptr;
  int ok = 0;
  const kw_status status = kw_verify_suite(
      suite.c_str(), max_m, max_n, cross_n, effective_workers(opts.workers),
      dedupe ? 1 : 0, &report_raw, &ok);
  if (status != KW_OK && status != KW_ERR_VERIFICATION_FAILED) check(status);
  opts.out.write(take_string(report_raw));
  return ok ? kExitOk : kExitVerification;
}

// ------------------------------------------------------- small subcommands

int run_classes(const std::string& keyword, const std::string& word, bool dot,
                const CommonOpts& opts) {
  char* raw = nullptr;
  if (dot) {
    check(kw_component_dot(keyword.c_str(), word.c_str(), &raw));
    opts.out.write(take_string(raw));
    return kExitOk;
  }
  check(kw_class_of(keyword.c_str(), word.c_str(), &raw));
  const auto members = split_words(take_string(raw));
  std::ostringstream payload;
  if (opts.format == "json") {
    payload << "[";
    for (std::size_t at = 0; at < members.size(); ++at)
      payload << (at ? ", " : "") << '"' << members[at] << '"';
    payload << "]\n";
  } else if (opts.format == "csv") {
    payload << "word\n";
    for (const auto& member : members) payload << member << '\n';
  } else {
    for (const auto& member : members) payload << member << '\n';
  }
  opts.out.write(payload.str());
  return kExitOk;
}

int run_distance(const std::string& keyword, const std::string& u,
                 const std::string& v, const CommonOpts& opts) {
  std::int64_t d = 0;
  check(kw_distance(keyword.c_str(), u.c_str(), v.c_str(), &d));
  if (opts.format == "json")
    opts.out.write(d < 0 ? "null\n" : std::to_string(d) + "\n");
  else
    opts.out.write(d < 0 ? "inf\n" : std::to_string(d) + "\n");
  return kExitOk;
}

int run_series(const std::string& keyword, int n_max,
               const std::string& method, const CommonOpts& opts) {
  char* raw = nullptr;
  if (opts.format == "csv") {
    check(kw_series_csv(keyword.c_str(), n_max, method.c_str(), &raw));
    opts.out.write(take_string(raw));
  } else if (opts.format == "json") {
    check(kw_series_json(keyword.c_str(), n_max, method.c_str(), &raw));
    opts.out.write(take_string(raw) + "\n");
  } else {
    check(kw_series(keyword.c_str(), n_max, method.c_str(), &raw));
    opts.out.write(take_string(raw) + "\n");
  }
  return kExitOk;
}

int run_fingerprint(const std::vector<std::string>& keywords,
                    const CommonOpts& opts) {
  std::ostringstream payload;
  for (const auto& keyword : keywords) {
    char* flags_raw = nullptr;
    check(kw_fingerprint(keyword.c_str(), &flags_raw));
    const std::string flags = take_string(flags_raw);
    char* p1_raw = nullptr;
    char* p2_raw = nullptr;
    char* q_raw = nullptr;
    check(kw_correlation_polynomials(keyword.c_str(), &p1_raw, &p2_raw,
                                     &q_raw));
    const std::string p1 = take_string(p1_raw);
    const std::string p2 = take_string(p2_raw);
    const std::string q = take_string(q_raw);
    if (opts.format == "json") {
      payload << "{\"keyword\": \"" << keyword << "\", \"flags\": \"" << flags
              << "\", \"p1\": \"" << p1 << "\", \"p2\": \"" << p2
              << "\", \"q\": \"" << q << "\"}\n";
    } else {
      std::string overlaps;
      for (std::size_t at = 0; at < flags.size(); ++at)
        if (flags[at] == '1')
          overlaps += (overlaps.empty() ? "" : ", ") + std::to_string(at + 1);
      payload << "keyword " << keyword << ": overlaps {" << overlaps
              << "}  flags " << flags << "  P1 = " << p1 << "  P2 = " << p2
              << "  Q = " << q << '\n';
    }
  }
  if (keywords.size() == 2) {
    int same = 0;
    check(kw_same_size1_counts(keywords[0].c_str(), keywords[1].c_str(),
                               &same));
    payload << (opts.format == "json"
                    ? std::string("{\"same_size1_counts\": ") +
                          (same ? "true" : "false") + "}\n"
                    : std::string("same size-1 counts: ") +
                          (same ? "yes" : "no") + "\n");
  }
  opts.out.write(payload.str());
  return kExitOk;
}

int run_commute(const std::string& keyword, std::optional<int> delta,
                std::optional<int> i, std::optional<int> j,
                std::optional<int> n, const CommonOpts& opts) {
  std::ostringstream payload;
  if (delta) {
    int commutes = 0;
    check(kw_commutes_by_criterion(keyword.c_str(), *delta, &commutes));
    payload << (commutes ? "true" : "false") << '\n';
  } else if (i && j && n) {
    int commutes = 0;
    check(kw_commutes_brute_force(keyword.c_str(), *i, *j, *n, &commutes));
    payload << (commutes ? "true" : "false") << '\n';
  } else {
    throw CommandError{kExitUsage,
                       "commute needs either --delta or all of -i, -j, -n"};
  }
  opts.out.write(payload.str());
  return kExitOk;
}

int run_orbit(const std::string& keyword, const CommonOpts& opts) {
  char* raw = nullptr;
  check(kw_keyword_orbit(keyword.c_str(), &raw));
  const auto members = split_words(take_string(raw));
  std::ostringstream payload;
  if (opts.format == "json") {
    payload << "[";
    for (std::size_t at = 0; at < members.size(); ++at)
      payload << (at ? ", " : "") << '"' << members[at] << '"';
    payload << "]\n";
  } else {
    for (std::size_t at = 0; at < members.size(); ++at)
      payload << (at ? " " : "") << members[at];
    payload << '\n';
  }
  opts.out.write(payload.str());
  return kExitOk;
}

int run_iso(const std::vector<std::string>& keywords, const std::vector<int>& ns,
            int cap, bool show_certs, const CommonOpts& opts) {
  if (keywords.size() != 2)
    throw CommandError{kExitUsage, "iso needs exactly two -a keywords"};
  std::ostringstream payload;
  for (int n : ns) {
    int result = 0;
    check(kw_isomorphic(keywords[0].c_str(), keywords[1].c_str(), n, cap,
                        &result));
    payload << "n=" << n << ' ' << (result ? "isomorphic" : "not-isomorphic")
            << '\n';
    if (show_certs) {
      for (const auto& keyword : keywords) {
        char* raw = nullptr;
        check(kw_canonical_histogram(keyword.c_str(), n, cap, &raw));
        payload << "certificates " << keyword << ":\n" << take_string(raw);
      }
    }
  }
  opts.out.write(payload.str());
  return kExitOk;
}

int run_zeck(const std::string& value, const CommonOpts& opts) {
  char* raw = nullptr;
  check(kw_zeckendorf(value.c_str(), &raw));
  const std::string pairs = take_string(raw);
  opts.out.write((pairs.empty() ? "(empty sum)" : pairs) + "\n");
  return kExitOk;
}

int run_reps(int m, const std::string& value, int max_index,
             const CommonOpts& opts) {
  if (max_index <= 0) {
    // Auto bound: the smallest k with F_{k+1} > value, found by scanning.
    if (m < 2)
      throw CommandError{kExitUsage,
                         "--max-index is required for m=1 (every term is 1)"};
    for (int k = 1;; ++k) {
      char* fib_raw = nullptr;
      check(kw_fib(m, k + 1, &fib_raw));
      const std::string fib_value = take_string(fib_raw);
      const bool bigger = fib_value.size() > value.size() ||
                          (fib_value.size() == value.size() && fib_value > value);
      if (bigger) {
        max_index = k;
        break;
      }
    }
  }
  char* raw = nullptr;
  check(kw_count_representations(m, value.c_str(), max_index, &raw));
  opts.out.write(take_string(raw) + "\n");
  return kExitOk;
}

int run_maxsize(int m, int n, const CommonOpts& opts) {
  char* raw = nullptr;
  check(kw_max_representations(m, n, &raw));
  opts.out.write(take_string(raw) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence classes of binary words under keyword "
               "substitution: class counts, size histograms, avoidance "
               "series and substitution graphs."};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Count classes and compare with "
                                            "the m-step partial sum");
  std::string count_keyword;
  std::string count_range;
  CommonOpts count_opts;
  count->add_option("-a,--keyword", count_keyword, "Keyword over {0,1}")
      ->required();
  count->add_option("-n,--n-range", count_range, "Word length or lo..hi")
      ->required();
  add_common(count, count_opts);

  // histogram
  auto* hist = app.add_subcommand("histogram", "Class-size histogram");
  std::string hist_keyword;
  std::string hist_range;
  CommonOpts hist_opts;
  hist->add_option("-a,--keyword", hist_keyword, "Keyword over {0,1}")
      ->required();
  hist->add_option("-n,--n-range", hist_range, "Word length or lo..hi")
      ->required();
  add_common(hist, hist_opts);

  // table
  auto* table = app.add_subcommand("table", "Reference histogram tables");
  int table_id = 0;
  CommonOpts table_opts;
  table->add_option("id", table_id, "Table id (1, 2 or 3)")->required();
  add_common(table, table_opts);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string verify_suite;
  int verify_max_m = -1;
  int verify_max_n = -1;
  int verify_cross_n = 17;
  bool verify_dedupe = false;
  CommonOpts verify_opts;
  verify
      ->add_option("suite", verify_suite,
                   "theorem | gf | commute | bipartite | iso | all")
      ->required()
      ->check(CLI::IsMember(
          {"theorem", "gf", "commute", "bipartite", "iso", "all"}));
  verify->add_option("--max-m", verify_max_m, "Largest keyword step count");
  verify->add_option("--max-n", verify_max_n, "Largest word length");
  verify->add_option("--cross-n", verify_cross_n,
                     "Largest n for the 10000/01000 comparison (iso suite)");
  verify->add_flag("--dedupe-orbit", verify_dedupe,
                   "Keep one keyword per orbit");
  add_common(verify, verify_opts);

  // classes
  auto* classes = app.add_subcommand("classes", "Members of one class");
  std::string classes_keyword, classes_word;
  bool classes_dot = false;
  CommonOpts classes_opts;
  classes->add_option("-a,--keyword", classes_keyword, "Keyword")->required();
  classes->add_option("-u,--word", classes_word, "Word")->required();
  classes->add_flag("--dot", classes_dot, "Emit the component as DOT");
  add_common(classes, classes_opts);

  // distance
  auto* dist = app.add_subcommand("distance", "Substitution-graph distance");
  std::string dist_keyword, dist_u, dist_v;
  CommonOpts dist_opts;
  dist->add_option("-a,--keyword", dist_keyword, "Keyword")->required();
  dist->add_option("-u", dist_u, "First word")->required();
  dist->add_option("-v", dist_v, "Second word")->required();
  add_common(dist, dist_opts);

  // series
  auto* series = app.add_subcommand(
      "series", "Counts of words avoiding the keyword and its negation");
  std::string series_keyword, series_method = "gf";
  int series_n_max = 0;
  CommonOpts series_opts;
  series->add_option("-a,--keyword", series_keyword, "Keyword")->required();
  series->add_option("--n-max", series_n_max, "Largest length")->required();
  series->add_option("--method", series_method, "gf | brute | transfer")
      ->check(CLI::IsMember({"gf", "brute", "transfer"}))
      ->capture_default_str();
  add_common(series, series_opts);

  // fingerprint
  auto* finger = app.add_subcommand(
      "fingerprint", "Prefix/suffix overlap flags and correlation polynomials");
  std::vector<std::string> finger_keywords;
  CommonOpts finger_opts;
  finger->add_option("-a,--keyword", finger_keywords, "Keyword (repeatable)")
      ->required();
  add_common(finger, finger_opts);

  // commute
  auto* commute = app.add_subcommand("commute", "Commutativity of simple maps");
  std::string commute_keyword;
  int commute_delta = -1, commute_i = -1, commute_j = -1, commute_n = -1;
  CommonOpts commute_opts;
  commute->add_option("-a,--keyword", commute_keyword, "Keyword")->required();
  commute->add_option("--delta", commute_delta, "Index gap (criterion)");
  commute->add_option("-i", commute_i, "First index (exhaustive)");
  commute->add_option("-j", commute_j, "Second index (exhaustive)");
  commute->add_option("-n", commute_n, "Word length (exhaustive)");
  add_common(commute, commute_opts);

  // orbit
  auto* orbit = app.add_subcommand(
      "orbit", "Keyword orbit under negation/reversal/seminegation");
  std::string orbit_keyword;
  CommonOpts orbit_opts;
  orbit->add_option("-a,--keyword", orbit_keyword, "Keyword")->required();
  add_common(orbit, orbit_opts);

  // iso
  auto* iso = app.add_subcommand("iso", "Substitution-graph isomorphism");
  std::vector<std::string> iso_keywords;
  std::string iso_range;
  int iso_cap = 0;
  bool iso_certs = false;
  CommonOpts iso_opts;
  iso->add_option("-a,--keyword", iso_keywords, "Keyword (give twice)")
      ->required();
  iso->add_option("-n,--n-range", iso_range, "Word length or lo..hi")
      ->required();
  iso->add_option("--component-cap", iso_cap,
                  "Canonical-labeling cap (0 = default)");
  iso->add_flag("--certs", iso_certs, "Also print canonical certificates");
  add_common(iso, iso_opts);

  // zeck
  auto* zeck = app.add_subcommand("zeck", "Nonconsecutive representation");
  std::string zeck_value;
  CommonOpts zeck_opts;
  zeck->add_option("-N,--value", zeck_value, "Nonnegative integer")->required();
  add_common(zeck, zeck_opts);

  // reps
  auto* reps = app.add_subcommand(
      "reps", "Count representations as sums of distinct sequence terms");
  std::string reps_value;
  int reps_m = 2, reps_max_index = 0;
  CommonOpts reps_opts;
  reps->add_option("-m", reps_m, "Step count")->capture_default_str();
  reps->add_option("-N,--value", reps_value, "Nonnegative integer")->required();
  reps->add_option("--max-index", reps_max_index,
                   "Largest term index (0 = auto)");
  add_common(reps, reps_opts);

  // maxsize
  auto* maxsize = app.add_subcommand(
      "maxsize", "Largest representation count over one index block");
  int maxsize_m = 2, maxsize_n = 1;
  CommonOpts maxsize_opts;
  maxsize->add_option("-m", maxsize_m, "Step count")->capture_default_str();
  maxsize->add_option("-n", maxsize_n, "Block index")->required();
  add_common(maxsize, maxsize_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return run_count(count_keyword, parse_n_range(count_range),
                                 count_opts);
    if (*hist)
      return run_histogram(hist_keyword, parse_n_range(hist_range), hist_opts);
    if (*table) return run_table(table_id, table_opts);
    if (*verify) {
      int max_m = verify_max_m;
      int max_n = verify_max_n;
      // Suite-specific defaults sized so a full run stays in the minutes
      // range on a laptop.
      if (max_m <= 0) max_m = verify_suite == "iso" ? 3 : 4;
      if (max_n <= 0) {
        if (verify_suite == "theorem" || verify_suite == "gf") max_n = 14;
        else if (verify_suite == "iso") max_n = 10;
        else max_n = 12;
      }
      const int cross = verify_suite == "iso" || verify_suite == "all"
                            ? verify_cross_n
                            : 0;
      return run_verify(verify_suite, max_m, max_n, cross, verify_dedupe,
                        verify_opts);
    }
    if (*classes)
      return run_classes(classes_keyword, classes_word, classes_dot,
                         classes_opts);
    if (*dist) return run_distance(dist_keyword, dist_u, dist_v, dist_opts);
    if (*series)
      return run_series(series_keyword, series_n_max, series_method,
                        series_opts);
    if (*finger) return run_fingerprint(finger_keywords, finger_opts);
    if (*commute)
      return run_commute(commute_keyword,
                         commute_delta >= 0 ? std::optional<int>(commute_delta)
                                            : std::nullopt,
                         commute_i >= 0 ? std::optional<int>(commute_i)
                                        : std::nullopt,
                         commute_j >= 0 ? std::optional<int>(commute_j)
                                        : std::nullopt,
                         commute_n >= 0 ? std::optional<int>(commute_n)
                                        : std::nullopt,
                         commute_opts);
    if (*orbit) return run_orbit(orbit_keyword, orbit_opts);
    if (*iso)
      return run_iso(iso_keywords, parse_n_range(iso_range), iso_cap,
                     iso_certs, iso_opts);
    if (*zeck) return run_zeck(zeck_value, zeck_opts);
    if (*reps) return run_reps(reps_m, reps_value, reps_max_index, reps_opts);
    if (*maxsize) return run_maxsize(maxsize_m, maxsize_n, maxsize_opts);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  return kExitUsage;
}
