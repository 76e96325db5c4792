#include "kwclass.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kwclass/classes.hpp"
#include "kwclass/config.hpp"
#include "kwclass/graphs.hpp"
#include "kwclass/sequences.hpp"
#include "kwclass/spectra.hpp"
#include "kwclass/verify.hpp"
#include "kwclass/word.hpp"

struct kw_partition {
  kwclass::ClassPartition impl;
};

namespace {

thread_local std::string g_last_error;

kw_status fail(kw_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

kw_status status_from_current_exception() {
  try {
    throw;
  } catch (const kwclass::Error& e) {
    switch (e.code()) {
      case kwclass::errc::parse_error:
        return fail(KW_ERR_PARSE, e.what());
      case kwclass::errc::invalid_parameter:
        return fail(KW_ERR_INVALID_PARAMETER, e.what());
      case kwclass::errc::index_out_of_range:
        return fail(KW_ERR_INDEX_OUT_OF_RANGE, e.what());
      case kwclass::errc::capacity_exceeded:
        return fail(KW_ERR_CAPACITY_EXCEEDED, e.what());
      case kwclass::errc::length_mismatch:
        return fail(KW_ERR_LENGTH_MISMATCH, e.what());
      case kwclass::errc::invalid_delta:
        return fail(KW_ERR_INVALID_DELTA, e.what());
      case kwclass::errc::component_too_large:
        return fail(KW_ERR_COMPONENT_TOO_LARGE, e.what());
      case kwclass::errc::verification_failure:
        return fail(KW_ERR_VERIFICATION_FAILED, e.what());
    }
    return fail(KW_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KW_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(KW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KW_ERR_INTERNAL, "unknown error");
  }
}

template <typename Fn>
kw_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (...) {
    return status_from_current_exception();
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kw_status require(bool condition, const char* what) {
  if (condition) return KW_OK;
  return fail(KW_ERR_INVALID_PARAMETER, what);
}

kwclass::Word parse_word(const char* text) {
  if (!text)
    throw kwclass::Error(kwclass::errc::invalid_parameter,
                         "null word pointer");
  return kwclass::Word::parse(text);
}

kwclass::Keyword parse_keyword(const char* text) {
  if (!text)
    throw kwclass::Error(kwclass::errc::invalid_parameter,
                         "null keyword pointer");
  return kwclass::Keyword::parse(text);
}

kwclass::BigInt parse_decimal(const char* text) {
  if (!text)
    throw kwclass::Error(kwclass::errc::invalid_parameter,
                         "null integer pointer");
  try {
    return kwclass::BigInt(text);
  } catch (const std::exception&) {
    throw kwclass::Error(kwclass::errc::parse_error,
                         "invalid decimal integer \"" + std::string(text) +
                             "\"");
  }
}

std::vector<kwclass::BigInt> series_by_method(const kwclass::Keyword& a,
                                              int n_max, const char* method) {
  const std::string name = method ? method : "gf";
  if (name == "gf") return kwclass::size1_series_gf(a, n_max);
  if (name == "brute") return kwclass::size1_series_brute(a, n_max);
  if (name == "transfer") return kwclass::size1_series_transfer(a, n_max);
  throw kwclass::Error(kwclass::errc::invalid_parameter,
                       "unknown series method \"" + name + "\"");
}

std::string join_series(const std::vector<kwclass::BigInt>& series) {
  std::string out;
  for (const auto& value : series) {
    if (!out.empty()) out += ' ';
    out += value.str();
  }
  return out;
}

}  // namespace

extern "C" {

const char* kw_status_name(kw_status status) {
  switch (status) {
    case KW_OK: return "ok";
    case KW_ERR_PARSE: return "parse error";
    case KW_ERR_INVALID_PARAMETER: return "invalid parameter";
    case KW_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case KW_ERR_CAPACITY_EXCEEDED: return "capacity exceeded";
    case KW_ERR_LENGTH_MISMATCH: return "length mismatch";
    case KW_ERR_INVALID_DELTA: return "invalid delta";
    case KW_ERR_COMPONENT_TOO_LARGE: return "component too large";
    case KW_ERR_VERIFICATION_FAILED: return "verification failed";
    case KW_ERR_NOMEM: return "out of memory";
    case KW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* kw_last_error(void) { return g_last_error.c_str(); }

void kw_string_free(char* s) { std::free(s); }

void kw_buffer_free(void* p) { std::free(p); }

const char* kw_version(void) { return "1.0.0"; }

int kw_max_n(void) { return kwclass::max_n(); }

int kw_max_n_graph(void) { return kwclass::max_n_graph(); }

/* ---------------------------------------------------------------- words */

static kw_status word_unary(const char* u, char** out,
                            kwclass::Word (*op)(const kwclass::Word&)) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(op(parse_word(u)).str());
    return KW_OK;
  });
}

kw_status kw_negate(const char* u, char** out) {
  return word_unary(u, out, kwclass::negate);
}

kw_status kw_reverse(const char* u, char** out) {
  return word_unary(u, out, kwclass::reverse);
}

kw_status kw_seminegate(const char* u, char** out) {
  return word_unary(u, out, kwclass::seminegate);
}

kw_status kw_concat(const char* u, const char* w, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::concat(parse_word(u), parse_word(w)).str());
    return KW_OK;
  });
}

kw_status kw_subword(const char* u, int i, int j, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::subword(parse_word(u), i, j).str());
    return KW_OK;
  });
}

kw_status kw_applicable(const char* keyword, const char* u, int i, int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::applicable(parse_keyword(keyword), parse_word(u), i);
    return KW_OK;
  });
}

kw_status kw_simple_map(const char* keyword, int i, const char* u,
                        char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(
        kwclass::simple_map(parse_keyword(keyword), i, parse_word(u)).str());
    return KW_OK;
  });
}

kw_status kw_acts_completely(const char* keyword, const int* indices,
                             size_t index_count, const char* u, int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  if (kw_status s = require(indices != nullptr || index_count == 0,
                            "null index list"))
    return s;
  return guarded([&] {
    const std::vector<int> list(indices, indices + index_count);
    *out = kwclass::acts_completely(parse_keyword(keyword), list,
                                    parse_word(u));
    return KW_OK;
  });
}

kw_status kw_commutes_by_criterion(const char* keyword, int delta, int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::commutes_by_criterion(parse_keyword(keyword), delta);
    return KW_OK;
  });
}

kw_status kw_commutes_brute_force(const char* keyword, int i, int j, int n,
                                  int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::commutes_brute_force(parse_keyword(keyword), i, j, n);
    return KW_OK;
  });
}

kw_status kw_keyword_orbit(const char* keyword, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    std::string joined;
    for (const auto& member : kwclass::keyword_orbit(parse_keyword(keyword))) {
      if (!joined.empty()) joined += ' ';
      joined += member.str();
    }
    *out = dup_string(joined);
    return KW_OK;
  });
}

/* ------------------------------------------------------------ sequences */

kw_status kw_fib(int m, int n, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::fib(m, n).str());
    return KW_OK;
  });
}

kw_status kw_partial_sum(int m, int n, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::partial_sum(m, n).str());
    return KW_OK;
  });
}

kw_status kw_word_value(int m, const char* u, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::word_value(m, parse_word(u)).str());
    return KW_OK;
  });
}

kw_status kw_zeckendorf(const char* value_decimal, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const auto rep = kwclass::zeckendorf(parse_decimal(value_decimal));
    *out = dup_string(kwclass::to_string(rep, 2));
    return KW_OK;
  });
}

kw_status kw_count_representations(int m, const char* value_decimal,
                                   int max_index, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(
        kwclass::count_representations(m, parse_decimal(value_decimal),
                                       max_index)
            .str());
    return KW_OK;
  });
}

kw_status kw_max_representations(int m, int n, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::max_representations(m, n).str());
    return KW_OK;
  });
}

/* -------------------------------------------------------------- classes */

kw_status kw_partition_build(const char* keyword, int n, int workers,
                             kw_partition** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = new kw_partition{
        kwclass::ClassPartition(parse_keyword(keyword), n, workers)};
    return KW_OK;
  });
}

void kw_partition_free(kw_partition* partition) { delete partition; }

kw_status kw_partition_class_count(const kw_partition* partition,
                                   uint64_t* out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  *out = partition->impl.class_count();
  return KW_OK;
}

kw_status kw_partition_class_size(const kw_partition* partition, const char* u,
                                  uint64_t* out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  return guarded([&] {
    *out = partition->impl.class_size(parse_word(u));
    return KW_OK;
  });
}

kw_status kw_partition_same_class(const kw_partition* partition, const char* u,
                                  const char* v, int* out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  return guarded([&] {
    *out = partition->impl.same_class(parse_word(u), parse_word(v));
    return KW_OK;
  });
}

kw_status kw_partition_representative(const kw_partition* partition,
                                      const char* u, char** out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  return guarded([&] {
    *out = dup_string(partition->impl.representative(parse_word(u)).str());
    return KW_OK;
  });
}

kw_status kw_partition_histogram(const kw_partition* partition,
                                 uint64_t** sizes, uint64_t** counts,
                                 size_t* length) {
  if (kw_status s = require(partition && sizes && counts && length,
                            "null pointer"))
    return s;
  return guarded([&]() -> kw_status {
    const auto hist = partition->impl.histogram();
    auto* size_buf =
        static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * hist.size()));
    auto* count_buf =
        static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * hist.size()));
    if ((!size_buf || !count_buf) && !hist.empty()) {
      std::free(size_buf);
      std::free(count_buf);
      throw std::bad_alloc();
    }
    size_t at = 0;
    for (const auto& [size, count] : hist) {
      size_buf[at] = size;
      count_buf[at] = count;
      ++at;
    }
    *sizes = size_buf;
    *counts = count_buf;
    *length = hist.size();
    return KW_OK;
  });
}

kw_status kw_partition_histogram_csv(const kw_partition* partition,
                                     char** out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::histogram_csv(partition->impl.histogram()));
    return KW_OK;
  });
}

kw_status kw_partition_histogram_json(const kw_partition* partition,
                                      char** out) {
  if (kw_status s = require(partition && out, "null pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::histogram_json(partition->impl.keyword(),
                                              partition->impl.n(),
                                              partition->impl.histogram()));
    return KW_OK;
  });
}

kw_status kw_count_classes(const char* keyword, int n, int workers,
                           uint64_t* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::count_classes(parse_keyword(keyword), n, workers);
    return KW_OK;
  });
}

kw_status kw_class_of(const char* keyword, const char* u, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    std::string joined;
    for (const auto& member :
         kwclass::class_of(parse_keyword(keyword), parse_word(u))) {
      if (!joined.empty()) joined += ' ';
      joined += member.str();
    }
    *out = dup_string(joined);
    return KW_OK;
  });
}

kw_status kw_verify_theorem(const char* keyword, int n_max, int workers,
                            char** report, int* ok) {
  if (kw_status s = require(report && ok, "null pointer")) return s;
  return guarded([&]() -> kw_status {
    const auto result =
        kwclass::verify_theorem(parse_keyword(keyword), n_max, workers);
    *report = dup_string(result.str());
    *ok = result.ok;
    if (result.ok) return KW_OK;
    for (const auto& row : result.rows)
      if (kwclass::BigInt(row.classes) != row.expected)
        return fail(KW_ERR_VERIFICATION_FAILED,
                    "count mismatch at n=" + std::to_string(row.n) + ": got " +
                        std::to_string(row.classes) + ", expected " +
                        row.expected.str());
    return fail(KW_ERR_VERIFICATION_FAILED, "verification failed");
  });
}

/* -------------------------------------------------------------- spectra */

kw_status kw_fingerprint(const char* keyword, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::fingerprint(parse_keyword(keyword))
                          .flag_string());
    return KW_OK;
  });
}

kw_status kw_correlation_polynomials(const char* keyword, char** p1, char** p2,
                                     char** q) {
  return guarded([&] {
    const auto polys = kwclass::correlation_polynomials(parse_keyword(keyword));
    if (p1) *p1 = dup_string(kwclass::poly_str(polys.p1));
    if (p2) *p2 = dup_string(kwclass::poly_str(polys.p2));
    if (q) *q = dup_string(kwclass::poly_str(polys.q));
    return KW_OK;
  });
}

kw_status kw_same_size1_counts(const char* keyword_a, const char* keyword_b,
                               int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::same_size1_counts(parse_keyword(keyword_a),
                                      parse_keyword(keyword_b));
    return KW_OK;
  });
}

kw_status kw_series(const char* keyword, int n_max, const char* method,
                    char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(
        join_series(series_by_method(parse_keyword(keyword), n_max, method)));
    return KW_OK;
  });
}

kw_status kw_series_csv(const char* keyword, int n_max, const char* method,
                        char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(kwclass::series_csv(
        series_by_method(parse_keyword(keyword), n_max, method)));
    return KW_OK;
  });
}

kw_status kw_series_json(const char* keyword, int n_max, const char* method,
                         char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const auto a = parse_keyword(keyword);
    *out = dup_string(
        kwclass::series_json(a, series_by_method(a, n_max, method)));
    return KW_OK;
  });
}

/* --------------------------------------------------------------- graphs */

kw_status kw_distance(const char* keyword, const char* u, const char* v,
                      int64_t* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const auto d =
        kwclass::distance(parse_keyword(keyword), parse_word(u), parse_word(v));
    *out = d ? *d : -1;
    return KW_OK;
  });
}

kw_status kw_is_bipartite(const char* keyword, int n, int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::is_bipartite(parse_keyword(keyword), n);
    return KW_OK;
  });
}

kw_status kw_isomorphic(const char* keyword_a, const char* keyword_b, int n,
                        int component_cap, int* out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = kwclass::isomorphic(parse_keyword(keyword_a),
                               parse_keyword(keyword_b), n,
                               component_cap > 0 ? component_cap
                                                 : kwclass::kDefaultComponentCap);
    return KW_OK;
  });
}

kw_status kw_canonical_histogram(const char* keyword, int n, int component_cap,
                                 char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    const auto hist = kwclass::canonical_histogram(
        parse_keyword(keyword), n,
        component_cap > 0 ? component_cap : kwclass::kDefaultComponentCap);
    std::string joined;
    for (const auto& [form, count] : hist)
      joined += form.hex() + ' ' + std::to_string(count) + '\n';
    *out = dup_string(joined);
    return KW_OK;
  });
}

kw_status kw_component_dot(const char* keyword, const char* u, char** out) {
  if (kw_status s = require(out != nullptr, "null output pointer")) return s;
  return guarded([&] {
    *out = dup_string(
        kwclass::component_dot(parse_keyword(keyword), parse_word(u)));
    return KW_OK;
  });
}

/* --------------------------------------------------------------- verify */

kw_status kw_verify_suite(const char* suite, int max_m, int max_n,
                          int cross_pair_max_n, int workers, int dedupe_orbit,
                          char** report, int* ok) {
  if (kw_status s = require(suite && report && ok, "null pointer")) return s;
  return guarded([&]() -> kw_status {
    const std::string name = suite;
    const bool dedupe = dedupe_orbit != 0;
    kwclass::SuiteResult result;
    if (name == "theorem" || name == "all")
      result.merge(
          kwclass::verify_theorem_sweep(max_m, max_n, workers, dedupe));
    if (name == "gf" || name == "all")
      result.merge(kwclass::verify_gf_sweep(max_m, max_n, dedupe));
    if (name == "commute" || name == "all")
      result.merge(kwclass::verify_commute_sweep(max_m, max_n, dedupe));
    if (name == "bipartite" || name == "all")
      result.merge(kwclass::verify_bipartite_sweep(max_m, max_n, dedupe));
    if (name == "iso" || name == "all")
      result.merge(
          kwclass::verify_iso_sweep(max_m, max_n, cross_pair_max_n, dedupe));
    if (result.report.empty())
      throw kwclass::Error(kwclass::errc::invalid_parameter,
                           "unknown suite \"" + name + "\"");
    *report = dup_string(result.report);
    *ok = result.ok;
    return result.ok ? KW_OK
                     : fail(KW_ERR_VERIFICATION_FAILED,
                            "suite \"" + name + "\" reported failures");
  });
}

} /* extern "C" */
