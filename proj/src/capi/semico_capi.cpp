#include "semico/semico.h"

#include <new>
#include <string>

#include "report.hpp"
#include "semico/parallel.hpp"

struct semico_input {
  semico::io::Input value;
};

struct semico_report {
  semico::capi::Report report;
  std::string json;
};

namespace {

thread_local std::string last_error;

semico_status fail(semico_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
semico_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SEMICO_OK;
  } catch (const semico::ParseError& e) {
    return fail(SEMICO_ERR_PARSE, e.what());
  } catch (const semico::ValidationError& e) {
    return fail(SEMICO_ERR_INVALID, e.what());
  } catch (const semico::BudgetExceeded& e) {
    return fail(SEMICO_ERR_BUDGET, e.what());
  } catch (const semico::TheoremMismatch& e) {
    return fail(SEMICO_ERR_MISMATCH, e.what());
  } catch (const semico::Unsupported& e) {
    return fail(SEMICO_ERR_UNSUPPORTED, e.what());
  } catch (const semico::io::Json::exception& e) {
    return fail(SEMICO_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SEMICO_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEMICO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEMICO_ERR_INTERNAL, e.what());
  }
}

semico_report* wrap(semico::capi::Report r) {
  auto* out = new semico_report{std::move(r), {}};
  out->json = out->report.json.dump(2);
  return out;
}

const semico::MSemimodule& need_semimodule(const semico_input* in) {
  if (auto* s = std::get_if<semico::MSemimodule>(&in->value)) return *s;
  if (auto* e = std::get_if<semico::SchreierExtension>(&in->value)) return e->module;
  throw std::invalid_argument("this command needs a semimodule input");
}

bool bad_range(unsigned lo, unsigned hi) { return lo > hi || hi > 64; }

}  // namespace

extern "C" {

const char* semico_version(void) { return "1.0.0"; }

const char* semico_status_name(semico_status status) {
  switch (status) {
    case SEMICO_OK: return "ok";
    case SEMICO_ERR_PARSE: return "parse error";
    case SEMICO_ERR_INVALID: return "validation error";
    case SEMICO_ERR_BUDGET: return "budget exceeded";
    case SEMICO_ERR_MISMATCH: return "theorem mismatch";
    case SEMICO_ERR_UNSUPPORTED: return "unsupported";
    case SEMICO_ERR_ARGUMENT: return "bad argument";
    case SEMICO_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* semico_last_error(void) { return last_error.c_str(); }

semico_status semico_set_threads(unsigned threads) {
  return guarded([&] { semico::set_thread_count(threads); });
}

semico_status semico_input_parse(const char* text, semico_input** out) {
  if (out) *out = nullptr;
  if (!text || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new semico_input{semico::io::parse_input_text(text)}; });
}

semico_status semico_input_load(const char* path, semico_input** out) {
  if (out) *out = nullptr;
  if (!path || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new semico_input{semico::io::load_input(path)}; });
}

const char* semico_input_kind(const semico_input* input) {
  if (!input) return "";
  static const char* names[] = {"monoid", "carrier", "semimodule", "cyclic", "extension"};
  return names[input->value.index()];
}

void semico_input_free(semico_input* input) { delete input; }

semico_status semico_validate(const semico_input* input, semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(semico::capi::validate_report(input->value)); });
}

semico_status semico_cohomology(const semico_input* input, unsigned n_lo, unsigned n_hi, uint64_t budget,
                                semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  if (bad_range(n_lo, n_hi) || budget == 0) return fail(SEMICO_ERR_ARGUMENT, "bad degree range or budget");
  return guarded([&] { *out = wrap(semico::capi::cohomology_report(need_semimodule(input), n_lo, n_hi, budget)); });
}

semico_status semico_diagram(const semico_input* input, unsigned n, uint64_t budget, semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  if (n > 64 || budget == 0) return fail(SEMICO_ERR_ARGUMENT, "bad degree or budget");
  return guarded([&] { *out = wrap(semico::capi::diagram_report(need_semimodule(input), n, budget)); });
}

semico_status semico_classify(const semico_input* input, int with_oracle, uint64_t budget, semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  if (budget == 0) return fail(SEMICO_ERR_ARGUMENT, "budget must be positive");
  return guarded(
      [&] { *out = wrap(semico::capi::classify_report(need_semimodule(input), with_oracle != 0, budget)); });
}

semico_status semico_completion(const semico_input* input, semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = wrap(semico::capi::completion_report(input->value)); });
}

semico_status semico_cyclic(const semico_input* input, unsigned n_lo, unsigned n_hi, uint64_t budget,
                            semico_report** out) {
  if (out) *out = nullptr;
  if (!input || !out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  if (bad_range(n_lo, n_hi) || budget == 0) return fail(SEMICO_ERR_ARGUMENT, "bad degree range or budget");
  return guarded([&] {
    semico::CyclicData d;
    if (auto* c = std::get_if<semico::CyclicData>(&input->value)) d = *c;
    else d = semico::cyclic_data_from(need_semimodule(input));
    *out = wrap(semico::capi::cyclic_report(d, n_lo, n_hi, budget));
  });
}

semico_status semico_cyclic_separation(int64_t m, unsigned n_lo, unsigned n_hi, semico_report** out) {
  if (out) *out = nullptr;
  if (!out) return fail(SEMICO_ERR_ARGUMENT, "null argument");
  if (m < 2 || m > 1000) return fail(SEMICO_ERR_ARGUMENT, "m must lie in 2..1000");
  if (bad_range(n_lo, n_hi)) return fail(SEMICO_ERR_ARGUMENT, "bad degree range");
  return guarded([&] { *out = wrap(semico::capi::separation_report_of(m, n_lo, n_hi)); });
}

const char* semico_report_json(const semico_report* report) { return report ? report->json.c_str() : ""; }

const char* semico_report_text(const semico_report* report) { return report ? report->report.text.c_str() : ""; }

int semico_report_ok(const semico_report* report) { return report && report->report.ok ? 1 : 0; }

void semico_report_free(semico_report* report) { delete report; }

}  // extern "C"
