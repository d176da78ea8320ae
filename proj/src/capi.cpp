#include "difun/difun.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"
#include "generators.hpp"
#include "json_io.hpp"
#include "relations.hpp"
#include "semigroup.hpp"
#include "tables.hpp"
#include "verify.hpp"

struct difun_relation {
  difun::DifunRelation value;
};

namespace {

thread_local std::string g_last_error;

difun_status fail(difun_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

difun_status write_out(const std::string& s, char** out) {
  *out = dup_string(s);
  return *out ? DIFUN_OK : fail(DIFUN_ERROR_NOMEM, "out of memory");
}

template <typename Fn>
difun_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const difun::BudgetError& e) {
    return fail(DIFUN_ERROR_BUDGET, e.what());
  } catch (const difun::ParseError& e) {
    return fail(DIFUN_ERROR_PARSE, e.what());
  } catch (const difun::DimensionError& e) {
    return fail(DIFUN_ERROR_DIMENSION, e.what());
  } catch (const difun::FormError& e) {
    return fail(DIFUN_ERROR_FORM, e.what());
  } catch (const difun::DomainError& e) {
    return fail(DIFUN_ERROR_USAGE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(DIFUN_ERROR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DIFUN_ERROR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(DIFUN_ERROR_USAGE, e.what());
  }
}

difun_status wrap_relation(difun::DifunRelation value, difun_relation** out) {
  *out = new (std::nothrow) difun_relation{std::move(value)};
  return *out ? DIFUN_OK : fail(DIFUN_ERROR_NOMEM, "out of memory");
}

bool null_args(std::initializer_list<const void*> ptrs) {
  for (const void* p : ptrs)
    if (p == nullptr) return true;
  return false;
}

difun_status usage_null() {
  return fail(DIFUN_ERROR_USAGE, "null argument");
}

}  // namespace

extern "C" {

const char* difun_version(void) { return "1.0.0"; }

const char* difun_last_error(void) { return g_last_error.c_str(); }

void difun_string_free(char* s) { delete[] s; }

difun_status difun_relation_parse(const char* json, difun_relation** out) {
  if (null_args({json, out})) return usage_null();
  return guarded([&] {
    return wrap_relation(
        difun::relation_from_json(nlohmann::json::parse(json)), out);
  });
}

difun_status difun_relation_to_json(const difun_relation* a, char** out) {
  if (null_args({a, out})) return usage_null();
  return guarded(
      [&] { return write_out(difun::relation_to_json(a->value).dump(), out); });
}

difun_status difun_relation_identity(int n, difun_relation** out) {
  if (null_args({out})) return usage_null();
  return guarded(
      [&] { return wrap_relation(difun::DifunRelation::identity(n), out); });
}

difun_status difun_relation_zero(int n, difun_relation** out) {
  if (null_args({out})) return usage_null();
  return guarded(
      [&] { return wrap_relation(difun::DifunRelation::empty(n), out); });
}

int difun_relation_ground_set(const difun_relation* a) {
  return a ? a->value.n() : -1;
}

int difun_relation_rank(const difun_relation* a) {
  return a ? a->value.rank() : -1;
}

int difun_relation_equal(const difun_relation* a, const difun_relation* b) {
  if (!a || !b) return -1;
  return a->value == b->value ? 1 : 0;
}

difun_status difun_diamond(const difun_relation* a, const difun_relation* b,
                           difun_relation** out) {
  if (null_args({a, b, out})) return usage_null();
  return guarded(
      [&] { return wrap_relation(difun::diamond(a->value, b->value), out); });
}

difun_status difun_inverse(const difun_relation* a, difun_relation** out) {
  if (null_args({a, out})) return usage_null();
  return guarded([&] { return wrap_relation(difun::inverse(a->value), out); });
}

void difun_relation_free(difun_relation* a) { delete a; }

difun_status difun_render_tables(int max_n, const char* format, char** out) {
  if (null_args({format, out})) return usage_null();
  return guarded([&]() -> difun_status {
    auto parsed = difun::parse_table_format(format);
    if (!parsed)
      return fail(DIFUN_ERROR_USAGE,
                  std::string("unknown table format \"") + format + "\"");
    return write_out(difun::render_tables(max_n, *parsed), out);
  });
}

difun_status difun_rank_report_json(int n, int r, char** out) {
  if (null_args({out})) return usage_null();
  return guarded([&] {
    return write_out(difun::rank_report_to_json(difun::rank_report(n, r)).dump(),
                     out);
  });
}

difun_status difun_enumerate_json(int n, int r, int ideal, char** out) {
  if (null_args({out})) return usage_null();
  return guarded([&]() -> difun_status {
    if (n < 1)
      return fail(DIFUN_ERROR_USAGE, "ground set must have at least 1 point");
    if (n > 5)
      return fail(DIFUN_ERROR_BUDGET,
                  "element listing is capped at n = 5 (counts explode)");
    if (r < -1 || r > n)
      return fail(DIFUN_ERROR_USAGE, "rank must be -1 (all) or within 0..n");
    difun::ElementSet elements =
        (r < 0) ? difun::enumerate_all(n)
                : (ideal ? difun::enumerate_ideal(n, r)
                         : difun::enumerate_j_class(n, r));
    std::ostringstream lines;
    for (const auto& e : elements)
      lines << difun::relation_to_json(e).dump() << '\n';
    lines << nlohmann::json{{"count", elements.size()}}.dump() << '\n';
    return write_out(lines.str(), out);
  });
}

difun_status difun_closure_json(const char* generators_json, uint64_t budget,
                                char** out) {
  if (null_args({generators_json, out})) return usage_null();
  return guarded([&]() -> difun_status {
    difun::ElementSet generators =
        difun::element_set_from_json(nlohmann::json::parse(generators_json));
    difun::ProductBudget tracked(budget == 0 ? UINT64_MAX : budget);
    difun::ClosureOptions options;
    options.budget = &tracked;
    auto result = difun::closure(generators.items(), options);
    std::ostringstream lines;
    for (const auto& e : result.elements())
      lines << difun::relation_to_json(e).dump() << '\n';
    lines << nlohmann::json{{"count", result.elements().size()},
                            {"products", result.products_used()},
                            {"exhausted", result.exhausted()}}
                 .dump()
          << '\n';
    return write_out(lines.str(), out);
  });
}

difun_status difun_audit_json(int n, int r, const char* candidate_json,
                              char** out) {
  if (null_args({candidate_json, out})) return usage_null();
  return guarded([&] {
    difun::ElementSet candidate =
        difun::element_set_from_json(nlohmann::json::parse(candidate_json));
    return write_out(
        difun::audit_verdict_to_json(
            difun::audit_necessary_elements(n, r, candidate))
            .dump(),
        out);
  });
}

difun_status difun_verify(int n, const char* depth, uint64_t budget,
                          int as_json, char** report) {
  if (null_args({depth, report})) return usage_null();
  return guarded([&]() -> difun_status {
    auto parsed = difun::parse_depth(depth);
    if (!parsed)
      return fail(DIFUN_ERROR_USAGE,
                  std::string("unknown verification depth \"") + depth + "\"");
    difun::VerificationReport result =
        difun::run_verification({n, *parsed, budget});
    std::string rendered = as_json
                               ? difun::report_to_json(result).dump(2) + "\n"
                               : difun::render_report_text(result);
    difun_status status = write_out(rendered, report);
    if (status != DIFUN_OK) return status;
    if (result.any_failed())
      return fail(DIFUN_ERROR_VERIFICATION, "at least one check failed");
    if (result.any_inconclusive())
      return fail(DIFUN_ERROR_BUDGET,
                  "the product budget cut verification short");
    return DIFUN_OK;
  });
}

}  // extern "C"
