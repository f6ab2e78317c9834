#include "leibniz/leibniz.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "leibniz/catalog.hpp"
#include "leibniz/report.hpp"

struct lb_law {
  leibniz::ParsedLaw value;
};

struct lb_family {
  leibniz::ContractionFamily value;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_line = 0;
thread_local std::size_t g_column = 0;

lb_status fail(lb_status s, const std::string& message) {
  g_error = message;
  return s;
}

template <class Body>
lb_status guarded(Body&& body) {
  g_error.clear();
  g_line = g_column = 0;
  try {
    body();
    return LB_OK;
  } catch (const leibniz::ParseError& e) {
    g_line = e.line();
    g_column = e.column();
    return fail(LB_ERR_PARSE, e.what());
  } catch (const leibniz::InvalidArgument& e) {
    return fail(LB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const leibniz::UnknownName& e) {
    return fail(LB_ERR_UNKNOWN_NAME, e.what());
  } catch (const leibniz::DimensionMismatch& e) {
    return fail(LB_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const leibniz::DivisionByZero& e) {
    return fail(LB_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const leibniz::PoleAtZero& e) {
    return fail(LB_ERR_POLE_AT_ZERO, e.what());
  } catch (const leibniz::NotNilpotent& e) {
    return fail(LB_ERR_NOT_NILPOTENT, e.what());
  } catch (const leibniz::PreconditionFailed& e) {
    return fail(LB_ERR_PRECONDITION, e.what());
  } catch (const leibniz::SingularMatrix& e) {
    return fail(LB_ERR_SINGULAR, e.what());
  } catch (const leibniz::SearchExhausted& e) {
    return fail(LB_ERR_SEARCH_EXHAUSTED, e.what());
  } catch (const leibniz::NotRepresentable& e) {
    return fail(LB_ERR_NOT_REPRESENTABLE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LB_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(LB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LB_ERR_INTERNAL, "unknown exception");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw leibniz::InvalidArgument(std::string("null argument: ") + what);
}

const leibniz::ExactLaw& exact_law(const lb_law* law, const char* role) {
  if (!law->value.is_exact())
    throw leibniz::PreconditionFailed(std::string(role) + " has the unbound parameter '" + law->value.variable + "'");
  return law->value.exact();
}

}  // namespace

#define LB_REQUIRE(p)                                                               \
  do {                                                                              \
    if (!(p)) return fail(LB_ERR_NULL_ARGUMENT, "null argument: " #p);              \
  } while (0)

extern "C" {

const char* lb_version(void) { return "1.0.0"; }

const char* lb_status_name(lb_status status) {
  switch (status) {
    case LB_OK: return "ok";
    case LB_ERR_NULL_ARGUMENT: return "null argument";
    case LB_ERR_PARSE: return "parse error";
    case LB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LB_ERR_UNKNOWN_NAME: return "unknown name";
    case LB_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case LB_ERR_DIVISION_BY_ZERO: return "division by zero";
    case LB_ERR_POLE_AT_ZERO: return "pole at zero";
    case LB_ERR_NOT_NILPOTENT: return "not nilpotent";
    case LB_ERR_PRECONDITION: return "precondition failed";
    case LB_ERR_SINGULAR: return "singular matrix";
    case LB_ERR_SEARCH_EXHAUSTED: return "search exhausted";
    case LB_ERR_NOT_REPRESENTABLE: return "not representable";
    case LB_ERR_INTERNAL: return "internal error";
    case LB_ERR_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* lb_last_error(void) { return g_error.c_str(); }
size_t lb_last_error_line(void) { return g_line; }
size_t lb_last_error_column(void) { return g_column; }

void lb_string_free(char* s) { std::free(s); }

lb_status lb_law_parse(const char* text, const char* const* names, const char* const* values, size_t count,
                       lb_law** out) {
  LB_REQUIRE(text);
  LB_REQUIRE(out);
  if (count > 0 && (!names || !values)) return fail(LB_ERR_NULL_ARGUMENT, "null binding arrays");
  return guarded([&] {
    leibniz::Bindings bindings;
    for (size_t k = 0; k < count; ++k) {
      require(names[k], "binding name");
      require(values[k], "binding value");
      if (!bindings.emplace(names[k], leibniz::parse_scalar(values[k])).second)
        throw leibniz::InvalidArgument(std::string("parameter '") + names[k] + "' bound twice");
    }
    *out = new lb_law{leibniz::parse_algebra(text, bindings)};
  });
}

lb_status lb_law_from_catalog(const char* name, const char* param, size_t dim, lb_law** out) {
  LB_REQUIRE(name);
  LB_REQUIRE(out);
  return guarded([&] {
    using GR = leibniz::GaussianRational;
    std::vector<GR> params;
    if (param) params.push_back(leibniz::parse_scalar(param));
    std::optional<std::size_t> d;
    if (dim) d = dim;
    auto law = leibniz::make_law<GR>(name, std::span<const GR>(params), d);
    *out = new lb_law{{std::move(law), ""}};
  });
}

lb_status lb_direction_from_catalog(const char* name, lb_law** out) {
  LB_REQUIRE(name);
  LB_REQUIRE(out);
  return guarded([&] {
    *out = new lb_law{{leibniz::perturbation_direction<leibniz::GaussianRational>(name), ""}};
  });
}

void lb_law_free(lb_law* law) { delete law; }

size_t lb_law_dim(const lb_law* law) {
  if (!law) return 0;
  return std::visit([](const auto& l) { return l.dim(); }, law->value.law);
}

int lb_law_is_formal(const lb_law* law) { return law && !law->value.is_exact() ? 1 : 0; }

lb_status lb_law_constant(const lb_law* law, size_t i, size_t j, size_t k, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(out);
  return guarded([&] {
    if (i == 0 || j == 0 || k == 0) throw leibniz::DimensionMismatch("indices are 1-based");
    if (law->value.is_exact()) {
      *out = duplicate(leibniz::to_string(law->value.exact()(i - 1, j - 1, k - 1)));
    } else {
      *out = duplicate(leibniz::to_string(law->value.formal()(i - 1, j - 1, k - 1), law->value.variable));
    }
  });
}

lb_status lb_law_print(const lb_law* law, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(out);
  return guarded([&] {
    *out = duplicate(law->value.is_exact() ? leibniz::print_algebra(law->value.exact())
                                           : leibniz::print_algebra(law->value.formal(), law->value.variable));
  });
}

lb_status lb_law_check_leibniz(const lb_law* law, int* holds) {
  LB_REQUIRE(law);
  LB_REQUIRE(holds);
  return guarded([&] {
    *holds = std::visit([](const auto& l) { return leibniz::check_leibniz(l).holds; }, law->value.law) ? 1 : 0;
  });
}

lb_status lb_family_parse(const char* text, lb_family** out) {
  LB_REQUIRE(text);
  LB_REQUIRE(out);
  return guarded([&] { *out = new lb_family{leibniz::parse_family(text)}; });
}

lb_status lb_family_from_catalog(const char* name, lb_family** out) {
  LB_REQUIRE(name);
  LB_REQUIRE(out);
  return guarded([&] { *out = new lb_family{leibniz::make_family(name)}; });
}

void lb_family_free(lb_family* family) { delete family; }

lb_status lb_family_print(const lb_family* family, char** out) {
  LB_REQUIRE(family);
  LB_REQUIRE(out);
  return guarded([&] { *out = duplicate(leibniz::print_family(family->value)); });
}

lb_status lb_report_check(const lb_law* law, int* ok, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(ok);
  LB_REQUIRE(out);
  return guarded([&] {
    auto r = leibniz::check_report(law->value);
    *out = duplicate(r.text);
    *ok = r.ok ? 1 : 0;
  });
}

lb_status lb_report_invariants(const lb_law* law, uint64_t seed, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(out);
  return guarded([&] { *out = duplicate(leibniz::invariants_report(law->value, seed).text); });
}

lb_status lb_report_classify(const lb_law* law, uint64_t seed, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(out);
  return guarded([&] { *out = duplicate(leibniz::classify_report(law->value, seed).text); });
}

lb_status lb_report_contract(const lb_law* law, const lb_family* family, uint64_t seed, int* ok, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(family);
  LB_REQUIRE(ok);
  LB_REQUIRE(out);
  return guarded([&] {
    auto r = leibniz::contract_report(exact_law(law, "law"), family->value, seed);
    *out = duplicate(r.text);
    *ok = r.ok ? 1 : 0;
  });
}

lb_status lb_report_perturb(const lb_law* law, const lb_law* direction, uint64_t seed, int* ok, char** out) {
  LB_REQUIRE(law);
  LB_REQUIRE(direction);
  LB_REQUIRE(ok);
  LB_REQUIRE(out);
  return guarded([&] {
    auto r = leibniz::perturb_report(exact_law(law, "law"), exact_law(direction, "direction"), seed);
    *out = duplicate(r.text);
    *ok = r.ok ? 1 : 0;
  });
}

lb_status lb_report_catalog(char** out) {
  LB_REQUIRE(out);
  return guarded([&] { *out = duplicate(leibniz::catalog_report()); });
}

lb_status lb_graph_dot(const char* catalog, const char* b, uint64_t seed, char** out) {
  LB_REQUIRE(catalog);
  LB_REQUIRE(out);
  return guarded([&] {
    if (std::string(catalog) != "leibn3") throw leibniz::UnknownName(std::string("unknown graph catalog '") + catalog + "'");
    const leibniz::GaussianRational sample = b ? leibniz::parse_scalar(b) : leibniz::GaussianRational::one();
    auto graph = leibniz::build_degeneration_graph(leibniz::leibn3_nodes(sample), seed);
    *out = duplicate(leibniz::emit_dot(graph));
  });
}

}  // extern "C"
