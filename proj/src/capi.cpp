#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "deltader/deltader.h"
#include "descriptor.hpp"
#include "scan.hpp"
#include "serialize.hpp"

using namespace deltader;

struct dd_algebra {
  AlgebraPtr algebra;
  std::optional<AlgebraDescriptor> descriptor;
};

struct dd_module {
  Representation module;
  std::optional<ModuleDescriptor> descriptor;
};

struct dd_space {
  DerivationSpace space;
  Representation module;
};

struct dd_scan_report {
  ScanReport report;
};

struct dd_verify_report {
  VerifyReport report;
};

namespace {

thread_local std::string last_error;

dd_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return DD_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return DD_ERR_PARSE;
    case ErrorCode::Semantic:
      return DD_ERR_SEMANTIC;
    case ErrorCode::IndexOutOfRange:
      return DD_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::JacobiViolation:
      return DD_ERR_JACOBI;
    case ErrorCode::NotARepresentation:
      return DD_ERR_NOT_A_REPRESENTATION;
    case ErrorCode::AlgebraMismatch:
      return DD_ERR_ALGEBRA_MISMATCH;
    case ErrorCode::NotDiagonal:
      return DD_ERR_NOT_DIAGONAL;
    case ErrorCode::ShapeMismatch:
      return DD_ERR_SHAPE_MISMATCH;
    case ErrorCode::Verification:
      return DD_ERR_VERIFICATION;
  }
  return DD_ERR_INTERNAL;
}

template <class F>
dd_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return DD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return DD_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DD_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be null");
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* dd_last_error(void) { return last_error.c_str(); }

const char* dd_status_name(dd_status status) {
  switch (status) {
    case DD_OK:
      return "ok";
    case DD_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DD_ERR_PARSE:
      return "parse error";
    case DD_ERR_SEMANTIC:
      return "semantic error";
    case DD_ERR_INDEX_OUT_OF_RANGE:
      return "index out of range";
    case DD_ERR_JACOBI:
      return "Jacobi violation";
    case DD_ERR_NOT_A_REPRESENTATION:
      return "not a representation";
    case DD_ERR_ALGEBRA_MISMATCH:
      return "algebra mismatch";
    case DD_ERR_NOT_DIAGONAL:
      return "not diagonal";
    case DD_ERR_SHAPE_MISMATCH:
      return "shape mismatch";
    case DD_ERR_VERIFICATION:
      return "verification failure";
    case DD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

void dd_string_free(char* s) { std::free(s); }

dd_status dd_algebra_parse(const char* descriptor, dd_algebra** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    AlgebraDescriptor d = parse_algebra_descriptor(descriptor);
    *out = new dd_algebra{d.build(), d};
  });
}

dd_status dd_algebra_from_json(const char* json, dd_algebra** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto algebra = std::make_shared<const LieAlgebra>(algebra_from_json(Json::parse(json)));
    *out = new dd_algebra{algebra, std::nullopt};
  });
}

dd_status dd_algebra_to_json(const dd_algebra* algebra, char** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    *out = copy_string(render(algebra_to_json(*algebra->algebra)));
  });
}

dd_status dd_algebra_describe(const dd_algebra* algebra, char** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    *out = copy_string(algebra->descriptor ? algebra->descriptor->canonical() : "custom");
  });
}

size_t dd_algebra_dim(const dd_algebra* algebra) { return algebra ? algebra->algebra->dim() : 0; }

void dd_algebra_free(dd_algebra* algebra) { delete algebra; }

dd_status dd_module_parse(const dd_algebra* algebra, const char* descriptor, dd_module** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(descriptor, "descriptor");
    require(out, "out");
    ModuleDescriptor d = parse_module_descriptor(descriptor);
    if (!algebra->descriptor) {
      for (const auto& term : d.terms)
        for (const auto& atom : term)
          if (term.size() > 1 || (atom.kind != ModuleAtom::Kind::Adjoint && atom.kind != ModuleAtom::Kind::Trivial))
            throw SemanticError("only 'adjoint' and 'trivial(d)' are available over an algebra read from JSON");
      std::vector<Representation> parts;
      for (const auto& term : d.terms)
        parts.push_back(term[0].kind == ModuleAtom::Kind::Adjoint
                            ? adjoint_module(algebra->algebra)
                            : trivial_module(algebra->algebra, static_cast<std::size_t>(term[0].param)));
      *out = new dd_module{direct_sum_modules(parts), d};
      return;
    }
    *out = new dd_module{rebase(d.build(*algebra->descriptor), algebra->algebra), d};
  });
}

dd_status dd_module_from_json(const dd_algebra* algebra, const char* json, dd_module** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(json, "json");
    require(out, "out");
    *out = new dd_module{module_from_json(Json::parse(json), algebra->algebra), std::nullopt};
  });
}

dd_status dd_module_to_json(const dd_module* module, char** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    *out = copy_string(render(module_to_json(module->module)));
  });
}

dd_status dd_module_describe(const dd_module* module, char** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    *out = copy_string(module->descriptor ? module->descriptor->canonical() : "custom");
  });
}

size_t dd_module_dim(const dd_module* module) { return module ? module->module.dim_v() : 0; }

void dd_module_free(dd_module* module) { delete module; }

dd_status dd_load_json(const char* json, dd_algebra** algebra_out, dd_module** module_out) {
  return guarded([&] {
    require(json, "json");
    require(algebra_out, "algebra_out");
    Json doc = Json::parse(json);
    if (!doc.is_object() || !doc.contains("algebra")) throw InvalidArgument("input JSON needs an \"algebra\" object");
    auto algebra = std::make_shared<const LieAlgebra>(algebra_from_json(doc.at("algebra")));
    std::optional<Representation> module;
    if (module_out && doc.contains("module") && !doc.at("module").is_null())
      module = module_from_json(doc.at("module"), algebra);
    *algebra_out = new dd_algebra{algebra, std::nullopt};
    if (module_out) *module_out = module ? new dd_module{*module, std::nullopt} : nullptr;
  });
}

dd_status dd_describe_render(const dd_algebra* algebra, const dd_module* module, dd_format format, char** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    const LieAlgebra& l = *algebra->algebra;
    const std::string alg_name = algebra->descriptor ? algebra->descriptor->canonical() : "custom";
    if (format == DD_FORMAT_JSON) {
      Json j{{"algebra_descriptor", alg_name},
             {"algebra", algebra_to_json(l)},
             {"derived_dimension", l.derived_dim()}};
      if (module) {
        j["module_descriptor"] = module->descriptor ? module->descriptor->canonical() : "custom";
        j["module"] = module_to_json(module->module);
        j["invariants_dimension"] = invariants(module->module).size();
      }
      *out = copy_string(render(j));
      return;
    }
    std::string s = "algebra: " + alg_name + "\n";
    s += "dimension: " + std::to_string(l.dim()) + "\n";
    s += "derived algebra dimension: " + std::to_string(l.derived_dim()) + "\n";
    s += "summands: " + std::to_string(l.summands().size()) + "\n";
    if (module) {
      s += "module: " + (module->descriptor ? module->descriptor->canonical() : std::string("custom")) + "\n";
      s += "module dimension: " + std::to_string(module->module.dim_v()) + "\n";
      s += "invariants dimension: " + std::to_string(invariants(module->module).size()) + "\n";
    }
    *out = copy_string(s);
  });
}

dd_status dd_solve(const dd_module* module, const char* delta, long grading_element, dd_space** out) {
  return guarded([&] {
    require(module, "module");
    require(delta, "delta");
    require(out, "out");
    const Rational d = Rational::parse(delta);
    std::optional<std::size_t> grading;
    if (grading_element >= 0) grading = static_cast<std::size_t>(grading_element);
    *out = new dd_space{solve(module->module, d, grading), module->module};
  });
}

size_t dd_space_dimension(const dd_space* space) { return space ? space->space.dimension() : 0; }

dd_status dd_space_render(const dd_space* space, dd_format format, char** out) {
  return guarded([&] {
    require(space, "space");
    require(out, "out");
    *out = copy_string(format == DD_FORMAT_JSON ? render(space_to_json(space->space))
                                                : space_to_table(space->space, space->module));
  });
}

void dd_space_free(dd_space* space) { delete space; }

dd_status dd_scan(const dd_module* module, int include_zero, dd_scan_report** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    *out = new dd_scan_report{scan(module->module, include_zero != 0)};
  });
}

size_t dd_scan_finding_count(const dd_scan_report* report) { return report ? report->report.findings.size() : 0; }

dd_status dd_scan_finding(const dd_scan_report* report, size_t index, char** delta, size_t* dimension) {
  return guarded([&] {
    require(report, "report");
    if (index >= report->report.findings.size()) throw IndexOutOfRange("finding index out of range");
    const auto& f = report->report.findings[index];
    if (delta) *delta = copy_string(f.delta.to_string());
    if (dimension) *dimension = f.dimension;
  });
}

size_t dd_scan_generic_rank(const dd_scan_report* report) { return report ? report->report.generic_rank : 0; }

size_t dd_scan_nonrational_count(const dd_scan_report* report) {
  return report ? report->report.nonrational_factors.size() : 0;
}

dd_status dd_scan_render(const dd_scan_report* report, dd_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(format == DD_FORMAT_JSON ? render(scan_to_json(report->report)) : scan_to_table(report->report));
  });
}

void dd_scan_free(dd_scan_report* report) { delete report; }

dd_status dd_verify_all(int max_n, dd_verify_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new dd_verify_report{verify_all(max_n)};
  });
}

size_t dd_verify_failures(const dd_verify_report* report) { return report ? report->report.failures() : 0; }

dd_status dd_verify_render(const dd_verify_report* report, dd_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(format == DD_FORMAT_JSON ? render(verify_to_json(report->report))
                                                : verify_to_table(report->report));
  });
}

void dd_verify_free(dd_verify_report* report) { delete report; }

}  // extern "C"
