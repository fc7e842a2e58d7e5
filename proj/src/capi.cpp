#include "eqres/eqres.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eqres/discriminant.hpp"
#include "eqres/error.hpp"
#include "eqres/parser.hpp"
#include "eqres/resultant.hpp"
#include "eqres/selfcheck.hpp"

struct eqres_system {
  eqres::SystemFile file;
};

struct eqres_symmetric {
  eqres::SymmetricPoly poly;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
eqres_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return EQRES_OK;
  } catch (const eqres::ParseError& e) {
    last_error = e.what();
    return EQRES_ERR_PARSE;
  } catch (const eqres::InvalidArgument& e) {
    last_error = e.what();
    return EQRES_ERR_INVALID_ARGUMENT;
  } catch (const eqres::NotEquivariant& e) {
    last_error = e.what();
    return EQRES_ERR_NOT_EQUIVARIANT;
  } catch (const eqres::NotDivisible& e) {
    last_error = e.what();
    return EQRES_ERR_NOT_DIVISIBLE;
  } catch (const eqres::Mismatch& e) {
    last_error = e.what();
    return EQRES_ERR_MISMATCH;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EQRES_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EQRES_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return EQRES_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw eqres::InvalidArgument(std::string(what) + " must not be NULL");
}

eqres::EquivariantSystem as_equivariant(const eqres_system* system) {
  return eqres::EquivariantSystem(system->file.polys, system->file.ring);
}

std::string multiplicity_text(const eqres::Integer& m) { return m.get_str(); }

std::string factored_text(const eqres::FactoredResultant& f, const eqres::ParameterRing& ring) {
  std::ostringstream out;
  out << "prefactor: " << eqres::print_coefficient(f.prefactor, ring);
  if (sgn(f.prefactor_exponent) != 0)
    out << "  [base " << eqres::print_coefficient(f.prefactor_base, ring) << ", exponent "
        << f.prefactor_exponent.get_str() << "]";
  out << "\n";
  for (const auto& factor : f.factors)
    out << "factor " << factor.label << " ^" << multiplicity_text(factor.multiplicity) << ": "
        << eqres::print_coefficient(factor.value, ring) << "\n";
  return out.str();
}

std::string read_spec(const char* coeffs) {
  std::string spec(coeffs);
  std::error_code ec;
  if (spec.find('=') == std::string::npos && spec != "generic" && std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    if (!in) throw eqres::InvalidArgument("cannot read coefficient file " + spec);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  return spec;
}

bool all_integer(const eqres::SymmetricPoly& f) {
  for (const auto& [lambda, c] : f.coeffs)
    if (!c.is_constant()) return false;
  return true;
}

}  // namespace

extern "C" {

const char* eqres_last_error(void) { return last_error.c_str(); }

const char* eqres_status_name(eqres_status status) {
  switch (status) {
    case EQRES_OK:
      return "ok";
    case EQRES_ERR_PARSE:
      return "parse error";
    case EQRES_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case EQRES_ERR_NOT_EQUIVARIANT:
      return "not equivariant";
    case EQRES_ERR_NOT_DIVISIBLE:
      return "not divisible";
    case EQRES_ERR_MISMATCH:
      return "mismatch";
    case EQRES_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void eqres_string_free(char* s) { std::free(s); }

eqres_status eqres_system_parse(const char* text, eqres_system** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto system = new eqres_system{eqres::parse_system(text)};
    *out = system;
  });
}

void eqres_system_free(eqres_system* system) { delete system; }

int eqres_system_n(const eqres_system* system) { return system ? system->file.n : -1; }
int eqres_system_d(const eqres_system* system) { return system ? system->file.d : -1; }

eqres_status eqres_system_print(const eqres_system* system, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    *out = duplicate(eqres::print_system(system->file));
  });
}

eqres_status eqres_system_check_equivariance(const eqres_system* system, int* equivariant, char** detail) {
  return guarded([&] {
    require(system, "system");
    require(equivariant, "equivariant");
    auto report = eqres::check_equivariance(system->file.polys);
    *equivariant = report.ok ? 1 : 0;
    if (detail) {
      std::string text = report.ok ? "equivariant"
                                   : "swapping x" + std::to_string(report.swap + 1) + " and x" +
                                         std::to_string(report.swap + 2) + " breaks F^{" +
                                         std::to_string(report.index + 1) + "}";
      *detail = duplicate(text);
    }
  });
}

eqres_status eqres_resultant(const eqres_system* system, eqres_format format, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    std::string value = eqres::print_coefficient(eqres::macaulay_resultant(system->file.polys), system->file.ring);
    if (format == EQRES_FORMAT_JSON)
      *out = duplicate(json{{"resultant", value}}.dump());
    else
      *out = duplicate(value + "\n");
  });
}

eqres_status eqres_decompose(const eqres_system* system, eqres_format format, int jobs, char** out) {
  return guarded([&] {
    require(system, "system");
    require(out, "out");
    auto factored = eqres::decompose_resultant(as_equivariant(system), {jobs});
    if (format == EQRES_FORMAT_JSON)
      *out = duplicate(eqres::emit_factored_json(factored, system->file.ring));
    else
      *out = duplicate(factored_text(factored, system->file.ring));
  });
}

eqres_verify_options eqres_verify_options_default(void) {
  return eqres_verify_options{EQRES_VERIFY_AUTO, 4, 1, 1};
}

eqres_status eqres_verify(const eqres_system* system, const eqres_verify_options* options, eqres_format format,
                          int* equal, char** out) {
  return guarded([&] {
    require(system, "system");
    require(equal, "equal");
    eqres_verify_options opts = options ? *options : eqres_verify_options_default();
    eqres::VerifyOptions v;
    switch (opts.mode) {
      case EQRES_VERIFY_AUTO:
        v.mode = eqres::VerifyMode::Auto;
        break;
      case EQRES_VERIFY_SYMBOLIC:
        v.mode = eqres::VerifyMode::Symbolic;
        break;
      case EQRES_VERIFY_SAMPLED:
        v.mode = eqres::VerifyMode::Sampled;
        break;
      default:
        throw eqres::InvalidArgument("unknown verification mode");
    }
    if (opts.samples < 1) throw eqres::InvalidArgument("samples must be positive");
    v.samples = opts.samples;
    v.seed = opts.seed;
    v.decompose.jobs = opts.jobs;
    auto report = eqres::verify_decomposition(as_equivariant(system), v);
    *equal = report.equal ? 1 : 0;
    if (!out) return;
    const auto& ring = system->file.ring;
    const bool symbolic = report.mode == eqres::VerifyMode::Symbolic;
    if (format == EQRES_FORMAT_JSON) {
      json j;
      j["equal"] = report.equal;
      j["mode"] = symbolic ? "symbolic" : "sampled";
      if (symbolic) {
        j["decomposition"] = eqres::print_coefficient(report.decomposition, ring);
        j["direct"] = eqres::print_coefficient(report.direct, ring);
      } else {
        json samples = json::array();
        for (std::size_t i = 0; i < report.points.size(); ++i) {
          json point = json::object();
          for (std::size_t k = 0; k < report.points[i].size(); ++k)
            point[k < ring.size() ? ring.name(k) : "p" + std::to_string(k + 1)] = report.points[i][k].get_str();
          samples.push_back(json{{"point", point},
                                 {"decomposition", report.decomposition_values[i].get_str()},
                                 {"direct", report.direct_values[i].get_str()}});
        }
        j["samples"] = samples;
      }
      *out = duplicate(j.dump());
    } else {
      std::ostringstream text;
      text << (report.equal ? "equal" : "NOT EQUAL") << " (" << (symbolic ? "symbolic" : "sampled") << ")\n";
      if (symbolic) {
        text << "decomposition: " << eqres::print_coefficient(report.decomposition, ring) << "\n";
        text << "direct:        " << eqres::print_coefficient(report.direct, ring) << "\n";
      } else {
        for (std::size_t i = 0; i < report.points.size(); ++i) {
          text << "point";
          for (std::size_t k = 0; k < report.points[i].size(); ++k)
            text << ' ' << (k < ring.size() ? ring.name(k) : "p" + std::to_string(k + 1)) << '='
                 << report.points[i][k].get_str();
          text << ": decomposition=" << report.decomposition_values[i].get_str()
               << " direct=" << report.direct_values[i].get_str() << "\n";
        }
      }
      *out = duplicate(text.str());
    }
  });
}

eqres_status eqres_symmetric_create(int n, int d, const char* coeffs, eqres_symmetric** out) {
  return guarded([&] {
    require(coeffs, "coeffs");
    require(out, "out");
    *out = nullptr;
    auto f = new eqres_symmetric{eqres::parse_symmetric(n, d, read_spec(coeffs))};
    *out = f;
  });
}

void eqres_symmetric_free(eqres_symmetric* f) { delete f; }

eqres_status eqres_symmetric_print(const eqres_symmetric* f, char** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    std::string text;
    for (const auto& [lambda, c] : f->poly.coeffs) {
      if (!text.empty()) text += ", ";
      text += "c" + lambda.compact() + "=" + eqres::print_coefficient(c, f->poly.ring);
    }
    *out = duplicate(text);
  });
}

eqres_status eqres_discriminant(const eqres_symmetric* f, eqres_format format, int jobs, char** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    const auto& poly = f->poly;
    auto result = eqres::discriminant_decomposition(poly, {jobs});
    std::optional<eqres::Coefficient> value;
    if (all_integer(poly)) value = result.value(poly.d);
    if (format == EQRES_FORMAT_JSON) {
      json j;
      j["n"] = poly.n;
      j["d"] = poly.d;
      j["a"] = result.a.get_str();
      j["sign"] = result.epsilon % 2 == 0 ? 1 : -1;
      json body = json::parse(eqres::emit_factored_json(result.factored, poly.ring));
      for (auto& [key, v] : body.items()) j[key] = v;
      if (value) j["value"] = eqres::print_coefficient(*value, poly.ring);
      *out = duplicate(j.dump());
    } else {
      std::ostringstream text;
      text << "n=" << poly.n << " d=" << poly.d << " a=" << result.a.get_str() << " sign="
           << (result.epsilon % 2 == 0 ? "+" : "-") << "\n";
      text << poly.d << "^" << result.a.get_str() << " * Disc = " << (result.epsilon % 2 == 0 ? "" : "-")
           << "prefactor * product of factors\n";
      text << factored_text(result.factored, poly.ring);
      if (value) text << "Disc: " << eqres::print_coefficient(*value, poly.ring) << "\n";
      *out = duplicate(text.str());
    }
  });
}

eqres_status eqres_discriminant_direct(const eqres_symmetric* f, char** out) {
  return guarded([&] {
    require(f, "f");
    require(out, "out");
    *out = duplicate(eqres::print_coefficient(eqres::discriminant_value(f->poly), f->poly.ring));
  });
}

eqres_status eqres_selfcheck(eqres_format format, int* passed, char** out) {
  return guarded([&] {
    require(passed, "passed");
    auto results = eqres::run_selfcheck();
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    *passed = all ? 1 : 0;
    if (!out) return;
    if (format == EQRES_FORMAT_JSON) {
      json checks = json::array();
      for (const auto& r : results) {
        json item{{"name", r.name}, {"passed", r.passed}};
        if (!r.detail.empty()) item["detail"] = r.detail;
        checks.push_back(item);
      }
      *out = duplicate(json{{"passed", all}, {"checks", checks}}.dump());
    } else {
      std::string text;
      for (const auto& r : results) {
        text += (r.passed ? "PASS  " : "FAIL  ") + r.name;
        if (!r.detail.empty()) text += "  [" + r.detail + "]";
        text += "\n";
      }
      *out = duplicate(text);
    }
  });
}

}  // extern "C"
