// Command-line front end. Talks to the library only through the C API.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqres/eqres.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

int exit_code(eqres_status status) {
  switch (status) {
    case EQRES_OK:
      return kExitOk;
    case EQRES_ERR_PARSE:
    case EQRES_ERR_INVALID_ARGUMENT:
    case EQRES_ERR_NOT_EQUIVARIANT:
      return kExitInput;
    default:
      return kExitMismatch;
  }
}

int report(eqres_status status) {
  std::cerr << "error (" << eqres_status_name(status) << "): " << eqres_last_error() << "\n";
  return exit_code(status);
}

struct StringDeleter {
  void operator()(char* s) const { eqres_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SystemDeleter {
  void operator()(eqres_system* s) const { eqres_system_free(s); }
};
struct SymmetricDeleter {
  void operator()(eqres_symmetric* s) const { eqres_symmetric_free(s); }
};

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

void emit(const OwnedString& s, eqres_format format) {
  std::string text = s ? s.get() : "";
  std::cout << text;
  if (format == EQRES_FORMAT_JSON || (!text.empty() && text.back() != '\n')) std::cout << "\n";
}

// Parses the file and hands the system to `body`.
template <typename Body>
int with_system(const std::string& path, Body body) {
  std::string text;
  if (!read_input(path, text)) return kExitInput;
  eqres_system* raw = nullptr;
  if (eqres_status st = eqres_system_parse(text.c_str(), &raw); st != EQRES_OK) return report(st);
  std::unique_ptr<eqres_system, SystemDeleter> system(raw);
  return body(system.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultants of S_n-equivariant polynomial systems and discriminants of symmetric forms"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for per-partition resultants")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  std::string path;
  auto* resultant = app.add_subcommand("resultant", "Direct Macaulay resultant of a system file");
  resultant->add_option("file", path, "System file ('-' for stdin)")->required();

  auto* decompose = app.add_subcommand("decompose", "Factored resultant of an equivariant system");
  decompose->add_option("file", path, "System file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "Compare the factored resultant with the direct one");
  verify->add_option("file", path, "System file ('-' for stdin)")->required();
  std::string mode_name = "auto";
  verify->add_option("--mode", mode_name, "Comparison mode")
      ->check(CLI::IsMember({"auto", "symbolic", "sampled"}))
      ->capture_default_str();
  int samples = 4;
  verify->add_option("--samples", samples, "Parameter points in sampled mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  std::uint64_t seed = 1;
  verify->add_option("--seed", seed, "Seed for sampled points")->capture_default_str();

  auto* discriminant = app.add_subcommand("discriminant", "Discriminant of sum c_lambda e_lambda");
  int n = 0, d = 0;
  std::string coeffs;
  discriminant->add_option("--n", n, "Number of variables")->required()->check(CLI::Range(2, 24));
  discriminant->add_option("--d", d, "Degree")->required()->check(CLI::Range(2, 64));
  discriminant->add_option("--coeffs", coeffs, "'generic', c3=1,c21=-1,... or a file")->required();
  bool direct = false;
  discriminant->add_flag("--direct", direct, "Also compute Disc from the resultant of the partials");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in identity checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const eqres_format format = format_name == "json" ? EQRES_FORMAT_JSON : EQRES_FORMAT_TEXT;

  if (*resultant) {
    return with_system(path, [&](eqres_system* system) {
      char* out = nullptr;
      if (eqres_status st = eqres_resultant(system, format, &out); st != EQRES_OK) return report(st);
      emit(OwnedString(out), format);
      return kExitOk;
    });
  }
  if (*decompose) {
    return with_system(path, [&](eqres_system* system) {
      char* out = nullptr;
      if (eqres_status st = eqres_decompose(system, format, jobs, &out); st != EQRES_OK) return report(st);
      emit(OwnedString(out), format);
      return kExitOk;
    });
  }
  if (*verify) {
    return with_system(path, [&](eqres_system* system) {
      eqres_verify_options options = eqres_verify_options_default();
      options.mode = mode_name == "symbolic" ? EQRES_VERIFY_SYMBOLIC
                     : mode_name == "sampled" ? EQRES_VERIFY_SAMPLED
                                              : EQRES_VERIFY_AUTO;
      options.samples = samples;
      options.seed = seed;
      options.jobs = jobs;
      int equal = 0;
      char* out = nullptr;
      if (eqres_status st = eqres_verify(system, &options, format, &equal, &out); st != EQRES_OK) return report(st);
      emit(OwnedString(out), format);
      return equal ? kExitOk : kExitMismatch;
    });
  }
  if (*discriminant) {
    eqres_symmetric* raw = nullptr;
    if (eqres_status st = eqres_symmetric_create(n, d, coeffs.c_str(), &raw); st != EQRES_OK) return report(st);
    std::unique_ptr<eqres_symmetric, SymmetricDeleter> f(raw);
    char* raw_out = nullptr;
    if (eqres_status st = eqres_discriminant(f.get(), format, jobs, &raw_out); st != EQRES_OK) return report(st);
    OwnedString out(raw_out);
    if (!direct) {
      emit(out, format);
      return kExitOk;
    }
    char* raw_value = nullptr;
    if (eqres_status st = eqres_discriminant_direct(f.get(), &raw_value); st != EQRES_OK) return report(st);
    OwnedString value(raw_value);
    if (format == EQRES_FORMAT_JSON) {
      auto j = nlohmann::ordered_json::parse(out.get());
      j["direct"] = value.get();
      std::cout << j.dump() << "\n";
    } else {
      emit(out, format);
      std::cout << "Disc (direct): " << value.get() << "\n";
    }
    return kExitOk;
  }
  if (*selfcheck) {
    int passed = 0;
    char* out = nullptr;
    if (eqres_status st = eqres_selfcheck(format, &passed, &out); st != EQRES_OK) return report(st);
    emit(OwnedString(out), format);
    return passed ? kExitOk : kExitMismatch;
  }
  return kExitInput;
}
