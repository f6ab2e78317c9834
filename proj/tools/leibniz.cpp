// Command-line front end. Everything goes through the C interface; this file
// only reads files, forwards arguments and prints the returned reports.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/leibniz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct LawDeleter {
  void operator()(lb_law* p) const { lb_law_free(p); }
};
struct FamilyDeleter {
  void operator()(lb_family* p) const { lb_family_free(p); }
};
using LawPtr = std::unique_ptr<lb_law, LawDeleter>;
using FamilyPtr = std::unique_ptr<lb_family, FamilyDeleter>;

// Carries the exit status of a failed library call up to main.
struct Failure {
  int code;
};

int exit_code_for(lb_status s) {
  return (s == LB_ERR_PARSE || s == LB_ERR_NULL_ARGUMENT || s == LB_ERR_UNKNOWN_NAME) ? kExitUsage
                                                                                     : kExitCheckFailed;
}

void check(lb_status s, const std::string& context) {
  if (s == LB_OK) return;
  std::cerr << "leibniz: " << context << ": " << lb_last_error() << "\n";
  throw Failure{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  lb_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "leibniz: cannot read " << path << "\n";
    throw Failure{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Bindings {
  std::vector<std::string> names;
  std::vector<std::string> values;
};

Bindings split_bindings(const std::vector<std::string>& sets) {
  Bindings b;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "leibniz: --set expects NAME=VALUE, got '" << s << "'\n";
      throw Failure{kExitUsage};
    }
    b.names.push_back(s.substr(0, eq));
    b.values.push_back(s.substr(eq + 1));
  }
  return b;
}

LawPtr load_law(const std::string& path, const std::vector<std::string>& sets) {
  const std::string text = read_file(path);
  const Bindings b = split_bindings(sets);
  std::vector<const char*> names, values;
  for (std::size_t k = 0; k < b.names.size(); ++k) {
    names.push_back(b.names[k].c_str());
    values.push_back(b.values[k].c_str());
  }
  lb_law* law = nullptr;
  check(lb_law_parse(text.c_str(), names.data(), values.data(), names.size(), &law), path);
  return LawPtr(law);
}

void emit(const std::string& text) { std::cout << text << std::flush; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Leibniz algebra laws"};
  app.require_subcommand(1);
  std::uint64_t seed = LB_DEFAULT_SEED;
  app.add_option("--seed", seed, "seed for the randomized candidate vectors")->capture_default_str();
  std::vector<std::string> sets;
  auto add_sets = [&](CLI::App* cmd) {
    cmd->add_option("--set", sets, "bind a parameter, NAME=VALUE (repeatable)");
  };

  std::string file;
  auto* check_cmd = app.add_subcommand("check", "verify the Leibniz identity, listing violations");
  check_cmd->add_option("FILE", file, "algebra file ('-' for stdin)")->required();
  add_sets(check_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "print the invariant table");
  inv_cmd->add_option("FILE", file, "algebra file ('-' for stdin)")->required();
  add_sets(inv_cmd);

  auto* cls_cmd = app.add_subcommand("classify", "classify a nilpotent law of dimension 2 or 3");
  cls_cmd->add_option("FILE", file, "algebra file ('-' for stdin)")->required();
  add_sets(cls_cmd);

  std::string family_file, catalog_family;
  auto* con_cmd = app.add_subcommand("contract", "take the limit of f_t^-1 mu(f_t x, f_t y) at t = 0");
  con_cmd->add_option("FILE", file, "algebra file ('-' for stdin)")->required();
  auto* fam_opt = con_cmd->add_option("--family", family_file, "family file");
  auto* cat_opt = con_cmd->add_option("--catalog-family", catalog_family, "catalog family (f, f_corrected, g, h)");
  fam_opt->excludes(cat_opt);
  add_sets(con_cmd);

  std::string direction;
  auto* per_cmd = app.add_subcommand("perturb", "form mu + eps phi over Q(i)(eps)");
  per_cmd->add_option("FILE", file, "algebra file ('-' for stdin)")->required();
  per_cmd->add_option("--direction", direction, "catalog direction name or algebra file")->required();
  add_sets(per_cmd);

  std::string graph_catalog, output;
  auto* graph_cmd = app.add_subcommand("graph", "emit the degeneration graph as DOT");
  graph_cmd->add_option("--catalog", graph_catalog, "law set (leibn3)")->required();
  graph_cmd->add_option("-o,--output", output, "output file (default: stdout)");
  add_sets(graph_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog queries");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list laws, families and directions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) {
      LawPtr law = load_law(file, sets);
      int ok = 0;
      char* out = nullptr;
      check(lb_report_check(law.get(), &ok, &out), "check");
      emit(take(out));
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (inv_cmd->parsed()) {
      LawPtr law = load_law(file, sets);
      char* out = nullptr;
      check(lb_report_invariants(law.get(), seed, &out), "invariants");
      emit(take(out));
      return kExitOk;
    }
    if (cls_cmd->parsed()) {
      LawPtr law = load_law(file, sets);
      char* out = nullptr;
      check(lb_report_classify(law.get(), seed, &out), "classify");
      emit(take(out));
      return kExitOk;
    }
    if (con_cmd->parsed()) {
      if (family_file.empty() == catalog_family.empty()) {
        std::cerr << "leibniz: contract needs exactly one of --family or --catalog-family\n";
        return kExitUsage;
      }
      LawPtr law = load_law(file, sets);
      lb_family* fam = nullptr;
      if (!family_file.empty()) {
        const std::string text = read_file(family_file);
        check(lb_family_parse(text.c_str(), &fam), family_file);
      } else {
        check(lb_family_from_catalog(catalog_family.c_str(), &fam), "--catalog-family");
      }
      FamilyPtr family(fam);
      int ok = 0;
      char* out = nullptr;
      check(lb_report_contract(law.get(), family.get(), seed, &ok, &out), "contract");
      emit(take(out));
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (per_cmd->parsed()) {
      LawPtr law = load_law(file, sets);
      lb_law* dir = nullptr;
      if (std::filesystem::exists(direction)) {
        const std::string text = read_file(direction);
        check(lb_law_parse(text.c_str(), nullptr, nullptr, 0, &dir), direction);
      } else {
        check(lb_direction_from_catalog(direction.c_str(), &dir), "--direction");
      }
      LawPtr dir_law(dir);
      int ok = 0;
      char* out = nullptr;
      check(lb_report_perturb(law.get(), dir_law.get(), seed, &ok, &out), "perturb");
      emit(take(out));
      return ok ? kExitOk : kExitCheckFailed;
    }
    if (graph_cmd->parsed()) {
      const Bindings b = split_bindings(sets);
      std::string sample;
      for (std::size_t k = 0; k < b.names.size(); ++k) {
        if (b.names[k] != "b") {
          std::cerr << "leibniz: graph takes only --set b=VALUE\n";
          return kExitUsage;
        }
        sample = b.values[k];
      }
      char* out = nullptr;
      check(lb_graph_dot(graph_catalog.c_str(), sample.empty() ? nullptr : sample.c_str(), seed, &out), "graph");
      const std::string dot = take(out);
      if (output.empty() || output == "-") {
        emit(dot);
      } else {
        std::ofstream f(output, std::ios::binary);
        f << dot;
        if (!f) {
          std::cerr << "leibniz: cannot write " << output << "\n";
          return kExitCheckFailed;
        }
      }
      return kExitOk;
    }
    if (list_cmd->parsed()) {
      char* out = nullptr;
      check(lb_report_catalog(&out), "catalog list");
      emit(take(out));
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
