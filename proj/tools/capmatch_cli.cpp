// Command-line front end over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "capmatch/capmatch.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInput = 1, kInfeasible = 2, kGuard = 3, kInternal = 4 };

int exit_code(capmatch_status s) {
  switch (s) {
    case CAPMATCH_OK: return kOk;
    case CAPMATCH_INFEASIBLE: return kInfeasible;
    case CAPMATCH_ERR_GUARD: return kGuard;
    case CAPMATCH_ERR_INPUT: return kInput;
    default: return kInternal;
  }
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InstanceHandle {
  capmatch_instance* ptr = nullptr;
  ~InstanceHandle() { capmatch_instance_free(ptr); }
};

struct OwnedText {
  char* ptr = nullptr;
  ~OwnedText() { capmatch_string_free(ptr); }
};

// ---- table rendering -------------------------------------------------------

std::string scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool flat_object(const Json& v) {
  if (!v.is_object()) return false;
  for (const auto& [k, x] : v.items())
    if (x.is_structured()) return false;
  return true;
}

void render(std::ostream& out, const Json& doc, const std::string& prefix) {
  for (const auto& [key, value] : doc.items()) {
    const std::string label = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && !flat_object(value)) {
      render(out, value, label);
    } else if (flat_object(value) && !value.empty()) {
      out << label << ":\n";
      std::size_t width = 0;
      for (const auto& [k, x] : value.items()) width = std::max(width, k.size());
      for (const auto& [k, x] : value.items())
        out << "  " << k << std::string(width - k.size() + 2, ' ') << scalar(x) << "\n";
    } else if (value.is_array() && !value.empty() && value.front().is_structured()) {
      out << label << ": " << value.size() << " entries\n";
      for (std::size_t i = 0; i < value.size(); ++i) out << "  [" << i << "] " << value[i].dump() << "\n";
    } else {
      out << label << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
    }
  }
}

void emit(const std::string& text, const std::string& format) {
  if (format == "table") {
    const Json doc = Json::parse(text);
    if (doc.is_object()) {
      render(std::cout, doc, "");
      return;
    }
  }
  std::cout << text << "\n";
}

int finish(capmatch_status s, OwnedText& text, const std::string& format) {
  if (text.ptr) emit(text.ptr, format);
  if (s != CAPMATCH_OK && s != CAPMATCH_INFEASIBLE)
    std::cerr << "error: " << capmatch_last_error() << "\n";
  else if (s == CAPMATCH_INFEASIBLE)
    std::cerr << "infeasible within the budget\n";
  return exit_code(s);
}

capmatch_status load_instance(const std::string& path, InstanceHandle& h) {
  return capmatch_instance_parse(read_file(path).c_str(), &h.ptr);
}

const char* optional_text(const std::string& path, std::string& storage) {
  if (path.empty()) return nullptr;
  storage = read_file(path);
  return storage.c_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity modification for stable matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(capmatch_version()));

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string instance, increase, matching, what, problem, method = "auto";
  long long budget = -1;
  unsigned long long guard = 0;
  int threads = 1;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", instance, "Instance document (- for stdin)")->required();
  };

  auto* stable = app.add_subcommand("stable", "Student-optimal stable matching");
  add_instance(stable);
  stable->add_option("--increase", increase, "Capacity increase document");

  auto* check = app.add_subcommand("check", "Certify a matching");
  add_instance(check);
  check->add_option("--matching", matching, "Matching document")->required();
  check->add_option("--increase", increase, "Capacity increase document");
  check->add_option("--what", what, "Certificate to compute")
      ->check(CLI::IsMember({"stability", "perfect", "efficient", "all"}))
      ->default_val("all");

  auto* solve = app.add_subcommand("solve", "Find a capacity increase");
  add_instance(solve);
  solve->add_option("--problem", problem, "Objective and target")
      ->required()
      ->check(CLI::IsMember({"minsum-sp", "minmax-sp", "minsum-se", "minmax-se"}));
  solve->add_option("--method", method, "Solver")
      ->check(CLI::IsMember({"exact", "formula", "ip", "lp-round", "greedy", "uniform", "auto"}))
      ->capture_default_str();
  solve->add_option("--budget", budget, "Budget on the objective")->check(CLI::NonNegativeNumber);
  solve->add_option("--guard", guard, "Search guard (candidates)");
  solve->add_option("--threads", threads, "Worker threads for exhaustive search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string gen_name, source;
  int size = -1, eta = -1, s_hat = -1, copies = -1, students = -1, schools = -1;
  std::vector<int> capacity, pref_len;
  unsigned long long seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("name", gen_name, "Generator")
      ->required()
      ->check(CLI::IsMember({"intro", "problems", "stable-eff", "minmaxse-gap", "greedy-tight",
                             "vertex-cover", "set-cover", "mcc", "se-mcc", "sat22", "random"}));
  gen->add_option("--source", source, "Source problem: graph, set list or clause list (JSON)");
  gen->add_option("--size", size, "Cover size (vertex-cover, set-cover) or colors (mcc, se-mcc)");
  gen->add_option("--eta", eta, "Gadget copies (sat22)");
  gen->add_option("--s-hat", s_hat, "Unassigned students per block (greedy-tight)");
  gen->add_option("--n", copies, "Blocks (greedy-tight)");
  gen->add_option("--students", students, "Students (random)");
  gen->add_option("--schools", schools, "Schools (random)");
  gen->add_option("--capacity", capacity, "Capacity range lo hi (random)")->expected(2);
  gen->add_option("--pref-len", pref_len, "Preference length range lo hi (random)")->expected(2);
  auto* seed_opt = gen->add_option("--seed", seed, "Seed (random)");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference checks");
  add_instance(oracle);
  oracle->add_option("--what", what, "Oracle")
      ->required()
      ->check(CLI::IsMember({"enumerate-stable", "efficiency"}));
  oracle->add_option("--increase", increase, "Capacity increase document");
  oracle->add_option("--matching", matching, "Matching to test (efficiency)");
  oracle->add_option("--guard", guard, "Search guard (candidates)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    OwnedText out;
    std::string inc_text, match_text;

    if (stable->parsed()) {
      InstanceHandle inst;
      auto s = load_instance(instance, inst);
      if (s == CAPMATCH_OK) s = capmatch_stable(inst.ptr, optional_text(increase, inc_text), &out.ptr);
      return finish(s, out, format);
    }
    if (check->parsed()) {
      InstanceHandle inst;
      auto s = load_instance(instance, inst);
      if (s == CAPMATCH_OK)
        s = capmatch_check(inst.ptr, read_file(matching).c_str(), optional_text(increase, inc_text),
                           what.c_str(), &out.ptr);
      return finish(s, out, format);
    }
    if (solve->parsed()) {
      InstanceHandle inst;
      auto s = load_instance(instance, inst);
      if (s == CAPMATCH_OK) {
        const capmatch_solve_options options{problem.c_str(), method.c_str(), budget >= 0 ? 1 : 0,
                                             budget, guard, threads};
        s = capmatch_solve(inst.ptr, &options, &out.ptr);
      }
      return finish(s, out, format);
    }
    if (gen->parsed()) {
      Json params = Json::object();
      if (!source.empty()) {
        const Json src = Json::parse(read_file(source));
        const char* key = gen_name == "set-cover" ? "sets" : gen_name == "sat22" ? "formula" : "graph";
        params[key] = src;
      }
      if (size >= 0) params[gen_name == "set-cover" ? "k" : "h"] = size;
      if (eta >= 0) params["eta"] = eta;
      if (s_hat >= 0) params["s_hat"] = s_hat;
      if (copies >= 0) params["n"] = copies;
      if (students >= 0) params["students"] = students;
      if (schools >= 0) params["schools"] = schools;
      if (!capacity.empty()) params["capacity"] = capacity;
      if (!pref_len.empty()) params["preference_length"] = pref_len;
      if (seed_opt->count()) params["seed"] = seed;
      long long b = -1, bmax = -1;
      const auto s = capmatch_generate(gen_name.c_str(), params.dump().c_str(), &out.ptr, &b, &bmax);
      if (s == CAPMATCH_OK) {
        if (b >= 0) std::cerr << "budget: " << b << "\n";
        if (bmax >= 0) std::cerr << "max budget: " << bmax << "\n";
      }
      return finish(s, out, format);
    }
    if (oracle->parsed()) {
      InstanceHandle inst;
      auto s = load_instance(instance, inst);
      if (s == CAPMATCH_OK)
        s = capmatch_oracle(inst.ptr, what.c_str(), optional_text(increase, inc_text),
                            optional_text(matching, match_text), guard, &out.ptr);
      return finish(s, out, format);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed source document: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
