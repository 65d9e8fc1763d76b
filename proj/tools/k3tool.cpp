#include "k3/classify.hpp"
#include "k3/cohomology.hpp"
#include "k3/model_io.hpp"
#include "k3/registry.hpp"
#include "k3/report.hpp"
#include "k3/verify.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <iostream>
#include <thread>

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalidModel = 2;
constexpr int kFailure = 3;

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

Outcome classify_one(const std::string& name, bool machine) {
  Outcome o;
  try {
    const k3::ModelFile f = k3::resolve_model(name);
    if (machine) {
      o.out = k3::classify_model_file(f).dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
    } else {
      o.out = k3::classify_model_file_text(f);
    }
  } catch (const k3::ParseError& e) {
    o = {kInvalidModel, "", name + ": " + e.what() + "\n"};
  } catch (const k3::RefusedModel& e) {
    o = {kInvalidModel, "", name + ": refused (" + e.kind() + "): " + e.what() + "\n"};
  } catch (const k3::ContractError& e) {
    o = {kInvalidModel, "", name + ": " + e.what() + "\n"};
  } catch (const std::exception& e) {
    o = {kFailure, "", name + ": internal error: " + e.what() + "\n"};
  }
  return o;
}

int run_classify(const std::vector<std::string>& models, const std::string& format, unsigned threads) {
  const bool machine = format == "machine";
  std::vector<Outcome> results(models.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < models.size();) results[i] = classify_one(models[i], machine);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(models.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  if (machine && models.size() > 1) {
    // A JSON array keeps the output parseable as a single document.
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results)
      if (r.code == kOk) arr.push_back(nlohmann::json::parse(r.out));
    std::cout << arr.dump(2) << "\n";
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& r = results[i];
    if (!(machine && models.size() > 1)) {
      if (!machine && models.size() > 1 && r.code == kOk) std::cout << "== " << models[i] << "\n";
      std::cout << r.out;
    }
    std::cerr << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

int run_verify_cmd(const std::string& name, k3::Integer max_degree) {
  try {
    const k3::ModelFile f = k3::resolve_model(name);
    k3::VerifyOptions opts;
    opts.max_degree = max_degree;
    bool ok = true;
    for (const auto& c : k3::run_verify(f, opts)) {
      const char* tag = c.informational ? "INFO" : c.passed ? "PASS" : "FAIL";
      std::cout << tag << " " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << "\n";
      if (!c.informational && !c.passed) ok = false;
    }
    return ok ? kOk : kFailure;
  } catch (const k3::ParseError& e) {
    std::cerr << name << ": " << e.what() << "\n";
    return kInvalidModel;
  } catch (const k3::ContractError& e) {
    std::cerr << name << ": " << e.what() << "\n";
    return kInvalidModel;
  } catch (const std::exception& e) {
    std::cerr << name << ": internal error: " << e.what() << "\n";
    return kFailure;
  }
}

int run_h0(const std::string& name, const std::string& expr) {
  try {
    const k3::ModelFile f = k3::resolve_model(name);
    const k3::DivisorClass d = k3::parse_class_expr(f.model, expr, f.classes);
    const k3::CohomologyDims dims = k3::cohomology_dims(f.model, d);
    std::cout << "class: " << k3::render_class(f.model, d) << "\n"
              << "square: " << k3::square(f.model, d) << "\n"
              << "degree: " << k3::degree(f.model, d) << "\n"
              << "h0: " << dims.h0 << "\nh1: " << dims.h1 << "\nh2: " << dims.h2 << "\n";
    return kOk;
  } catch (const k3::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalidModel;
  } catch (const k3::ContractError& e) {
    std::cerr << e.what() << "\n";
    return kInvalidModel;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-bundle cohomology and normal-bundle invariants of polarized K3 lattices"};
  app.require_subcommand(1);

  std::vector<std::string> models;
  std::string format = "human";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* classify = app.add_subcommand("classify", "classify one or more models (registry names or JSON files)");
  classify->add_option("models", models, "models")->required();
  classify->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  classify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  std::string verify_model;
  k3::Integer max_degree = 20;
  auto* verify = app.add_subcommand("verify", "run self-consistency checks on a model");
  verify->add_option("model", verify_model, "model")->required();
  verify->add_option("--max-degree", max_degree, "degree bound for sampled classes")->check(CLI::Range(1, 60));

  std::string h0_model, h0_class;
  auto* h0 = app.add_subcommand("h0", "cohomology of a line bundle");
  h0->add_option("model", h0_model, "model")->required();
  h0->add_option("--class", h0_class, "class expression, e.g. H-3E")->required();

  auto* registry = app.add_subcommand("registry", "built-in models");
  registry->require_subcommand(1);
  auto* list = registry->add_subcommand("list", "list registry names");
  std::string dump_name;
  auto* dump = registry->add_subcommand("dump", "print a registry entry as JSON");
  dump->add_option("name", dump_name, "registry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*classify) return run_classify(models, format, threads);
  if (*verify) return run_verify_cmd(verify_model, max_degree);
  if (*h0) return run_h0(h0_model, h0_class);
  if (*list) {
    for (const auto& n : k3::registry_names()) std::cout << n << "\n";
    return kOk;
  }
  if (*dump) {
    auto src = k3::registry_source(dump_name);
    if (!src) {
      std::cerr << "unknown registry model '" << dump_name << "'\n";
      return kUsage;
    }
    std::cout << nlohmann::json::parse(*src).dump(2) << "\n";
    return kOk;
  }
  return kUsage;
}
