// Command-line entry point: one job per invocation, JSON in, JSON out.
//
//   theta <command> [--ring p,f] [--spec ell,v_image[,ext]]
//         [--in FILE] [--out FILE] [--seed N] [--scale small|full]
//
// Exit codes: 0 success, 1 malformed input, 2 domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "theta/job.hpp"

namespace {

using theta::Json;

struct CommonOpts {
  std::string ring;
  std::string spec;
  std::string in_file;
  std::string out_file;
  long seed = -1;
  std::string scale;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--ring", opts.ring, "residual data p,f (default 2,1)");
  cmd->add_option("--spec", opts.spec,
                  "specialization ell,v_image[,ext]; with ext the image is "
                  "v_image*u in F_ell^2");
  cmd->add_option("--in", opts.in_file, "input JSON document (default none)");
  cmd->add_option("--out", opts.out_file, "output file (default stdout)");
  cmd->add_option("--seed", opts.seed, "deterministic seed (verify-all)");
  cmd->add_option("--scale", opts.scale, "suite scale: small or full");
}

std::vector<long> split_longs(const std::string& s, bool* ext = nullptr) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (ext && item == "ext") {
      *ext = true;
      continue;
    }
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw theta::SchemaError("malformed option value: " + s);
    }
  }
  return out;
}

Json build_job(const std::string& command, const CommonOpts& opts) {
  Json job = Json::object();
  if (!opts.in_file.empty()) {
    std::ifstream in(opts.in_file);
    if (!in) throw theta::SchemaError("cannot open input file: " + opts.in_file);
    try {
      in >> job;
    } catch (const Json::exception& e) {
      throw theta::SchemaError(std::string("invalid JSON input: ") + e.what());
    }
    if (!job.is_object()) throw theta::SchemaError("input must be a JSON object");
  }
  job["command"] = command;
  if (!opts.ring.empty()) {
    auto pf = split_longs(opts.ring);
    if (pf.size() < 1 || pf.size() > 2)
      throw theta::SchemaError("--ring expects p or p,f");
    job["ring"] = Json{{"p", pf[0]}, {"f", pf.size() == 2 ? pf[1] : 1}};
  }
  if (!opts.spec.empty()) {
    bool ext = false;
    auto parts = split_longs(opts.spec, &ext);
    if (parts.size() != 2)
      throw theta::SchemaError("--spec expects ell,v_image[,ext]");
    Json spec{{"ell", parts[0]}, {"extension", ext}};
    spec["v_image"] = ext ? Json::array({0, parts[1]}) : Json(parts[1]);
    job["specialization"] = std::move(spec);
  }
  if (!job.contains("params")) job["params"] = Json::object();
  if (opts.seed >= 0) job["params"]["seed"] = opts.seed;
  if (!opts.scale.empty()) job["params"]["scale"] = opts.scale;
  return job;
}

int emit(const Json& doc, const CommonOpts& opts) {
  std::string text = doc.dump(2) + "\n";
  if (opts.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_file);
    if (!out) {
      std::cerr << "cannot open output file: " << opts.out_file << "\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact transfer toolkit: Laurent-ring, support, parameter and "
               "stratification computations"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rallis-apply", "apply the Laurent-ring transfer to a polynomial"},
      {"rallis-preimage", "solve for an invariant preimage under the transfer"},
      {"scs-theta", "transfer a support multiset into a larger rank"},
      {"scs-congruence", "compare the trivial-character chain with its twist mod ell"},
      {"lparam-check", "check the tame relation F sigma F^-1 = sigma^q"},
      {"lparam-map", "transfer a tame pair into a larger dimension"},
      {"lparam-invariants", "characteristic polynomial of a word value"},
      {"lparam-pullback", "divide out the scalar-block factor from pushed coefficients"},
      {"strata", "rank census of a finite matrix space"},
      {"crosscheck", "compare the two diagonal transfer routes"},
      {"verify-all", "run every property suite deterministically"},
  };

  CommonOpts opts;
  std::string chosen;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, opts);
    sub->callback([&chosen, name = name]() { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    theta::RunResult res = theta::run_job(build_job(chosen, opts));
    int emit_rc = emit(res.doc, opts);
    return emit_rc != 0 ? emit_rc : res.exit_code;
  } catch (const theta::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const theta::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  }
}
