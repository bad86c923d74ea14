#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "tforge/report.hpp"

namespace {

int emit(const tforge::RunReport& rep, bool json,
         std::chrono::steady_clock::time_point start) {
  if (json) {
    std::cout << rep.json.dump(2) << "\n";
  } else {
    std::cout << tforge::render_human(rep.json);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cerr << "wall-time: " << ms << " ms\n";
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Tschirnhaus transformations and normal forms for equations of degree 3..6"};
  app.require_subcommand(1);

  std::string which, field, poly, covariant;
  std::uint64_t seed = 12345;
  int degree = -1;
  int corrupt = -1;
  bool json = false;

  CLI::App* verify = app.add_subcommand("verify", "run an exact identity suite");
  verify->add_option("which", which, "hermite | joubert | s4 | conditions-tr | group-facts")
      ->required();
  verify->add_flag("--json", json, "machine-readable report");

  CLI::App* transform = app.add_subcommand("transform", "apply a covariant to a polynomial");
  transform->add_option("--field", field, "Q | GF(p) | GF(p^k;modulus=...)")->required();
  transform->add_option("--poly", poly, "monic separable polynomial in x")->required();
  transform->add_option("--covariant", covariant, "hermite | joubert")->required();
  transform->add_flag("--json", json, "machine-readable report");

  CLI::App* normalize = app.add_subcommand("normalize", "produce the normal-form equation");
  normalize->add_option("--field", field, "Q | GF(p) | GF(p^k;modulus=...)")->required();
  normalize->add_option("--poly", poly, "monic irreducible separable polynomial in x");
  normalize->add_option("--degree", degree, "degree 3..6; picks the first irreducible");
  normalize->add_option("--seed", seed, "seed for root-finding splits (fixed default)");
  normalize->add_flag("--json", json, "machine-readable report");

  CLI::App* table = app.add_subcommand("table", "re-verify the explicit quintic list");
  table->add_flag("--json", json, "machine-readable per-entry report");
  table->add_option("--corrupt-entry", corrupt,
                    "test hook: corrupt the given entry before verification");

  std::string what;
  CLI::App* exp = app.add_subcommand("export", "emit a named construction as polynomial JSON");
  exp->add_option("what", what,
                  "hermite-psi1 | hermite-phi1 | joubert-psi1 | joubert-phi1 | delta5 | "
                  "delta6 | s4")
      ->required();

  CLI11_PARSE(app, argc, argv);
  auto start = std::chrono::steady_clock::now();

  if (verify->parsed()) return emit(tforge::cmd_verify(which), json, start);
  if (transform->parsed()) return emit(tforge::cmd_transform(field, poly, covariant), json, start);
  if (normalize->parsed()) {
    std::optional<std::string> p;
    std::optional<int> d;
    if (!poly.empty()) p = poly;
    if (degree >= 0) d = degree;
    return emit(tforge::cmd_normalize(field, p, d, seed), json, start);
  }
  if (table->parsed()) return emit(tforge::cmd_table(corrupt), json, start);
  if (exp->parsed()) return emit(tforge::cmd_export(what), true, start);
  return 2;
}
