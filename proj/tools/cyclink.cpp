#include <iostream>

#include <CLI11.hpp>

#include "cyclink/cli.hpp"

int main(int argc, char** argv) {
  using namespace cyclink::cli;
  Command cmd;
  std::string format = "text";
  CLI::App app{"Exact computations with cyclic p-algebras [alpha, beta) in characteristic p"};
  app.add_option("verb", cmd.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("--field", cmd.field, "Field tower, e.g. \"GF(2)(a)(b)\" or \"GF(3)(x)[s: s^2 - x]\"");
  app.add_option("--symbol", cmd.symbol, "Symbol \"[alpha, beta; p)\"");
  app.add_option("--symbol2", cmd.symbol2, "Second symbol (verify-link, certify-nonlink)");
  app.add_option("--elem", cmd.elem, "Element expression; i and j denote the symbol generators");
  app.add_option("--alpha", cmd.alpha, "Left slot");
  app.add_option("--beta", cmd.beta, "Right slot");
  app.add_option("--gamma", cmd.gamma, "Third slot (norm target)");
  app.add_option("--slot", cmd.slot, "Common right slot (verify-link)");
  app.add_option("--var", cmd.var, "Transcendental generator defining the valuation");
  app.add_option("--hint", cmd.hints, "Candidate z with z^p = slot (verify-link), repeatable");
  app.add_option("--p", cmd.p, "Symbol degree (defaults to the characteristic)");
  app.add_option("--budget", cmd.budget.max_candidates, "Candidate limit for bounded searches")
      ->capture_default_str();
  app.add_option("--degree", cmd.budget.degree, "Coefficient degree for bounded searches")->capture_default_str();
  app.add_option("--seed", cmd.budget.seed, "Seed for randomized searches")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cmd.format = format == "jsonl" ? Format::Jsonl : Format::Text;
  return run(cmd, std::cout, std::cerr);
}
