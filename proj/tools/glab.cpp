#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "greedylab/constants.hpp"
#include "greedylab/gaps.hpp"
#include "greedylab/lemmas.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/verify.hpp"

namespace {

using greedylab::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

json parse_inline(const std::string& text) { return json::parse(text); }

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

greedylab::ConstantEstimate run_estimator(const std::string& name, const greedylab::Space& sp,
                                          const greedylab::GapSequence& n,
                                          const greedylab::SearchBudget& b) {
  using namespace greedylab;
  if (name == "democracy") return democracy_constant(sp, n, b);
  if (name == "superdemocracy") return superdemocracy_constant(sp, n, b);
  if (name == "conservative") return conservative_constant(sp, n, b);
  if (name == "superconservative") return superconservative_constant(sp, n, b);
  if (name == "ucc") return ucc_constant(sp, n, b);
  if (name == "suppression-ucc") return succ_constant(sp, n, b);
  if (name == "qglc") return qglc_constant(sp, n, b);
  if (name == "slc") return slc_constant(sp, n, b);
  if (name == "ul-lower") return ul_constants(sp, n, b).first;
  if (name == "ul-upper") return ul_constants(sp, n, b).second;
  if (name.rfind("quasi-greedy", 0) == 0) {
    double t = 1.0;
    auto pos = name.find(':');
    if (pos != std::string::npos) t = std::stod(name.substr(pos + 1));
    return quasi_greedy_constant(sp, n, b, t);
  }
  throw CLI::ValidationError("unknown constant name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedylab batch front end"};
  app.require_subcommand(1);

  std::string space_arg, vector_arg, gaps_arg, budget_arg, name_arg;
  std::string config_path, out_path, format = "json", vectors_arg;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int jobs = 1;
  std::int64_t lbound = 1;

  auto* cnorm = app.add_subcommand("norm", "evaluate a norm oracle");
  cnorm->add_option("--space", space_arg, "space config (inline JSON)")->required();
  cnorm->add_option("--vector", vector_arg, "vector as [[index, value], ...]")->required();

  auto* cconst = app.add_subcommand("constant", "run a restricted-constant estimator");
  cconst->add_option("--name", name_arg, "estimator name")->required();
  cconst->add_option("--space", space_arg)->required();
  cconst->add_option("--gaps", gaps_arg)->required();
  cconst->add_option("--budget", budget_arg, "search budget (inline JSON)");
  cconst->add_option("--out", out_path);
  auto* cseed_opt = cconst->add_option("--seed", seed, "override the budget seed");

  auto* cverify = app.add_subcommand("verify", "run the inequality suite");
  cverify->add_option("--config", config_path, "suite config path (omit for the default)");
  cverify->add_option("--out", out_path);
  cverify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = cverify->add_option("--seed", seed, "override the config seed");
  cverify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* clemma = app.add_subcommand("lemma34", "constructive subset selection certificate");
  clemma->add_option("--space", space_arg)->required();
  clemma->add_option("--vectors", vectors_arg, "family as [vector, ...]")->required();
  clemma->add_option("--gaps", gaps_arg)->required();
  clemma->add_option("--l", lbound, "quotient bound");
  clemma->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cnorm->parsed()) {
      auto sp = greedylab::space_from_json(parse_inline(space_arg));
      std::vector<std::pair<int, double>> pairs;
      for (const auto& p : parse_inline(vector_arg))
        pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<double>());
      auto x = greedylab::SparseVector::from_pairs(pairs);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.15g", sp->norm(x));
      std::cout << buf << '\n';
      return 0;
    }
    if (cconst->parsed()) {
      auto sp = greedylab::space_from_json(parse_inline(space_arg));
      auto n = greedylab::GapSequence::from_json(parse_inline(gaps_arg));
      greedylab::SearchBudget b;
      if (!budget_arg.empty()) b = greedylab::SearchBudget::from_json(parse_inline(budget_arg));
      if (cseed_opt->count() > 0) b.seed = seed;
      auto est = run_estimator(name_arg, *sp, n, b);
      write_output(out_path, est.to_json().dump(2));
      return 0;
    }
    if (cverify->parsed()) {
      json cj = config_path.empty() ? greedylab::default_config_json() : load_json(config_path);
      auto cfg = greedylab::SuiteConfig::from_json(cj);
      seed_set = seed_opt->count() > 0;
      if (seed_set) cfg.seed = seed;
      auto report = greedylab::run_suite(cfg, jobs);
      write_output(out_path, format == "csv" ? report.to_csv() : report.to_json().dump(2));
      return report.ok() ? 0 : 1;
    }
    if (clemma->parsed()) {
      auto sp = greedylab::space_from_json(parse_inline(space_arg));
      auto n = greedylab::GapSequence::from_json(parse_inline(gaps_arg));
      std::vector<greedylab::SparseVector> xs;
      for (const auto& vj : parse_inline(vectors_arg))
        xs.push_back(greedylab::SparseVector::from_json(vj));
      auto sel = greedylab::select_subset(*sp, xs, n, lbound);
      write_output(out_path, sel.to_json().dump(2));
      return 0;
    }
  } catch (const CLI::ValidationError&) {
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
