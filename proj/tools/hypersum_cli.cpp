#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypersum/frontend.hpp"

using namespace hypersum;

int main(int argc, char** argv) {
  CLI::App app{"Reduction-based summation and creative telescoping for hypergeometric terms"};
  app.require_subcommand(1);

  JobSpec job;
  bool as_json = false;
  std::vector<std::string> quotients;
  std::string file;

  auto add_input = [&](CLI::App* sub) {
    auto* e = sub->add_option("--expr", job.expr, "term, e.g. binomial(x,y)^3");
    auto* q = sub->add_option("--quotients", quotients, "shift quotients f = T(x+1)/T, g = T(y+1)/T")
                  ->expected(2);
    auto* f = sub->add_option("--file", file, "read the term from a file");
    e->excludes(q)->excludes(f);
    q->excludes(f);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "single JSON document on stdout");
    sub->add_flag("--factored", job.factored, "annotate denominator factors with shift classes");
    sub->add_flag("--certificate", job.want_certificate, "compute certificate / fail when not summable");
    sub->add_flag("--verify", job.verify, "re-check the telescoper (by summability when no certificate)");
    sub->add_option("--max-order", job.max_order, "order cap for telescoping")->check(CLI::NonNegativeNumber);
  };

  CLI::App* reduce = app.add_subcommand("reduce", "additive decomposition T = Delta_y(..) + residual");
  CLI::App* summable = app.add_subcommand("summable", "decide summability in y and print a witness");
  CLI::App* telescope = app.add_subcommand("telescope", "minimal telescoper in S_x");
  CLI::App* bench = app.add_subcommand("bench", "generate and run a random benchmark term");
  for (auto* s : {reduce, summable, telescope}) {
    add_input(s);
    add_common(s);
  }
  add_common(bench);
  std::string family = "univariate";
  bench->add_option("--family", family, "univariate | bivariate")
      ->check(CLI::IsMember({"univariate", "bivariate"}));
  bench->add_option("--seed", job.seed, "random seed");
  bench->add_option("--lambda", job.bench.lambda);
  bench->add_option("--mu", job.bench.mu);
  bench->add_option("--alpha", job.bench.alpha);
  bench->add_option("--beta", job.bench.beta);
  bench->add_option("--deg-f,--n", job.bench.deg_f, "degree of the numerator f");
  bench->add_option("--deg-p,--m", job.bench.deg_p, "degree of each p_i");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (reduce->parsed()) job.mode = Mode::Reduce;
  if (summable->parsed()) job.mode = Mode::Summable;
  if (telescope->parsed()) job.mode = Mode::Telescope;
  if (bench->parsed()) {
    job.mode = Mode::Bench;
    job.bench.family = family == "bivariate" ? BenchParams::Family::Bivariate : BenchParams::Family::Univariate;
  }
  if (job.mode != Mode::Bench) {
    if (!quotients.empty()) {
      job.quotients = std::make_pair(quotients[0], quotients[1]);
    } else if (!file.empty()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      job.expr = ss.str();
    } else if (job.expr.empty()) {
      std::cerr << "error: one of --expr, --quotients, --file is required\n";
      return 2;
    }
  }

  const Report rep = run(job);
  if (as_json) {
    std::cout << rep.json.dump(2) << "\n";
  } else {
    std::cout << rep.text;
  }
  if (rep.json.contains("error")) {
    std::cerr << "error [" << rep.json["error"]["code"].get<std::string>() << "]: "
              << rep.json["error"]["message"].get<std::string>() << "\n";
  }
  return rep.exit_code;
}
