#include "cofin/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "cofin/congruence.hpp"
#include "cofin/errors.hpp"
#include "cofin/green.hpp"
#include "cofin/suites.hpp"
#include "cofin/text.hpp"

namespace cofin {

namespace {

const char* boolean(bool b) { return b ? "true" : "false"; }

struct Command {
  CLI::App* app = nullptr;
  std::function<int()> run;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact arithmetic for monotone co-finite partial homeomorphisms "
               "of the real line"};
  app.require_subcommand(1);

  std::vector<Command> commands;
  auto add = [&](const std::string& name, const std::string& help) -> CLI::App* {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.push_back({sub, {}});
    return sub;
  };
  auto bind = [&](std::function<int()> f) { commands.back().run = std::move(f); };

  std::string a_text;
  std::string b_text;
  std::vector<std::string> many;
  std::string x_text;
  std::string rel_text;
  std::size_t ideal_n = 0;

  CLI::App* sub = add("eval", "apply an element to a rational point");
  sub->add_option("element", a_text)->required();
  sub->add_option("x", x_text)->required();
  bind([&] {
    auto y = parse_element(a_text)(parse_rational(x_text));
    out << (y ? y->str() : std::string("undefined")) << "\n";
    return kExitOk;
  });

  sub = add("compose", "product of elements, leftmost acts first");
  sub->add_option("elements", many)->required()->expected(2, -1);
  bind([&] {
    PHom product = parse_element(many.front());
    for (std::size_t i = 1; i < many.size(); ++i) {
      product = product * parse_element(many[i]);
    }
    out << format(product) << "\n";
    return kExitOk;
  });

  sub = add("invert", "inverse element");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << format(inverse(parse_element(a_text))) << "\n";
    return kExitOk;
  });

  sub = add("idempotent", "is the element idempotent");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << boolean(parse_element(a_text).is_idempotent()) << "\n";
    return kExitOk;
  });

  sub = add("defect", "number of points missing from the domain");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << parse_element(a_text).defect() << "\n";
    return kExitOk;
  });

  sub = add("green", "test a Green's relation");
  sub->add_option("relation", rel_text)
      ->required()
      ->check(CLI::IsMember({"R", "L", "H", "D", "J"}));
  sub->add_option("a", a_text)->required();
  sub->add_option("b", b_text)->required();
  bind([&] {
    GreenRelation rel = *parse_green_relation(rel_text);
    out << boolean(green_related(rel, parse_element(a_text),
                                 parse_element(b_text)))
        << "\n";
    return kExitOk;
  });

  sub = add("leq", "natural partial order a <= b");
  sub->add_option("a", a_text)->required();
  sub->add_option("b", b_text)->required();
  bind([&] {
    out << boolean(natural_leq(parse_element(a_text), parse_element(b_text)))
        << "\n";
    return kExitOk;
  });

  sub = add("ideal", "membership in the ideal of defect >= n");
  sub->add_option("n", ideal_n)->required();
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << boolean(in_ideal(ideal_n, parse_element(a_text))) << "\n";
    return kExitOk;
  });

  sub = add("gamma", "the unique unit extending the element");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << format(gamma_of(parse_element(a_text))) << "\n";
    return kExitOk;
  });

  sub = add("sigma", "minimum group congruence, with witness idempotent");
  sub->add_option("a", a_text)->required();
  sub->add_option("b", b_text)->required();
  bind([&] {
    SigmaVerdict v = sigma_related(parse_element(a_text), parse_element(b_text));
    out << boolean(v.related) << "\n";
    if (v.witness) out << format(*v.witness) << "\n";
    return kExitOk;
  });

  sub = add("pair", "semidirect-product pair of an element");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << format(to_pair(parse_element(a_text))) << "\n";
    return kExitOk;
  });

  sub = add("unpair", "element of a semidirect-product pair");
  sub->add_option("pair", a_text)->required();
  bind([&] {
    out << format(from_pair(parse_pair(a_text))) << "\n";
    return kExitOk;
  });

  sub = add("pairmul", "product of semidirect-product pairs");
  sub->add_option("p", a_text)->required();
  sub->add_option("q", b_text)->required();
  bind([&] {
    out << format(parse_pair(a_text) * parse_pair(b_text)) << "\n";
    return kExitOk;
  });

  sub = add("conjugator", "unit g with i = g e g^-1 for idempotents i, e");
  sub->add_option("i", a_text)->required();
  sub->add_option("e", b_text)->required();
  bind([&] {
    out << format(conjugator(parse_element(a_text), parse_element(b_text)))
        << "\n";
    return kExitOk;
  });

  sub = add("factor-defect", "a = g b d with factors of the same defect");
  sub->add_option("a", a_text)->required();
  sub->add_option("b", b_text)->required();
  bind([&] {
    Factorization f =
        factorize_same_defect(parse_element(a_text), parse_element(b_text));
    out << format(f.left) << "\n" << format(f.right) << "\n";
    return kExitOk;
  });

  sub = add("factor-d", "a = g b d with unit factors");
  sub->add_option("a", a_text)->required();
  sub->add_option("b", b_text)->required();
  bind([&] {
    UnitFactorization f =
        factorize_by_units(parse_element(a_text), parse_element(b_text));
    out << format(f.left) << "\n" << format(f.right) << "\n";
    return kExitOk;
  });

  sub = add("localize", "localizations of a group H-class element");
  sub->add_option("element", a_text)->required();
  bind([&] {
    for (const PHom& part : localize(parse_element(a_text))) {
      out << format(part) << "\n";
    }
    return kExitOk;
  });

  sub = add("fmt", "print an element canonically");
  sub->add_option("element", a_text)->required();
  bind([&] {
    out << format(parse_element(a_text)) << "\n";
    return kExitOk;
  });

  SuiteConfig cfg;
  sub = add("check", "run a seeded property suite (or 'all')");
  sub->add_option("suite", cfg.suite)->required();
  sub->add_option("--cases", cfg.cases)->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed);
  sub->add_option("--max-defect", cfg.bounds.max_defect)
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-knots", cfg.bounds.max_knots);
  sub->add_option("--coeff-bound", cfg.bounds.coeff_bound)
      ->check(CLI::PositiveNumber);
  bind([&] {
    std::vector<SuiteReport> reports = run_suites(cfg);
    out << render(reports, cfg);
    bool clean = std::all_of(reports.begin(), reports.end(),
                             [](const SuiteReport& r) { return r.failures() == 0; });
    return clean ? kExitOk : kExitSuiteFailure;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const Command& c : commands) {
      if (c.app->parsed()) return c.run();
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownSuite& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cofin
