// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cofin/cli.hpp"
#include "cofin/congruence.hpp"
#include "cofin/errors.hpp"
#include "cofin/green.hpp"
#include "cofin/suites.hpp"
#include "cofin/text.hpp"

using namespace cofin;

namespace {

constexpr double kTimeLimitSeconds = 10.0;

PHom el(const char* t) { return parse_element(t); }
PLHomeo pl(const char* t) { return parse_pl(t); }
CofinSet set(const char* t) { return parse_set(t); }
std::string b(bool v) { return v ? "true" : "false"; }

std::string cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_command(args, out, err);
  return out.str() + "exit " + std::to_string(code);
}

std::string join(const std::vector<PHom>& parts) {
  std::string s;
  for (const PHom& p : parts) s += (s.empty() ? "" : " ") + format(p);
  return s;
}

template <class E, class F>
std::string throws(F f) {
  try {
    f();
  } catch (const E&) {
    return "throws";
  } catch (...) {
    return "wrong exception";
  }
  return "no exception";
}

struct Golden {
  std::string label;
  std::function<std::string()> actual;
  std::string expected;
};

std::vector<Golden> golden_examples() {
  PHom bb = el("phom(aff(1,1);{0})");
  PLHomeo g3 = pl("pl(2;(0,0),(1/2,3/4),(1,1);3)");
  return {
      {"eval affine", [] { return format(pl("aff(2,3)")(Rat(1, 2))); }, "4"},
      {"eval identity piece", [] { return format(pl("pl(1;(0,0);2)")(Rat(-3))); }, "-3"},
      {"eval middle piece",
       [] { return format(pl("pl(1;(0,2),(1,4);1)")(Rat(1, 2))); }, "3"},
      {"compose affine", [] { return format(pl("aff(1,1)") * pl("aff(2,0)")); },
       "aff(2,2)"},
      {"compose pl", [] { return format(pl("pl(1;(0,0);2)") * pl("pl(1;(0,0);2)")); },
       "pl(1;(0,0);4)"},
      {"compose inverse pair",
       [] { return format(pl("aff(2,0)") * pl("aff(1/2,0)")); }, "aff(1,0)"},
      {"inverse affine", [] { return format(inverse(pl("aff(2,3)"))); },
       "aff(1/2,-3/2)"},
      {"inverse pl", [] { return format(inverse(pl("pl(1;(0,0);2)"))); },
       "pl(1;(0,0);1/2)"},
      {"inverse identity", [] { return format(inverse(PLHomeo())); }, "aff(1,0)"},
      {"canonical identity", [] { return format(pl("pl(1;(0,0);1)")); }, "aff(1,0)"},
      {"canonical slope 2", [] { return format(pl("pl(2;(0,1),(1,3);2)")); },
       "aff(2,1)"},
      {"order iso one point",
       [] { return format(order_isomorphism(set("{0}"), set("{1}"))); }, "aff(1,1)"},
      {"order iso two points",
       [] { return format(order_isomorphism(set("{0,1}"), set("{2,4}"))); },
       "pl(1;(0,2),(1,4);1)"},
      {"order iso fixed",
       [] { return format(order_isomorphism(set("{5}"), set("{5}"))); }, "aff(1,0)"},
      {"splice (0,1)", [=] { return format(splice(g3, Rat(0), Rat(1))); },
       "pl(1;(0,0),(1/2,3/4),(1,1);1)"},
      {"splice (1,inf)", [=] { return format(splice(g3, Rat(1), std::nullopt)); },
       "pl(1;(1,1);3)"},
      {"splice identity", [] { return format(splice(PLHomeo(), Rat(0), Rat(2))); },
       "aff(1,0)"},
      {"element ranges",
       [] { return format(el("phom(aff(1,1);{0})").range_excluded()); }, "{1}"},
      {"element unit", [] { return b(el("phom(aff(1,0);{})") == PHom()); }, "true"},
      {"range gaps under 2x",
       [] { return format(el("phom(aff(2,0);{1,7})").range_excluded()); }, "{2,14}"},
      {"apply at gap",
       [] { return b(!el("phom(aff(1,1);{0})")(Rat(0))); }, "true"},
      {"apply off gap", [] { return format(*el("phom(aff(1,1);{0})")(Rat(2))); }, "3"},
      {"apply idempotent gap",
       [] { return b(!el("phom(aff(1,0);{5})")(Rat(5))); }, "true"},
      {"idempotent times b",
       [=] { return format(el("phom(aff(1,0);{0})") * bb); }, "phom(aff(1,1);{0})"},
      {"b times b", [=] { return format(bb * bb); }, "phom(aff(1,2);{-1,0})"},
      {"a times inverse a",
       [] {
         PHom a = el("phom(pl(1;(0,0);2);{3,4})");
         return format(a * inverse(a));
       },
       "phom(aff(1,0);{3,4})"},
      {"invert", [=] { return format(inverse(bb)); }, "phom(aff(1,-1);{1})"},
      {"invert idempotent", [] { return format(inverse(el("phom(aff(1,0);{3})"))); },
       "phom(aff(1,0);{3})"},
      {"invert unit", [] { return format(inverse(el("phom(aff(2,0);{})"))); },
       "phom(aff(1/2,0);{})"},
      {"idempotent two gaps",
       [] { return b(el("phom(aff(1,0);{0,5})").is_idempotent()); }, "true"},
      {"not idempotent", [=] { return b(bb.is_idempotent()); }, "false"},
      {"identity idempotent", [] { return b(PHom().is_idempotent()); }, "true"},
      {"defect 2", [] { return std::to_string(el("phom(aff(2,0);{1,7})").defect()); },
       "2"},
      {"defect unit", [] { return std::to_string(el("phom(aff(3,1);{})").defect()); },
       "0"},
      {"defect b times b", [=] { return std::to_string((bb * bb).defect()); }, "2"},
      {"restriction order",
       [] {
         return b(natural_leq(el("phom(aff(1,0);{0,1})"), el("phom(aff(1,0);{0})")));
       },
       "true"},
      {"below gamma",
       [=] { return b(natural_leq(bb, PHom::unit(gamma_of(bb)))); }, "true"},
      {"different extensions",
       [=] { return b(natural_leq(bb, el("phom(aff(1,2);{})"))); }, "false"},
      {"semilattice image",
       [] { return format(to_semilattice(el("phom(aff(1,0);{0,3})"))); }, "{0,3}"},
      {"semilattice unit", [] { return format(to_semilattice(PHom())); }, "{}"},
      {"semilattice product",
       [] {
         return format(to_semilattice(el("phom(aff(1,0);{0})") *
                                      el("phom(aff(1,0);{1})")));
       },
       "{0,1}"},
      {"R equal domains",
       [] {
         return b(green_related(GreenRelation::R, el("phom(aff(1,1);{0})"),
                                el("phom(aff(2,0);{0})")));
       },
       "true"},
      {"H differs",
       [] {
         return b(green_related(GreenRelation::H, el("phom(aff(1,0);{0})"),
                                el("phom(aff(1,0);{5})")));
       },
       "false"},
      {"D equal defects",
       [] {
         return b(green_related(GreenRelation::D, el("phom(aff(1,0);{0})"),
                                el("phom(aff(1,0);{5})")));
       },
       "true"},
      {"ideal n=2",
       [] { return b(in_ideal(2, el("phom(aff(1,0);{0,1})"))); }, "true"},
      {"ideal n=3",
       [] { return b(in_ideal(3, el("phom(aff(1,0);{0,1})"))); }, "false"},
      {"ideal n=0", [=] { return b(in_ideal(0, bb) && in_ideal(0, PHom())); }, "true"},
      {"ideal unit n=1",
       [] { return b(in_ideal(1, el("phom(aff(2,0);{})"))); }, "false"},
      {"localize one gap",
       [] { return join(localize(el("phom(pl(1;(0,0);2);{0})"))); },
       "phom(aff(1,0);{0}) phom(pl(1;(0,0);2);{0})"},
      {"localize product",
       [] {
         PHom a = el("phom(pl(1;(0,0);2);{0})");
         std::vector<PHom> p = localize(a);
         return b(p[0] * p[1] == a);
       },
       "true"},
      {"localize idempotent",
       [] { return join(localize(el("phom(aff(1,0);{0,1})"))); },
       "phom(aff(1,0);{0,1}) phom(aff(1,0);{0,1}) phom(aff(1,0);{0,1})"},
      // middle extension pl(1;(0,0),(1,1);1) is the identity in canonical form
      {"localize two gaps",
       [] { return join(localize(el("phom(pl(2;(0,0),(1,1);3);{0,1})"))); },
       "phom(pl(2;(0,0);1);{0,1}) phom(aff(1,0);{0,1}) phom(pl(1;(1,1);3);{0,1})"},
      {"factor same defect",
       [] {
         PHom a = el("phom(aff(1,0);{0})");
         PHom bq = el("phom(aff(1,1);{5})");
         Factorization f = factorize_same_defect(a, bq);
         return format(f.left) + " " + format(f.right) + " " +
                b(f.left * bq * f.right == a);
       },
       "phom(aff(1,5);{0}) phom(aff(1,-6);{6}) true"},
      {"factor same defect a=b",
       [] {
         PHom a = el("phom(pl(1;(-1,0);2);{-1,3})");
         Factorization f = factorize_same_defect(a, a);
         return format(f.left) + " " + b(f.left * a * f.right == a);
       },
       "phom(aff(1,0);{-1,3}) true"},
      // postfix composition: gamma = a b^{-1} is x -> 2x - 1
      {"factor defect zero",
       [] {
         PHom a = el("phom(aff(2,0);{})");
         PHom bq = el("phom(aff(1,1);{})");
         Factorization f = factorize_same_defect(a, bq);
         return format(f.left) + " " + format(f.right) + " " +
                b(f.left * bq * f.right == a);
       },
       "phom(aff(2,-1);{}) phom(aff(1,0);{}) true"},
      {"conjugator one point",
       [] {
         PHom i = el("phom(aff(1,0);{0})");
         PHom e = el("phom(aff(1,0);{1})");
         PLHomeo g = conjugator(i, e);
         return format(g) + " " +
                b(PHom::unit(g) * e * PHom::unit(pl("aff(1,-1)")) == i);
       },
       "aff(1,1) true"},
      {"conjugator two points",
       [] {
         return format(conjugator(el("phom(aff(1,0);{0,1})"),
                                  el("phom(aff(1,0);{2,4})")));
       },
       "pl(1;(0,2),(1,4);1)"},
      {"conjugator equal",
       [] {
         PHom e = el("phom(aff(1,0);{2,9})");
         return format(conjugator(e, e));
       },
       "aff(1,0)"},
      {"unit factors",
       [] {
         PHom a = el("phom(aff(1,0);{0})");
         PHom bq = el("phom(aff(1,0);{5})");
         UnitFactorization f = factorize_by_units(a, bq);
         return format(f.left) + " " + format(f.right) + " " +
                b(PHom::unit(f.left) * bq * PHom::unit(f.right) == a);
       },
       "aff(1,5) aff(1,-5) true"},
      {"unit factors a=b",
       [] {
         PHom a = el("phom(pl(1;(0,0);3);{0,1})");
         UnitFactorization f = factorize_by_units(a, a);
         return format(f.left) + " " + format(f.right);
       },
       "aff(1,0) aff(1,0)"},
      {"unit factors shifted",
       [] {
         PHom a = el("phom(aff(1,1);{0})");
         PHom bq = el("phom(aff(1,0);{3})");
         UnitFactorization f = factorize_by_units(a, bq);
         return format(f.left) + " " + format(f.right) + " " +
                b(PHom::unit(f.left) * bq * PHom::unit(f.right) == a);
       },
       "aff(1,3) aff(1,-2) true"},
      {"gamma extension", [] { return format(gamma_of(el("phom(aff(2,3);{1})"))); },
       "aff(2,3)"},
      {"gamma idempotent",
       [] { return format(gamma_of(el("phom(aff(1,0);{0,5})"))); }, "aff(1,0)"},
      {"gamma unit", [] { return format(gamma_of(el("phom(aff(3,-1);{})"))); },
       "aff(3,-1)"},
      {"sigma restrictions of identity",
       [] {
         SigmaVerdict v =
             sigma_related(el("phom(aff(1,0);{0})"), el("phom(aff(1,0);{7})"));
         return b(v.related) + " " + format(*v.witness);
       },
       "true phom(aff(1,0);{0,7})"},
      {"sigma restriction",
       [=] {
         SigmaVerdict v = sigma_related(bb, el("phom(aff(1,1);{})"));
         return b(v.related) + " " + format(*v.witness);
       },
       "true phom(aff(1,0);{0})"},
      {"sigma distinct",
       [=] {
         SigmaVerdict v = sigma_related(bb, el("phom(aff(1,2);{0})"));
         return b(v.related) + " " + b(v.witness.has_value());
       },
       "false false"},
      {"quotient square", [=] { return format(gamma_of(bb * bb)); }, "aff(1,2)"},
      {"quotient idempotent",
       [] {
         PHom q = el("phom(pl(1;(0,0);2);{4})");
         return b(gamma_of(el("phom(aff(1,0);{1,2})") * q) == gamma_of(q));
       },
       "true"},
      {"quotient units",
       [] {
         return format(gamma_of(el("phom(aff(2,0);{})") * el("phom(aff(1,3);{})")));
       },
       "aff(2,3)"},
      {"conj action shift",
       [] { return format(conj_action(pl("aff(1,1)"), el("phom(aff(1,0);{0})"))); },
       "phom(aff(1,0);{1})"},
      {"conj action identity",
       [] { return format(conj_action(PLHomeo(), el("phom(aff(1,0);{0,2})"))); },
       "phom(aff(1,0);{0,2})"},
      {"conj action scale",
       [] { return format(conj_action(pl("aff(2,0)"), el("phom(aff(1,0);{1,3})"))); },
       "phom(aff(1,0);{2,6})"},
      {"f map shift",
       [] { return format(f_map(pl("aff(1,1)"), el("phom(aff(1,0);{0})"))); },
       "phom(aff(1,0);{-1})"},
      {"f map identity",
       [] { return format(f_map(PLHomeo(), el("phom(aff(1,0);{0,2})"))); },
       "phom(aff(1,0);{0,2})"},
      {"to pair", [=] { return format(to_pair(bb)); }, "pair(aff(1,1);{1})"},
      {"to pair idempotent",
       [] { return format(to_pair(el("phom(aff(1,0);{3,4})"))); },
       "pair(aff(1,0);{3,4})"},
      {"pair round trip",
       [] {
         PHom a = el("phom(pl(1/2;(0,1),(2,2);3);{-1,5/2})");
         return b(from_pair(to_pair(a)) == a);
       },
       "true"},
      {"pair product",
       [=] {
         GSPair p = parse_pair("pair(aff(1,1);{1})");
         return format(p * p) + " " + b(p * p == to_pair(bb * bb));
       },
       "pair(aff(1,2);{1,2}) true"},
      {"pair semilattice",
       [] {
         return format(parse_pair("pair(aff(1,0);{0})") *
                       parse_pair("pair(aff(1,0);{1})"));
       },
       "pair(aff(1,0);{0,1})"},
      {"parse element", [] { return format(el("phom(aff(1,1);{0})")); },
       "phom(aff(1,1);{0})"},
      {"parse conjugator",
       [] {
         return b(el("phom(pl(1;(0,2),(1,4);1);{})") ==
                  PHom::unit(order_isomorphism(set("{0,1}"), set("{2,4}"))));
       },
       "true"},
      {"parse slope 0",
       [] { return throws<MonotonicityViolation>([] { el("phom(aff(0,1);{})"); }); },
       "throws"},
      {"format identity", [] { return format(PHom()); }, "phom(aff(1,0);{})"},
      {"format pl",
       [] { return format(PHom(pl("pl(1;(0,0);2)"), set("{0}"))); },
       "phom(pl(1;(0,0);2);{0})"},
      {"format b times b", [=] { return format(bb * bb); }, "phom(aff(1,2);{-1,0})"},
      {"cli compose",
       [] { return cli({"compose", "phom(aff(1,1);{0})", "phom(aff(1,1);{0})"}); },
       "phom(aff(1,2);{-1,0})\nexit 0"},
      {"cli green D",
       [] { return cli({"green", "D", "phom(aff(1,0);{0})", "phom(aff(1,0);{5})"}); },
       "true\nexit 0"},
      {"cli factor-defect mismatch",
       [] { return cli({"factor-defect", "phom(aff(1,0);{0})", "phom(aff(1,0);{})"}); },
       "exit 3"},
  };
}

bool run_golden() {
  bool ok = true;
  std::size_t n = 0;
  for (const Golden& g : golden_examples()) {
    ++n;
    std::string got;
    try {
      got = g.actual();
    } catch (const std::exception& e) {
      got = std::string("exception: ") + e.what();
    }
    if (got != g.expected) {
      ok = false;
      std::printf("    %s: expected '%s', got '%s'\n", g.label.c_str(),
                  g.expected.c_str(), got.c_str());
    }
  }
  std::printf("criterion 10 golden examples (%zu): %s\n", n, ok ? "PASS" : "FAIL");
  return ok;
}

bool run_criterion(int number, const std::string& suite) {
  SuiteConfig cfg;
  cfg.suite = suite;
  std::vector<SuiteReport> reports = run_suites(cfg);
  const SuiteReport& r = reports.front();
  bool ok = r.failures() == 0 && r.seconds < kTimeLimitSeconds;
  std::printf("criterion %d suite %s: %s (%zu cases x %zu properties, %zu failures, %.2fs)\n",
              number, suite.c_str(), ok ? "PASS" : "FAIL", r.cases,
              r.properties.size(), r.failures(), r.seconds);
  if (r.failures() != 0) std::printf("%s", render(reports, cfg).c_str());
  return ok;
}

}  // namespace

int main() {
  const char* suites[] = {"inverse-laws", "band",          "defect",
                          "green-witnesses", "factorizations", "gamma",
                          "sigma-quotient", "localization",  "semidirect"};
  bool ok = true;
  int number = 1;
  for (const char* s : suites) ok = run_criterion(number++, s) && ok;
  ok = run_golden() && ok;
  std::printf("%s\n", ok ? "all criteria pass" : "some criteria FAIL");
  return ok ? 0 : 1;
}
