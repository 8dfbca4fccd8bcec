#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cofin/generate.hpp"
#include "cofin/phom.hpp"

namespace cofin {

enum class Outcome { Pass, Fail, Discard };

/// A law checked on generated tuples of elements. `check` returns Discard
/// when the inputs miss the law's precondition (this happens while
/// shrinking); every input tuple is a list of elements so one shrinker serves
/// all properties. Units travel as defect-zero elements.
struct Property {
  std::string name;
  std::function<std::vector<PHom>(Generator&)> generate;
  std::function<Outcome(const std::vector<PHom>&)> check;
};

struct Suite {
  std::string name;
  std::string summary;
  std::vector<Property> properties;
};

const std::vector<Suite>& registered_suites();
const Suite* find_suite(const std::string& name);

struct SuiteConfig {
  std::string suite;
  std::size_t cases = 500;
  std::uint64_t seed = 0;
  GeneratorBounds bounds;
};

struct Failure {
  std::size_t case_index = 0;
  std::string reason;
  std::vector<PHom> minimized;
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t discarded = 0;
  std::size_t failed = 0;
  /// Minimized counterexamples for the first few failing cases.
  std::vector<Failure> failures;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<PropertyResult> properties;
  double seconds = 0;

  std::size_t failures() const;
};

/// Greedy shrink: repeatedly replaces one input by a simpler candidate while
/// the property still fails.
std::vector<PHom> minimize(const Property& property, std::vector<PHom> inputs);

SuiteReport run_suite(const Suite& suite, const SuiteConfig& cfg);
/// Runs cfg.suite, or every registered suite for "all". Throws UnknownSuite.
std::vector<SuiteReport> run_suites(const SuiteConfig& cfg);

/// Plain-text report, one property per line; timing is left out so that
/// identical configurations give identical text.
std::string render(const std::vector<SuiteReport>& reports,
                   const SuiteConfig& cfg);

}  // namespace cofin
