#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pjohnson/endo.hpp"

// Property suites over generated inputs. Each returns the number of cases
// checked and a description of every failing case.
namespace laws {

struct Outcome {
  int cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return cases > 0 && failures.empty(); }
  void check(bool good, const std::string& what) {
    ++cases;
    if (!good && failures.size() < 20) failures.push_back(what);
  }
  std::string summary() const;
};

struct CorpusEntry {
  std::string name;
  pjohnson::GroupEndo phi;
};

// Hand-picked and generated IA automorphisms for r in {2,3}, p in {3,5}.
std::vector<CorpusEntry> ia_corpus();

Outcome example_periods();
Outcome oracle_equivalence(std::uint64_t seed, int count);
Outcome johnson_bridge(std::uint64_t seed, int count);
Outcome relator_theorem(const std::vector<CorpusEntry>& corpus);
Outcome homomorphism_laws(std::uint64_t seed, int pairs);
Outcome inner_formulas(std::uint64_t seed, int count);
Outcome filtration_axioms(std::uint64_t seed, int pairs);
Outcome monodromy_laws(const std::vector<CorpusEntry>& corpus);
Outcome kawazumi_round_trip(std::uint64_t seed, int count);
Outcome cli_determinism(const std::string& tool, const std::string& test_dir);

// Individual laws, also used directly by the unit tests.
Outcome commutator_depth(std::uint64_t seed, int pairs);
Outcome equivariance(std::uint64_t seed, int pairs);
Outcome commutator_formula(std::uint64_t seed, int pairs);
Outcome leibniz_rule(std::uint64_t seed, int count);

}  // namespace laws
