#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab {

// Reference enumerator kept deliberately separate from the production one:
// arrangements are materialized per vertex and walked by an index odometer,
// sigma lives in a std::map, and faces are traced off a pending-dart set.
// Returns genus -> count, zero counts omitted.
std::map<int, uint64_t> naive_genus_distribution(const Graph& g);

struct SuiteResult {
    std::string name;
    bool passed = true;
    uint64_t cases = 0;   // property instances checked
    std::string detail;   // first failure, or a short summary
};

SuiteResult suite_enumerator_oracle();
SuiteResult suite_lemma1();        // peripheral => facial or nonseparating
SuiteResult suite_lemma2();        // nonfacial peripheral families bound genus
SuiteResult suite_lemma3();        // sparse nonfacial families bound genus
SuiteResult suite_lemma4();        // disjoint non-homotopic families <= 3g-2
SuiteResult suite_section3();      // coefficient inequalities, k <= 100
SuiteResult suite_certificates();  // random certificate sweep

std::vector<SuiteResult> run_selftests();

}  // namespace genuslab
