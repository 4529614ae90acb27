#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genuslab/map.hpp"

namespace genuslab {

// Number of rotation systems of g: prod over vertices of (deg(v) - 1)!.
mpz_class rotation_system_count(const Graph& g);

struct GenusDistribution {
    // counts[h] = rotation systems of genus h, h = 0..floor(beta/2) where
    // beta is the cycle rank; zeros included so the shape is predictable.
    std::vector<mpz_class> counts;
    bool complete = true;     // false when the run stopped at a checkpoint
    uint64_t processed = 0;   // rotation systems examined
    mpz_class total() const;
};

struct ExactOptions {
    uint64_t budget = 100'000'000;  // refuse spaces larger than this
    int workers = 1;
    std::string checkpoint_path;    // empty: no checkpoint file
    uint64_t chunk = 65536;         // checkpoint grain; fixed so results do not depend on workers
    bool resume = false;            // continue from checkpoint_path
    uint64_t stop_after = 0;        // pause once this many systems are processed (0: never)
};

GenusDistribution exact_distribution(const Graph& g, const ExactOptions& opts = {});

struct SampleEstimate {
    uint64_t hits = 0;
    double fraction = 0;
    double low = 0, high = 0;  // 95% Wilson interval
};

struct SampledDistribution {
    uint64_t samples = 0;
    std::map<int, SampleEstimate> by_genus;
};

// Uniform rotation systems from counter-based per-sample streams: sample i
// depends only on (seed, i), so any worker count gives the same result.
SampledDistribution sampled_distribution(const Graph& g, uint64_t samples, uint64_t seed,
                                         int workers = 1);

// Smallest genus over all rotation systems, stopping early at zero.
int min_genus(const Graph& g, uint64_t budget = 100'000'000);

// Visits the sigma array of every rotation system in enumeration order;
// return false from the callback to stop early.
void for_each_rotation_system(const Graph& g,
                              const std::function<bool(const std::vector<Dart>&)>& fn);

}  // namespace genuslab
