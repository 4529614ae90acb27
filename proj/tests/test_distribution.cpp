// Exhaustive and sampled genus distributions: oracle agreement, worker
// determinism, checkpoint/resume, budgets and degenerate inputs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuslab/distribution.hpp>
#include <genuslab/families.hpp>
#include <genuslab/selftest.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace genuslab;

namespace {

std::map<int, uint64_t> as_map(const GenusDistribution& d) {
    std::map<int, uint64_t> m;
    for (size_t h = 0; h < d.counts.size(); ++h)
        if (d.counts[h] > 0) m[static_cast<int>(h)] = d.counts[h].get_ui();
    return m;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("/tmp/genuslab_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("rotation system counts") {
    CHECK(rotation_system_count(complete_graph(4)) == 16);
    CHECK(rotation_system_count(complete_graph(5)) == 7776);
    CHECK(rotation_system_count(bouquet(3)) == 120);
    CHECK(rotation_system_count(cycle_graph(7)) == 1);
    CHECK(rotation_system_count(dipole(3)) == 4);
    CHECK(rotation_system_count(antiprism(3).graph) == 46656);
}

TEST_CASE("known exact distributions") {
    CHECK(as_map(exact_distribution(complete_graph(4))) ==
          std::map<int, uint64_t>{{0, 2}, {1, 14}});
    CHECK(as_map(exact_distribution(bouquet(2))) == std::map<int, uint64_t>{{0, 4}, {1, 2}});
    CHECK(as_map(exact_distribution(dipole(3))) == std::map<int, uint64_t>{{0, 2}, {1, 2}});
    // Trees and cycles embed only in the sphere.
    CHECK(as_map(exact_distribution(cycle_graph(5))) == std::map<int, uint64_t>{{0, 1}});
}

TEST_CASE("exact distribution matches the reference enumerator") {
    for (const Graph& g : {bouquet(3), dipole(4), complete_graph(4), cycle_graph(4)}) {
        GenusDistribution dist = exact_distribution(g);
        CHECK(as_map(dist) == naive_genus_distribution(g));
        CHECK(dist.total() == rotation_system_count(g));
        CHECK(dist.complete);
        CHECK(dist.processed == dist.total());
    }
}

TEST_CASE("histogram length follows the cycle rank") {
    GenusDistribution dist = exact_distribution(complete_graph(4));
    // beta = E - V + 1 = 3, so genus can only reach 1.
    CHECK(dist.counts.size() == 2);
    GenusDistribution b3 = exact_distribution(bouquet(3));
    CHECK(b3.counts.size() == 2);
}

TEST_CASE("edgeless and degenerate graphs") {
    Graph single(1, {});
    CHECK(as_map(exact_distribution(single)) == std::map<int, uint64_t>{{0, 1}});
    CHECK(min_genus(single) == 0);
    Graph disconnected(2, {});
    CHECK_THROWS_AS(exact_distribution(disconnected), std::invalid_argument);
}

TEST_CASE("budget refusal names the space size") {
    ExactOptions opts;
    opts.budget = 100;
    CHECK_THROWS_WITH(exact_distribution(complete_graph(5), opts),
                      doctest::Contains("exceeds budget"));
    opts.budget = 0;
    CHECK_THROWS_AS(exact_distribution(complete_graph(4), opts), std::invalid_argument);
}

TEST_CASE("worker count does not change the histogram") {
    for (const Graph& g : {complete_graph(4), bouquet(3), dipole(4)}) {
        GenusDistribution base = exact_distribution(g);
        for (int w : {2, 3, 8}) {
            ExactOptions opts;
            opts.workers = w;
            GenusDistribution alt = exact_distribution(g, opts);
            CHECK(alt.counts == base.counts);
            CHECK(alt.processed == base.processed);
        }
    }
}

TEST_CASE("chunk size does not change the histogram") {
    GenusDistribution base = exact_distribution(complete_graph(4));
    for (uint64_t chunk : {1u, 3u, 5u, 17u}) {
        ExactOptions opts;
        opts.chunk = chunk;
        CHECK(exact_distribution(complete_graph(4), opts).counts == base.counts);
    }
}

TEST_CASE("checkpoint pause and resume reproduce the full run") {
    Graph g = complete_graph(4);
    GenusDistribution base = exact_distribution(g);

    TempPath cp("resume.json");
    ExactOptions opts;
    opts.checkpoint_path = cp.path;
    opts.chunk = 4;
    opts.stop_after = 5;
    GenusDistribution paused = exact_distribution(g, opts);
    CHECK_FALSE(paused.complete);
    CHECK(paused.processed == 8);  // stop_after rounds up to the chunk boundary
    CHECK(paused.total() == 8);    // counts cover only the processed prefix

    ExactOptions resume;
    resume.checkpoint_path = cp.path;
    resume.chunk = 4;
    resume.resume = true;
    GenusDistribution done = exact_distribution(g, resume);
    CHECK(done.complete);
    CHECK(done.counts == base.counts);
    CHECK(done.processed == 16);
}

TEST_CASE("resume validates the checkpoint") {
    Graph g = complete_graph(4);
    TempPath cp("validate.json");
    ExactOptions opts;
    opts.checkpoint_path = cp.path;
    opts.chunk = 4;
    opts.stop_after = 1;
    exact_distribution(g, opts);

    // Wrong graph behind the same checkpoint file.
    ExactOptions wrong;
    wrong.checkpoint_path = cp.path;
    wrong.resume = true;
    CHECK_THROWS_WITH(exact_distribution(complete_graph(5), wrong),
                      doctest::Contains("checkpoint"));

    // Resume without a file.
    TempPath missing("missing.json");
    ExactOptions nofile;
    nofile.checkpoint_path = missing.path;
    nofile.resume = true;
    CHECK_THROWS_AS(exact_distribution(g, nofile), std::invalid_argument);

    // Corrupted payload.
    std::ofstream(cp.path) << "{ not json";
    ExactOptions corrupt;
    corrupt.checkpoint_path = cp.path;
    corrupt.resume = true;
    CHECK_THROWS_AS(exact_distribution(g, corrupt), std::invalid_argument);
}

TEST_CASE("min genus") {
    CHECK(min_genus(complete_graph(4)) == 0);
    CHECK(min_genus(complete_graph(5)) == 1);
    CHECK(min_genus(bouquet(2)) == 0);
    CHECK(min_genus(antiprism(3).graph) == 0);
}

TEST_CASE("enumeration order visits every system once") {
    Graph g = dipole(3);
    uint64_t n = 0;
    std::set<std::vector<Dart>> seen;
    for_each_rotation_system(g, [&](const std::vector<Dart>& sigma) {
        ++n;
        seen.insert(sigma);
        return true;
    });
    CHECK(n == 4);
    CHECK(seen.size() == 4);
    // Early stop.
    uint64_t stopped = 0;
    for_each_rotation_system(g, [&](const std::vector<Dart>&) { return ++stopped < 2; });
    CHECK(stopped == 2);
}

TEST_CASE("sampling is deterministic and worker independent") {
    Graph g = complete_graph(5);
    SampledDistribution a = sampled_distribution(g, 500, 42);
    SampledDistribution b = sampled_distribution(g, 500, 42);
    CHECK(a.by_genus.size() == b.by_genus.size());
    for (auto& [h, est] : a.by_genus) {
        CHECK(b.by_genus.count(h));
        CHECK(b.by_genus[h].hits == est.hits);
        CHECK(b.by_genus[h].fraction == est.fraction);
        CHECK(b.by_genus[h].low == est.low);
        CHECK(b.by_genus[h].high == est.high);
    }
    for (int w : {2, 8}) {
        SampledDistribution c = sampled_distribution(g, 500, 42, w);
        for (auto& [h, est] : a.by_genus) CHECK(c.by_genus[h].hits == est.hits);
    }
    SampledDistribution other = sampled_distribution(g, 500, 43);
    bool differs = false;
    for (auto& [h, est] : a.by_genus)
        if (other.by_genus[h].hits != est.hits) differs = true;
    CHECK(differs);
}

TEST_CASE("sample estimates are coherent") {
    SampledDistribution s = sampled_distribution(complete_graph(4), 2000, 7);
    uint64_t hits = 0;
    for (auto& [h, est] : s.by_genus) {
        hits += est.hits;
        CHECK(est.low <= est.fraction);
        CHECK(est.fraction <= est.high);
        CHECK(est.high <= 1.0);
        CHECK(est.low >= 0.0);
    }
    CHECK(hits == 2000);
    // True fractions are 2/16 and 14/16; the 95% intervals at n=2000 should
    // comfortably contain them.
    CHECK(s.by_genus.count(0));
    CHECK(s.by_genus[0].low <= 0.125);
    CHECK(s.by_genus[0].high >= 0.125);
}
