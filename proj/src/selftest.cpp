#include "genuslab/selftest.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "genuslab/counterexample.hpp"
#include "genuslab/cycle.hpp"
#include "genuslab/distribution.hpp"
#include "genuslab/families.hpp"
#include "genuslab/map.hpp"
#include "genuslab/rng.hpp"
#include "genuslab/topology.hpp"

namespace genuslab {

std::map<int, uint64_t> naive_genus_distribution(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("naive distribution: graph must be connected");
    if (g.edge_count() == 0) return {{0, 1}};
    const int V = g.vertex_count(), E = g.edge_count();
    std::vector<std::vector<Dart>> at(V);
    for (int e = 0; e < E; ++e) {
        at[g.edge(e).first].push_back(2 * e);
        at[g.edge(e).second].push_back(2 * e + 1);
    }
    std::vector<std::vector<std::vector<Dart>>> arrangements(V);
    for (int v = 0; v < V; ++v) {
        if (at[v].empty()) {
            arrangements[v].push_back({});
            continue;
        }
        std::vector<Dart> tail(at[v].begin() + 1, at[v].end());
        std::sort(tail.begin(), tail.end());
        do {
            std::vector<Dart> arr{at[v][0]};
            arr.insert(arr.end(), tail.begin(), tail.end());
            arrangements[v].push_back(arr);
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::map<int, uint64_t> counts;
    std::vector<size_t> pick(V, 0);
    while (true) {
        std::map<Dart, Dart> sigma;
        for (int v = 0; v < V; ++v) {
            const std::vector<Dart>& arr = arrangements[v][pick[v]];
            for (size_t i = 0; i < arr.size(); ++i) sigma[arr[i]] = arr[(i + 1) % arr.size()];
        }
        std::set<Dart> pending;
        for (Dart d = 0; d < 2 * E; ++d) pending.insert(d);
        int faces = 0;
        while (!pending.empty()) {
            Dart start = *pending.begin(), cur = start;
            ++faces;
            do {
                pending.erase(cur);
                cur = sigma.at(cur ^ 1);
            } while (cur != start);
        }
        counts[(2 - (V - E + faces)) / 2] += 1;
        int v = V - 1;
        while (v >= 0 && ++pick[v] == arrangements[v].size()) pick[v--] = 0;
        if (v < 0) break;
    }
    return counts;
}

namespace {

std::vector<Cycle> peripheral_cycles(const Graph& g) {
    std::vector<Cycle> out;
    for (const Cycle& c : simple_cycles(g))
        if (is_peripheral_cycle(g, c)) out.push_back(c);
    return out;
}

CombinatorialMap random_map(const Graph& g, SplitMix64& rng) {
    std::vector<Dart> sigma(g.dart_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::vector<Dart>& darts = g.darts_at(v);
        if (darts.empty()) continue;
        std::vector<Dart> rest(darts.begin() + 1, darts.end());
        shuffle(rest, rng);
        Dart prev = darts.front();
        for (Dart d : rest) {
            sigma[prev] = d;
            prev = d;
        }
        sigma[prev] = darts.front();
    }
    return CombinatorialMap::from_sigma(g, sigma);
}

int max_clique(const std::vector<uint64_t>& adj) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    uint64_t all = n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    std::function<void(uint64_t, int)> go = [&](uint64_t cand, int size) {
        if (size > best) best = size;
        if (!cand || size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        go(cand & adj[v], size + 1);
        go(cand & ~(uint64_t(1) << v), size);
    };
    go(all, 0);
    return best;
}

}  // namespace

SuiteResult suite_enumerator_oracle() {
    SuiteResult res;
    res.name = "enumerator-vs-naive-oracle";
    std::vector<std::pair<std::string, Graph>> graphs;
    for (int n = 1; n <= 3; ++n) graphs.emplace_back("bouquet:" + std::to_string(n), bouquet(n));
    for (int n = 2; n <= 4; ++n) graphs.emplace_back("dipole:" + std::to_string(n), dipole(n));
    for (int n = 3; n <= 6; ++n) graphs.emplace_back("cycle:" + std::to_string(n), cycle_graph(n));
    graphs.emplace_back("complete:4", complete_graph(4));
    graphs.emplace_back("complete:5", complete_graph(5));
    for (auto& [name, g] : graphs) {
        std::map<int, uint64_t> naive = naive_genus_distribution(g);
        GenusDistribution lib = exact_distribution(g);
        mpz_class expected_total = rotation_system_count(g);
        auto fail = [&](const std::string& why) {
            res.passed = false;
            res.detail = name + ": " + why;
        };
        if (lib.total() != expected_total) {
            fail("total " + lib.total().get_str() + " != " + expected_total.get_str());
            return res;
        }
        for (auto& [h, c] : naive)
            if (h < 0 || h >= static_cast<int>(lib.counts.size())) {
                fail("oracle found genus " + std::to_string(h) + " outside the library range");
                return res;
            }
        for (size_t h = 0; h < lib.counts.size(); ++h) {
            auto it = naive.find(static_cast<int>(h));
            uint64_t want = it == naive.end() ? 0 : it->second;
            if (lib.counts[h] != mpz_class(std::to_string(want))) {
                fail("genus " + std::to_string(h) + ": library " + lib.counts[h].get_str() +
                     " vs oracle " + std::to_string(want));
                return res;
            }
        }
        res.cases += lib.processed;
    }
    return res;
}

SuiteResult suite_lemma1() {
    SuiteResult res;
    res.name = "lemma1-peripheral-facial-or-nonseparating";
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("K4", complete_graph(4));
    graphs.emplace_back("octahedron", antiprism(3).graph);
    for (auto& [name, g] : graphs) {
        std::vector<Cycle> per = peripheral_cycles(g);
        uint64_t index = 0;
        for_each_rotation_system(g, [&](const std::vector<Dart>& sig) {
            CombinatorialMap map = CombinatorialMap::from_sigma(g, sig);
            for (size_t ci = 0; ci < per.size(); ++ci) {
                if (!is_facial(map, per[ci]) && is_surface_separating(map, per[ci])) {
                    res.passed = false;
                    res.detail = name + ": rotation system " + std::to_string(index) +
                                 ", peripheral cycle " + std::to_string(ci) +
                                 " is nonfacial yet separating";
                    return false;
                }
                ++res.cases;
            }
            ++index;
            return true;
        });
        if (!res.passed) return res;
    }
    return res;
}

SuiteResult suite_lemma2() {
    SuiteResult res;
    res.name = "lemma2-nonfacial-peripheral-families-bound-genus";
    Graph g = antiprism(3).graph;
    std::vector<Cycle> per = peripheral_cycles(g);
    int P = static_cast<int>(per.size());
    if (P > 30) throw std::logic_error("lemma2: unexpected peripheral census");
    std::vector<uint32_t> families;
    for (uint32_t m = 1; m < (uint32_t(1) << P); ++m) {
        if (std::popcount(m) > 3) continue;
        std::vector<Cycle> fam;
        for (int i = 0; i < P; ++i)
            if (m & (uint32_t(1) << i)) fam.push_back(per[i]);
        if (is_peripheral_family(g, fam)) families.push_back(m);
    }
    for_each_rotation_system(g, [&](const std::vector<Dart>& sig) {
        CombinatorialMap map = CombinatorialMap::from_sigma(g, sig);
        uint32_t facial = 0;
        for (int i = 0; i < P; ++i)
            if (is_facial(map, per[i])) facial |= uint32_t(1) << i;
        int genus = map.genus();
        for (uint32_t fam : families) {
            if ((facial & fam) == 0 && std::popcount(fam) > genus) {
                res.passed = false;
                res.detail = "family mask " + std::to_string(fam) + " with no facial member on a genus-" +
                             std::to_string(genus) + " system";
                return false;
            }
            ++res.cases;
        }
        return true;
    });
    return res;
}

SuiteResult suite_lemma3() {
    SuiteResult res;
    res.name = "lemma3-sparse-nonfacial-families-bound-genus";
    PlanarFamily octa = antiprism(3);
    std::vector<Cycle> tris;
    for (const std::vector<Dart>& orbit : octa.map.faces()) tris.emplace_back(octa.graph, orbit);
    int T = static_cast<int>(tris.size());
    if (T > 30) throw std::logic_error("lemma3: unexpected face census");
    std::vector<uint32_t> sparse_fams;
    for (uint32_t m = 1; m < (uint32_t(1) << T); ++m) {
        std::vector<Cycle> fam;
        for (int i = 0; i < T; ++i)
            if (m & (uint32_t(1) << i)) fam.push_back(tris[i]);
        if (cofacial_sparsity(octa.map, fam).sparse) sparse_fams.push_back(m);
    }
    for_each_rotation_system(octa.graph, [&](const std::vector<Dart>& sig) {
        CombinatorialMap map = CombinatorialMap::from_sigma(octa.graph, sig);
        uint32_t facial = 0;
        for (int i = 0; i < T; ++i)
            if (is_facial(map, tris[i])) facial |= uint32_t(1) << i;
        int genus = map.genus();
        for (uint32_t fam : sparse_fams) {
            if ((facial & fam) == 0 && std::popcount(fam) > genus) {
                res.passed = false;
                res.detail = "sparse family mask " + std::to_string(fam) +
                             " with no facial member on a genus-" + std::to_string(genus) +
                             " system";
                return false;
            }
            ++res.cases;
        }
        return true;
    });
    return res;
}

SuiteResult suite_lemma4() {
    SuiteResult res;
    res.name = "lemma4-disjoint-nonhomotopic-families";
    CombinatorialMap canon = toroidal_grid(3, 3);
    const Graph& g = canon.graph();
    std::vector<Cycle> cyc = simple_cycles(g, 4);

    std::vector<CombinatorialMap> maps{canon};
    SplitMix64 rng(0x6c656d6d613466ULL);
    int want1 = 12, want2 = 12;
    for (uint64_t attempt = 0; attempt < 400000 && (want1 > 0 || want2 > 0); ++attempt) {
        CombinatorialMap m = random_map(g, rng);
        int genus = m.genus();
        if (genus == 1 && want1 > 0) {
            --want1;
            maps.push_back(std::move(m));
        } else if (genus == 2 && want2 > 0) {
            --want2;
            maps.push_back(std::move(m));
        }
    }

    for (const CombinatorialMap& map : maps) {
        std::vector<const Cycle*> nc;
        for (const Cycle& c : cyc)
            if (!is_contractible(map, c)) nc.push_back(&c);
        int n = static_cast<int>(nc.size());
        if (n > 60) throw std::logic_error("lemma4: unexpected cycle census");
        std::vector<uint64_t> adj(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!vertex_disjoint(*nc[i], *nc[j])) continue;
                if (freely_homotopic_disjoint(map, *nc[i], *nc[j])) continue;
                adj[i] |= uint64_t(1) << j;
                adj[j] |= uint64_t(1) << i;
                ++res.cases;
            }
        int bound = 3 * map.genus() - 2;
        int found = max_clique(adj);
        ++res.cases;
        if (found > bound) {
            res.passed = false;
            res.detail = "genus " + std::to_string(map.genus()) + ": family of " +
                         std::to_string(found) + " exceeds " + std::to_string(bound);
            return res;
        }
    }
    res.detail = std::to_string(maps.size()) + " maps examined";
    return res;
}

SuiteResult suite_section3() {
    SuiteResult res;
    res.name = "section3-coefficient-inequalities";
    for (int k = 1; k <= 100; ++k) {
        for (const InequalityCheck& chk : verify_section3_inequalities(k)) {
            ++res.cases;
            if (!chk.holds) {
                res.passed = false;
                res.detail = "k=" + std::to_string(k) + ": " + chk.name + " fails at q=" +
                             std::to_string(chk.first_failure_q);
                return res;
            }
        }
        mpq_class prev = c_coefficient(k, k);
        mpq_class low_end(4 * k - 3, 4 * k);
        low_end.canonicalize();
        bool ends_ok = prev == low_end;
        for (int q = k + 1; q <= 2 * k; ++q) {
            mpq_class cur = c_coefficient(q, k);
            if (!(prev < cur)) {
                res.passed = false;
                res.detail = "c_q not strictly increasing at k=" + std::to_string(k) +
                             ", q=" + std::to_string(q);
                return res;
            }
            prev = cur;
            ++res.cases;
        }
        if (!ends_ok || prev != 1) {
            res.passed = false;
            res.detail = "c_k or c_2k endpoint wrong at k=" + std::to_string(k);
            return res;
        }
    }
    return res;
}

SuiteResult suite_certificates() {
    SuiteResult res;
    res.name = "theorem2-certificate-sweep";
    SplitMix64 rng(0x6365727469667931ULL);
    uint64_t eq_held = 0;
    for (int i = 0; i < 10000; ++i) {
        long k = 1 + static_cast<long>(rng.below(6));
        long r = 1 + 2 * static_cast<long>(rng.below(static_cast<uint64_t>(k)));
        long g = static_cast<long>(rng.below(21));
        long d = 1 + static_cast<long>(rng.below(uint64_t(1) << (1 + rng.below(24))));
        mpz_class nu = 1;
        nu <<= static_cast<unsigned>(rng.below(200));
        nu += static_cast<unsigned long>(rng.below(1000000000));
        CertificateReport rep = theorem2_certificate(g, k, d, nu, r);
        if (rep.eq_d && !rep.log_convexity_forced) {
            res.passed = false;
            res.detail = "implication broken at g=" + std::to_string(g) + " k=" + std::to_string(k) +
                         " d=" + std::to_string(d) + " r=" + std::to_string(r);
            return res;
        }
        if (rep.eq_d) ++eq_held;
        ++res.cases;
    }
    for (long d : {200000L, 1000000L}) {
        CertificateReport rep = theorem2_certificate(0, 1, d, 1, 1);
        ++res.cases;
        if (!rep.eq_d || !rep.log_convexity_forced) {
            res.passed = false;
            res.detail = "large d=" + std::to_string(d) + " failed to satisfy the certificates";
            return res;
        }
    }
    res.detail = "eq_d held on " + std::to_string(eq_held) + " random tuples";
    return res;
}

std::vector<SuiteResult> run_selftests() {
    return {suite_enumerator_oracle(), suite_lemma1(),   suite_lemma2(),      suite_lemma3(),
            suite_lemma4(),            suite_section3(), suite_certificates()};
}

}  // namespace genuslab
