#include "genuslab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "genuslab/exactmath.hpp"
#include "genuslab/rng.hpp"

namespace genuslab {

namespace {

using ordered_json = nlohmann::ordered_json;

uint64_t factorial_u64(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

int max_genus_bound(const Graph& g) {
    int beta = g.edge_count() - g.vertex_count() + 1;
    return beta / 2;
}

// Walks rotation systems in mixed-radix order: one digit per vertex (vertex
// 0 most significant), digit v ranking the arrangement of v's darts after
// its smallest dart, in lexicographic order.
class RotationEnumerator {
public:
    explicit RotationEnumerator(const Graph& g) : g_(g), sigma_(g.dart_count()) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            const std::vector<Dart>& darts = g.darts_at(v);
            anchors_.push_back(darts.empty() ? -1 : darts.front());
            rest_.push_back({darts.begin() + (darts.empty() ? 0 : 1), darts.end()});
            radix_.push_back(factorial_u64(std::max<int>(0, g.degree(v) - 1)));
        }
    }

    void seek(uint64_t index) {
        for (int v = g_.vertex_count() - 1; v >= 0; --v) {
            uint64_t digit = index % radix_[v];
            index /= radix_[v];
            unrank(v, digit);
            write_vertex(v);
        }
    }

    bool advance() {
        for (int v = g_.vertex_count() - 1; v >= 0; --v) {
            if (std::next_permutation(rest_[v].begin(), rest_[v].end())) {
                write_vertex(v);
                return true;
            }
            // wrapped back to the sorted arrangement; carry on leftward
            write_vertex(v);
        }
        return false;
    }

    const std::vector<Dart>& sigma() const { return sigma_; }

    int face_count() {
        epoch_ += 1;
        if (seen_.size() != sigma_.size()) seen_.assign(sigma_.size(), 0);
        int faces = 0;
        for (Dart d = 0; d < static_cast<Dart>(sigma_.size()); ++d) {
            if (seen_[d] == epoch_) continue;
            ++faces;
            Dart cur = d;
            do {
                seen_[cur] = epoch_;
                cur = sigma_[alpha(cur)];
            } while (cur != d);
        }
        return faces;
    }

    int genus() {
        int chi = g_.vertex_count() - g_.edge_count() + face_count();
        return (2 - chi) / 2;
    }

private:
    void unrank(int v, uint64_t digit) {
        std::vector<Dart>& rest = rest_[v];
        std::vector<Dart> pool(g_.darts_at(v).begin() + (anchors_[v] >= 0 ? 1 : 0),
                               g_.darts_at(v).end());
        int n = static_cast<int>(pool.size());
        for (int i = 0; i < n; ++i) {
            uint64_t f = factorial_u64(n - 1 - i);
            int j = static_cast<int>(digit / f);
            digit %= f;
            rest[i] = pool[j];
            pool.erase(pool.begin() + j);
        }
    }

    void write_vertex(int v) {
        if (anchors_[v] < 0) return;
        Dart prev = anchors_[v];
        for (Dart d : rest_[v]) {
            sigma_[prev] = d;
            prev = d;
        }
        sigma_[prev] = anchors_[v];
    }

    const Graph& g_;
    std::vector<Dart> sigma_;
    std::vector<Dart> anchors_;
    std::vector<std::vector<Dart>> rest_;
    std::vector<uint64_t> radix_;
    std::vector<uint32_t> seen_;
    uint32_t epoch_ = 0;
};

std::string graph_fingerprint(const Graph& g) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<uint64_t>(g.vertex_count()));
    for (auto& [u, v] : g.edges()) {
        mix(static_cast<uint64_t>(u) + 1);
        mix(static_cast<uint64_t>(v) + 1);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("v") + std::to_string(g.vertex_count()) + "e" +
           std::to_string(g.edge_count()) + "-" + buf;
}

void enumerate_range(const Graph& g, uint64_t lo, uint64_t hi, std::vector<uint64_t>& hist) {
    if (lo >= hi) return;
    RotationEnumerator en(g);
    en.seek(lo);
    for (uint64_t i = lo; i < hi; ++i) {
        hist[static_cast<size_t>(en.genus())] += 1;
        if (i + 1 < hi) en.advance();
    }
}

void write_checkpoint(const std::string& path, const std::string& fp, const mpz_class& total,
                      uint64_t next_index, const std::vector<uint64_t>& hist) {
    ordered_json j;
    j["schema"] = "genus-lab/checkpoint/1";
    j["graph"] = fp;
    j["total"] = total.get_str();
    j["next_index"] = std::to_string(next_index);
    ordered_json counts = ordered_json::object();
    for (size_t h = 0; h < hist.size(); ++h) counts[std::to_string(h)] = std::to_string(hist[h]);
    j["counts"] = counts;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place: " + path);
}

uint64_t load_checkpoint(const std::string& path, const std::string& fp, const mpz_class& total,
                         std::vector<uint64_t>& hist) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read checkpoint: " + path);
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("checkpoint: not valid JSON: " + path);
    if (j.value("schema", "") != "genus-lab/checkpoint/1")
        throw std::invalid_argument("checkpoint: unknown schema");
    if (j.value("graph", "") != fp)
        throw std::invalid_argument("checkpoint: graph fingerprint mismatch");
    if (j.value("total", "") != total.get_str())
        throw std::invalid_argument("checkpoint: rotation system count mismatch");
    try {
        for (auto& [key, val] : j.at("counts").items()) {
            size_t h = std::stoul(key);
            if (h >= hist.size()) throw std::invalid_argument("checkpoint: genus out of range");
            hist[h] = std::stoull(val.get<std::string>());
        }
        return std::stoull(j.at("next_index").get<std::string>());
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("checkpoint: malformed payload: " + path);
    }
}

}  // namespace

mpz_class rotation_system_count(const Graph& g) {
    mpz_class total = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 2) total *= factorial(g.degree(v) - 1);
    return total;
}

mpz_class GenusDistribution::total() const {
    mpz_class sum = 0;
    for (const mpz_class& c : counts) sum += c;
    return sum;
}

GenusDistribution exact_distribution(const Graph& g, const ExactOptions& opts) {
    if (!g.connected()) throw std::invalid_argument("exact_distribution: graph must be connected");
    if (opts.workers < 1) throw std::invalid_argument("exact_distribution: workers must be >= 1");
    if (opts.chunk < 1) throw std::invalid_argument("exact_distribution: chunk must be >= 1");
    if (opts.budget > (uint64_t(1) << 62))
        throw std::invalid_argument("exact_distribution: budget must be at most 2^62");
    mpz_class total = rotation_system_count(g);
    if (total > mpz_class(std::to_string(opts.budget)))
        throw std::invalid_argument("rotation system space of size " + total.get_str() +
                                    " exceeds budget " + std::to_string(opts.budget));
    uint64_t n = std::stoull(total.get_str());

    GenusDistribution dist;
    std::vector<uint64_t> hist(static_cast<size_t>(max_genus_bound(g)) + 1, 0);
    if (g.edge_count() == 0) {
        hist[0] = 1;
        dist.processed = 1;
        for (uint64_t c : hist) dist.counts.push_back(mpz_class(std::to_string(c)));
        return dist;
    }
    std::string fp = graph_fingerprint(g);
    uint64_t start = 0;
    if (opts.resume) {
        if (opts.checkpoint_path.empty())
            throw std::invalid_argument("exact_distribution: resume requires a checkpoint path");
        start = load_checkpoint(opts.checkpoint_path, fp, total, hist);
    }

    uint64_t cursor = start;
    while (cursor < n) {
        uint64_t chunk_hi = std::min(n, cursor + opts.chunk);
        int nw = static_cast<int>(
            std::min<uint64_t>(static_cast<uint64_t>(opts.workers), chunk_hi - cursor));
        if (nw <= 1) {
            enumerate_range(g, cursor, chunk_hi, hist);
        } else {
            std::vector<std::vector<uint64_t>> parts(nw, std::vector<uint64_t>(hist.size(), 0));
            std::vector<std::thread> threads;
            uint64_t len = chunk_hi - cursor;
            for (int w = 0; w < nw; ++w)
                threads.emplace_back([&, w] {
                    enumerate_range(g, cursor + len * w / nw, cursor + len * (w + 1) / nw,
                                    parts[w]);
                });
            for (auto& t : threads) t.join();
            for (auto& part : parts)
                for (size_t h = 0; h < hist.size(); ++h) hist[h] += part[h];
        }
        cursor = chunk_hi;
        if (!opts.checkpoint_path.empty())
            write_checkpoint(opts.checkpoint_path, fp, total, cursor, hist);
        if (opts.stop_after > 0 && cursor >= opts.stop_after && cursor < n) {
            dist.complete = false;
            break;
        }
    }
    dist.processed = cursor;
    for (uint64_t c : hist) dist.counts.push_back(mpz_class(std::to_string(c)));
    return dist;
}

SampledDistribution sampled_distribution(const Graph& g, uint64_t samples, uint64_t seed,
                                         int workers) {
    if (!g.connected()) throw std::invalid_argument("sampled_distribution: graph must be connected");
    if (workers < 1) throw std::invalid_argument("sampled_distribution: workers must be >= 1");
    if (samples == 0) throw std::invalid_argument("sampled_distribution: samples must be >= 1");
    SampledDistribution out;
    out.samples = samples;
    if (g.edge_count() == 0) {
        out.by_genus[0] = {samples, 1.0, 1.0, 1.0};
        return out;
    }
    size_t bound = static_cast<size_t>(max_genus_bound(g)) + 1;
    int nw = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(workers), samples));
    std::vector<std::vector<uint64_t>> parts(nw, std::vector<uint64_t>(bound, 0));

    auto run = [&](int w) {
        std::vector<Dart> sigma(g.dart_count());
        std::vector<uint32_t> seen(g.dart_count(), 0);
        uint32_t epoch = 0;
        std::vector<std::vector<Dart>> pools(g.vertex_count());
        for (uint64_t i = samples * w / nw; i < samples * (w + 1) / nw; ++i) {
            SplitMix64 rng(mix_seed(seed, i));
            for (int v = 0; v < g.vertex_count(); ++v) {
                const std::vector<Dart>& darts = g.darts_at(v);
                if (darts.empty()) continue;
                std::vector<Dart>& rest = pools[v];
                rest.assign(darts.begin() + 1, darts.end());
                shuffle(rest, rng);
                Dart prev = darts.front();
                for (Dart d : rest) {
                    sigma[prev] = d;
                    prev = d;
                }
                sigma[prev] = darts.front();
            }
            epoch += 1;
            int faces = 0;
            for (Dart d = 0; d < static_cast<Dart>(sigma.size()); ++d) {
                if (seen[d] == epoch) continue;
                ++faces;
                Dart cur = d;
                do {
                    seen[cur] = epoch;
                    cur = sigma[alpha(cur)];
                } while (cur != d);
            }
            int genus = (2 - (g.vertex_count() - g.edge_count() + faces)) / 2;
            parts[w][static_cast<size_t>(genus)] += 1;
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < nw; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    std::vector<uint64_t> hist(bound, 0);
    for (auto& part : parts)
        for (size_t h = 0; h < bound; ++h) hist[h] += part[h];

    const double z = 1.959963984540054;
    for (size_t h = 0; h < bound; ++h) {
        if (hist[h] == 0) continue;
        SampleEstimate est;
        est.hits = hist[h];
        double nn = static_cast<double>(samples);
        double phat = static_cast<double>(hist[h]) / nn;
        est.fraction = phat;
        double denom = 1.0 + z * z / nn;
        double center = (phat + z * z / (2 * nn)) / denom;
        double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
        est.low = std::max(0.0, center - half);
        est.high = std::min(1.0, center + half);
        out.by_genus[static_cast<int>(h)] = est;
    }
    return out;
}

int min_genus(const Graph& g, uint64_t budget) {
    if (!g.connected()) throw std::invalid_argument("min_genus: graph must be connected");
    if (g.edge_count() == 0) return 0;
    mpz_class total = rotation_system_count(g);
    if (total > mpz_class(std::to_string(budget)))
        throw std::invalid_argument("rotation system space of size " + total.get_str() +
                                    " exceeds budget " + std::to_string(budget));
    uint64_t n = std::stoull(total.get_str());
    RotationEnumerator en(g);
    en.seek(0);
    int best = max_genus_bound(g);
    for (uint64_t i = 0; i < n; ++i) {
        best = std::min(best, en.genus());
        if (best == 0) return 0;
        if (i + 1 < n) en.advance();
    }
    return best;
}

void for_each_rotation_system(const Graph& g,
                              const std::function<bool(const std::vector<Dart>&)>& fn) {
    if (!g.connected())
        throw std::invalid_argument("for_each_rotation_system: graph must be connected");
    if (g.edge_count() == 0) {
        fn(std::vector<Dart>{});
        return;
    }
    mpz_class total = rotation_system_count(g);
    if (total > mpz_class(std::to_string(uint64_t(1) << 62)))
        throw std::invalid_argument("for_each_rotation_system: space too large");
    uint64_t n = std::stoull(total.get_str());
    RotationEnumerator en(g);
    en.seek(0);
    for (uint64_t i = 0; i < n; ++i) {
        if (!fn(en.sigma())) return;
        if (i + 1 < n) en.advance();
    }
}

}  // namespace genuslab
