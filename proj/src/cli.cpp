#include "genuslab/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "genuslab/cmap_io.hpp"
#include "genuslab/counterexample.hpp"
#include "genuslab/cycle.hpp"
#include "genuslab/distribution.hpp"
#include "genuslab/families.hpp"
#include "genuslab/selftest.hpp"
#include "genuslab/surgery.hpp"
#include "genuslab/topology.hpp"

namespace genuslab {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- sources

struct FamilyInstance {
    Graph graph;
    CombinatorialMap map;
};

// Rotation given by ascending dart order at every vertex: the canonical map
// for families that are delivered as bare graphs.
CombinatorialMap ascending_map(const Graph& g) {
    std::vector<std::vector<Dart>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rot[v] = g.darts_at(v);
    return CombinatorialMap::from_rotations(g, rot);
}

std::vector<long> parse_longs(const std::string& s, char sep) {
    std::vector<long> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

FamilyInstance make_family(const std::string& spec) {
    size_t colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<long> a;
    if (colon != std::string::npos) a = parse_longs(spec.substr(colon + 1), ',');
    auto arity = [&](size_t n) {
        if (a.size() != n)
            throw std::invalid_argument("family " + name + " takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "bouquet") {
        arity(1);
        Graph g = bouquet(static_cast<int>(a[0]));
        return {g, ascending_map(g)};
    }
    if (name == "dipole") {
        arity(1);
        Graph g = dipole(static_cast<int>(a[0]));
        return {g, ascending_map(g)};
    }
    if (name == "cycle") {
        arity(1);
        Graph g = cycle_graph(static_cast<int>(a[0]));
        return {g, ascending_map(g)};
    }
    if (name == "complete") {
        arity(1);
        Graph g = complete_graph(static_cast<int>(a[0]));
        return {g, ascending_map(g)};
    }
    if (name == "toroidal_grid") {
        arity(2);
        CombinatorialMap m = toroidal_grid(static_cast<int>(a[0]), static_cast<int>(a[1]));
        return {m.graph(), m};
    }
    if (name == "antiprism") {
        arity(1);
        PlanarFamily f = antiprism(static_cast<int>(a[0]));
        return {f.graph, f.map};
    }
    if (name == "stacked_antiprism") {
        arity(2);
        PlanarFamily f = stacked_antiprism(static_cast<int>(a[0]), static_cast<int>(a[1]));
        return {f.graph, f.map};
    }
    if (name == "cylinder" || name == "counterexample") {
        arity(4);
        ConstructionParams p;
        p.m = static_cast<int>(a[0]);
        p.k = static_cast<int>(a[1]);
        p.b = static_cast<int>(a[2]);
        p.d = static_cast<int>(a[3]);
        CylinderFamily f = name == "cylinder" ? cylinder_graph(p) : counterexample_graph(p);
        return {f.graph, f.map};
    }
    if (name == "generalized_cylinder") {
        arity(2);
        CylinderFamily f = generalized_cylinder(static_cast<int>(a[0]), static_cast<int>(a[1]));
        return {f.graph, f.map};
    }
    if (name == "disk_filler") {
        arity(1);
        DiskFiller f = disk_filler(static_cast<int>(a[0]));
        return {f.graph, f.map};
    }
    throw std::invalid_argument("unknown family: " + name);
}

// A readable file wins over the family-spec interpretation of the string.
FamilyInstance load_source(const std::string& source) {
    std::ifstream in(source);
    if (in) {
        CombinatorialMap m = read_cmap(in);
        Graph g = m.graph();
        return {g, m};
    }
    return make_family(source);
}

// ---------------------------------------------------------------- reports

ordered_json census_json(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    ordered_json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = map.face_count();
    j["genus"] = map.genus();
    std::map<int, int> degrees;
    for (int v = 0; v < g.vertex_count(); ++v) degrees[g.degree(v)] += 1;
    ordered_json dj = ordered_json::object();
    for (auto& [deg, n] : degrees) dj[std::to_string(deg)] = n;
    j["degrees"] = dj;
    std::map<int, int> lengths;
    for (const std::vector<Dart>& orbit : map.faces()) lengths[static_cast<int>(orbit.size())] += 1;
    ordered_json fj = ordered_json::object();
    for (auto& [len, n] : lengths) fj[std::to_string(len)] = n;
    j["face_lengths"] = fj;
    return j;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Cycle parse_cycle(const Graph& g, const std::string& text) {
    std::vector<int> verts;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        for (char& c : tok)
            if (c == ',') c = ' ';
        std::istringstream inner(tok);
        int v;
        while (inner >> v) verts.push_back(v);
    }
    if (verts.empty()) throw std::invalid_argument("empty cycle spec");
    return Cycle::from_vertices(g, verts);
}

std::vector<Cycle> parse_family(const Graph& g, const std::string& text) {
    std::vector<Cycle> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_cycle(g, item));
    if (out.empty()) throw std::invalid_argument("empty family spec");
    return out;
}

ordered_json components_json(const CutResult& cut) {
    ordered_json arr = ordered_json::array();
    for (const CutComponent& comp : cut.components) {
        ordered_json c;
        c["vertices"] = comp.map.graph().vertex_count();
        c["capped_genus"] = comp.capped_genus();
        c["scars"] = comp.scars.size();
        arr.push_back(c);
    }
    return arr;
}

// ---------------------------------------------------------------- handlers

int run_family(const std::string& spec, bool census, const std::string& out_path,
               std::ostream& out) {
    FamilyInstance fam = load_source(spec);
    if (!out_path.empty()) write_cmap_file(fam.map, out_path);
    if (census) {
        ordered_json j;
        j["schema"] = "genus-lab/census/1";
        j["family"] = spec;
        j["census"] = census_json(fam.map);
        out << j.dump(2) << "\n";
    } else if (out_path.empty()) {
        out << write_cmap(fam.map);
    }
    return 0;
}

int run_distribution(const std::string& source, bool min_genus_mode, uint64_t samples,
                     const ExactOptions& opts, uint64_t seed, const std::string& output,
                     std::ostream& out) {
    FamilyInstance fam = load_source(source);
    ordered_json j;
    j["schema"] = "genus-lab/distribution/1";
    j["source"] = source;
    j["graph"] = census_json(fam.map);
    if (min_genus_mode) {
        j["mode"] = "min-genus";
        j["min_genus"] = min_genus(fam.graph, opts.budget);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (samples > 0) {
        j["mode"] = "sample";
        SampledDistribution sd = sampled_distribution(fam.graph, samples, seed, opts.workers);
        j["samples"] = std::to_string(sd.samples);
        j["seed"] = std::to_string(seed);
        ordered_json est = ordered_json::object();
        for (auto& [genus, e] : sd.by_genus) {
            ordered_json ej;
            ej["hits"] = std::to_string(e.hits);
            ej["fraction"] = e.fraction;
            ej["low"] = e.low;
            ej["high"] = e.high;
            est[std::to_string(genus)] = ej;
        }
        j["estimates"] = est;
        if (output == "csv") {
            out << "genus,hits,fraction,low,high\n";
            for (auto& [genus, e] : sd.by_genus)
                out << genus << "," << e.hits << "," << fmt_double(e.fraction) << ","
                    << fmt_double(e.low) << "," << fmt_double(e.high) << "\n";
        } else {
            out << j.dump(2) << "\n";
        }
        return 0;
    }
    j["mode"] = "exact";
    GenusDistribution dist = exact_distribution(fam.graph, opts);
    j["total"] = rotation_system_count(fam.graph).get_str();
    j["processed"] = std::to_string(dist.processed);
    j["complete"] = dist.complete;
    ordered_json counts = ordered_json::object();
    for (size_t h = 0; h < dist.counts.size(); ++h)
        counts[std::to_string(h)] = dist.counts[h].get_str();
    j["counts"] = counts;
    if (output == "csv") {
        out << "genus,count\n";
        for (size_t h = 0; h < dist.counts.size(); ++h)
            out << h << "," << dist.counts[h].get_str() << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return dist.complete ? 0 : 3;
}

int run_check(const std::string& predicate, const std::string& map_path, const std::string& cycle1,
              const std::string& cycle2, const std::string& family_text, std::ostream& out) {
    FamilyInstance fam = load_source(map_path);
    const CombinatorialMap& map = fam.map;
    const Graph& g = fam.graph;
    auto need = [&](const std::string& text, const char* what) -> const std::string& {
        if (text.empty())
            throw std::invalid_argument("check " + predicate + " needs " + std::string(what));
        return text;
    };
    ordered_json j;
    j["schema"] = "genus-lab/check/1";
    j["predicate"] = predicate;
    j["map"] = map_path;
    if (predicate == "facial") {
        Cycle c = parse_cycle(g, need(cycle1, "--cycle"));
        j["verdict"] = is_facial(map, c);
    } else if (predicate == "peripheral") {
        Cycle c = parse_cycle(g, need(cycle1, "--cycle"));
        j["verdict"] = is_peripheral_cycle(g, c);
    } else if (predicate == "peripheral-family") {
        std::vector<Cycle> fam = parse_family(g, need(family_text, "--family"));
        j["verdict"] = is_peripheral_family(g, fam);
    } else if (predicate == "separating" || predicate == "contractible") {
        Cycle c = parse_cycle(g, need(cycle1, "--cycle"));
        CutResult cut = cut_along_cycle(map, c);
        j["verdict"] = predicate == "separating" ? cut.separating() : is_contractible(map, c);
        j["components"] = components_json(cut);
    } else if (predicate == "homotopic") {
        Cycle c1 = parse_cycle(g, need(cycle1, "--cycle"));
        Cycle c2 = parse_cycle(g, need(cycle2, "--cycle2"));
        j["verdict"] = freely_homotopic_disjoint(map, c1, c2);
        j["components"] = components_json(cut_along_cycles(map, {c1, c2}));
    } else if (predicate == "sparsity") {
        std::vector<Cycle> fam = parse_family(g, need(family_text, "--family"));
        SparsityReport rep = cofacial_sparsity(map, fam);
        j["delta"] = rep.delta;
        j["verdict"] = rep.sparse;
    } else if (predicate == "face-width") {
        j["value"] = face_width(map);
    } else if (predicate == "connectivity") {
        ConnectivityReport rep = vertex_connectivity(g);
        j["value"] = rep.value;
        j["exact"] = rep.exact;
    } else {
        throw std::invalid_argument("unknown predicate: " + predicate);
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_claim1(long m, long k, long b, long d, long r, uint64_t limit, int workers,
               std::ostream& out) {
    ConstructionParams p;
    p.m = static_cast<int>(m);
    p.k = static_cast<int>(k);
    p.b = static_cast<int>(b);
    p.d = static_cast<int>(d);
    CylinderFamily fam = counterexample_graph(p);
    Claim1Report rep = verify_claim1(fam, static_cast<int>(r), limit, workers);
    ordered_json j;
    j["schema"] = "genus-lab/claim1/1";
    j["m"] = m;
    j["k"] = k;
    j["b"] = b;
    j["d"] = d;
    j["r"] = r;
    j["expected_size"] = rep.expected_size.get_str();
    j["generated"] = std::to_string(rep.generated);
    j["distinct"] = rep.distinct;
    j["genus_ok"] = rep.genus_ok;
    j["size_ok"] = rep.size_ok;
    if (rep.first_offender >= 0) j["first_offender"] = rep.first_offender;
    j["ok"] = rep.ok();
    out << j.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int run_analyze(const std::string& seq_text, const std::string& output, std::ostream& out) {
    std::vector<mpz_class> seq;
    for (const std::string& item : [&] {
             std::vector<std::string> items;
             std::string tok;
             std::istringstream in(seq_text);
             while (std::getline(in, tok, ',')) items.push_back(tok);
             return items;
         }()) {
        std::string trimmed = item;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
        if (trimmed.empty()) throw std::invalid_argument("empty sequence entry");
        try {
            seq.emplace_back(trimmed);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not an integer: " + trimmed);
        }
    }
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    ConcavityReport rep = log_concavity_report(seq);
    auto class_name = [](ConcavityClass c) {
        switch (c) {
            case ConcavityClass::StrictlyConcave: return "strictly-log-concave";
            case ConcavityClass::Equality: return "equality";
            default: return "strictly-log-convex";
        }
    };
    if (output == "csv") {
        out << "index,classification\n";
        for (size_t i = 0; i < rep.interior.size(); ++i)
            out << (i + 1) << "," << class_name(rep.interior[i]) << "\n";
        return 0;
    }
    ordered_json j;
    j["schema"] = "genus-lab/sequence/1";
    j["length"] = seq.size();
    ordered_json classes = ordered_json::array();
    for (size_t i = 0; i < rep.interior.size(); ++i) {
        ordered_json cj;
        cj["index"] = i + 1;
        cj["class"] = class_name(rep.interior[i]);
        classes.push_back(cj);
    }
    j["classes"] = classes;
    j["log_concave"] = rep.log_concave;
    j["unimodal"] = rep.unimodal;
    out << j.dump(2) << "\n";
    return 0;
}

int run_certify(long g, long k, long d, const std::string& nu_text, long r, std::ostream& out) {
    mpz_class nu;
    try {
        nu = mpz_class(nu_text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--nu: not an integer: " + nu_text);
    }
    CertificateReport rep = theorem2_certificate(g, k, d, nu, r);
    ordered_json j;
    j["schema"] = "genus-lab/certificate/1";
    j["g"] = g;
    j["k"] = k;
    j["d"] = d;
    j["nu"] = nu.get_str();
    j["r"] = r;
    j["eq_d"] = rep.eq_d;
    j["log_convexity_forced"] = rep.log_convexity_forced;
    j["lhs_bits"] = rep.lhs_bits.get_str();
    j["rhs_exponent"] = rep.rhs_exponent.get_str();
    out << j.dump(2) << "\n";
    return 0;
}

int run_selftest(std::ostream& out) {
    std::vector<SuiteResult> suites = run_selftests();
    ordered_json j;
    j["schema"] = "genus-lab/selftest/1";
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (const SuiteResult& s : suites) {
        ordered_json sj;
        sj["name"] = s.name;
        sj["passed"] = s.passed;
        sj["cases"] = std::to_string(s.cases);
        if (!s.detail.empty()) sj["detail"] = s.detail;
        arr.push_back(sj);
        ok = ok && s.passed;
    }
    j["suites"] = arr;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- config

std::map<std::string, std::string> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
    };
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value, got: " + t);
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        std::vector<std::string> rest;
        std::string config_path;
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config") {
                if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a path");
                config_path = args[++i];
            } else if (args[i].rfind("--config=", 0) == 0) {
                config_path = args[i].substr(9);
            } else {
                rest.push_back(args[i]);
            }
        }
        std::map<std::string, std::string> config;
        if (!config_path.empty()) config = load_config(config_path);
        auto setting = [&](const char* key, const std::string& fallback) {
            auto it = config.find(key);
            return it == config.end() ? fallback : it->second;
        };
        const char* env_workers = std::getenv("GENUS_LAB_WORKERS");
        int workers = std::stoi(setting("workers", env_workers ? env_workers : "1"));
        uint64_t budget = std::stoull(setting("budget", "100000000"));
        uint64_t seed = std::stoull(setting("seed", "12345"));
        std::string output = setting("output", "json");
        std::string checkpoint = setting("checkpoint", "");

        CLI::App app{"genus distributions of graph embeddings via rotation systems"};
        app.name("genus-lab");
        app.require_subcommand(1);

        std::string fam_spec, fam_out;
        bool fam_census = false;
        CLI::App* fam = app.add_subcommand("family", "construct a graph family's canonical map");
        fam->add_option("spec", fam_spec, "family spec (e.g. antiprism:6, counterexample:6,1,1,2) or .cmap file")
            ->required();
        fam->add_flag("--census", fam_census, "emit a JSON census instead of the map");
        fam->add_option("--out", fam_out, "write the .cmap here instead of standard output");

        std::string dist_pos, dist_family;
        bool dist_exact = false, dist_min = false, dist_resume = false;
        uint64_t dist_sample = 0, stop_after = 0, chunk = 65536;
        CLI::App* dist =
            app.add_subcommand("distribution", "genus distribution over all rotation systems");
        dist->add_option("source", dist_pos, ".cmap file or family spec");
        dist->add_option("--family", dist_family, "family spec (alternative to the positional)");
        dist->add_flag("--exact", dist_exact, "exhaustive enumeration (the default mode)");
        dist->add_option("--sample", dist_sample, "estimate from N uniform samples instead");
        dist->add_flag("--min-genus", dist_min, "report only the minimum genus");
        dist->add_option("--workers", workers, "worker threads");
        dist->add_option("--budget", budget, "refuse enumeration beyond this many systems");
        dist->add_option("--seed", seed, "sampling seed");
        dist->add_option("--checkpoint", checkpoint, "checkpoint file for exact runs");
        dist->add_flag("--resume", dist_resume, "resume an exact run from the checkpoint");
        dist->add_option("--stop-after", stop_after,
                         "pause the exact run after this many systems (exit 3)");
        dist->add_option("--chunk", chunk, "checkpoint grain in systems");
        dist->add_option("--output", output, "json or csv");

        std::string chk_pred, chk_map, chk_cycle, chk_cycle2, chk_family;
        CLI::App* chk = app.add_subcommand("check", "topological predicates on a map");
        chk->add_option("predicate", chk_pred,
                        "facial | peripheral | peripheral-family | separating | contractible | "
                        "homotopic | sparsity | face-width | connectivity")
            ->required();
        chk->add_option("--map", chk_map, ".cmap file or family spec")->required();
        chk->add_option("--cycle", chk_cycle, "cycle as a vertex list, e.g. \"0 1 2\"");
        chk->add_option("--cycle2", chk_cycle2, "second cycle (homotopic)");
        chk->add_option("--family", chk_family, "cycles separated by ';'");

        long c1_m = 6, c1_k = 1, c1_b = 1, c1_d = 2, c1_r = 1;
        uint64_t c1_limit = uint64_t(1) << 20;
        CLI::App* c1 = app.add_subcommand("claim1", "generate and verify a flip family");
        c1->add_option("--m", c1_m, "rim length");
        c1->add_option("--k", c1_k, "zones");
        c1->add_option("--b", c1_b, "antiprism layers per stack");
        c1->add_option("--d", c1_d, "connector length");
        c1->add_option("--r", c1_r, "target genus")->required();
        c1->add_option("--limit", c1_limit, "refuse families larger than this");
        c1->add_option("--workers", workers, "worker threads");

        std::string an_seq;
        CLI::App* an = app.add_subcommand("analyze", "log-concavity classification of a sequence");
        an->add_option("--sequence", an_seq, "comma-separated nonnegative integers")->required();
        an->add_option("--output", output, "json or csv");

        long ct_g = 0, ct_k = 1, ct_d = 1, ct_r = 1;
        std::string ct_nu = "1";
        CLI::App* ct = app.add_subcommand("certify", "exact growth certificates");
        ct->add_option("--g", ct_g, "base genus");
        ct->add_option("--k", ct_k, "zones")->required();
        ct->add_option("--d", ct_d, "connector length")->required();
        ct->add_option("--nu", ct_nu, "vertex surplus (big integer)")->required();
        ct->add_option("--r", ct_r, "odd genus offset")->required();

        CLI::App* st = app.add_subcommand("selftest", "run the property suites");

        try {
            std::vector<std::string> reversed(rest.rbegin(), rest.rend());
            app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            app.exit(e, out, err);
            return 0;
        } catch (const CLI::ParseError& e) {
            app.exit(e, out, err);
            return 2;
        }

        if (output != "json" && output != "csv")
            throw std::invalid_argument("--output must be json or csv");
        if (workers < 1) throw std::invalid_argument("workers must be >= 1");
        if (budget < 1) throw std::invalid_argument("budget must be >= 1");

        if (fam->parsed()) return run_family(fam_spec, fam_census, fam_out, out);
        if (dist->parsed()) {
            if (dist_pos.empty() == dist_family.empty())
                throw std::invalid_argument(
                    "distribution: give a positional source or --family (not both)");
            int modes = (dist_sample > 0 ? 1 : 0) + (dist_min ? 1 : 0) + (dist_exact ? 1 : 0);
            if (modes > 1)
                throw std::invalid_argument(
                    "distribution: --exact, --sample and --min-genus are mutually exclusive");
            ExactOptions opts;
            opts.budget = budget;
            opts.workers = workers;
            opts.checkpoint_path = checkpoint;
            opts.chunk = chunk;
            opts.resume = dist_resume;
            opts.stop_after = stop_after;
            return run_distribution(dist_pos.empty() ? dist_family : dist_pos, dist_min,
                                    dist_sample, opts, seed, output, out);
        }
        if (chk->parsed())
            return run_check(chk_pred, chk_map, chk_cycle, chk_cycle2, chk_family, out);
        if (c1->parsed()) return run_claim1(c1_m, c1_k, c1_b, c1_d, c1_r, c1_limit, workers, out);
        if (an->parsed()) return run_analyze(an_seq, output, out);
        if (ct->parsed()) return run_certify(ct_g, ct_k, ct_d, ct_nu, ct_r, out);
        if (st->parsed()) return run_selftest(out);
        throw std::invalid_argument("no subcommand given");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace genuslab
