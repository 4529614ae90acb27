#include "genuslab/counterexample.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "genuslab/exactmath.hpp"

namespace genuslab {

namespace {

// Rotation surgery on a bare sigma array with its inverse kept in step.
struct SigmaOps {
    std::vector<Dart> sig, inv;

    explicit SigmaOps(const std::vector<Dart>& sigma) : sig(sigma), inv(sigma.size()) {
        for (Dart d = 0; d < static_cast<Dart>(sig.size()); ++d) inv[sig[d]] = d;
    }

    void detach(Dart d) {
        if (sig[d] == d) throw std::logic_error("flip: detaching the only dart at a vertex");
        Dart p = inv[d], n = sig[d];
        sig[p] = n;
        inv[n] = p;
        sig[d] = d;
        inv[d] = d;
    }

    void insert_before(Dart pos, Dart d) {
        Dart p = inv[pos];
        sig[p] = d;
        inv[d] = p;
        sig[d] = pos;
        inv[pos] = d;
    }

    Dart face_next(Dart d) const { return sig[alpha(d)]; }

    // Smallest dart on the face through d; doubles as a face id.
    Dart face_key(Dart d) const {
        Dart mn = d;
        for (Dart cur = face_next(d); cur != d; cur = face_next(cur)) mn = std::min(mn, cur);
        return mn;
    }

    // First dart with the given tail when walking the face orbit from `from`.
    Dart corner_at(const Graph& g, Dart from, int vertex) const {
        Dart cur = from;
        do {
            if (g.vertex_of(cur) == vertex) return cur;
            cur = face_next(cur);
        } while (cur != from);
        throw std::logic_error("flip: vertex not on expected face");
    }
};

// Removes the designated diagonal and reseats its ends in the two big faces
// anchored by the connector markers, merging them: one face fewer on each
// side of the ledger, so the genus rises by one.
void designated_flip(SigmaOps& ops, const Graph& g, const Connector& conn) {
    int e = conn.diagonals[0];
    Dart dw = Dart(2 * e), du = Dart(2 * e + 1);  // (w_0, u_1)
    ops.detach(dw);
    ops.detach(du);
    if (ops.face_key(conn.marker_w) == ops.face_key(conn.marker_u))
        throw std::logic_error("designated flip: big faces already merged");
    Dart cw = ops.corner_at(g, conn.marker_w, g.vertex_of(dw));
    Dart cu = ops.corner_at(g, conn.marker_u, g.vertex_of(du));
    ops.insert_before(cw, dw);
    ops.insert_before(cu, du);
}

// Reseats a cross edge into the lowest-numbered face (other than the ladder
// face it just vacated) that still touches both endpoints; the removal
// merges two faces and the reinsertion splits one, so the genus is kept.
void cross_flip(SigmaOps& ops, const Graph& g, int e) {
    Dart dx = Dart(2 * e), dy = Dart(2 * e + 1);
    int x = g.vertex_of(dx), y = g.vertex_of(dy);
    Dart after_x = ops.sig[dx];
    ops.detach(dx);
    ops.detach(dy);
    Dart quad = ops.face_key(after_x);

    auto corner_faces = [&](int v, Dart any) {
        std::map<Dart, Dart> first;  // face key -> first rotation dart in that face
        Dart start = any;
        for (Dart cur = ops.sig[any]; cur != any; cur = ops.sig[cur]) start = std::min(start, cur);
        Dart cur = start;
        do {
            Dart key = ops.face_key(cur);
            first.emplace(key, cur);
            cur = ops.sig[cur];
        } while (cur != start);
        (void)v;
        return first;
    };
    // Any attached dart at the endpoint seeds the rotation walk.
    auto any_at = [&](int v) -> Dart {
        for (Dart cand : g.darts_at(v))
            if (cand != dx && cand != dy) return cand;
        throw std::logic_error("cross flip: endpoint has no other darts");
    };
    std::map<Dart, Dart> fx = corner_faces(x, any_at(x));
    std::map<Dart, Dart> fy = corner_faces(y, any_at(y));
    Dart best = -1;
    for (auto& [key, c] : fx) {
        if (key == quad) continue;
        if (fy.count(key)) {
            best = key;
            break;
        }
    }
    if (best < 0) throw std::logic_error("cross flip: endpoints share no face");
    ops.insert_before(fx[best], dx);
    ops.insert_before(fy[best], dy);
}

struct PlanSpace {
    const CylinderFamily* fam;
    int r, q;
    bool odd;
    std::vector<std::vector<int>> combos;       // activated zone index sets (1-based)
    std::vector<int> extras;                    // odd-extra zone per combo (0 if even r)
    std::vector<std::vector<int>> conn_lists;   // active connectors per combo
    std::vector<int> bits;                      // total selectable cross edges per combo
    std::vector<uint64_t> offsets;              // plan index of each combo block
    uint64_t total = 0;
};

std::vector<std::vector<int>> zone_combinations(int k, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == q) {
            out.push_back(cur);
            return;
        }
        for (int z = next; z <= k; ++z) {
            cur.push_back(z);
            rec(z + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

std::vector<int> connectors_for(const CylinderFamily& fam, const std::vector<int>& zones, int extra) {
    std::vector<int> conns;
    for (int z : zones)
        for (int ci : fam.zones[z - 1].connectors) conns.push_back(ci);
    if (extra > 0) conns.push_back(fam.zones[extra - 1].connectors[0]);
    return conns;
}

PlanSpace build_plan_space(const CylinderFamily& fam, int r) {
    if (r < 0 || r > 2 * fam.k)
        throw std::invalid_argument("flip family: target genus out of range [0, 2k]");
    PlanSpace sp;
    sp.fam = &fam;
    sp.r = r;
    sp.q = r / 2;
    sp.odd = (r % 2) != 0;
    sp.combos = zone_combinations(fam.k, sp.q);
    mpz_class total = 0;
    for (auto& combo : sp.combos) {
        int extra = 0;
        if (sp.odd) {
            for (int z = 1; z <= fam.k; ++z)
                if (!std::binary_search(combo.begin(), combo.end(), z)) {
                    extra = z;
                    break;
                }
            if (extra == 0) throw std::logic_error("flip family: no zone left for the odd flip");
        }
        sp.extras.push_back(extra);
        std::vector<int> conns = connectors_for(fam, combo, extra);
        int bits = 0;
        for (int ci : conns) bits += static_cast<int>(fam.connectors[ci].cross_edges.size());
        if (bits > 62) throw std::invalid_argument("flip family: plan space exceeds 2^62 per zone choice");
        sp.conn_lists.push_back(std::move(conns));
        sp.bits.push_back(bits);
        total += pow2(static_cast<unsigned long>(bits));
    }
    if (total > mpz_class("9223372036854775807"))
        throw std::invalid_argument("flip family: plan space does not fit in 63 bits");
    uint64_t off = 0;
    for (size_t i = 0; i < sp.combos.size(); ++i) {
        sp.offsets.push_back(off);
        off += uint64_t(1) << sp.bits[i];
    }
    sp.total = off;
    return sp;
}

FlipPlan plan_from(const PlanSpace& sp, size_t combo, uint64_t mask) {
    FlipPlan plan;
    plan.zones = sp.combos[combo];
    plan.odd_extra = sp.extras[combo];
    int bit = 0;
    for (int ci : sp.conn_lists[combo]) {
        std::vector<int> sel;
        for (int e : sp.fam->connectors[ci].cross_edges) {
            if ((mask >> bit) & 1) sel.push_back(e);
            ++bit;
        }
        plan.flips.push_back(std::move(sel));
    }
    return plan;
}

size_t combo_of_index(const PlanSpace& sp, uint64_t index) {
    auto it = std::upper_bound(sp.offsets.begin(), sp.offsets.end(), index);
    return static_cast<size_t>(it - sp.offsets.begin()) - 1;
}

int count_faces(const std::vector<Dart>& sig) {
    std::vector<char> seen(sig.size(), 0);
    int faces = 0;
    for (Dart d = 0; d < static_cast<Dart>(sig.size()); ++d) {
        if (seen[d]) continue;
        ++faces;
        Dart cur = d;
        do {
            seen[cur] = 1;
            cur = sig[alpha(cur)];
        } while (cur != d);
    }
    return faces;
}

std::vector<Dart> flipped_sigma(const CylinderFamily& fam, const FlipPlan& plan) {
    SigmaOps ops(fam.map.sigma());
    const Graph& g = fam.graph;
    for (int z : plan.zones) {
        const Zone& zone = fam.zones[z - 1];
        designated_flip(ops, g, fam.connectors[zone.connectors[0]]);
        designated_flip(ops, g, fam.connectors[zone.connectors[1]]);
    }
    if (plan.odd_extra > 0)
        designated_flip(ops, g, fam.connectors[fam.zones[plan.odd_extra - 1].connectors[0]]);
    std::vector<int> conns = connectors_for(fam, plan.zones, plan.odd_extra);
    for (size_t i = 0; i < conns.size(); ++i)
        for (int e : plan.flips[i]) cross_flip(ops, g, e);
    return std::move(ops.sig);
}

}  // namespace

std::vector<int> active_connectors(const CylinderFamily& fam, const FlipPlan& plan) {
    return connectors_for(fam, plan.zones, plan.odd_extra);
}

void validate_plan(const CylinderFamily& fam, const FlipPlan& plan) {
    if (!std::is_sorted(plan.zones.begin(), plan.zones.end()))
        throw std::invalid_argument("plan: zones must be ascending");
    for (size_t i = 0; i + 1 < plan.zones.size(); ++i)
        if (plan.zones[i] == plan.zones[i + 1]) throw std::invalid_argument("plan: duplicate zone");
    for (int z : plan.zones)
        if (z < 1 || z > fam.k) throw std::invalid_argument("plan: zone index out of range");
    if (plan.odd_extra != 0) {
        if (plan.odd_extra < 1 || plan.odd_extra > fam.k)
            throw std::invalid_argument("plan: odd-extra zone out of range");
        if (std::binary_search(plan.zones.begin(), plan.zones.end(), plan.odd_extra))
            throw std::invalid_argument("plan: odd-extra zone is already activated");
    }
    std::vector<int> conns = connectors_for(fam, plan.zones, plan.odd_extra);
    if (plan.flips.size() != conns.size())
        throw std::invalid_argument("plan: one flip set per active connector required");
    for (size_t i = 0; i < conns.size(); ++i) {
        const std::vector<int>& cross = fam.connectors[conns[i]].cross_edges;
        for (int e : plan.flips[i])
            if (std::find(cross.begin(), cross.end(), e) == cross.end())
                throw std::invalid_argument("plan: edge " + std::to_string(e) +
                                            " is not a cross edge of connector " +
                                            std::to_string(conns[i]));
    }
}

CombinatorialMap flip_embedding(const CylinderFamily& fam, const FlipPlan& plan) {
    validate_plan(fam, plan);
    return CombinatorialMap::from_sigma(fam.graph, flipped_sigma(fam, plan));
}

mpz_class flip_family_size(const CylinderFamily& fam, int r) {
    if (r < 0 || r > 2 * fam.k)
        throw std::invalid_argument("flip family: target genus out of range [0, 2k]");
    int q = r / 2;
    bool odd = (r % 2) != 0;
    // Uniform zones admit the closed form C(k, q) * 2^(q*Z + [odd] X1).
    bool uniform = true;
    long zone_bits = -1, extra_bits = -1;
    for (const Zone& zone : fam.zones) {
        long zb = 0;
        for (int ci : zone.connectors) zb += static_cast<long>(fam.connectors[ci].cross_edges.size());
        long xb = static_cast<long>(fam.connectors[zone.connectors[0]].cross_edges.size());
        if (zone_bits < 0) {
            zone_bits = zb;
            extra_bits = xb;
        } else if (zb != zone_bits || xb != extra_bits) {
            uniform = false;
        }
    }
    if (uniform)
        return binomial(fam.k, q) *
               pow2(static_cast<unsigned long>(q * zone_bits + (odd ? extra_bits : 0)));
    mpz_class total = 0;
    for (auto& combo : zone_combinations(fam.k, q)) {
        int extra = 0;
        if (odd)
            for (int z = 1; z <= fam.k; ++z)
                if (!std::binary_search(combo.begin(), combo.end(), z)) {
                    extra = z;
                    break;
                }
        long bits = 0;
        for (int ci : connectors_for(fam, combo, extra))
            bits += static_cast<long>(fam.connectors[ci].cross_edges.size());
        total += pow2(static_cast<unsigned long>(bits));
    }
    return total;
}

void for_each_plan(const CylinderFamily& fam, int r,
                   const std::function<bool(uint64_t, const FlipPlan&)>& fn) {
    PlanSpace sp = build_plan_space(fam, r);
    for (size_t c = 0; c < sp.combos.size(); ++c) {
        uint64_t block = uint64_t(1) << sp.bits[c];
        for (uint64_t mask = 0; mask < block; ++mask)
            if (!fn(sp.offsets[c] + mask, plan_from(sp, c, mask))) return;
    }
}

FlipPlan plan_at(const CylinderFamily& fam, int r, uint64_t index) {
    PlanSpace sp = build_plan_space(fam, r);
    if (index >= sp.total) throw std::invalid_argument("plan_at: index out of range");
    size_t c = combo_of_index(sp, index);
    return plan_from(sp, c, index - sp.offsets[c]);
}

Claim1Report verify_claim1(const CylinderFamily& fam, int r, uint64_t limit, int workers) {
    if (workers < 1) throw std::invalid_argument("verify_claim1: workers must be >= 1");
    Claim1Report report;
    report.expected_size = flip_family_size(fam, r);
    if (report.expected_size > mpz_class(std::to_string(limit)))
        throw std::invalid_argument("flip family of size " + to_string(report.expected_size) +
                                    " exceeds limit " + std::to_string(limit));
    PlanSpace sp = build_plan_space(fam, r);
    uint64_t n = sp.total;
    report.size_ok = (mpz_class(std::to_string(n)) == report.expected_size);

    int nw = static_cast<int>(std::min<uint64_t>(workers, std::max<uint64_t>(n, 1)));
    std::vector<std::vector<std::pair<std::vector<Dart>, uint64_t>>> members(nw);
    std::vector<int64_t> bad_genus(nw, -1);
    std::vector<std::string> errors(nw);
    int target_faces = 2 - 2 * r - fam.graph.vertex_count() + fam.graph.edge_count();

    auto run = [&](int w) {
        uint64_t lo = n * w / nw, hi = n * (w + 1) / nw;
        try {
            for (uint64_t idx = lo; idx < hi; ++idx) {
                size_t c = combo_of_index(sp, idx);
                FlipPlan plan = plan_from(sp, c, idx - sp.offsets[c]);
                std::vector<Dart> sig = flipped_sigma(fam, plan);
                if (count_faces(sig) != target_faces && bad_genus[w] < 0)
                    bad_genus[w] = static_cast<int64_t>(idx);
                members[w].push_back({std::move(sig), idx});
            }
        } catch (const std::exception& ex) {
            errors[w] = ex.what();
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < nw; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (auto& err : errors)
        if (!err.empty()) throw std::runtime_error("verify_claim1: " + err);

    std::vector<std::pair<std::vector<Dart>, uint64_t>> all;
    for (auto& part : members) {
        report.generated += part.size();
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    std::sort(all.begin(), all.end());
    int64_t dup = -1;
    for (size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i].first == all[i + 1].first) {
            dup = static_cast<int64_t>(all[i + 1].second);
            break;
        }
    report.distinct = (dup < 0);
    int64_t genus_fail = -1;
    for (int64_t bg : bad_genus)
        if (bg >= 0 && (genus_fail < 0 || bg < genus_fail)) genus_fail = bg;
    report.genus_ok = (genus_fail < 0);
    if (!report.genus_ok || !report.distinct) {
        report.first_offender = genus_fail;
        if (dup >= 0 && (report.first_offender < 0 || dup < report.first_offender))
            report.first_offender = dup;
    }
    return report;
}

mpq_class c_coefficient(int q, int k) {
    if (k < 1) throw std::invalid_argument("c_coefficient: k must be >= 1");
    if (q < k || q > 2 * k) throw std::invalid_argument("c_coefficient: q must satisfy k <= q <= 2k");
    mpq_class value(q - 1, q);
    value += mpq_class(q, 4L * k * k);
    value.canonicalize();
    return value;
}

ConcavityReport log_concavity_report(const std::vector<mpz_class>& seq) {
    for (const mpz_class& a : seq)
        if (a < 0) throw std::invalid_argument("log_concavity_report: negative entry");
    ConcavityReport rep;
    size_t n = seq.size();
    for (size_t i = 1; i + 1 < n; ++i) {
        mpz_class delta = seq[i] * seq[i] - seq[i - 1] * seq[i + 1];
        ConcavityClass cls = delta > 0   ? ConcavityClass::StrictlyConcave
                             : delta < 0 ? ConcavityClass::StrictlyConvex
                                         : ConcavityClass::Equality;
        if (cls == ConcavityClass::StrictlyConvex) rep.log_concave = false;
        rep.interior.push_back(cls);
    }
    bool descending = false;
    for (size_t i = 0; i + 1 < n; ++i) {
        if (seq[i + 1] < seq[i]) descending = true;
        else if (seq[i + 1] > seq[i] && descending) rep.unimodal = false;
    }
    return rep;
}

CertificateReport theorem2_certificate(long g, long k, long d, const mpz_class& nu, long r) {
    if (g < 0) throw std::invalid_argument("certificate: g must be >= 0");
    if (k < 1) throw std::invalid_argument("certificate: k must be >= 1");
    if (d < 1) throw std::invalid_argument("certificate: d must be >= 1");
    if (nu < 1) throw std::invalid_argument("certificate: nu must be >= 1");
    if (r % 2 == 0) throw std::invalid_argument("certificate: r must be odd");
    if (r < 1 || r >= 2 * k) throw std::invalid_argument("certificate: r must satisfy 1 <= r < 2k");

    CertificateReport rep;
    unsigned long s = static_cast<unsigned long>(g + 2 * k);
    unsigned long a = static_cast<unsigned long>(36 * k * k);
    // eq:d, exponentiated: 2^(252 k^2 + 217 s) * d^a * nu^s < 2^d.
    mpz_class tail = pow_ui(mpz_class(d), a) * pow_ui(nu, s);
    mpz_class eq_d_bits = mpz_class(252) * k * k + mpz_class(217) * s +
                          mpz_class(mpz_sizeinbase(tail.get_mpz_t(), 2));
    rep.eq_d = eq_d_bits <= d && tail > 0;
    // Forcing bound: (120^31 nu)^s * (108 d)^a < 2^d.
    mpz_class lhs = pow_ui(pow_ui(mpz_class(120), 31) * nu, s) * pow_ui(mpz_class(108) * d, a);
    rep.lhs_bits = mpz_class(mpz_sizeinbase(lhs.get_mpz_t(), 2));
    rep.rhs_exponent = d;
    rep.log_convexity_forced = less_than_pow2(lhs, static_cast<unsigned long>(d));
    if (rep.eq_d && !rep.log_convexity_forced)
        throw std::logic_error("certificate: parameter bound held but forcing bound failed");
    return rep;
}

std::vector<InequalityCheck> verify_section3_inequalities(int k) {
    if (k < 1) throw std::invalid_argument("verify_section3_inequalities: k must be >= 1");
    auto rq = [&](int q) -> mpq_class { return mpq_class(q) * c_coefficient(q, k); };
    std::vector<InequalityCheck> checks(3);
    checks[0].name = "qc_q_strictly_convex";
    for (int q = k + 1; q <= 2 * k - 1; ++q)
        if (!(2 * rq(q) < rq(q - 1) + rq(q + 1))) {
            checks[0].holds = false;
            checks[0].first_failure_q = q;
            break;
        }
    checks[1].name = "tallest_connectors_beat_top_height";
    for (int t = 0; t <= k - 1; ++t)
        if (!(rq(k + t + 1) > mpq_class(k + t))) {
            checks[1].holds = false;
            checks[1].first_failure_q = k + t + 1;
            break;
        }
    checks[2].name = "tallest_connectors_beat_mixed_heights";
    for (int t = 1; t <= k - 1 && checks[2].holds; ++t)
        for (int s = 0; s < t; ++s) {
            mpq_class rhs = c_coefficient(k + s + 1, k) * (k + s) + mpq_class(t - s);
            if (!(rq(k + t + 1) > rhs)) {
                checks[2].holds = false;
                checks[2].first_failure_q = k + t + 1;
                break;
            }
        }
    return checks;
}

}  // namespace genuslab
