#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genuslab/families.hpp"

namespace genuslab {

// One member of the flip family: which zones are activated, whether one
// extra designated flip supplies an odd genus, and which cross edges of the
// active connectors are additionally flipped.
struct FlipPlan {
    std::vector<int> zones;           // activated zone indices (1-based, ascending)
    int odd_extra = 0;                // zone carrying the single extra flip, 0 if none
    // flips[i] = selected cross edges of active connector i, where the
    // active connectors are listed zone by zone (ascending), connector by
    // connector, followed by the odd-extra connector if present.
    std::vector<std::vector<int>> flips;
};

// Active connectors of a plan in canonical order: all connectors of each
// activated zone, then connector 0 of the odd-extra zone.
std::vector<int> active_connectors(const CylinderFamily& fam, const FlipPlan& plan);

// Validates the plan against the family (zones exist, odd_extra not an
// activated zone, every flip edge is a cross edge of its connector).
void validate_plan(const CylinderFamily& fam, const FlipPlan& plan);

// Applies the plan to the canonical embedding: two designated diagonal
// flips per activated zone (+2 genus each), one for the odd-extra zone
// (+1), then the genus-neutral cross flips.
CombinatorialMap flip_embedding(const CylinderFamily& fam, const FlipPlan& plan);

// Number of plans that reach genus r: C(k, q) * 2^(3*X*q + [r odd]*X1)
// with q = floor(r/2), X = cross edges per connector.
mpz_class flip_family_size(const CylinderFamily& fam, int r);

// Enumerates every plan reaching genus r in canonical order and hands each
// (index, plan) to the callback; stops early if the callback returns false.
void for_each_plan(const CylinderFamily& fam, int r,
                   const std::function<bool(uint64_t, const FlipPlan&)>& fn);
FlipPlan plan_at(const CylinderFamily& fam, int r, uint64_t index);

struct Claim1Report {
    mpz_class expected_size;
    uint64_t generated = 0;
    bool distinct = true;
    bool genus_ok = true;
    bool size_ok = true;
    int64_t first_offender = -1;  // plan index of the first failure, -1 if none
    bool ok() const { return distinct && genus_ok && size_ok; }
};

// Generates the whole family (or fails fast), checking that members are
// pairwise distinct and every one embeds with genus exactly r.  Throws if
// the family size exceeds `limit` (the message carries the exact size).
Claim1Report verify_claim1(const CylinderFamily& fam, int r, uint64_t limit, int workers = 1);

// c_q = (q-1)/q + q/(4k^2), defined for k <= q <= 2k.
mpq_class c_coefficient(int q, int k);

enum class ConcavityClass { StrictlyConcave, Equality, StrictlyConvex };

struct ConcavityReport {
    std::vector<ConcavityClass> interior;  // classification at i = 1..n-2
    bool log_concave = true;               // no strictly convex interior index
    bool unimodal = true;
};

// Classifies a_i^2 - a_{i-1} a_{i+1} at each interior index of a
// nonnegative sequence; throws on negative entries.
ConcavityReport log_concavity_report(const std::vector<mpz_class>& seq);

struct CertificateReport {
    bool eq_d = false;                   // 2^d > 2^(252 k^2 + 217 (g+2k)) d^(36 k^2) nu^(g+2k)
    bool log_convexity_forced = false;   // 120^(31(g+2k)) nu^(g+2k) (108 d)^(36 k^2) < 2^d
    mpz_class lhs_bits;                  // bit length of the dominated product
    mpz_class rhs_exponent;              // d
};

// Exact integer certificates behind the interlacing argument; requires odd
// r with 1 <= r < 2k and nu >= 1.  The first verdict implies the second
// (the constants dominate), and that implication is asserted.
CertificateReport theorem2_certificate(long g, long k, long d, const mpz_class& nu, long r);

struct InequalityCheck {
    std::string name;
    bool holds = true;
    long first_failure_q = -1;
};

// The three coefficient inequalities used to separate the zone estimates,
// verified exactly for all admissible q at the given k.
std::vector<InequalityCheck> verify_section3_inequalities(int k);

}  // namespace genuslab
