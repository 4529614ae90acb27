// Flip plans and families, their closed-form sizes, zone coefficient
// inequalities, growth certificates and the concavity classifier.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuslab/counterexample.hpp>
#include <genuslab/exactmath.hpp>
#include <genuslab/families.hpp>

#include <set>

using namespace genuslab;

namespace {

CylinderFamily small_family(int k = 1) {
    ConstructionParams p;  // m=6, b=1, d=2
    p.k = k;
    return counterexample_graph(p);
}

}  // namespace

TEST_CASE("flip family sizes follow the closed form") {
    CylinderFamily one = small_family(1);
    // Each connector of length 2 carries one cross edge; zones carry three
    // connectors, so X = 3 and X1 = 1.
    CHECK(flip_family_size(one, 0) == 1);   // the base embedding alone
    CHECK(flip_family_size(one, 1) == 2);   // C(1,0) * 2^(0 + 1)
    CHECK(flip_family_size(one, 2) == 8);   // C(1,1) * 2^3
    CHECK_THROWS_AS(flip_family_size(one, -1), std::invalid_argument);
    CHECK_THROWS_AS(flip_family_size(one, 3), std::invalid_argument);

    CylinderFamily two = small_family(2);
    CHECK(flip_family_size(two, 1) == 2);
    CHECK(flip_family_size(two, 2) == 16);  // C(2,1) * 2^3
    CHECK(flip_family_size(two, 3) == 32);  // C(2,1) * 2^(3+1)
    CHECK(flip_family_size(two, 4) == 64);  // C(2,2) * 2^6
    CHECK_THROWS_AS(flip_family_size(two, 5), std::invalid_argument);
}

TEST_CASE("plan enumeration is a bijection onto the family size") {
    CylinderFamily fam = small_family(2);
    for (int r = 1; r <= 4; ++r) {
        uint64_t size = flip_family_size(fam, r).get_ui();
        uint64_t visited = 0;
        std::set<std::string> seen;
        for_each_plan(fam, r, [&](uint64_t index, const FlipPlan& plan) {
            CHECK(index == visited);
            validate_plan(fam, plan);
            // Activated zones carry two designated flips (genus +2); an odd
            // remainder adds one more zone with a single flip.
            CHECK(plan.zones.size() == static_cast<size_t>(r / 2));
            CHECK((plan.odd_extra != 0) == (r % 2 == 1));
            std::string key;
            for (int z : plan.zones) key += std::to_string(z) + "|";
            key += "x" + std::to_string(plan.odd_extra);
            for (auto& f : plan.flips) {
                key += "/";
                for (int e : f) key += std::to_string(e) + ",";
            }
            seen.insert(key);
            ++visited;
            return true;
        });
        CHECK(visited == size);
        CHECK(seen.size() == size);
        // Random access agrees with enumeration order.
        FlipPlan probe = plan_at(fam, r, size / 2);
        for_each_plan(fam, r, [&](uint64_t index, const FlipPlan& plan) {
            if (index != size / 2) return true;
            CHECK(plan.zones == probe.zones);
            CHECK(plan.odd_extra == probe.odd_extra);
            CHECK(plan.flips == probe.flips);
            return false;
        });
    }
    CHECK_THROWS_AS(plan_at(fam, 2, flip_family_size(fam, 2).get_ui()),
                    std::invalid_argument);
}

TEST_CASE("flip embeddings hit the target genus") {
    CylinderFamily fam = small_family(1);
    FlipPlan first = plan_at(fam, 1, 0);
    CombinatorialMap m = flip_embedding(fam, first);
    CHECK(m.genus() == 1);
    CHECK(m.graph() == fam.graph);
    FlipPlan second = plan_at(fam, 2, 5);
    CHECK(flip_embedding(fam, second).genus() == 2);
    // Rejects plans that do not belong to the family.
    FlipPlan bogus;
    bogus.zones = {7};
    CHECK_THROWS_AS(validate_plan(fam, bogus), std::invalid_argument);
    FlipPlan bad_edge = first;
    bad_edge.flips.back() = {0};  // edge 0 is a rim edge, not a cross edge
    CHECK_THROWS_AS(validate_plan(fam, bad_edge), std::invalid_argument);
}

TEST_CASE("claim1 reports verify the whole family") {
    CylinderFamily fam = small_family(1);
    for (int r : {1, 2}) {
        Claim1Report rep = verify_claim1(fam, r, 1 << 20);
        CHECK(rep.ok());
        CHECK(rep.expected_size == flip_family_size(fam, r));
        CHECK(rep.generated == rep.expected_size.get_ui());
        CHECK(rep.first_offender == -1);
    }
    CHECK_THROWS_WITH(verify_claim1(fam, 2, 3), doctest::Contains("exceeds limit"));
}

TEST_CASE("claim1 with multiple workers") {
    CylinderFamily fam = small_family(2);
    Claim1Report base = verify_claim1(fam, 3, 1 << 20, 1);
    Claim1Report alt = verify_claim1(fam, 3, 1 << 20, 4);
    CHECK(base.ok());
    CHECK(alt.ok());
    CHECK(alt.generated == base.generated);
    CHECK(alt.expected_size == base.expected_size);
}

TEST_CASE("zone coefficients") {
    CHECK(c_coefficient(1, 1) == mpq_class(1, 4));
    CHECK(c_coefficient(2, 1) == 1);
    CHECK(c_coefficient(2, 2) == mpq_class(5, 8));
    CHECK(c_coefficient(3, 2) == mpq_class(41, 48));
    for (int k = 1; k <= 20; ++k) CHECK(c_coefficient(2 * k, k) == 1);
    CHECK_THROWS_AS(c_coefficient(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(c_coefficient(5, 2), std::invalid_argument);
}

TEST_CASE("coefficient inequalities hold for every k up to 100") {
    for (int k = 1; k <= 100; ++k) {
        std::vector<InequalityCheck> checks = verify_section3_inequalities(k);
        REQUIRE(checks.size() == 3);
        for (const InequalityCheck& c : checks) {
            CAPTURE(k);
            CAPTURE(c.name);
            CHECK(c.holds);
            CHECK(c.first_failure_q == -1);
        }
    }
    CHECK_THROWS_AS(verify_section3_inequalities(0), std::invalid_argument);
}

TEST_CASE("growth certificate at a realistic scale") {
    // d = 10^6 comfortably beats the bit-size requirement for k=1.
    CertificateReport rep = theorem2_certificate(0, 1, 1000000, 12, 1);
    CHECK(rep.eq_d);
    CHECK(rep.log_convexity_forced);
    CHECK(rep.lhs_bits < rep.rhs_exponent);
    CHECK(rep.rhs_exponent == 1000000);

    // Small d fails both sides.
    CertificateReport small = theorem2_certificate(0, 1, 100, 12, 1);
    CHECK_FALSE(small.eq_d);
    CHECK_FALSE(small.log_convexity_forced);

    // Huge nu needs a bigger d.
    mpz_class nu = pow2(2000);
    CHECK_FALSE(theorem2_certificate(0, 1, 1000, nu, 1).eq_d);
    CHECK(theorem2_certificate(0, 1, 100000, nu, 1).eq_d);

    CHECK_THROWS_AS(theorem2_certificate(0, 1, 100, 12, 2), std::invalid_argument);  // even r
    CHECK_THROWS_AS(theorem2_certificate(0, 1, 100, 12, 3), std::invalid_argument);  // r >= 2k
    CHECK_THROWS_AS(theorem2_certificate(-1, 1, 100, 12, 1), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_certificate(0, 1, 100, 0, 1), std::invalid_argument);
}

TEST_CASE("concavity classification") {
    using C = ConcavityClass;
    ConcavityReport flat = log_concavity_report({1, 2, 4});
    CHECK(flat.interior == std::vector<C>{C::Equality});
    CHECK(flat.log_concave);
    CHECK(flat.unimodal);

    ConcavityReport convex = log_concavity_report({2, 16, 4096});
    CHECK(convex.interior == std::vector<C>{C::StrictlyConvex});
    CHECK_FALSE(convex.log_concave);

    ConcavityReport mixed = log_concavity_report({1, 3, 9, 26});
    CHECK(mixed.interior == std::vector<C>{C::Equality, C::StrictlyConcave});
    CHECK(mixed.log_concave);

    ConcavityReport dip = log_concavity_report({3, 1, 2});
    CHECK_FALSE(dip.unimodal);
    CHECK_FALSE(dip.log_concave);

    ConcavityReport hump = log_concavity_report({1, 2, 2, 1});
    CHECK(hump.unimodal);
    CHECK(hump.log_concave);

    CHECK(log_concavity_report({5}).interior.empty());
    CHECK(log_concavity_report({}).interior.empty());
    CHECK_THROWS_AS(log_concavity_report({1, -1, 1}), std::invalid_argument);
}

TEST_CASE("family counts force a log-convex index") {
    // Minimum-genus rigidity contributes a_g = 2; the flip families give the
    // later terms. The jump from 2 to the first family size is strictly
    // log-convex, which is the shape the conjecture forbids.
    CylinderFamily fam = small_family(2);
    std::vector<mpz_class> seq = {2};
    for (int r = 1; r <= 4; ++r) seq.push_back(flip_family_size(fam, r));
    ConcavityReport rep = log_concavity_report(seq);
    REQUIRE(rep.interior.size() == 3);
    CHECK(rep.interior[0] == ConcavityClass::StrictlyConvex);  // 2*2 = 4 < 2*16
    CHECK_FALSE(rep.log_concave);

    // Longer connectors push the first jump as far as wanted.
    ConstructionParams p;
    p.k = 2;
    p.d = 5;
    CylinderFamily tall = counterexample_graph(p);
    std::vector<mpz_class> stretched = {2};
    for (int r = 1; r <= 4; ++r) stretched.push_back(flip_family_size(tall, r));
    // X = 3(2d-3) = 21 cross edges per zone, X1 = 7.
    CHECK(stretched[1] == pow2(7));                      // C(2,0) * 2^7
    CHECK(stretched[2] == mpz_class(2) * pow2(21));      // C(2,1) * 2^21
    CHECK(stretched[3] == mpz_class(2) * pow2(28));      // C(2,1) * 2^(21+7)
    CHECK(stretched[4] == pow2(42));                     // C(2,2) * 2^42
    ConcavityReport srep = log_concavity_report(stretched);
    CHECK(srep.interior[0] == ConcavityClass::StrictlyConvex);
    CHECK_FALSE(srep.log_concave);
}
