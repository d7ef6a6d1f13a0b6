#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suite.hpp"

using namespace props;

TEST_CASE("oracle equivalence on 200 randomized rational functions") {
    Result r = oracle_equivalence_random(200);
    INFO(r.detail);
    CHECK(r.ok);
    CHECK(r.checks == 200);
}

TEST_CASE("finite residues of degree <= -2 functions sum to zero") {
    Result r = sum_of_residues_zero();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("residue is linear") {
    Result r = residue_linearity();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("poly and rational-expression arithmetic is associative and commutative") {
    Result r = arithmetic_assoc_comm();
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("oracle equivalence across every pipeline integrand, d <= 2") {
    VscCache cache;
    Result r = oracle_equivalence_pipeline(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("50 random off-shell keys per fixture space vanish") {
    VscCache cache;
    Result r = selection_rule_zeros(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("(n0, n1) factorization identities, d <= 2") {
    VscCache cache;
    Result r = factorization_identities(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("type-(iii) vanishing for Calabi-Yau fixtures, per graph, d <= 3") {
    VscCache cache;
    Result r = prop1_vanishing(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("leg order independence for all multi-leg stars, d <= 3") {
    VscCache cache;
    Result r = leg_order_independence(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("mirror round trip at order 3 for every fixture space") {
    VscCache cache;
    Result r = mirror_round_trip(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}

TEST_CASE("F_1^A linear coefficient equals the classical constant everywhere") {
    VscCache cache;
    Result r = f1a_linear_coefficient(&cache);
    INFO(r.detail);
    CHECK(r.ok);
}
