#include <doctest.h>

#include <functional>
#include <random>
#include <stdexcept>

#include "ccx/crn.hpp"

using namespace ccx;

namespace {

/// Independent oracle: counts size-k multisets of distinct molecules by
/// explicit enumeration over molecule indices.
long long enumerate_combinations(int count, int k) {
    if (k == 0) return 1;
    long long total = 0;
    std::vector<int> pick(k);
    // Enumerate strictly increasing index tuples.
    std::function<void(int, int)> recurse = [&](int depth, int from) {
        if (depth == k) {
            ++total;
            return;
        }
        for (int i = from; i < count; ++i) recurse(depth + 1, i + 1);
    };
    recurse(0, 0);
    return total;
}

}  // namespace

TEST_CASE("species are appended with dense ids") {
    Crn crn;
    CHECK(crn.add_species("x", 0, SpeciesKind::UserVariable) == 0);
    CHECK(crn.add_species("c10", 10, SpeciesKind::Constant) == 1);
    CHECK(crn.species[1].initial_count == 10);
    CHECK(crn.find_species("c10") == 1);
    CHECK_THROWS_AS(crn.add_species("x", 0, SpeciesKind::UserVariable), std::invalid_argument);
    CHECK_THROWS_AS(crn.add_species("neg", -1, SpeciesKind::UserVariable), std::invalid_argument);
}

TEST_CASE("reactions validate species and stoichiometry") {
    Crn crn;
    int a = crn.add_species("a", 2, SpeciesKind::UserVariable);
    int b = crn.add_species("b", 3, SpeciesKind::UserVariable);
    int id = crn.add_reaction({{a, 1}, {b, 1}}, {}, RateTier::Fast, false, "annihilate");
    CHECK(crn.reactions[id].products.empty());
    CHECK_THROWS_AS(crn.add_reaction({{a, 0}}, {}, RateTier::Slow, false, "zero"),
                    std::invalid_argument);
    CHECK_THROWS_AS(crn.add_reaction({{99, 1}}, {}, RateTier::Slow, false, "ghost"),
                    std::invalid_argument);
}

TEST_CASE("duplicate species on one side merge into a higher stoichiometry") {
    Crn crn;
    int d = crn.add_species("done", 2, SpeciesKind::SignalDone);
    int id = crn.add_reaction({{d, 1}, {d, 1}}, {{d, 1}}, RateTier::Fast, false, "2done");
    REQUIRE(crn.reactions[id].reactants.size() == 1);
    CHECK(crn.reactions[id].reactants[0].second == 2);
}

TEST_CASE("bimolecular propensity counts reactant pairs") {
    Crn crn;
    int a = crn.add_species("a", 2, SpeciesKind::UserVariable);
    int b = crn.add_species("b", 3, SpeciesKind::UserVariable);
    crn.add_reaction({{a, 1}, {b, 1}}, {}, RateTier::Slow, false, "r");
    CHECK(propensity(crn.reactions[0], crn.initial_state(), RateConfig{}) == 6.0);
}

TEST_CASE("dimerization propensity matches the enumeration oracle") {
    // 2A -> A with 4 molecules: C(4,2) distinct pairs.
    CHECK(enumerate_combinations(4, 2) == 6);
    Crn crn;
    int a = crn.add_species("a", 4, SpeciesKind::UserVariable);
    crn.add_reaction({{a, 2}}, {{a, 1}}, RateTier::Slow, false, "dimer");
    CHECK(propensity(crn.reactions[0], crn.initial_state(), RateConfig{}) ==
          static_cast<double>(enumerate_combinations(4, 2)));

    std::vector<Count> one{1};
    CHECK(propensity(crn.reactions[0], one, RateConfig{}) == 0.0);
}

TEST_CASE("combinations agrees with enumeration across small counts") {
    for (int count = 0; count <= 8; ++count)
        for (int k = 1; k <= 3; ++k)
            CHECK(combinations(count, k) == static_cast<double>(enumerate_combinations(count, k)));
}

TEST_CASE("empty reactant side has unit combination count") {
    Crn crn;
    int a = crn.add_species("a", 0, SpeciesKind::UserVariable);
    crn.add_reaction({}, {{a, 1}}, RateTier::Slow, false, "feed");
    RateConfig rates;
    CHECK(propensity(crn.reactions[0], crn.initial_state(), rates) == rates.slow);
}

TEST_CASE("rate tiers order fast > slow > veryslow") {
    RateConfig rates;
    CHECK(rates.valid());
    CHECK(rates.value(RateTier::Fast) > rates.value(RateTier::Slow));
    CHECK(rates.value(RateTier::Slow) > rates.value(RateTier::VerySlow));
    CHECK_FALSE(RateConfig{1.0, 1.0, 0.1}.valid());
    CHECK_FALSE(RateConfig{10.0, 1.0, 0.0}.valid());
}

TEST_CASE("property: propensity is monotone in each reactant count") {
    std::mt19937 rng(3);
    RateConfig rates;
    for (int round = 0; round < 100; ++round) {
        Crn crn;
        int a = crn.add_species("a", 0, SpeciesKind::UserVariable);
        int b = crn.add_species("b", 0, SpeciesKind::UserVariable);
        int sa = 1 + static_cast<int>(rng() % 2);
        int sb = 1 + static_cast<int>(rng() % 2);
        crn.add_reaction({{a, sa}, {b, sb}}, {}, RateTier::Slow, false, "r");
        std::vector<Count> state{static_cast<Count>(rng() % 10), static_cast<Count>(rng() % 10)};
        double base = propensity(crn.reactions[0], state, rates);
        for (int s = 0; s < 2; ++s) {
            auto bumped = state;
            bumped[s] += 1;
            CHECK(propensity(crn.reactions[0], bumped, rates) >= base);
        }
    }
}

TEST_CASE("property: applying an enabled reaction never yields negative counts") {
    std::mt19937 rng(17);
    RateConfig rates;
    for (int round = 0; round < 200; ++round) {
        Crn crn;
        int a = crn.add_species("a", 0, SpeciesKind::UserVariable);
        int b = crn.add_species("b", 0, SpeciesKind::UserVariable);
        int c = crn.add_species("c", 0, SpeciesKind::UserVariable);
        SpeciesCoefs reactants, products;
        for (int s : {a, b, c}) {
            if (rng() % 2) reactants.push_back({s, 1 + static_cast<int>(rng() % 2)});
            if (rng() % 2) products.push_back({s, 1 + static_cast<int>(rng() % 2)});
        }
        if (reactants.empty()) reactants.push_back({a, 1});
        crn.add_reaction(reactants, products, RateTier::Slow, false, "r");
        std::vector<Count> state{static_cast<Count>(rng() % 4), static_cast<Count>(rng() % 4),
                                 static_cast<Count>(rng() % 4)};
        if (propensity(crn.reactions[0], state, rates) > 0.0) {
            apply_reaction(crn.reactions[0], state);
            for (Count x : state) CHECK(x >= 0);
        }
    }
}

TEST_CASE("validate flags structural problems") {
    Crn crn;
    crn.add_species("x", 0, SpeciesKind::UserVariable);
    CHECK(crn.validate().empty());
    CHECK_FALSE(crn.validate(true).empty());  // compiled programs need observables
    crn.observables.push_back(0);
    CHECK(crn.validate(true).empty());
    crn.observables.push_back(42);
    CHECK_FALSE(crn.validate(true).empty());
}
