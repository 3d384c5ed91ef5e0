#include "scatter/regularity.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {

PotentialSpec soliton() { return PotentialSpec::make(Family::Soliton, {2.5, 0.0, 0.0}); }

Scenario pseudo_set(const std::vector<int>& D) {
    std::vector<SeedSolution> seeds;
    for (int d : D) seeds.push_back(make_twist_seed(soliton(), d));
    return make_scenario(soliton(), seeds);
}

}  // namespace

TEST(KreinAdler, IntegerCondition) {
    EXPECT_EQ(krein_adler_check(std::vector<int>{2}).verdict, Verdict::RegularByCondition);
    EXPECT_EQ(krein_adler_check(std::vector<int>{2, 3}).verdict, Verdict::RegularByCondition);
    EXPECT_EQ(krein_adler_check(std::vector<int>{2, 5}).verdict, Verdict::RegularByCondition);
    EXPECT_EQ(krein_adler_check(std::vector<int>{4, 5}).verdict, Verdict::RegularByCondition);
    const IndexSetAnalysis one = krein_adler_check(std::vector<int>{1});
    EXPECT_EQ(one.verdict, Verdict::SingularByCondition);
    EXPECT_EQ(one.barD, std::vector<int>{1});
}

TEST(KreinAdler, AgreesWithScanOnSolitonSets) {
    for (const auto& D : std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {2, 3}, {2, 5}, {4, 5}, {2, 3, 4}, {1, 2}}) {
        const Scenario sc = pseudo_set(D);
        const IndexSetAnalysis ka = krein_adler_check(sc);
        ASSERT_NE(ka.verdict, Verdict::NeedsNumericScan);
        EXPECT_EQ(ka.verdict == Verdict::RegularByCondition, nodeless_scan(sc).nodeless) << D.size() << " " << D[0];
    }
}

TEST(KreinAdler, MixedScenariosNeedScan) {
    const PotentialSpec m = PotentialSpec::make(Family::Morse, {1.3, 1.0, 0.0});
    EXPECT_EQ(krein_adler_check(make_scenario(m, {make_overshoot_seed(m, 3)})).verdict, Verdict::NeedsNumericScan);
}

TEST(TypeIChain, MorseAndEckart) {
    const PotentialSpec m = PotentialSpec::make(Family::Morse, {1.3, 1.0, 0.0});
    EXPECT_EQ(type1_chain_condition(make_scenario(m, {make_overshoot_seed(m, 3)})), true);
    const PotentialSpec e = PotentialSpec::make(Family::Eckart, {0.0, 9.0, 2.6});
    EXPECT_EQ(type1_chain_condition(make_scenario(e, {make_overshoot_seed(e, 5), make_overshoot_seed(e, 6)})), true);
    const PotentialSpec rm = PotentialSpec::make(Family::RosenMorse, {3.3, 2.0, 0.0});
    EXPECT_FALSE(type1_chain_condition(make_scenario(rm, {make_overshoot_seed(rm, 3)})));
}

TEST(NodelessScan, ReferenceScenarios) {
    EXPECT_TRUE(nodeless_scan(Scenario{soliton(), {}}).nodeless);
    EXPECT_TRUE(nodeless_scan(pseudo_set({0})).nodeless);
    const ScanResult odd = nodeless_scan(pseudo_set({1}));
    EXPECT_FALSE(odd.nodeless);
    ASSERT_FALSE(odd.zeros.empty());
    EXPECT_NEAR(odd.zeros.front(), 0.0, 1e-7);
}

TEST(NodelessScan, DetectsTouchingZero) {
    // W ~ x^6 at the origin for the odd triple
    EXPECT_FALSE(nodeless_scan(pseudo_set({1, 3, 5})).nodeless);
}

TEST(Analyze, ReportsMethod) {
    EXPECT_EQ(analyze(Scenario{soliton(), {}}).method, "trivial");
    const RegularityReport r = analyze(pseudo_set({2, 3}));
    EXPECT_TRUE(r.regular);
    EXPECT_EQ(r.method, "krein-adler");
    EXPECT_FALSE(analyze(pseudo_set({1})).regular);
}
