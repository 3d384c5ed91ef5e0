#include "scatter/errors.hpp"
#include "scatter/scenario_file.hpp"
#include "test_util.hpp"

using namespace scatter;

namespace {

const char* kSoliton = R"(# soliton with one pseudo-virtual seed
family = soliton
[params]
h = 2.5
[seeds]
pseudo:0
[grids]
k = 0.1:5:50
)";

int parse_error_line(std::string_view text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST(ScenarioFile, ParsesKeyTable) {
    const ScenarioFile f = parse_scenario(kSoliton);
    EXPECT_EQ(f.family, Family::Soliton);
    EXPECT_EQ(f.params.h, 2.5);
    ASSERT_EQ(f.seeds.size(), 1u);
    EXPECT_EQ(f.seeds[0].kind, "pseudo-virtual");
    EXPECT_EQ(f.seeds[0].line, 6);
    ASSERT_TRUE(f.k_grid);
    EXPECT_EQ(f.k_grid->values().size(), 50u);
    EXPECT_DOUBLE_EQ(f.k_grid->values().back(), 5.0);
}

TEST(ScenarioFile, BuildsScenario) {
    const Scenario sc = build_scenario(parse_scenario(kSoliton));
    ASSERT_EQ(sc.M(), 1);
    EXPECT_EQ(sc.seeds[0].kind, SeedKind::PseudoVirtual);
    EXPECT_EQ(sc.seeds[0].origin, SeedOrigin::Twist);
}

TEST(ScenarioFile, ClassificationKindInfersOrigin) {
    const ScenarioFile f = parse_scenario("family = soliton\n[params]\nh = 2.5\n[seeds]\novershoot-pseudo:6\n");
    const Scenario sc = build_scenario(f);
    EXPECT_EQ(sc.seeds[0].origin, SeedOrigin::Overshoot);
    EXPECT_EQ(sc.seeds[0].kind, SeedKind::OvershootPseudo);
}

TEST(ScenarioFile, MismatchedKindIsRejected) {
    const ScenarioFile f = parse_scenario("family = soliton\n[params]\nh = 2.5\n[seeds]\nvirtual-II:1\n");
    EXPECT_THROW(build_scenario(f), Error);
}

TEST(ScenarioFile, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("family = soliton\n[params]\nh = abc\n"), 3);
    EXPECT_EQ(parse_error_line("family = soliton\n[params]\nh = 2.5\n[seeds]\nbogus:1\n"), 5);
    EXPECT_EQ(parse_error_line("family = nowhere\n"), 1);
    EXPECT_EQ(parse_error_line("family = soliton\n[grids]\nk = 1:2\n"), 3);
    EXPECT_EQ(parse_error_line("family = soliton\n[weird]\n"), 2);
}

TEST(ScenarioFile, CanonicalRoundTrip) {
    const ScenarioFile f = parse_scenario(kSoliton);
    const std::string once = serialize(f);
    EXPECT_EQ(serialize(parse_scenario(once)), once);
    const std::string js = serialize_json(f);
    EXPECT_EQ(serialize(parse_scenario(js)), once);
    EXPECT_EQ(serialize_json(parse_scenario(js)), js);
}

TEST(ScenarioFile, MultiSeedLinesAndTwists) {
    const ScenarioFile f =
        parse_scenario("family = rm\n[params]\nh = 3.3\nmu = 2\n[seeds]\ntwist:0:h, overshoot:3\n");
    ASSERT_EQ(f.seeds.size(), 2u);
    EXPECT_EQ(f.seeds[0].twist, Twist::H);
    EXPECT_EQ(build_scenario(f).M(), 2);
}

TEST(ScenarioFile, InvalidParametersSurfaceConstraint) {
    const ScenarioFile f = parse_scenario("family = soliton\n[params]\nh = -1\n");
    EXPECT_THROW(build_spec(f), ParameterRangeError);
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(format_real(2.5), "2.5");
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(std::stod(format_real(1.0 / 3.0)), 1.0 / 3.0);
}
