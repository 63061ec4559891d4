#include <gtest/gtest.h>

#include <random>

#include "regui/error.hpp"
#include "regui/goldens.hpp"
#include "regui/layout_spec.hpp"
#include "test_support.hpp"

namespace regui {
namespace {

LayoutSpec load_fixture() { return parse_spec(read_text_file(testing::fixture_path())); }

std::string fixture_text() { return read_text_file(testing::fixture_path()); }

TEST(ThreeClassRules, PaperBreakpoints) {
  const auto rules = three_class_rules(0.75, 1.5);
  ASSERT_EQ(rules.size(), 3u);
  EXPECT_EQ(rules[0], (ClassRule{"portrait", 0.0, false, 0.75, false}));
  EXPECT_EQ(rules[1], (ClassRule{"classic", 0.75, true, 1.5, true}));
  EXPECT_EQ(rules[2], (ClassRule{"landscape", 1.5, false, testing::kInf, false}));
}

TEST(ThreeClassRules, EqualBreakpointsGiveAPointClass) {
  const auto rules = three_class_rules(1, 1);
  EXPECT_TRUE(rules[1].contains(1.0));
  EXPECT_FALSE(rules[1].contains(std::nextafter(1.0, 2.0)));
  EXPECT_FALSE(rules[0].contains(1.0));
  EXPECT_FALSE(rules[2].contains(1.0));
}

TEST(ThreeClassRules, RejectsBadBreakpoints) {
  EXPECT_THROW(three_class_rules(1.5, 0.75), InvalidBreakpoints);
  EXPECT_THROW(three_class_rules(0, 1), InvalidBreakpoints);
  EXPECT_THROW(three_class_rules(-1, 1), InvalidBreakpoints);
}

TEST(ThreeClassRules, PartitionsPositiveRatios) {
  for (auto [b1, b2] : {std::pair{0.75, 1.5}, {1.0, 1.0}, {0.1, 9.0}}) {
    const auto rules = three_class_rules(b1, b2);
    for (double e = -6; e <= 6; e += 0.01) {
      EXPECT_EQ(testing::coverage(rules, std::exp(e)), 1) << std::exp(e);
    }
    for (double r : {b1, b2, std::nextafter(b1, 0.0), std::nextafter(b2, 100.0)}) {
      EXPECT_EQ(testing::coverage(rules, r), 1) << r;
    }
  }
}

TEST(ParseSpec, Fixture) {
  const LayoutSpec spec = load_fixture();
  EXPECT_EQ(spec.name, "TeachLCGE");
  EXPECT_EQ(spec.classes, three_class_rules(0.75, 1.5));
  EXPECT_GE(spec.blocks.size(), 12u);

  const Block* panel0 = spec.find_block("panel0");
  ASSERT_NE(panel0, nullptr);
  EXPECT_EQ(panel0->placement_for("classic")->rect, (NormRect{0.01, 0.75, 0.38, 0.175}));
  EXPECT_EQ(panel0->placement_for("portrait")->rect, (NormRect{0.01, 0.765, 0.98, 0.16}));
  EXPECT_EQ(panel0->placement_for("landscape")->rect, (NormRect{0.01, 0.65, 0.38, 0.27}));

  const Block* white = spec.find_block("white");
  ASSERT_NE(white, nullptr);
  EXPECT_EQ(white->placement_for("classic"), nullptr);

  const Placement* title = spec.find_block("title")->placement_for("classic");
  ASSERT_TRUE(title->font.has_value());
  ASSERT_EQ(title->style.size(), 2u);
  EXPECT_EQ(title->style[0].first, "color");
  EXPECT_EQ(title->style[1].first, "background");
}

TEST(ParseSpec, EmptyDocumentNamesMissingRootFields) {
  for (std::string_view text : {"", "  \n", "{}"}) {
    try {
      parse_spec(text);
      FAIL() << "expected SchemaError";
    } catch (const SchemaError& e) {
      EXPECT_EQ(e.path(), "");
      const std::string what = e.what();
      EXPECT_NE(what.find("name"), std::string::npos);
      EXPECT_NE(what.find("classes"), std::string::npos);
      EXPECT_NE(what.find("blocks"), std::string::npos);
    }
  }
}

TEST(ParseSpec, IllTypedRectFieldReportsPath) {
  std::string text = fixture_text();
  const std::string needle = "[0.01, 0.75, 0.38, 0.175]";
  text.replace(text.find(needle), needle.size(), R"([0.01, 0.75, "wide", 0.175])");
  try {
    parse_spec(text);
    FAIL() << "expected SchemaError";
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.path(), "blocks[0].placements.classic.rect[2]");
    EXPECT_NE(std::string(e.what()).find("rect w"), std::string::npos);
  }
}

TEST(ParseSpec, SchemaErrors) {
  auto path_of = [](std::string_view text) {
    try {
      parse_spec(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(path_of(R"({"name":1,"classes":[],"blocks":[]})"), "name");
  EXPECT_EQ(path_of(R"({"name":"x","classes":{},"blocks":[]})"), "classes");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[{"name":"a","lo":0,"lo_inclusive":false,"hi":"big","hi_inclusive":false}],"blocks":[]})"),
            "classes[0].hi");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[{"name":"a","lo":0,"hi":1,"hi_inclusive":false}],"blocks":[]})"),
            "classes[0]");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[],"blocks":[{"id":"b","placements":{"a":{"rect":[0,0,1]}}}]})"),
            "blocks[0].placements.a.rect");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[],"blocks":[{"id":"b","placements":{"a":{"rect":[0,0,1,1],"mirror_on_anchor":"up"}}}]})"),
            "blocks[0].placements.a.mirror_on_anchor");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[],"blocks":[{"id":"b","placements":{"a":{"rect":[0,0,1,1],"style":{"k":1}}}}]})"),
            "blocks[0].placements.a.style.k");
  EXPECT_EQ(path_of(R"({"name":"x","classes":[],"blocks":[],"extra":true})"), "extra");
}

TEST(ParseSpec, SyntaxErrorCarriesLineAndColumn) {
  try {
    parse_spec("{\n  \"name\": \"x\",\n  \"classes\": [,]\n}");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 15u);
  }
  EXPECT_THROW(parse_spec("not json"), SyntaxError);
  EXPECT_THROW(parse_spec("{\"name\": \"\xff\"}"), SyntaxError);
}

TEST(ParseSpec, NeverCrashesOnArbitraryBytes) {
  std::mt19937_64 rng(42);
  const std::string base = fixture_text();
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 3000; ++i) {
    std::string text;
    if (i % 3 == 0) {
      text.resize(std::uniform_int_distribution<std::size_t>(0, 200)(rng));
      for (char& c : text) c = static_cast<char>(byte(rng));
    } else {
      text = base;
      const int edits = std::uniform_int_distribution<int>(1, 8)(rng);
      for (int e = 0; e < edits; ++e) {
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
        switch (byte(rng) % 3) {
          case 0:
            text[at] = static_cast<char>(byte(rng));
            break;
          case 1:
            text.erase(at, 1);
            break;
          default:
            text.insert(at, 1, "{}[]\",:0e-"[byte(rng) % 10]);
        }
      }
    }
    try {
      parse_spec(text);
    } catch (const Error&) {
      // structured failure is fine
    }
  }
}

TEST(SerializeSpec, FixtureRoundTrips) {
  const LayoutSpec spec = load_fixture();
  const std::string text = serialize_spec(spec);
  const LayoutSpec again = parse_spec(text);
  EXPECT_EQ(again, spec);
  EXPECT_EQ(serialize_spec(again), text);
}

TEST(SerializeSpec, MinimalDocument) {
  LayoutSpec spec;
  spec.name = "min";
  spec.classes.push_back({"all", 0.0, false, testing::kInf, false});
  Block block;
  block.id = "b";
  block.placements.emplace_back("all", Placement{{0, 0, 1, 1}});
  spec.blocks.push_back(block);
  EXPECT_EQ(serialize_spec(spec),
            "{\n"
            "  \"name\": \"min\",\n"
            "  \"classes\": [\n"
            "    {\n"
            "      \"name\": \"all\",\n"
            "      \"lo\": 0.0,\n"
            "      \"lo_inclusive\": false,\n"
            "      \"hi\": \"inf\",\n"
            "      \"hi_inclusive\": false\n"
            "    }\n"
            "  ],\n"
            "  \"blocks\": [\n"
            "    {\n"
            "      \"id\": \"b\",\n"
            "      \"placements\": {\n"
            "        \"all\": {\n"
            "          \"rect\": [\n"
            "            0.0,\n"
            "            0.0,\n"
            "            1.0,\n"
            "            1.0\n"
            "          ]\n"
            "        }\n"
            "      }\n"
            "    }\n"
            "  ]\n"
            "}\n");
}

TEST(SerializeSpec, StyleKeyOrderSurvives) {
  LayoutSpec spec;
  spec.name = "style";
  spec.classes = three_class_rules(0.75, 1.5);
  Placement placement{{0, 0, 0.5, 0.5}};
  placement.style = {{"zeta", "1"}, {"alpha", "2"}, {"mid", "3"}};
  spec.blocks.push_back({"b", std::nullopt, {{"classic", placement}}});
  const std::string text = serialize_spec(spec);
  EXPECT_LT(text.find("zeta"), text.find("alpha"));
  EXPECT_LT(text.find("alpha"), text.find("mid"));
  EXPECT_EQ(serialize_spec(parse_spec(text)), text);
}

TEST(SerializeSpec, RandomSpecsRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    LayoutSpec spec = testing::random_spec(rng);
    if (i % 2 == 0) spec.blocks.front().label = "label " + std::to_string(i);
    EXPECT_EQ(parse_spec(serialize_spec(spec)), spec);
  }
}

}  // namespace
}  // namespace regui
