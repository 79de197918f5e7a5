#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "frsim/error.hpp"
#include "frsim/fisdsl.hpp"
#include "support/generators.hpp"

using namespace frsim;
using frsim::testing::Gen;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSmall = R"(
var similarity_lower in [0, 1] { term low = tri(0, 0, 1); }
var similarity_upper in [0, 1] { term poor = tri(0, 0, 1); }
var rank in [0, 5] { term low = tri(0, 0, 5); }
rule if similarity_lower is low and similarity_upper is poor then rank is low;
)";

SourceError parse_error(const std::string& text) {
  try {
    parse_fis(text);
  } catch (const SourceError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return SourceError(ErrorKind::ParseError, 0, 0, "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST(FisDsl, Model1File) {
  const FisConfig c = parse_fis(read_file(FRSIM_SOURCE_DIR "/configs/model1.fis"));
  EXPECT_EQ(c.lower().terms().size() + c.upper().terms().size() + c.output().terms().size(), 9u);
  EXPECT_EQ(c.rules().size(), 9u);
  EXPECT_EQ(c, presets::model1());
  EXPECT_EQ(c.lower().find_term("average")->mf, (TriangularMF{0.4, 0.6, 0.85}));
  EXPECT_EQ(c.upper().find_term("good")->mf, (TriangularMF{0.8, 1, 1}));
  EXPECT_EQ(c.output().find_term("medium")->mf, (TriangularMF{1.75, 2.75, 4}));
}

TEST(FisDsl, PresetsMatchShippedFiles) {
  EXPECT_EQ(presets::model1_source(), read_file(FRSIM_SOURCE_DIR "/configs/model1.fis"));
  EXPECT_EQ(presets::model2_source(), read_file(FRSIM_SOURCE_DIR "/configs/model2.fis"));
  EXPECT_EQ(load_fis(FRSIM_SOURCE_DIR "/configs/model2.fis"), presets::model2());
  EXPECT_EQ(load_fis("builtin:model2"), presets::model2());
  EXPECT_FALSE(presets::by_name("model3").has_value());
}

TEST(FisDsl, Model2Parameters) {
  const FisConfig c = presets::model2();
  for (const LinguisticVariable* v : {&c.lower(), &c.upper()}) {
    EXPECT_EQ(v->terms()[0].mf, (TriangularMF{0, 0, 0.5}));
    EXPECT_EQ(v->terms()[1].mf, (TriangularMF{0.4, 0.7, 0.95}));
    EXPECT_EQ(v->terms()[2].mf, (TriangularMF{0.9, 1, 1}));
  }
  EXPECT_NE(serialize_fis(c).find("tri(0.4, 0.7, 0.95)"), std::string::npos);
}

TEST(FisDsl, RoundTripPresets) {
  for (const FisConfig& c : {presets::model1(), presets::model2()}) {
    const std::string text = serialize_fis(c);
    EXPECT_EQ(parse_fis(text), c);
    EXPECT_EQ(serialize_fis(parse_fis(text)), text);
  }
}

TEST(FisDsl, CanonicalText) {
  const std::string spaced = "# comment\n" + replace(kSmall, "tri(0, 0, 5)", "tri( 0.0 ,0,5e0 )");
  EXPECT_EQ(serialize_fis(parse_fis(spaced)), serialize_fis(parse_fis(kSmall)));
}

TEST(FisDsl, Errors) {
  SourceError e = parse_error(replace(kSmall, "tri(0, 0, 5)", "tri(1.0, 0.8, 1.0)"));
  EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  EXPECT_EQ(e.line(), 4);

  e = parse_error(replace(kSmall, "then rank is low", "then rank is excellent"));
  EXPECT_EQ(e.kind(), ErrorKind::UnknownTerm);
  EXPECT_EQ(e.line(), 5);

  e = parse_error(replace(kSmall, "term poor = tri(0, 0, 1);", "term poor = tri(0, 0, 1); term poor = tri(0, 1, 1);"));
  EXPECT_EQ(e.kind(), ErrorKind::DuplicateName);

  e = parse_error(replace(kSmall, "var rank in [0, 5] { term low = tri(0, 0, 5); }",
                          "var similarity_lower in [0, 5] { term x = tri(0, 0, 5); }"));
  EXPECT_EQ(e.kind(), ErrorKind::DuplicateName);

  e = parse_error(replace(kSmall, "term low = tri(0, 0, 1);", "term low = tri(0, 0 1);"));
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 54);
  EXPECT_NE(std::string(e.what()).find("line 2, column 54"), std::string::npos) << e.what();

  e = parse_error(replace(kSmall, "in [0, 5]", "in [5, 0]"));
  EXPECT_EQ(e.kind(), ErrorKind::DomainError);

  e = parse_error(replace(kSmall, "then rank is low", "then similarity_upper is poor"));
  EXPECT_EQ(e.kind(), ErrorKind::InvalidConfig);

  e = parse_error("var similarity_lower in [0, 1] { term low = tri(0, 0, 1); } @");
  EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  EXPECT_EQ(e.column(), 61);
}

TEST(FisDsl, VerbatimRuleTwo) {
  const FisConfig strict = with_verbatim_rule2(presets::model1());
  ASSERT_EQ(strict.rules().size(), 9u);
  const Rule& r = strict.rules()[1];
  EXPECT_EQ(r.antecedents[0], (Condition{"similarity_upper", "average"}));
  EXPECT_EQ(r.antecedents[1], (Condition{"similarity_upper", "poor"}));
  EXPECT_EQ(parse_fis(serialize_fis(strict)), strict);
  EXPECT_THROW(with_verbatim_rule2(strict), Error);
}

TEST(FisDslProperty, RandomRoundTrip) {
  Gen g(41);
  for (int iter = 0; iter < 200; ++iter) {
    const FisConfig c = frsim::testing::random_config(g).with_resolution(kDefaultResolution);
    const std::string text = serialize_fis(c);
    const FisConfig back = parse_fis(text);
    ASSERT_EQ(back, c) << text;
    ASSERT_EQ(serialize_fis(back), text);
  }
}
