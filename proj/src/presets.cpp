#include "frsim/fisdsl.hpp"

// Keep in sync with configs/model1.fis and configs/model2.fis (checked by
// fisdsl_test).

namespace frsim::presets {

namespace {

constexpr std::string_view kModel1 = R"fis(# Model 1: the best-performing term set.
# Inputs are the lower and upper fuzzy-rough similarities of a sentence pair,
# the output is a relatedness rank on [0, 5].

var similarity_lower in [0, 1] {
  term low = tri(0, 0, 0.5);
  term average = tri(0.4, 0.6, 0.85);
  term high = tri(0.8, 1, 1);
}

var similarity_upper in [0, 1] {
  term poor = tri(0, 0, 0.5);
  term average = tri(0.4, 0.6, 0.85);
  term good = tri(0.8, 1, 1);
}

var rank in [0, 5] {
  term low = tri(0, 0, 3);
  term medium = tri(1.75, 2.75, 4);
  term high = tri(3.5, 5, 5);
}

rule if similarity_lower is low and similarity_upper is poor then rank is low;
# Published with similarity_upper on both sides; see --strict-rule2.
rule if similarity_lower is average and similarity_upper is poor then rank is medium;
rule if similarity_lower is high and similarity_upper is average then rank is high;
rule if similarity_lower is average and similarity_upper is good then rank is high;
rule if similarity_lower is average and similarity_upper is average then rank is medium;
rule if similarity_lower is high and similarity_upper is good then rank is high;
rule if similarity_lower is low and similarity_upper is average then rank is low;
rule if similarity_lower is low and similarity_upper is good then rank is medium;
rule if similarity_lower is high and similarity_upper is poor then rank is medium;
)fis";

constexpr std::string_view kModel2 = R"fis(# Model 2: wider average terms, narrower high/good terms.
# Inputs are the lower and upper fuzzy-rough similarities of a sentence pair,
# the output is a relatedness rank on [0, 5].

var similarity_lower in [0, 1] {
  term low = tri(0, 0, 0.5);
  term average = tri(0.4, 0.7, 0.95);
  term high = tri(0.9, 1, 1);
}

var similarity_upper in [0, 1] {
  term poor = tri(0, 0, 0.5);
  term average = tri(0.4, 0.7, 0.95);
  term good = tri(0.9, 1, 1);
}

var rank in [0, 5] {
  term low = tri(0, 0, 3);
  term medium = tri(1.75, 2.75, 4);
  term high = tri(3.5, 5, 5);
}

rule if similarity_lower is low and similarity_upper is poor then rank is low;
# Published with similarity_upper on both sides; see --strict-rule2.
rule if similarity_lower is average and similarity_upper is poor then rank is medium;
rule if similarity_lower is high and similarity_upper is average then rank is high;
rule if similarity_lower is average and similarity_upper is good then rank is high;
rule if similarity_lower is average and similarity_upper is average then rank is medium;
rule if similarity_lower is high and similarity_upper is good then rank is high;
rule if similarity_lower is low and similarity_upper is average then rank is low;
rule if similarity_lower is low and similarity_upper is good then rank is medium;
rule if similarity_lower is high and similarity_upper is poor then rank is medium;
)fis";

}  // namespace

std::string_view model1_source() { return kModel1; }
std::string_view model2_source() { return kModel2; }

FisConfig model1() { return parse_fis(kModel1); }
FisConfig model2() { return parse_fis(kModel2); }

std::optional<FisConfig> by_name(std::string_view name) {
  if (name == "model1") return model1();
  if (name == "model2") return model2();
  return std::nullopt;
}

}  // namespace frsim::presets
