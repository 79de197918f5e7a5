#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "frsim/error.hpp"
#include "frsim/fis.hpp"

namespace frsim {

// Parse failure with a 1-based source position.
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar:
//   config    := { var_block } { rule_stmt }
//   var_block := "var" IDENT "in" "[" NUMBER "," NUMBER "]" "{" { term_stmt } "}"
//   term_stmt := "term" IDENT "=" "tri" "(" NUMBER "," NUMBER "," NUMBER ")" ";"
//   rule_stmt := "rule" "if" cond { "and" cond } "then" IDENT "is" IDENT ";"
//   cond      := IDENT "is" IDENT
// '#' starts a comment that runs to the end of the line. The output variable
// is the one that appears only in rule consequents.
FisConfig parse_fis(std::string_view text);

// Canonical text: inputs in name order, then the output; terms and rules in
// declaration order; numbers printed with up to 6 significant digits.
std::string serialize_fis(const FisConfig& config);

// Reads a .fis file, or a built-in preset when given "builtin:<name>".
FisConfig load_fis(const std::filesystem::path& path);

namespace presets {

std::string_view model1_source();
std::string_view model2_source();

FisConfig model1();
FisConfig model2();

// "model1" or "model2".
std::optional<FisConfig> by_name(std::string_view name);

}  // namespace presets

// Rewrites the corrected rule
//   similarity_lower is average and similarity_upper is poor then rank is medium
// into its literal published form
//   similarity_upper is average and similarity_upper is poor then rank is medium.
// Throws InvalidConfig if the corrected rule is not present.
FisConfig with_verbatim_rule2(const FisConfig& config);

}  // namespace frsim
