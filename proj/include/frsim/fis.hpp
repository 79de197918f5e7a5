#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace frsim {

inline constexpr std::string_view kLowerVariable = "similarity_lower";
inline constexpr std::string_view kUpperVariable = "similarity_upper";
inline constexpr std::string_view kRankVariable = "rank";
inline constexpr std::size_t kDefaultResolution = 5001;

// Triangle with feet a, c and apex b. a == b (or b == c) makes a vertical
// shoulder whose top point belongs to the set.
struct TriangularMF {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  bool operator==(const TriangularMF&) const = default;
};

double mf_eval(const TriangularMF& mf, double x);

struct Term {
  std::string name;
  TriangularMF mf;

  bool operator==(const Term&) const = default;
};

class LinguisticVariable {
 public:
  LinguisticVariable() = default;
  // Throws DomainError (lo >= hi, a > b > c, support outside [lo, hi]) or
  // DuplicateName.
  LinguisticVariable(std::string name, double lo, double hi, std::vector<Term> terms);

  const std::string& name() const noexcept { return name_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term* find_term(std::string_view term) const;

  bool operator==(const LinguisticVariable&) const = default;

 private:
  std::string name_;
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::vector<Term> terms_;
};

// Throws DomainError when the triple is not ordered or leaves [lo, hi].
void validate_triangle(const TriangularMF& mf, double lo, double hi, std::string_view where);

struct Condition {
  std::string variable;
  std::string term;

  bool operator==(const Condition&) const = default;
};

struct Rule {
  std::vector<Condition> antecedents;
  Condition consequent;

  bool operator==(const Rule&) const = default;
};

// Term degrees per variable: variable -> term -> degree.
using TermDegrees = std::map<std::string, double, std::less<>>;
using FuzzifiedInputs = std::map<std::string, TermDegrees, std::less<>>;

// Two inputs (similarity_lower, similarity_upper on [0,1]), one output
// (rank on [0,5]), a nonempty rule base and the centroid grid resolution.
class FisConfig {
 public:
  // Throws InvalidConfig for a wrong variable layout or empty rule base,
  // UnknownTerm for dangling rule references.
  FisConfig(LinguisticVariable lower, LinguisticVariable upper, LinguisticVariable output,
            std::vector<Rule> rules, std::size_t resolution = kDefaultResolution);

  const LinguisticVariable& lower() const noexcept { return lower_; }
  const LinguisticVariable& upper() const noexcept { return upper_; }
  const LinguisticVariable& output() const noexcept { return output_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t resolution() const noexcept { return resolution_; }

  const LinguisticVariable* find_variable(std::string_view name) const;

  FisConfig with_resolution(std::size_t resolution) const;
  FisConfig with_rules(std::vector<Rule> rules) const;
  // Replaces the terms of one variable, keeping everything else.
  FisConfig with_variable(LinguisticVariable variable) const;

  bool operator==(const FisConfig&) const = default;

 private:
  LinguisticVariable lower_;
  LinguisticVariable upper_;
  LinguisticVariable output_;
  std::vector<Rule> rules_;
  std::size_t resolution_;
};

// Degree of every term at x, with x clamped to the variable's domain.
std::map<std::string, double, std::less<>> fuzzify(const LinguisticVariable& variable, double x);

// Min over antecedent degrees. Throws UnknownVariableOrTerm.
double rule_strength(const Rule& rule, const FuzzifiedInputs& inputs);

// Aggregated output membership sampled on `values.size()` evenly spaced
// points spanning [lo, hi] inclusive.
struct AggregateCurve {
  double lo = 0.0;
  double hi = 5.0;
  std::vector<double> values;

  double z(std::size_t i) const;
};

AggregateCurve infer(const FisConfig& config, double lower, double upper);

// Discrete centroid sum(z m) / sum(m). Throws ZeroAggregate when the total
// mass is below 1e-12.
double defuzzify_centroid(const AggregateCurve& curve);

double rank(const FisConfig& config, double lower, double upper);

}  // namespace frsim
