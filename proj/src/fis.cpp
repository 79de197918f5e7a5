#include "frsim/fis.hpp"

#include <algorithm>
#include <set>

#include "frsim/error.hpp"

namespace frsim {

double mf_eval(const TriangularMF& mf, double x) {
  if (x < mf.a || x > mf.c) return 0.0;
  if (x == mf.b) return 1.0;
  if (x < mf.b) return (x - mf.a) / (mf.b - mf.a);
  return (mf.c - x) / (mf.c - mf.b);
}

void validate_triangle(const TriangularMF& mf, double lo, double hi, std::string_view where) {
  if (!(mf.a <= mf.b && mf.b <= mf.c)) {
    throw Error(ErrorKind::DomainError,
                std::string(where) + ": triangle parameters must satisfy a <= b <= c");
  }
  if (mf.a < lo || mf.c > hi) {
    throw Error(ErrorKind::DomainError,
                std::string(where) + ": triangle support leaves the variable domain");
  }
}

LinguisticVariable::LinguisticVariable(std::string name, double lo, double hi,
                                       std::vector<Term> terms)
    : name_(std::move(name)), lo_(lo), hi_(hi), terms_(std::move(terms)) {
  if (!(lo_ < hi_)) {
    throw Error(ErrorKind::DomainError, "variable '" + name_ + "' needs lo < hi");
  }
  std::set<std::string_view> seen;
  for (const Term& t : terms_) {
    if (!seen.insert(t.name).second) {
      throw Error(ErrorKind::DuplicateName, "duplicate term '" + t.name + "' in '" + name_ + "'");
    }
    validate_triangle(t.mf, lo_, hi_, name_ + "." + t.name);
  }
}

const Term* LinguisticVariable::find_term(std::string_view term) const {
  for (const Term& t : terms_) {
    if (t.name == term) return &t;
  }
  return nullptr;
}

FisConfig::FisConfig(LinguisticVariable lower, LinguisticVariable upper,
                     LinguisticVariable output, std::vector<Rule> rules, std::size_t resolution)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      resolution_(resolution) {
  auto expect = [](const LinguisticVariable& v, std::string_view name, double lo, double hi) {
    if (v.name() != name) {
      throw Error(ErrorKind::InvalidConfig,
                  "expected variable '" + std::string(name) + "', found '" + v.name() + "'");
    }
    if (v.lo() != lo || v.hi() != hi) {
      throw Error(ErrorKind::InvalidConfig, "variable '" + v.name() + "' must span [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) +
                                                "]");
    }
    if (v.terms().empty()) {
      throw Error(ErrorKind::InvalidConfig, "variable '" + v.name() + "' has no terms");
    }
  };
  expect(lower_, kLowerVariable, 0.0, 1.0);
  expect(upper_, kUpperVariable, 0.0, 1.0);
  expect(output_, kRankVariable, 0.0, 5.0);
  if (rules_.empty()) throw Error(ErrorKind::InvalidConfig, "rule base is empty");
  if (resolution_ < 2) throw Error(ErrorKind::InvalidConfig, "resolution must be at least 2");

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    const std::string where = "rule " + std::to_string(i + 1);
    if (r.antecedents.empty()) throw Error(ErrorKind::InvalidConfig, where + " has no conditions");
    for (const Condition& c : r.antecedents) {
      if (c.variable != kLowerVariable && c.variable != kUpperVariable) {
        throw Error(ErrorKind::UnknownTerm, where + ": '" + c.variable + "' is not an input");
      }
      if (!find_variable(c.variable)->find_term(c.term)) {
        throw Error(ErrorKind::UnknownTerm,
                    where + ": unknown term '" + c.term + "' of '" + c.variable + "'");
      }
    }
    if (r.consequent.variable != kRankVariable) {
      throw Error(ErrorKind::InvalidConfig, where + ": consequent must be the output variable");
    }
    if (!output_.find_term(r.consequent.term)) {
      throw Error(ErrorKind::UnknownTerm,
                  where + ": unknown term '" + r.consequent.term + "' of 'rank'");
    }
  }
}

const LinguisticVariable* FisConfig::find_variable(std::string_view name) const {
  if (name == lower_.name()) return &lower_;
  if (name == upper_.name()) return &upper_;
  if (name == output_.name()) return &output_;
  return nullptr;
}

FisConfig FisConfig::with_resolution(std::size_t resolution) const {
  return FisConfig(lower_, upper_, output_, rules_, resolution);
}

FisConfig FisConfig::with_rules(std::vector<Rule> rules) const {
  return FisConfig(lower_, upper_, output_, std::move(rules), resolution_);
}

FisConfig FisConfig::with_variable(LinguisticVariable variable) const {
  LinguisticVariable lower = lower_;
  LinguisticVariable upper = upper_;
  LinguisticVariable output = output_;
  if (variable.name() == lower.name()) {
    lower = std::move(variable);
  } else if (variable.name() == upper.name()) {
    upper = std::move(variable);
  } else if (variable.name() == output.name()) {
    output = std::move(variable);
  } else {
    throw Error(ErrorKind::UnknownVariableOrTerm, "no variable named '" + variable.name() + "'");
  }
  return FisConfig(std::move(lower), std::move(upper), std::move(output), rules_, resolution_);
}

std::map<std::string, double, std::less<>> fuzzify(const LinguisticVariable& variable,
                                                   double x) {
  const double clamped = std::clamp(x, variable.lo(), variable.hi());
  std::map<std::string, double, std::less<>> degrees;
  for (const Term& t : variable.terms()) degrees[t.name] = mf_eval(t.mf, clamped);
  return degrees;
}

double rule_strength(const Rule& rule, const FuzzifiedInputs& inputs) {
  double strength = 1.0;
  for (const Condition& c : rule.antecedents) {
    auto var = inputs.find(c.variable);
    if (var == inputs.end()) {
      throw Error(ErrorKind::UnknownVariableOrTerm, "variable '" + c.variable + "' not fuzzified");
    }
    auto term = var->second.find(c.term);
    if (term == var->second.end()) {
      throw Error(ErrorKind::UnknownVariableOrTerm,
                  "term '" + c.term + "' of '" + c.variable + "' not fuzzified");
    }
    strength = std::min(strength, term->second);
  }
  return strength;
}

double AggregateCurve::z(std::size_t i) const {
  if (values.size() < 2) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(values.size() - 1);
}

AggregateCurve infer(const FisConfig& config, double lower, double upper) {
  FuzzifiedInputs inputs;
  inputs.emplace(config.lower().name(), fuzzify(config.lower(), lower));
  inputs.emplace(config.upper().name(), fuzzify(config.upper(), upper));

  const LinguisticVariable& out = config.output();
  AggregateCurve curve{out.lo(), out.hi(), std::vector<double>(config.resolution(), 0.0)};
  for (const Rule& rule : config.rules()) {
    const double strength = rule_strength(rule, inputs);
    if (strength <= 0.0) continue;
    const TriangularMF& mf = out.find_term(rule.consequent.term)->mf;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      const double clipped = std::min(strength, mf_eval(mf, curve.z(i)));
      curve.values[i] = std::max(curve.values[i], clipped);
    }
  }
  return curve;
}

double defuzzify_centroid(const AggregateCurve& curve) {
  if (curve.values.size() < 2) {
    throw Error(ErrorKind::InvalidConfig, "aggregate curve needs at least 2 samples");
  }
  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    mass += curve.values[i];
    moment += curve.z(i) * curve.values[i];
  }
  if (mass < 1e-12) throw Error(ErrorKind::ZeroAggregate, "no rule fired");
  return moment / mass;
}

double rank(const FisConfig& config, double lower, double upper) {
  return defuzzify_centroid(infer(config, lower, upper));
}

}  // namespace frsim
