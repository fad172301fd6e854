#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lanslab {

/// Structured rejection of a parameter tuple; lists every violated condition.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string context, std::vector<std::string> violations)
      : std::invalid_argument(context + ": " + join(violations)),
        context_(std::move(context)),
        violations_(std::move(violations)) {}

  const std::string& context() const { return context_; }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
  }

  std::string context_;
  std::vector<std::string> violations_;
};

/// Collects failed conditions and throws them together.
class ConditionList {
 public:
  explicit ConditionList(std::string context) : context_(std::move(context)) {}
  void require(bool ok, const std::string& condition) {
    if (!ok) violations_.push_back(condition);
  }
  void throw_if_any() const {
    if (!violations_.empty()) throw ParameterError(context_, violations_);
  }

 private:
  std::string context_;
  std::vector<std::string> violations_;
};

}  // namespace lanslab
