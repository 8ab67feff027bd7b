#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqres {

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

/// Symbol table for Q[parameters][main variables].
///
/// Symbols are indexed main variables first, then parameters. Only main
/// variables carry weight in the grading. `split()` is the size of the first
/// variable block; a split of 0 marks a context with no block structure
/// (coefficient rings, plain resultant inputs).
class RingContext {
 public:
  /// Block-split context; requires 1 <= split < main.size().
  static ContextPtr make(std::vector<std::string> main, std::vector<std::string> params,
                         std::size_t split);
  /// Context without a block split (split() == 0).
  static ContextPtr make_unsplit(std::vector<std::string> main, std::vector<std::string> params);
  /// Parameters only; used as the coefficient ring of resultants.
  static ContextPtr coefficients(std::vector<std::string> params);

  std::size_t num_main() const noexcept { return main_.size(); }
  std::size_t num_params() const noexcept { return params_.size(); }
  std::size_t num_symbols() const noexcept { return main_.size() + params_.size(); }
  std::size_t split() const noexcept { return split_; }

  const std::vector<std::string>& main_names() const noexcept { return main_; }
  const std::vector<std::string>& param_names() const noexcept { return params_; }

  const std::string& name(std::size_t symbol) const;
  bool is_main(std::size_t symbol) const noexcept { return symbol < main_.size(); }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Like find() but throws ContextError for undeclared names.
  std::size_t index(const std::string& name) const;

  bool operator==(const RingContext& other) const {
    return split_ == other.split_ && main_ == other.main_ && params_ == other.params_;
  }

 private:
  RingContext(std::vector<std::string> main, std::vector<std::string> params, std::size_t split);

  std::vector<std::string> main_;
  std::vector<std::string> params_;
  std::size_t split_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace eqres
