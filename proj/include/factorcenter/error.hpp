#ifndef FACTORCENTER_ERROR_HPP
#define FACTORCENTER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fc {

/// Input violates a documented precondition or schema.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap (group order, subgroup count, search degree) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_group_order = 10080;
  std::size_t max_subgroups = 200000;
  int max_search_degree = 12;
  std::size_t max_search_multisets = 5000000;
};

/// Defaults, with FACTORCENTER_MAX_GROUP_ORDER applied when set.
const Limits& default_limits();

}  // namespace fc

#endif  // FACTORCENTER_ERROR_HPP
