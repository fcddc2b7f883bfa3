#include "aksch/extended_int.hpp"

#include <stdexcept>

namespace aksch {

std::int64_t ExtendedInt::value() const {
  if (infinite_) throw std::logic_error("ExtendedInt::value() on infinity");
  return value_;
}

std::string ExtendedInt::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedInt& x) { return os << x.to_string(); }

}  // namespace aksch
