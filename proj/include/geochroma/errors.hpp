#pragma once

#include <stdexcept>
#include <string>

namespace geochroma {

/// A discrete candidate search ran out of candidates. Carries a diagnostic
/// message naming the search and the instance size.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geochroma
