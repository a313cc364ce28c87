#ifndef ROOTADJ_ERRORS_HPP
#define ROOTADJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootadj {

/// Library-wide exception.  `code()` is a stable machine-readable name
/// (DuplicateName, MissingCap, InfiniteSlice, ...) used by the CLI to map
/// failures onto exit statuses and by tests to pin down the error path.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

} // namespace rootadj

#endif
