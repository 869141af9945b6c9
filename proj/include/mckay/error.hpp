#ifndef MCKAY_ERROR_HPP_
#define MCKAY_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class Errc {
  CapExceeded,
  NotSpecialLinear,
  InvalidParameter,
  NotDiagonal,
  SymmetryBroken,
  NoEquivariantTriangulation,
  VerificationFailed,
  UnsupportedCase,
  UnsupportedFormat,
  Parse,
  Arithmetic,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
    : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }
private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

} // namespace mckay

#endif
