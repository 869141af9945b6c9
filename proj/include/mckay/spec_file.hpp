#ifndef MCKAY_SPEC_FILE_HPP_
#define MCKAY_SPEC_FILE_HPP_

#include <string>
#include <string_view>

#include "mckay/group.hpp"

namespace mckay {

/// Group spec files are JSON in one of two forms:
///   {"case": "I".."V", "r": n}          ("r" may be omitted for case V)
///   {"generators": [{"perm": [p0,p1,p2], "phases": ["a/d","a/d","a/d"]}, ...]}
/// Errors name the offending field: Errc::Parse for malformed input,
/// Errc::InvalidParameter for bad (case, r), Errc::NotSpecialLinear for
/// generators outside SL(3,C).
GroupSpec parse_group_spec(std::string_view text);
GroupSpec load_group_spec(const std::string& path);

/// Inverse of parse_group_spec for the generator form.
std::string group_spec_json(const GroupSpec& spec);

} // namespace mckay

#endif
