#ifndef STARLIKE_VERSION_HPP
#define STARLIKE_VERSION_HPP

#include <string_view>

namespace starlike
{

inline constexpr std::string_view version = "0.1.0";

} // namespace starlike

#endif
