#ifndef SYMDYN_VERSION_HPP
#define SYMDYN_VERSION_HPP

namespace symdyn {

constexpr int version_major = 0;
constexpr int version_minor = 1;
constexpr int version_patch = 0;
constexpr const char* version_string = "0.1.0";

} // namespace symdyn

#endif
