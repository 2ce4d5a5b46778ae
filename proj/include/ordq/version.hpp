#ifndef ORDQ_VERSION_HPP
#define ORDQ_VERSION_HPP

namespace ordq {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // ORDQ_VERSION_HPP
