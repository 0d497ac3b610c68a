#ifndef CIRCLEPHASE_VERSION_HPP
#define CIRCLEPHASE_VERSION_HPP

namespace circlephase {

inline constexpr const char* version = "0.1.0";

}

#endif
