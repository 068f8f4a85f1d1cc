#ifndef RBA_TEST_HELPERS_HPP
#define RBA_TEST_HELPERS_HPP

#include <string>

#include <doctest.h>

#include "rba/suites.hpp"

namespace rba_test {

inline std::string fixture_dir() {
#ifdef RBA_FIXTURE_DIR
    return RBA_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

inline const rba::Fixtures& fixtures() {
    static rba::Fixtures fx = rba::load_fixtures(fixture_dir());
    return fx;
}

inline rba::ElementId el(const rba::AlgebraTable& a, const std::string& name) {
    auto e = a.find(name);
    REQUIRE_MESSAGE(e.has_value(), "no element named " << name);
    return *e;
}

}  // namespace rba_test

#endif
