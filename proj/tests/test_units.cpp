#include <doctest.h>

#include <stdexcept>

#include "hhg1d/units.hpp"

using namespace hhg1d;

TEST_CASE("electron charge is negative") {
    CHECK(units::e0 < 0.0);
    CHECK(units::hbar == 1.0);
    CHECK(units::m_e == 1.0);
}

TEST_CASE("known conversions against CODATA arithmetic") {
    // 0.5 nm = 0.5 * 10 / 0.529177210903 Bohr
    CHECK(units::to_internal(0.5, units::Unit::nm) ==
          doctest::Approx(9.4486306231288508).epsilon(1e-12));
    // 3.2 eV = 3.2 / 27.211386245988 Hartree
    CHECK(units::to_internal(3.2, units::Unit::eV) ==
          doctest::Approx(0.11759783096209738).epsilon(1e-12));
    // 300 fs and 1 GV/m, same arithmetic
    CHECK(units::to_internal(300.0, units::Unit::fs) ==
          doctest::Approx(12402.412000554).epsilon(1e-10));
    CHECK(units::to_internal(1.0, units::Unit::gv_per_m) ==
          doctest::Approx(1.9446903811524e-3).epsilon(1e-10));
    CHECK(units::to_internal(3.0, units::Unit::um) ==
          doctest::Approx(56691.783738773).epsilon(1e-10));
}

TEST_CASE("zero maps to zero in any unit") {
    for (auto u : {units::Unit::nm, units::Unit::um, units::Unit::eV, units::Unit::fs,
                   units::Unit::gv_per_m}) {
        CHECK(units::to_internal(0.0, u) == 0.0);
        CHECK(units::from_internal(0.0, u) == 0.0);
    }
}

TEST_CASE("round trip is identity to 1e-12 relative") {
    const double magnitudes[] = {1e-6, 3.7e-3, 0.5, 1.0, 25.0, 3.2e4, 1.7e9};
    for (auto u : {units::Unit::nm, units::Unit::um, units::Unit::eV, units::Unit::fs,
                   units::Unit::gv_per_m}) {
        for (double x : magnitudes) {
            CHECK(units::from_internal(units::to_internal(x, u), u) ==
                  doctest::Approx(x).epsilon(1e-12));
        }
    }
}

TEST_CASE("unit tags parse; unknown tag rejected") {
    CHECK(units::parse_unit("nm") == units::Unit::nm);
    CHECK(units::parse_unit("um") == units::Unit::um);
    CHECK(units::parse_unit("μm") == units::Unit::um);
    CHECK(units::parse_unit("eV") == units::Unit::eV);
    CHECK(units::parse_unit("fs") == units::Unit::fs);
    CHECK(units::parse_unit("GV/m") == units::Unit::gv_per_m);
    CHECK_THROWS_AS(units::parse_unit("furlong"), std::invalid_argument);
}
