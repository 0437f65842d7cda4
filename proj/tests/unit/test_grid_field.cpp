#include <doctest.h>

#include "helpers.hpp"
#include "tpwave/errors.hpp"

using namespace tpwave;
using namespace testutil;

TEST_SUITE("grid") {
  TEST_CASE("validate rejects odd, small and non-positive grids") {
    CHECK_NOTHROW(grid(4, 4).validate());
    for (GridSpec g : {grid(3, 4), grid(4, 5), grid(2, 4), grid(4, 2), grid(4, 4, -1.0), grid(4, 4, 1.0, 0.0)}) {
      try {
        g.validate();
        FAIL("expected InvalidGrid");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidGrid);
      }
    }
  }

  TEST_CASE("signed modes follow FFT order with positive Nyquist") {
    CHECK(signed_mode(0, 8) == 0);
    CHECK(signed_mode(4, 8) == 4);
    CHECK(signed_mode(5, 8) == -3);
    CHECK(signed_mode(7, 8) == -1);
    for (int m = -3; m <= 4; ++m) CHECK(signed_mode(mode_index(m, 8), 8) == m);
  }

  TEST_CASE("frequencies and spacing") {
    const GridSpec g = grid(8, 6, 3.0, 2.0);
    CHECK(g.time_freq(1) == doctest::Approx(std::numbers::pi));
    CHECK(g.time_freq(7) == doctest::Approx(-std::numbers::pi));
    CHECK(g.space_freq(3) == doctest::Approx(3 * 2 * std::numbers::pi / 3.0));
    CHECK(g.dx() == doctest::Approx(0.5));
    CHECK(g.size() == 8u * 216u);
    CHECK(g.spectral_size() == 8u * 36u * 4u);
  }
}

TEST_SUITE("field") {
  TEST_CASE("from_function samples in row-major (t, x1, x2, x3) order") {
    const GridSpec g = grid(4, 4, 4.0, 8.0);
    const Field f = Field::from_function(g, [](double t, double x, double y, double z) {
      return 1000 * t + 100 * x + 10 * y + z;
    });
    CHECK(f.at(1, 2, 3, 1) == doctest::Approx(1000 * 2.0 + 100 * 2.0 + 10 * 3.0 + 1.0));
    CHECK(f.samples()[g.index(1, 2, 3, 1)] == f.at(1, 2, 3, 1));
  }

  TEST_CASE("arithmetic and copies share immutable samples") {
    const GridSpec g = grid(4, 4);
    const Field a = Field::constant(g, 2.0);
    const Field b = Field::constant(g, 0.5);
    CHECK((a + b).at(0, 0, 0, 0) == 2.5);
    CHECK((a - b).at(3, 3, 3, 3) == 1.5);
    CHECK((3.0 * a).at(1, 1, 1, 1) == 6.0);
    CHECK(pointwise_product(a, b).at(2, 0, 1, 3) == 1.0);
    const Field c = a;
    CHECK(c.samples().data() == a.samples().data());
    CHECK(&c.spectrum() == &a.spectrum());
  }

  TEST_CASE("mismatched grids are rejected") {
    CHECK_THROWS_AS(Field::zeros(grid(4, 4)) + Field::zeros(grid(4, 6)), Error);
  }

  TEST_CASE("max_rel_diff") {
    const GridSpec g = grid(4, 4);
    CHECK(max_rel_diff(Field::constant(g, 1.1), Field::constant(g, 1.0)) == doctest::Approx(0.1));
    CHECK(max_rel_diff(Field::zeros(g), Field::zeros(g)) == 0.0);
  }
}
