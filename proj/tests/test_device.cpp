#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/device.hpp"
#include "dnne/errors.hpp"

#include <cmath>

using namespace dnne;
using namespace dnne::device;

TEST_CASE("area model: published design points") {
    // Pessimistic geometry: 200 um channels, 6 channel widths per side.
    DeviceConfig pess{196, 200.0, 6, {}};
    CHECK(area_mm2(pess) / 100.0 == doctest::Approx(553.19).epsilon(2e-5));

    // Optimistic geometry reported with the rounded 0.01 mm^2 per-cell
    // coefficient; the exact coefficient is (3*0.035)^2 = 0.011025.
    DeviceConfig opti{196, 35.0, 3, {}};
    CHECK(cell_area_mm2(opti) == doctest::Approx(0.011025).epsilon(1e-12));
    CHECK(area_mm2_published(opti) / 100.0 == doctest::Approx(3.8416).epsilon(1e-12));

    // Single microcell areas.
    DeviceConfig one_pess{1, 200.0, 6, {}};
    CHECK(area_mm2(one_pess) == doctest::Approx(1.44).epsilon(1e-12));
    DeviceConfig one_opti{1, 35.0, 3, {}};
    CHECK(area_mm2_published(one_opti) == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("area is exactly quadratic in k and in c") {
    DeviceConfig base{10, 50.0, 6, {}};
    DeviceConfig k2{20, 50.0, 6, {}};
    DeviceConfig c2{10, 100.0, 6, {}};
    CHECK(area_mm2(k2) / area_mm2(base) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(area_mm2(c2) / area_mm2(base) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("serialization factor is ceiling division") {
    CHECK(serialization_factor(784, 196) == 4);
    CHECK(serialization_factor(784, 49) == 16);
    CHECK(serialization_factor(784, 16) == 49);
    CHECK(serialization_factor(784, 4) == 196);
    CHECK(serialization_factor(10, 4) == 3);
    CHECK(serialization_factor(10, 16) == 1);
    CHECK_THROWS_AS(serialization_factor(0, 4), ArgumentError);
}

TEST_CASE("layer latency reproduces the published points") {
    const TimingConstants timing;
    CHECK(layer_latency_hours({784, 784}, timing) == doctest::Approx(8.07).epsilon(1e-9));
    CHECK(layer_latency_hours({784, 196}, timing) ==
          doctest::Approx(14.17).epsilon(1e-9));
    CHECK(std::abs(layer_latency_hours({784, 49}, timing) - 38.6) <= 0.1);
    CHECK(std::abs(layer_latency_hours({784, 16}, timing) - 105.6) <= 0.1);
    CHECK(std::abs(layer_latency_hours({784, 4}, timing) - 404.6) <= 0.1);
}

TEST_CASE("latency is affine in the serialization factor") {
    const TimingConstants timing;
    // Least-squares fit of latency against factor must be exact (residual
    // at machine scale) with slope transport+mult and intercept
    // merge+activation.
    const int n = 200;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int f = 1; f <= n; ++f) {
        const double x = f;
        const double y = layer_latency_hours(
            {static_cast<std::uint64_t>(f) * 64, 64}, timing);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    const double expect_slope = (timing.transport_s + timing.mult_s) / 3600.0;
    const double expect_intercept = (timing.merge_s + timing.activation_s()) / 3600.0;
    CHECK(slope == doctest::Approx(expect_slope).epsilon(1e-12));
    CHECK(intercept == doctest::Approx(expect_intercept).epsilon(1e-9));
    double max_resid = 0;
    for (int f = 1; f <= n; ++f) {
        const double y = layer_latency_hours(
            {static_cast<std::uint64_t>(f) * 64, 64}, timing);
        max_resid = std::max(max_resid, std::abs(y - (slope * f + intercept)));
    }
    CHECK(max_resid < 1e-9);
}

TEST_CASE("monotonicity in the array dimension") {
    const TimingConstants timing;
    double prev_latency = 1e300;
    double prev_area = 0.0;
    for (int k = 1; k <= 784; k *= 2) {
        const double lat =
            layer_latency_hours({784, static_cast<std::uint64_t>(k)}, timing);
        CHECK(lat <= prev_latency);
        prev_latency = lat;
        const double area = area_mm2({k, 200.0, 6, {}});
        CHECK(area >= prev_area);
        prev_area = area;
    }
}

TEST_CASE("default timing constants fit the published latency points") {
    const TimingConstants timing;
    const double u = (timing.transport_s + timing.mult_s) / 3600.0;
    const double v = (timing.merge_s + timing.activation_s()) / 3600.0;
    CHECK(u == doctest::Approx(2.0333).epsilon(1e-4));
    CHECK(v == doctest::Approx(6.0367).epsilon(1e-4));

    // RMS residual of the affine prediction against the four published
    // (factor, hours) points.
    const double factors[4] = {4, 16, 49, 196};
    const double hours[4] = {14.17, 38.6, 105.6, 404.6};
    double ss = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double resid = hours[i] - (factors[i] * u + v);
        ss += resid * resid;
    }
    CHECK(std::sqrt(ss / 4.0) < 0.05);
}

TEST_CASE("explore covers the published table and validates input") {
    const auto rows = explore(paper_configs(), {784, 784, 10});
    REQUIRE(rows.size() == 4);
    const double pess[4] = {553.19, 34.57, 3.69, 0.23};
    const double opti[4] = {3.84, 0.24, 0.03, 0.002};
    const double hrs[4] = {14.17, 38.6, 105.6, 404.6};
    const std::uint64_t ser[4] = {4, 16, 49, 196};
    for (int i = 0; i < 4; ++i) {
        CHECK(std::abs(rows[i].area_pessimistic_cm2 - pess[i]) <= 0.01);
        const double area_tol = i == 3 ? 0.001 : 0.01;
        CHECK(std::abs(rows[i].area_optimistic_cm2 - opti[i]) <= area_tol);
        CHECK(std::abs(rows[i].exec_time_per_layer_hr - hrs[i]) <= 0.1);
        CHECK(rows[i].serialization_input == ser[i]);
        CHECK(rows[i].serialization_hidden == ser[i]);
        CHECK(rows[i].serialization_output == (i == 3 ? 3 : 1));
    }

    CHECK_THROWS_AS(explore({}, {784, 784, 10}), ArgumentError);
    CHECK_THROWS_AS(explore(paper_configs(), {}), ArgumentError);
}

TEST_CASE("explore CSV golden") {
    const auto rows = explore(paper_configs(), {784, 784, 10});
    const auto csv = explore_csv(rows);
    const std::string expected =
        "config_name,cells_per_side,area_pessimistic_cm2,area_optimistic_cm2,"
        "exec_time_per_layer_hr,serialization_input,serialization_hidden,"
        "serialization_output\n"
        "Config-1,196,553.190400,3.841600,14.170000,4,4,1\n"
        "Config-2,49,34.574400,0.240100,38.570000,16,16,1\n"
        "Config-3,16,3.686400,0.025600,105.670000,49,49,1\n"
        "Config-4,4,0.230400,0.001600,404.570000,196,196,3\n";
    CHECK(csv == expected);
}

TEST_CASE("config validation") {
    DeviceConfig bad{0, 200.0, 6, {}};
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
    TimingConstants t;
    t.mult_s = -1.0;
    CHECK_THROWS_AS(t.validate(), ArgumentError);
}
