#include <doctest.h>

#include <cmath>
#include <random>

#include "ptbath/otto.hpp"

using namespace ptbath;

namespace {

// Fig-5 parameters with hbar omega_i beta_hot = 1.
OttoCycleSpec fig5_spec(double eps) { return {1.0, 2.0, 4.0, 1.0, eps}; }

OttoCycleSpec random_spec(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double omega_i = 0.1 + 4.9 * u(rng);
    const double omega_f = omega_i * (1.0 + 0.01 + 3.0 * u(rng));
    const double beta_hot = 0.05 + 2.0 * u(rng);
    const double beta_cold = beta_hot * (1.0 + 0.01 + 5.0 * u(rng));
    return {omega_i, omega_f, beta_cold, beta_hot, 3.0 * u(rng)};
}

}  // namespace

TEST_CASE("stroke_energies signs and regimes") {
    const auto engine = stroke_energies(fig5_spec(0.0));
    CHECK(engine.regime == CycleRegime::Engine);
    CHECK(engine.w_net < 0.0);
    CHECK(engine.q2 > 0.0);
    CHECK(engine.q4 < 0.0);
    CHECK(engine.w1 + engine.w3 == doctest::Approx(engine.w_net).epsilon(1e-14));

    const auto fridge = stroke_energies(fig5_spec(1.5));
    CHECK(fridge.regime == CycleRegime::Refrigerator);
    CHECK(fridge.w_net > 0.0);
    CHECK(fridge.q2 < 0.0);
    CHECK(fridge.q4 > 0.0);

    // boundary: equal coth arguments, everything vanishes
    const OttoCycleSpec boundary{1.0, 2.0, 2.0, 1.0, 0.0};  // beta_eff w_f = beta_c w_i
    const auto b = stroke_energies(boundary);
    CHECK(std::abs(b.w_net) <= 1e-12);
    CHECK(std::abs(b.q2) <= 1e-12);
    CHECK(std::abs(b.q4) <= 1e-12);
    CHECK(b.regime == CycleRegime::Other);
    CHECK(!b.figure_of_merit);
}

TEST_CASE("classify_regime") {
    OttoCycleResult r;
    r.w_net = -1.0;
    r.q2 = 2.0;
    r.q4 = -1.0;
    CHECK(classify_regime(r) == CycleRegime::Engine);
    r.w_net = 1.0;
    r.q2 = -2.0;
    r.q4 = 1.0;
    CHECK(classify_regime(r) == CycleRegime::Refrigerator);
    r = OttoCycleResult{};
    CHECK(classify_regime(r) == CycleRegime::Other);
}

TEST_CASE("performance identities") {
    const auto engine = stroke_energies(fig5_spec(0.3));
    CHECK(performance(engine) == doctest::Approx(0.5).epsilon(1e-12));
    const auto fridge = stroke_energies(fig5_spec(1.2));
    CHECK(performance(fridge) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(performance(OttoCycleResult{}), std::domain_error);

    // efficiency is epsilon independent inside the engine window
    for (double eps : {0.0, 0.2, 0.5, 0.8})
        CHECK(performance(stroke_energies(fig5_spec(eps))) ==
              doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("critical_epsilon") {
    const auto eps_c = critical_epsilon(fig5_spec(0.0));
    REQUIRE(eps_c.has_value());
    CHECK(*eps_c == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));

    // all cycle energies vanish at the critical point
    const auto at_c = stroke_energies(fig5_spec(*eps_c));
    CHECK(std::abs(at_c.w_net) <= 1e-12);
    CHECK(std::abs(at_c.q2) <= 1e-12);
    CHECK(std::abs(at_c.q4) <= 1e-12);

    // beta_eff(eps_c) omega_f = beta_cold omega_i
    const OttoCycleSpec at{1.0, 2.0, 4.0, 1.0, *eps_c};
    CHECK(at.effective_beta_hot() * at.omega_f ==
          doctest::Approx(at.beta_cold * at.omega_i).epsilon(1e-12));

    // degenerate boundary and missing engine window
    CHECK(*critical_epsilon({1.0, 2.0, 2.0, 1.0, 0.0}) == 0.0);
    CHECK(!critical_epsilon({1.0, 2.0, 1.5, 1.0, 0.0}).has_value());
}

TEST_CASE("sweep_epsilon") {
    std::vector<double> grid;
    for (int i = 0; i <= 8; ++i) grid.push_back(0.25 * i);
    const auto results = sweep_epsilon(fig5_spec(0.0), grid);
    REQUIRE(results.size() == grid.size());

    // single engine -> refrigerator transition between 0.75 and 1.0
    int flips = 0;
    for (std::size_t i = 1; i < results.size(); ++i)
        if (results[i].regime != results[i - 1].regime) {
            ++flips;
            CHECK(grid[i - 1] == doctest::Approx(0.75));
            CHECK(grid[i] == doctest::Approx(1.0));
        }
    CHECK(flips == 1);

    CHECK(sweep_epsilon(fig5_spec(0.0), {0.0}).front().regime == CycleRegime::Engine);

    // no engine window: refrigerator across the whole grid
    for (const auto& r : sweep_epsilon({1.0, 2.0, 1.5, 1.0, 0.0}, grid))
        CHECK(r.regime == CycleRegime::Refrigerator);

    CHECK_THROWS_AS(sweep_epsilon(fig5_spec(0.0), {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_epsilon(fig5_spec(0.0), {-0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("random-spec properties") {
    std::mt19937_64 rng(20240818);
    for (int i = 0; i < 10000; ++i) {
        const OttoCycleSpec spec = random_spec(rng);
        const auto r = stroke_energies(spec);
        const double scale =
            std::max({std::abs(r.w_net), std::abs(r.q2), std::abs(r.q4), 1.0});
        CHECK(std::abs(r.w_net + r.q2 + r.q4) <= 1e-12 * scale);

        if (r.regime == CycleRegime::Engine) {
            CHECK(performance(r) == doctest::Approx(1.0 - spec.omega_i / spec.omega_f)
                                        .epsilon(1e-12));
            // Carnot bound at the effective hot temperature
            CHECK(1.0 - spec.omega_i / spec.omega_f <=
                  1.0 - spec.effective_beta_hot() / spec.beta_cold + 1e-12);
        } else if (r.regime == CycleRegime::Refrigerator) {
            CHECK(performance(r) ==
                  doctest::Approx(spec.omega_i / (spec.omega_f - spec.omega_i))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("no second regime crossing on a fine grid") {
    std::vector<double> grid;
    for (int i = 0; i <= 2000; ++i) grid.push_back(2.0 * i / 2000.0);
    const auto results = sweep_epsilon(fig5_spec(0.0), grid);
    const double eps_c = std::sqrt(3.0) / 2.0;
    int flips = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if ((results[i].w_net > 0.0) != (results[i - 1].w_net > 0.0)) ++flips;
        CHECK(((grid[i] < eps_c) == (results[i].w_net < 0.0)));
    }
    CHECK(flips == 1);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(OttoCycleSpec(2.0, 1.0, 4.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(OttoCycleSpec(1.0, 2.0, 1.0, 4.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(OttoCycleSpec(1.0, 2.0, 4.0, 1.0, -1.0), std::domain_error);
}
