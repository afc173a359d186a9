#include <doctest.h>

#include <cmath>
#include <random>

#include "ptbath/gaussian.hpp"

using namespace ptbath;

namespace {

GaussianState random_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> nbar(0.0, 20.0);
    std::uniform_real_distribution<double> disp(-5.0, 5.0);
    std::uniform_real_distribution<double> sq(-1.5, 1.5);
    GaussianState s = thermal_state(ThermalOccupation{nbar(rng)});
    s = squeeze(s, sq(rng));
    return displace(s, disp(rng), disp(rng));
}

}  // namespace

TEST_CASE("thermal_state") {
    const GaussianState vac = thermal_state(ThermalOccupation{0.0});
    CHECK(vac.sigma().qq == 1.0);
    CHECK(vac.sigma().pp == 1.0);
    CHECK(vac.sigma().qp == 0.0);
    CHECK(vac.d().q == 0.0);

    const GaussianState th = thermal_state(ThermalOccupation{2.0});
    CHECK(th.sigma().qq == 5.0);
    CHECK(th.sigma().pp == 5.0);

    // occupation of a bath with beta*omega = 0.2
    const double nbar = 1.0 / std::expm1(0.2);
    const GaussianState warm = thermal_state(ThermalOccupation{nbar});
    CHECK(warm.sigma().qq == doctest::Approx(10.0333111322539896).epsilon(1e-12));

    CHECK_THROWS_AS(ThermalOccupation{-0.1}, std::domain_error);
}

TEST_CASE("displace") {
    const GaussianState a = displace(thermal_state(ThermalOccupation{0.0}), 1.0, 1.0);
    CHECK(a.d().q == 1.0);
    CHECK(a.d().p == 1.0);
    CHECK(a.sigma().qq == 1.0);

    // Fig-3 initial state
    const GaussianState b = displace(thermal_state(ThermalOccupation{2.0}), 1.0, 1.0);
    CHECK(b.d().q == 1.0);
    CHECK(b.sigma().qq == 5.0);

    const GaussianState c = displace(displace(b, 1.0, 0.0), -1.0, 0.0);
    CHECK(c.d().q == b.d().q);
    CHECK(c.d().p == b.d().p);
}

TEST_CASE("squeeze") {
    const GaussianState vac = thermal_state(ThermalOccupation{0.0});
    const GaussianState same = squeeze(vac, 0.0);
    CHECK(same.sigma().qq == 1.0);
    CHECK(same.sigma().pp == 1.0);

    const double r = 0.7;
    const GaussianState sq = squeeze(vac, r);
    CHECK(sq.sigma().qq == doctest::Approx(std::exp(-2.0 * r)).epsilon(1e-14));
    CHECK(sq.sigma().pp == doctest::Approx(std::exp(2.0 * r)).epsilon(1e-14));
    CHECK(sq.sigma().det() == doctest::Approx(1.0).epsilon(1e-12));

    const GaussianState th = squeeze(thermal_state(ThermalOccupation{2.0}), 0.5);
    CHECK(th.sigma().det() == doctest::Approx(25.0).epsilon(1e-12));

    CHECK_THROWS_AS(squeeze(vac, std::nan("")), std::invalid_argument);
}

TEST_CASE("symplectic_eigenvalue") {
    CHECK(symplectic_eigenvalue(thermal_state(ThermalOccupation{0.0})) == 1.0);
    CHECK(symplectic_eigenvalue(thermal_state(ThermalOccupation{2.0})) ==
          doctest::Approx(5.0).epsilon(1e-14));
    CHECK(symplectic_eigenvalue(squeeze(thermal_state(ThermalOccupation{2.0}), 1.3)) ==
          doctest::Approx(5.0).epsilon(1e-12));

    // det just below 1 is clamped; far below is rejected
    const GaussianState nearly_pure({}, Mat2::scaled_identity(1.0 - 2e-10));
    CHECK(symplectic_eigenvalue(nearly_pure) == 1.0);
    CHECK_THROWS_AS(GaussianState({}, Mat2::scaled_identity(0.5)), std::domain_error);
}

TEST_CASE("von_neumann_entropy") {
    CHECK(von_neumann_entropy(thermal_state(ThermalOccupation{0.0})) == 0.0);
    CHECK(von_neumann_entropy(thermal_state(ThermalOccupation{2.0})) ==
          doctest::Approx(1.90954250488443846).epsilon(1e-13));
    CHECK(von_neumann_entropy(thermal_state(ThermalOccupation{2.5})) ==
          doctest::Approx(2.09394356004840032).epsilon(1e-13));
    CHECK(thermal_entropy(ThermalOccupation{2.0}) ==
          doctest::Approx(3.0 * std::log(3.0) - 2.0 * std::log(2.0)).epsilon(1e-14));

    // monotone in nu
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double nu = 1.0 + 99.0 * i / 200.0;
        const GaussianState s({}, Mat2::scaled_identity(nu));
        const double ent = von_neumann_entropy(s);
        CHECK(ent > prev);
        prev = ent;
    }
}

TEST_CASE("reference_occupation") {
    CHECK(reference_occupation(thermal_state(ThermalOccupation{0.0})).nbar == 0.0);
    const GaussianState fig3 =
        displace(thermal_state(ThermalOccupation{2.0}), 1.0, 1.0);
    CHECK(reference_occupation(fig3).nbar == doctest::Approx(2.5).epsilon(1e-14));
    for (double n : {0.0, 0.3, 2.0, 17.5})
        CHECK(reference_occupation(thermal_state(ThermalOccupation{n})).nbar ==
              doctest::Approx(n).epsilon(1e-14));
}

TEST_CASE("coherence") {
    CHECK(coherence(thermal_state(ThermalOccupation{2.0})) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
    const GaussianState fig3 =
        displace(thermal_state(ThermalOccupation{2.0}), 1.0, 1.0);
    CHECK(coherence(fig3) == doctest::Approx(0.184401055163961867).epsilon(1e-12));
    const GaussianState dvac =
        displace(thermal_state(ThermalOccupation{0.0}), 1.0, 1.0);
    CHECK(coherence(dvac) == doctest::Approx(0.954771252442219228).epsilon(1e-12));

    for (double n = 0.0; n <= 100.0; n += 2.5)
        CHECK(std::abs(coherence(thermal_state(ThermalOccupation{n}))) <= 1e-12);
}

TEST_CASE("mean_energy") {
    const GaussianState vac = thermal_state(ThermalOccupation{0.0});
    CHECK(mean_energy(vac, 1.0) == 0.5);
    CHECK(mean_energy(thermal_state(ThermalOccupation{2.0}), 1.0,
                      EnergyTerms::CovarianceOnly) == doctest::Approx(2.5));
    const GaussianState fig3 =
        displace(thermal_state(ThermalOccupation{2.0}), 1.0, 1.0);
    CHECK(mean_energy(fig3, 1.0) == doctest::Approx(3.5).epsilon(1e-14));
    CHECK_THROWS_AS(mean_energy(vac, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mean_energy(vac, -1.0), std::invalid_argument);
}

TEST_CASE("random-state properties") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 10000; ++i) {
        const GaussianState s = random_state(rng);
        CHECK(s.sigma().det() >= 1.0 - 1e-12);
        CHECK(std::abs(s.sigma().qp - s.sigma().pq) <= 1e-12);
        CHECK(coherence(s) >= -1e-12);
        CHECK(von_neumann_entropy(s) >= 0.0);
        const double diff =
            mean_energy(s, 1.0) - mean_energy(s, 1.0, EnergyTerms::CovarianceOnly);
        CHECK(std::abs(diff - s.d().norm_sq() / 2.0) <= 1e-13 * mean_energy(s, 1.0));
    }
}

TEST_CASE("squeeze invariance of the symplectic eigenvalue") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rdist(-2.0, 2.0);
    std::uniform_real_distribution<double> ndist(0.0, 20.0);
    for (int i = 0; i < 2000; ++i) {
        const GaussianState s = thermal_state(ThermalOccupation{ndist(rng)});
        const double nu = symplectic_eigenvalue(s);
        CHECK(symplectic_eigenvalue(squeeze(s, rdist(rng))) ==
              doctest::Approx(nu).epsilon(1e-10));
    }
}
