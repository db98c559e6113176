#include <doctest.h>

#include <map>

#include "subcode/channel.hpp"
#include "subcode/errors.hpp"
#include "support.hpp"

using namespace subcode;
using namespace subcode::testing;

TEST_CASE("CounterRng is SplitMix64 for a fresh seed") {
    CounterRng rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CounterRng a(5), b(5);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(a.split(1).next() != a.split(2).next());
    CHECK(a.split(1).next() == b.split(1).next());
}

TEST_CASE("uniform draws stay in range and cover it") {
    CounterRng rng(1);
    std::map<std::uint64_t, int> hist;
    for (int i = 0; i < 7000; ++i) ++hist[rng.uniform(7)];
    CHECK(hist.size() == 7);
    for (auto [v, n] : hist) {
        CHECK(v < 7);
        CHECK(n > 800);
        CHECK(n < 1200);
    }
    CHECK_THROWS(rng.uniform(0));
}

TEST_CASE("random_subspace_of edge cases") {
    auto f = gf(3);
    CounterRng rng(2);
    const Subspace v = sub(f, {{1, 0, 2, 0}, {0, 1, 1, 1}, {0, 0, 0, 1}});
    CHECK(random_subspace_of(v, 3, rng) == v);
    CHECK(random_subspace_of(v, 0, rng).dim() == 0);
    for (int i = 0; i < 30; ++i) {
        const Subspace s = random_subspace_of(v, 2, rng);
        CHECK(s.dim() == 2);
        CHECK(stack_dims(s.generator(), v.generator()).intersection == 2);
    }
    CHECK_THROWS_AS(random_subspace_of(v, 4, rng), InvalidArgument);
}

TEST_CASE("random lines of GF(2)^2 are uniform") {
    auto f = gf(2);
    const Subspace plane = sub(f, {{1, 0}, {0, 1}});
    CounterRng rng(2718);
    std::map<std::vector<Elem>, int> hist;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++hist[random_subspace_of(plane, 1, rng).generator().entries()];
    REQUIRE(hist.size() == 3);
    for (const auto& [line, n] : hist) {
        CHECK(static_cast<double>(n) / draws > 1.0 / 3 - 0.05);
        CHECK(static_cast<double>(n) / draws < 1.0 / 3 + 0.05);
    }
}

TEST_CASE("transmit examples") {
    auto f = gf(2);
    const Subspace u = sub(f, {{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}});
    CHECK(transmit(u, {0, 0, 9}) == u);

    const Subspace erased = transmit(u, {1, 0, 9});
    CHECK(erased.dim() == 1);
    CHECK(stack_dims(erased.generator(), u.generator()).intersection == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Subspace grown = transmit(u, {0, 1, seed});
        CHECK(grown.dim() == 3);
        CHECK(stack_dims(grown.generator(), u.generator()).intersection == 2);
        CHECK(injection_distance(u, grown) == 1);
    }
}

TEST_CASE("transmit contract over many seeds") {
    auto f = gf(3);
    CounterRng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 5, k = 1 + rng.uniform(3);
        Matrix g = random_matrix(f, k, n, rng);
        while (rank(g) < k) g = random_matrix(f, k, n, rng);
        const Subspace u = Subspace::canonicalize(g);
        const std::size_t rho = rng.uniform(k + 1);
        const std::size_t t = rng.uniform(n - (k - rho) + 1);
        const ChannelConfig cfg{rho, t, rng.next()};
        const Transmission tx = transmit_detailed(u, cfg);
        CHECK(tx.received.dim() == k - rho + t);
        CHECK(tx.retained.dim() == k - rho);
        CHECK(stack_dims(tx.retained.generator(), u.generator()).intersection == k - rho);
        CHECK(stack_dims(tx.retained.generator(), tx.received.generator()).intersection == k - rho);
        CHECK(stack_dims(tx.retained.generator(), tx.error.generator()).intersection == 0);
        CHECK(stack_dims(tx.received.generator(), u.generator()).intersection >= k - rho);
        CHECK(transmit(u, cfg) == tx.received);
    }
}

TEST_CASE("transmit rejects infeasible dimensions") {
    auto f = gf(2);
    const Subspace u = sub(f, {{1, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(transmit(u, {3, 0, 1}), Infeasible);
    CHECK_THROWS_AS(transmit(u, {0, 2, 1}), Infeasible);
    CHECK(transmit(u, {2, 3, 1}).dim() == 3);
}
