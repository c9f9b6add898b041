#include "support/checks.hpp"

#include <doctest.h>

namespace {

constexpr std::size_t cases = 10'000;
constexpr std::uint64_t seed = 7;

void expect(const checks::Outcome& o) {
    INFO("cases=" << o.cases << " failures=" << o.failures);
    for (const auto& e : o.examples)
        INFO(e);
    CHECK(o.cases >= cases);
    CHECK(o.failures == 0);
    for (const auto& e : o.examples)
        MESSAGE(e);
}

} // namespace

TEST_CASE("key alphabet") { expect(checks::key_alphabet(cases, seed)); }
TEST_CASE("clean is idempotent and stays in the alphabet") { expect(checks::clean_idempotence(cases, seed)); }
TEST_CASE("dedup collapses every run") { expect(checks::dedup_collapse(cases, seed)); }
TEST_CASE("keys never grow") { expect(checks::non_expansion(cases, seed)); }
TEST_CASE("edit distance is a metric") { expect(checks::edit_distance_metric(cases, seed)); }
TEST_CASE("buckets partition the forms") { expect(checks::index_partition(cases, seed)); }
TEST_CASE("rebuilds are byte-identical") { expect(checks::rebuild_determinism(cases, seed)); }
TEST_CASE("traces replay") { expect(checks::trace_replay(cases, seed)); }

TEST_CASE("oracle equivalence on a smaller draw") {
    const auto o = checks::oracle_equivalence(5'000, seed + 1);
    for (const auto& e : o.examples)
        MESSAGE(e);
    CHECK(o.failures == 0);
}

TEST_CASE("variant recall") {
    CHECK(checks::surname_variant_recall(300, seed).ok());
    CHECK(checks::medicine_pair_recall(150, seed).ok());
}
