#ifndef GOALSEL_TEST_ORACLES_HPP
#define GOALSEL_TEST_ORACLES_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "goalsel/arguments.hpp"
#include "goalsel/attacks.hpp"
#include "goalsel/generator.hpp"
#include "goalsel/kb.hpp"
#include "goalsel/semantics.hpp"

// Independent reference implementations, deliberately written from the bare
// definitions so the production code can be checked against them.
namespace oracle {

using IndexPair = std::pair<std::size_t, std::size_t>;

// Support rebuttal seeded from the raw definition and closed under the two
// published inheritance rules by literal fixpoint iteration.
std::set<IndexPair> terminal_pairs(const goalsel::ArgumentSet& args);

// Resource overlap straight from the definition (no inheritance).
std::set<IndexPair> resource_pairs(const goalsel::ArgumentSet& args,
                                   const goalsel::KnowledgeBase& kb);

// Superfluity seeded from the raw definition, closed like support rebuttals,
// never relating structurally identical arguments.
std::set<IndexPair> superfluous_pairs(const goalsel::ArgumentSet& args);

// Every conflict-free subset of the framework by power-set scan.
std::set<std::vector<std::size_t>> conflict_free_bruteforce(const goalsel::Framework& af);

// Independent argument enumeration: canonical tree serial plus claim interval
// per argument, sorted. build_all output is rendered through serialize_tree
// for comparison.
struct Tree {
    std::string serial;
    goalsel::Interval interval;
    bool operator==(const Tree&) const = default;
    bool operator<(const Tree& o) const {
        if (serial != o.serial) return serial < o.serial;
        if (interval.l != o.interval.l) return interval.l < o.interval.l;
        return interval.u < o.interval.u;
    }
};
std::vector<Tree> enumerate_bruteforce(const goalsel::KnowledgeBase& kb);
Tree serialize_tree(const goalsel::Argument& a);

// Runs fn(kb, instance_index) on `count` generated knowledge bases.
template <typename F>
void for_each_random_kb(std::size_t count, std::uint64_t seed, F&& fn,
                        const goalsel::GeneratorParams& params = {}) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        fn(goalsel::random_kb(rng, params), i);
    }
}

// Fixture helpers.
std::string fixture_path(const std::string& name);
const goalsel::Argument* by_claim(const goalsel::ArgumentSet& args, const std::string& claim);
std::set<std::set<std::string>> claim_families(const std::vector<goalsel::Extension>& family,
                                               const goalsel::ArgumentSet& args);

// Directed pairs carrying the given type tag.
std::set<IndexPair> pairs_of(const std::vector<goalsel::Attack>& attacks,
                             goalsel::AttackType type);
std::set<IndexPair> all_pairs(const std::vector<goalsel::Attack>& attacks);

} // namespace oracle

#endif
