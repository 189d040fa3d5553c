#include "succession/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "succession/exact.hpp"
#include "succession/laws.hpp"

namespace succession::oracle {

namespace {

void record_failure(SuiteResult& suite, const std::string& what) {
    suite.failures += 1;
    if (suite.samples.size() < 8) suite.samples.push_back(what);
}

std::string describe(const FrequencyVector& fv, const SuccessionLaw& law) {
    std::ostringstream out;
    out << law.name() << " k=" << fv.alphabet_size() << " counts{";
    bool first = true;
    for (const auto& [j, f] : fv.frequency_of_frequencies()) {
        if (!first) out << ',';
        out << j << "x" << f;
        first = false;
    }
    out << "}";
    return out.str();
}

/// Sum of per-symbol conditionals over the whole alphabet, by count class.
double alphabet_mass(const FrequencyVector& fv, const SuccessionLaw& law) {
    double total = 0.0;
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        total += static_cast<double>(f) * count_conditional(fv, j, law);
    if (fv.novel_count() > 0)
        total += static_cast<double>(fv.novel_count()) * count_conditional(fv, 0, law);
    return total;
}

bool applicable(const SuccessionLaw& law, const FrequencyVector& fv) {
    if (fv.total() > 0) return true;
    return law.kind() != LawKind::sharpened_subsets &&
           law.kind() != LawKind::sharpened_cardinality;
}

}  // namespace

void for_each_composition(std::uint64_t k, std::uint64_t n,
                          const std::function<void(std::span<const std::int64_t>)>& fn) {
    std::vector<std::int64_t> counts(k, 0);
    const auto recurse = [&](auto&& self, std::uint64_t index, std::uint64_t left) -> void {
        if (index + 1 == k) {
            counts[index] = static_cast<std::int64_t>(left);
            fn(counts);
            return;
        }
        for (std::uint64_t c = 0; c <= left; ++c) {
            counts[index] = static_cast<std::int64_t>(c);
            self(self, index + 1, left - c);
        }
    };
    recurse(recurse, 0, n);
}

std::vector<SuccessionLaw> standard_laws() {
    std::vector<SuccessionLaw> laws = {
        SuccessionLaw::laplace(),
        SuccessionLaw::lidstone(0.25),
        SuccessionLaw::jeffreys_perks(),
        SuccessionLaw::lidstone(1.0),
        SuccessionLaw::lidstone(2.0),
        SuccessionLaw::uniform_subsets(),
        SuccessionLaw::natural(),
        SuccessionLaw::sharpened_subsets(),
        SuccessionLaw::sharpened_natural(),
        SuccessionLaw::method_a(),
        SuccessionLaw::method_b(),
        SuccessionLaw::method_c(),
        SuccessionLaw::method_d(),
    };
    for (double p : {0.25, 0.5, 0.75}) {
        laws.push_back(SuccessionLaw::absolute_discount(p));
        laws.push_back(SuccessionLaw::linear_discount(p));
    }
    return laws;
}

SuiteResult normalization_suite(std::uint64_t max_k, std::uint64_t max_n,
                                std::uint64_t random_vectors, std::uint64_t seed,
                                double rel_tol) {
    SuiteResult suite;
    suite.name = "normalization";
    const auto laws = standard_laws();

    const auto check = [&](const FrequencyVector& fv) {
        for (const auto& law : laws) {
            if (!applicable(law, fv)) continue;
            suite.cases += 1;
            const double err = std::abs(alphabet_mass(fv, law) - 1.0);
            suite.max_rel_error = std::max(suite.max_rel_error, err);
            if (!(err <= rel_tol)) record_failure(suite, describe(fv, law));
        }
    };

    for (std::uint64_t k = 1; k <= max_k; ++k)
        for (std::uint64_t n = 0; n <= max_n; ++n)
            for_each_composition(k, n, [&](std::span<const std::int64_t> counts) {
                check(FrequencyVector::from_counts(k, counts));
            });

    std::mt19937_64 rng(seed);
    const std::uint64_t alphabet_choices[] = {2, 3, 5, 256};
    for (std::uint64_t v = 0; v < random_vectors; ++v) {
        const std::uint64_t k = alphabet_choices[rng() % 4];
        const std::uint64_t b = 1 + rng() % k;  // sub-alphabet, varies q
        const std::uint64_t n = 1 + rng() % 10000;
        FrequencyVector fv(k);
        for (std::uint64_t t = 0; t < n; ++t) fv.observe(Symbol{rng() % b});
        check(fv);
    }
    return suite;
}

SuiteResult prior_equivalence_suite(std::uint64_t max_k, std::uint64_t max_n) {
    SuiteResult suite;
    suite.name = "prior equivalence";
    const std::vector<SuccessionLaw> laws = {
        SuccessionLaw::laplace(),        SuccessionLaw::uniform_subsets(),
        SuccessionLaw::natural(),        SuccessionLaw::jeffreys_perks(),
        SuccessionLaw::lidstone(1.0),    SuccessionLaw::lidstone(2.0),
    };

    for (std::uint64_t k = 1; k <= max_k; ++k)
        for (std::uint64_t n = 1; n <= max_n; ++n)
            for_each_composition(k, n, [&](std::span<const std::int64_t> counts) {
                const auto fv = FrequencyVector::from_counts(k, counts);
                for (const auto& law : laws) {
                    // One string-probability evaluation per count class,
                    // shared across the class's conditionals.
                    std::vector<std::pair<std::uint64_t, exact::Rational>> classes;
                    for (const auto& [j, f] : fv.frequency_of_frequencies())
                        classes.emplace_back(j, exact::Rational(f));
                    if (fv.novel_count() > 0)
                        classes.emplace_back(0, exact::Rational(fv.novel_count()));

                    std::map<std::uint64_t, exact::Rational> extended;
                    exact::Rational denom = 0;
                    for (const auto& [count, multiplicity] : classes) {
                        // Promote one symbol of this class.
                        std::vector<std::int64_t> raised(counts.begin(), counts.end());
                        if (count == 0) {
                            for (auto& c : raised)
                                if (c == 0) { c = 1; break; }
                        } else {
                            for (auto& c : raised)
                                if (c == static_cast<std::int64_t>(count)) { c += 1; break; }
                        }
                        const auto prob = exact::string_prob(
                            FrequencyVector::from_counts(k, raised), law);
                        extended.emplace(count, prob);
                        denom += multiplicity * prob;
                    }
                    for (const auto& [count, multiplicity] : classes) {
                        suite.cases += 1;
                        const exact::Rational via_prior = extended.at(count) / denom;
                        const exact::Rational direct = exact::count_conditional(fv, count, law);
                        if (via_prior != direct)
                            record_failure(suite, describe(fv, law) + " count=" +
                                                      std::to_string(count));
                    }
                }
            });
    return suite;
}

SuiteResult escape_consistency_suite(std::uint64_t max_k, std::uint64_t max_n) {
    SuiteResult suite;
    suite.name = "escape consistency";
    auto laws = standard_laws();
    laws.push_back(SuccessionLaw::good_turing());

    for (std::uint64_t k = 1; k <= max_k; ++k)
        for (std::uint64_t n = 1; n <= max_n; ++n)
            for_each_composition(k, n, [&](std::span<const std::int64_t> counts) {
                const auto fv = FrequencyVector::from_counts(k, counts);
                for (const auto& law : laws) {
                    // Good-Turing's escape is defined as f_1/n, not as a sum,
                    // when no novel symbols remain.
                    if (law.kind() == LawKind::good_turing && fv.novel_count() == 0) continue;
                    suite.cases += 1;
                    if (exact::escape_mass(fv, law) != exact::summed_novel_mass(fv, law))
                        record_failure(suite, describe(fv, law));
                }
            });
    return suite;
}

SuiteResult string_totality_suite(std::uint64_t max_k, std::uint64_t max_n) {
    SuiteResult suite;
    suite.name = "string totality";
    const std::vector<SuccessionLaw> laws = {
        SuccessionLaw::laplace(), SuccessionLaw::uniform_subsets(), SuccessionLaw::natural()};

    for (std::uint64_t k = 1; k <= max_k; ++k)
        for (std::uint64_t n = 1; n <= max_n; ++n)
            for (const auto& law : laws) {
                suite.cases += 1;
                // Walk all k^n strings; probabilities depend only on the
                // count multiset, so cache by sorted counts.
                std::map<std::vector<std::int64_t>, exact::Rational> cache;
                exact::Rational total = 0;
                std::vector<std::uint8_t> string(n, 0);
                while (true) {
                    std::vector<std::int64_t> counts(k, 0);
                    for (std::uint8_t s : string) counts[s] += 1;
                    std::sort(counts.begin(), counts.end());
                    auto it = cache.find(counts);
                    if (it == cache.end())
                        it = cache
                                 .emplace(counts,
                                          exact::string_prob(
                                              FrequencyVector::from_counts(k, counts), law))
                                 .first;
                    total += it->second;

                    std::size_t pos = 0;
                    while (pos < n && string[pos] + 1u == k) string[pos++] = 0;
                    if (pos == n) break;
                    string[pos] += 1;
                }
                if (total != 1)
                    record_failure(suite, law.name() + " k=" + std::to_string(k) +
                                              " n=" + std::to_string(n));
            }
    return suite;
}

std::vector<SuiteResult> run_all(std::uint64_t max_k, std::uint64_t max_n,
                                 std::uint64_t totality_max_k, std::uint64_t totality_max_n,
                                 std::uint64_t random_vectors) {
    return {
        normalization_suite(max_k, max_n, random_vectors),
        prior_equivalence_suite(max_k, max_n),
        escape_consistency_suite(max_k, max_n),
        string_totality_suite(totality_max_k, totality_max_n),
    };
}

}  // namespace succession::oracle
