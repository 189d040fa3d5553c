#include "succession/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace succession::exact {

namespace {

BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// prod_{j=0}^{m-1} (x + j).
Rational rising_product(const Rational& x, std::uint64_t m) {
    Rational r = 1;
    for (std::uint64_t j = 0; j < m; ++j) r *= x + j;
    return r;
}

Rational pow_rat(const Rational& x, std::uint64_t e) {
    Rational r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= x;
    return r;
}

struct Stats {
    std::uint64_t ni, n, k, q, qp;
};

Stats stats_for(const FrequencyVector& fv, std::uint64_t observed_count) {
    return {observed_count, fv.total(), fv.alphabet_size(), fv.attested(),
            fv.multi_attested()};
}

Rational subsets_denominator(const Stats& s) {
    return Rational(BigInt(s.n + s.q) * BigInt(s.n + 1 - s.q) +
                    BigInt(s.q) * BigInt(s.k - s.q));
}

Rational cardinality_denominator(const Stats& s) {
    return Rational(BigInt(s.n) * BigInt(s.n) + s.n + 2 * s.q);
}

}  // namespace

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite parameter");
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(scaled);
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt multinomial(const FrequencyVector& fv) {
    BigInt r = factorial(fv.total());
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        for (std::uint64_t i = 0; i < f; ++i) r /= factorial(j);
    return r;
}

Rational count_conditional(const FrequencyVector& fv, std::uint64_t observed_count,
                           const SuccessionLaw& law) {
    const Stats s = stats_for(fv, observed_count);
    if (s.n == 0) {
        if (law.kind() == LawKind::sharpened_subsets ||
            law.kind() == LawKind::sharpened_cardinality)
            throw std::domain_error("sharpened laws are undefined with no observations");
        return Rational(1, s.k);
    }
    switch (law.kind()) {
        case LawKind::laplace:
            return Rational(s.ni + 1, s.n + s.k);
        case LawKind::lidstone: {
            const Rational lambda = rational_from_double(law.lambda());
            return (s.ni + lambda) / (s.n + s.k * lambda);
        }
        case LawKind::uniform_subsets: {
            const Rational d = subsets_denominator(s);
            if (s.ni > 0) return Rational(BigInt(s.ni + 1) * BigInt(s.n + 1 - s.q)) / d;
            return Rational(s.q) / d;
        }
        case LawKind::natural_cardinality: {
            if (s.q == s.k) return Rational(s.ni + 1, s.n + s.k);
            const Rational d = cardinality_denominator(s);
            if (s.ni > 0) return Rational(BigInt(s.ni + 1) * BigInt(s.n + 1 - s.q)) / d;
            return Rational(BigInt(s.q) * BigInt(s.q + 1)) / (d * (s.k - s.q));
        }
        case LawKind::sharpened_subsets: {
            const Rational d = subsets_denominator(s);
            if (s.ni > 0)
                return Rational(BigInt(s.ni) * BigInt(s.n + s.q) * BigInt(s.n + 1 - s.q)) /
                       (d * s.n);
            return Rational(s.q) / d;
        }
        case LawKind::sharpened_cardinality: {
            if (s.q == s.k) return Rational(s.ni, s.n);
            const Rational d = cardinality_denominator(s);
            if (s.ni > 0) {
                const BigInt numer = BigInt(s.n) * BigInt(s.n + 1) -
                                     BigInt(s.q) * BigInt(s.q - 1);
                return Rational(BigInt(s.ni) * numer) / (d * s.n);
            }
            return Rational(BigInt(s.q) * BigInt(s.q + 1)) / (d * (s.k - s.q));
        }
        case LawKind::method_a: {
            if (s.q == s.k)
                return Rational(s.ni, s.n + 1) + Rational(1, (s.n + 1) * s.k);
            if (s.ni > 0) return Rational(s.ni, s.n + 1);
            return Rational(1) / Rational(BigInt(s.n + 1) * BigInt(s.k - s.q));
        }
        case LawKind::method_b: {
            if (s.k == s.qp) return Rational(s.ni, s.n);
            if (s.ni >= 2) return Rational(s.ni - 1, s.n);
            return Rational(s.q) / Rational(BigInt(s.n) * BigInt(s.k - s.qp));
        }
        case LawKind::method_c: {
            if (s.q == s.k)
                return Rational(s.ni, s.n + s.q) +
                       Rational(s.q) / Rational(BigInt(s.n + s.q) * BigInt(s.k));
            if (s.ni > 0) return Rational(s.ni, s.n + s.q);
            return Rational(s.q) / Rational(BigInt(s.n + s.q) * BigInt(s.k - s.q));
        }
        case LawKind::method_d: {
            const Rational half(1, 2);
            if (s.q == s.k)
                return (s.ni - half) / s.n + Rational(s.q) / Rational(BigInt(2 * s.n) * BigInt(s.k));
            if (s.ni > 0) return (s.ni - half) / s.n;
            return Rational(s.q) / Rational(BigInt(2 * s.n) * BigInt(s.k - s.q));
        }
        case LawKind::good_turing: {
            if (s.ni == 0 && s.q == s.k)
                throw std::domain_error("Good-Turing novel query with every symbol attested");
            const std::uint64_t f_this = fv.count_of_count(s.ni);
            const std::uint64_t f_next = fv.count_of_count(s.ni + 1);
            return Rational(s.ni + 1, s.n) * Rational(f_next, f_this);
        }
        case LawKind::absolute_discount: {
            const Rational delta = rational_from_double(law.delta());
            if (s.q == s.k) return (s.ni - delta) / s.n + s.q * delta / (Rational(s.n) * s.k);
            if (s.ni > 0) return (s.ni - delta) / s.n;
            return s.q * delta / (Rational(s.n) * (s.k - s.q));
        }
        case LawKind::linear_discount: {
            const Rational alpha = rational_from_double(law.alpha());
            if (s.q == s.k) return (1 - alpha) * s.ni / s.n + alpha / s.k;
            if (s.ni > 0) return (1 - alpha) * s.ni / s.n;
            return alpha / (s.k - s.q);
        }
    }
    throw std::logic_error("unreachable");
}

Rational conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law) {
    return count_conditional(fv, fv.count(i), law);
}

Rational escape_mass(const FrequencyVector& fv, const SuccessionLaw& law) {
    if (fv.total() == 0) return 1;
    const Stats s = stats_for(fv, 0);
    if (law.kind() == LawKind::good_turing)
        return Rational(fv.count_of_count(1), s.n);
    if (s.q == s.k) return 0;
    switch (law.kind()) {
        case LawKind::laplace:
            return Rational(s.k - s.q, s.n + s.k);
        case LawKind::lidstone: {
            const Rational lambda = rational_from_double(law.lambda());
            return (s.k - s.q) * lambda / (s.n + s.k * lambda);
        }
        case LawKind::uniform_subsets:
        case LawKind::sharpened_subsets:
            return Rational(BigInt(s.q) * BigInt(s.k - s.q)) / subsets_denominator(s);
        case LawKind::natural_cardinality:
        case LawKind::sharpened_cardinality:
            return Rational(BigInt(s.q) * BigInt(s.q + 1)) / cardinality_denominator(s);
        case LawKind::method_a: return Rational(1, s.n + 1);
        case LawKind::method_b:
            return Rational(BigInt(s.k - s.q) * BigInt(s.q)) /
                   Rational(BigInt(s.k - s.qp) * BigInt(s.n));
        case LawKind::method_c: return Rational(s.q, s.n + s.q);
        case LawKind::method_d: return Rational(s.q, 2 * s.n);
        case LawKind::absolute_discount:
            return s.q * rational_from_double(law.delta()) / s.n;
        case LawKind::linear_discount: return rational_from_double(law.alpha());
        case LawKind::good_turing: break;
    }
    throw std::logic_error("unreachable");
}

Rational summed_novel_mass(const FrequencyVector& fv, const SuccessionLaw& law) {
    if (fv.total() == 0) return 1;
    if (fv.novel_count() == 0) return 0;
    return Rational(fv.novel_count()) * count_conditional(fv, 0, law);
}

Rational string_prob(const FrequencyVector& fv, const SuccessionLaw& law) {
    const std::uint64_t n = fv.total();
    const std::uint64_t k = fv.alphabet_size();
    const std::uint64_t q = fv.attested();
    if (n == 0) throw std::domain_error("string probability needs at least one symbol");
    switch (law.kind()) {
        case LawKind::laplace:
            return Rational(1) / Rational(binomial(n + k - 1, k - 1) * multinomial(fv));
        case LawKind::lidstone: {
            const Rational lambda = rational_from_double(law.lambda());
            Rational p = 1;
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                p *= pow_rat(rising_product(lambda, j), f);
            return p / rising_product(k * lambda, n);
        }
        case LawKind::uniform_subsets: {
            BigInt nonempty_subsets = 0;
            for (std::uint64_t i = 1; i <= std::min(k, n); ++i)
                nonempty_subsets += binomial(k, i);
            return Rational(1) /
                   Rational(nonempty_subsets * binomial(n - 1, q - 1) * multinomial(fv));
        }
        case LawKind::natural_cardinality:
            return Rational(1) / Rational(BigInt(std::min(k, n)) * binomial(k, q) *
                                          binomial(n - 1, q - 1) * multinomial(fv));
        case LawKind::absolute_discount: {
            const Rational delta = rational_from_double(law.delta());
            Rational p = pow_rat(delta, q - 1) *
                         Rational(factorial(q - 1) * factorial(k - q),
                                  factorial(k) * factorial(n - 1));
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                p *= pow_rat(rising_product(1 - delta, j - 1), f);
            return p;
        }
        case LawKind::linear_discount: {
            // Canonical order: the q distinct symbols appear before any
            // repeat. Other orders give a different (smaller) product.
            const Rational alpha = rational_from_double(law.alpha());
            Rational p = pow_rat(alpha, q - 1) * pow_rat(1 - alpha, n - q) *
                         Rational(factorial(q - 1) * factorial(k - q),
                                  factorial(k) * factorial(n - 1));
            for (const auto& [j, f] : fv.frequency_of_frequencies())
                p *= pow_rat(Rational(factorial(j - 1)), f);
            return p;
        }
        default:
            throw std::domain_error("law has no closed-form string probability: " + law.name());
    }
}

Rational freqvec_prob(const FrequencyVector& fv, const SuccessionLaw& law) {
    return string_prob(fv, law) * Rational(multinomial(fv));
}

Rational count_conditional_from_prior(const FrequencyVector& fv, std::uint64_t observed_count,
                                      const SuccessionLaw& law) {
    const std::uint64_t k = fv.alphabet_size();
    // Extending by a symbol whose current count is c yields the same string
    // probability for every symbol in that count class.
    auto extended = [&](std::uint64_t c) {
        std::vector<std::int64_t> counts;
        counts.reserve(fv.attested() + 1);
        bool promoted = false;
        for (const auto& [j, f] : fv.frequency_of_frequencies())
            for (std::uint64_t i = 0; i < f; ++i) {
                if (!promoted && j == c) {
                    counts.push_back(static_cast<std::int64_t>(j) + 1);
                    promoted = true;
                } else {
                    counts.push_back(static_cast<std::int64_t>(j));
                }
            }
        if (c == 0) {
            counts.push_back(1);
            promoted = true;
        }
        if (!promoted) throw std::invalid_argument("no symbol has the requested count");
        return string_prob(FrequencyVector::from_counts(k, counts), law);
    };

    const Rational numerator = extended(observed_count);
    Rational denominator = 0;
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        denominator += Rational(f) * extended(j);
    if (fv.novel_count() > 0) denominator += Rational(fv.novel_count()) * extended(0);
    return numerator / denominator;
}

Rational conditional_from_prior(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law) {
    return count_conditional_from_prior(fv, fv.count(i), law);
}

Rational possible_set_prob(std::uint64_t k, std::uint64_t b, std::uint64_t n,
                           const SuccessionLaw& law) {
    if (b < 1 || b > k || n < 1) throw std::invalid_argument("bad possible-set scenario");
    switch (law.kind()) {
        case LawKind::laplace:
            return Rational(binomial(n + b - 1, b - 1)) / Rational(binomial(n + k - 1, k - 1));
        case LawKind::lidstone: {
            const Rational lambda = rational_from_double(law.lambda());
            Rational p = 1;
            for (std::uint64_t i = 0; i < n; ++i) p *= (i + b * lambda) / (i + k * lambda);
            return p;
        }
        case LawKind::natural_cardinality: {
            Rational total = 0;
            for (std::uint64_t q = 1; q <= std::min(b, n); ++q)
                total += Rational(binomial(b, q)) /
                         Rational(BigInt(std::min(k, n)) * binomial(k, q));
            return total;
        }
        case LawKind::uniform_subsets: {
            BigInt nonempty_subsets = 0;
            for (std::uint64_t i = 1; i <= std::min(k, n); ++i)
                nonempty_subsets += binomial(k, i);
            BigInt reachable = 0;
            for (std::uint64_t q = 1; q <= std::min(b, n); ++q) reachable += binomial(b, q);
            return Rational(reachable) / Rational(nonempty_subsets);
        }
        default:
            throw std::domain_error("possible-set total not defined for law " + law.name());
    }
}

Rational cardinality_dominant_stratum(std::uint64_t k, std::uint64_t b, std::uint64_t n) {
    if (b < 1 || b > k || n < b) throw std::invalid_argument("bad dominant-stratum scenario");
    return Rational(1) / Rational(BigInt(std::min(k, n)) * binomial(k, b));
}

}  // namespace succession::exact
