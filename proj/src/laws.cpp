#include "succession/laws.hpp"

#include <cmath>
#include <stdexcept>

namespace succession {

namespace {

struct Stats {
    double ni, n, k, q, qp;
    std::uint64_t ni_u, n_u, k_u, q_u, qp_u;
};

Stats stats_for(const FrequencyVector& fv, std::uint64_t observed_count) {
    Stats s{};
    s.ni_u = observed_count;
    s.n_u = fv.total();
    s.k_u = fv.alphabet_size();
    s.q_u = fv.attested();
    s.qp_u = fv.multi_attested();
    s.ni = static_cast<double>(s.ni_u);
    s.n = static_cast<double>(s.n_u);
    s.k = static_cast<double>(s.k_u);
    s.q = static_cast<double>(s.q_u);
    s.qp = static_cast<double>(s.qp_u);
    return s;
}

double uniform(const FrequencyVector& fv) {
    return 1.0 / static_cast<double>(fv.alphabet_size());
}

double laplace_count(const Stats& s) { return (s.ni + 1.0) / (s.n + s.k); }

double subsets_denominator(const Stats& s) {
    return (s.n + s.q) * (s.n + 1.0 - s.q) + s.q * (s.k - s.q);
}

double subsets_count(const Stats& s) {
    const double d = subsets_denominator(s);
    if (s.ni_u > 0) return (s.ni + 1.0) * (s.n + 1.0 - s.q) / d;
    return s.q / d;
}

double natural_count(const Stats& s) {
    if (s.q_u == s.k_u) return laplace_count(s);
    const double d = s.n * s.n + s.n + 2.0 * s.q;
    if (s.ni_u > 0) return (s.ni + 1.0) * (s.n + 1.0 - s.q) / d;
    return s.q * (s.q + 1.0) / ((s.k - s.q) * d);
}

double sharpened_count(const Stats& s, SharpenedVariant variant) {
    if (variant == SharpenedVariant::subsets) {
        const double d = subsets_denominator(s);
        if (s.ni_u > 0) return (s.ni / s.n) * (s.n + s.q) * (s.n + 1.0 - s.q) / d;
        return s.q / d;
    }
    if (s.q_u == s.k_u) return s.ni / s.n;
    const double d = s.n * s.n + s.n + 2.0 * s.q;
    if (s.ni_u > 0) return (s.ni / s.n) * (s.n * (s.n + 1.0) + s.q * (1.0 - s.q)) / d;
    return s.q * (s.q + 1.0) / ((s.k - s.q) * d);
}

double method_count(const Stats& s, PpmMethod method) {
    const bool saturated = s.q_u == s.k_u;  // no novel symbols to escape to
    switch (method) {
        case PpmMethod::a: {
            double p = s.ni / (s.n + 1.0);
            if (saturated)
                p += 1.0 / ((s.n + 1.0) * s.k);
            else if (s.ni_u == 0)
                p = 1.0 / ((s.n + 1.0) * (s.k - s.q));
            return p;
        }
        case PpmMethod::b: {
            if (s.k_u == s.qp_u) return s.ni / s.n;  // every symbol seen twice
            if (s.ni_u >= 2) return (s.ni - 1.0) / s.n;
            return s.q / (s.n * (s.k - s.qp));  // singletons and novels alike
        }
        case PpmMethod::c: {
            double p = s.ni / (s.n + s.q);
            if (saturated)
                p += s.q / ((s.n + s.q) * s.k);
            else if (s.ni_u == 0)
                p = s.q / ((s.n + s.q) * (s.k - s.q));
            return p;
        }
        case PpmMethod::d: {
            double p = (s.ni - 0.5) / s.n;
            if (saturated)
                p += s.q / (2.0 * s.n * s.k);
            else if (s.ni_u == 0)
                p = s.q / (2.0 * s.n * (s.k - s.q));
            return p;
        }
    }
    throw std::logic_error("unreachable");
}

double good_turing_count(const FrequencyVector& fv, const Stats& s) {
    if (s.ni_u == 0 && s.q_u == s.k_u)
        throw std::domain_error("Good-Turing novel query with every symbol attested");
    const double f_this = static_cast<double>(fv.count_of_count(s.ni_u));
    const double f_next = static_cast<double>(fv.count_of_count(s.ni_u + 1));
    return ((s.ni + 1.0) / s.n) * (f_next / f_this);
}

double discount_count(const Stats& s, const SuccessionLaw& law) {
    if (law.kind() == LawKind::absolute_discount) {
        const double delta = law.delta();
        if (s.q_u == s.k_u) return (s.ni - delta) / s.n + s.q * delta / (s.n * s.k);
        if (s.ni_u > 0) return (s.ni - delta) / s.n;
        return s.q * delta / (s.n * (s.k - s.q));
    }
    const double alpha = law.alpha();
    if (s.q_u == s.k_u) return (1.0 - alpha) * s.ni / s.n + alpha / s.k;
    if (s.ni_u > 0) return (1.0 - alpha) * s.ni / s.n;
    return alpha / (s.k - s.q);
}

}  // namespace

double count_conditional(const FrequencyVector& fv, std::uint64_t observed_count,
                         const SuccessionLaw& law) {
    if (fv.total() == 0) {
        if (law.kind() == LawKind::sharpened_subsets ||
            law.kind() == LawKind::sharpened_cardinality)
            throw std::domain_error("sharpened laws are undefined with no observations");
        return uniform(fv);
    }
    const Stats s = stats_for(fv, observed_count);
    switch (law.kind()) {
        case LawKind::laplace: return laplace_count(s);
        case LawKind::lidstone:
            return (s.ni + law.lambda()) / (s.n + s.k * law.lambda());
        case LawKind::uniform_subsets: return subsets_count(s);
        case LawKind::natural_cardinality: return natural_count(s);
        case LawKind::sharpened_subsets: return sharpened_count(s, SharpenedVariant::subsets);
        case LawKind::sharpened_cardinality:
            return sharpened_count(s, SharpenedVariant::cardinality);
        case LawKind::method_a: return method_count(s, PpmMethod::a);
        case LawKind::method_b: return method_count(s, PpmMethod::b);
        case LawKind::method_c: return method_count(s, PpmMethod::c);
        case LawKind::method_d: return method_count(s, PpmMethod::d);
        case LawKind::good_turing: return good_turing_count(fv, s);
        case LawKind::absolute_discount:
        case LawKind::linear_discount: return discount_count(s, law);
    }
    throw std::logic_error("unreachable");
}

double conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law) {
    return count_conditional(fv, fv.count(i), law);
}

double laplace_conditional(const FrequencyVector& fv, Symbol i) {
    return conditional(fv, i, SuccessionLaw::laplace());
}

double lidstone_conditional(const FrequencyVector& fv, Symbol i, double lambda) {
    return conditional(fv, i, SuccessionLaw::lidstone(lambda));
}

double subsets_conditional(const FrequencyVector& fv, Symbol i) {
    return conditional(fv, i, SuccessionLaw::uniform_subsets());
}

double natural_conditional(const FrequencyVector& fv, Symbol i) {
    return conditional(fv, i, SuccessionLaw::natural());
}

double sharpened_conditional(const FrequencyVector& fv, Symbol i, SharpenedVariant variant) {
    return conditional(fv, i,
                       variant == SharpenedVariant::subsets
                           ? SuccessionLaw::sharpened_subsets()
                           : SuccessionLaw::sharpened_natural());
}

double ppm_method_conditional(const FrequencyVector& fv, Symbol i, PpmMethod method) {
    switch (method) {
        case PpmMethod::a: return conditional(fv, i, SuccessionLaw::method_a());
        case PpmMethod::b: return conditional(fv, i, SuccessionLaw::method_b());
        case PpmMethod::c: return conditional(fv, i, SuccessionLaw::method_c());
        case PpmMethod::d: return conditional(fv, i, SuccessionLaw::method_d());
    }
    throw std::logic_error("unreachable");
}

double good_turing_conditional(const FrequencyVector& fv, Symbol i) {
    return conditional(fv, i, SuccessionLaw::good_turing());
}

double discount_conditional(const FrequencyVector& fv, Symbol i, const SuccessionLaw& law) {
    if (law.kind() != LawKind::absolute_discount && law.kind() != LawKind::linear_discount)
        throw std::invalid_argument("discount_conditional needs a discounting law");
    return conditional(fv, i, law);
}

double escape_mass(const FrequencyVector& fv, const SuccessionLaw& law) {
    if (fv.total() == 0) return 1.0;
    const Stats s = stats_for(fv, 0);
    if (law.kind() == LawKind::good_turing)
        return static_cast<double>(fv.count_of_count(1)) / s.n;
    if (s.q_u == s.k_u) return 0.0;
    switch (law.kind()) {
        case LawKind::laplace: return (s.k - s.q) / (s.n + s.k);
        case LawKind::lidstone: {
            const double lambda = law.lambda();
            return (s.k - s.q) * lambda / (s.n + s.k * lambda);
        }
        case LawKind::uniform_subsets:
        case LawKind::sharpened_subsets:
            return s.q * (s.k - s.q) / subsets_denominator(s);
        case LawKind::natural_cardinality:
        case LawKind::sharpened_cardinality:
            return s.q * (s.q + 1.0) / (s.n * s.n + s.n + 2.0 * s.q);
        case LawKind::method_a: return 1.0 / (s.n + 1.0);
        case LawKind::method_b: return (s.k - s.q) * s.q / ((s.k - s.qp) * s.n);
        case LawKind::method_c: return s.q / (s.n + s.q);
        case LawKind::method_d: return s.q / (2.0 * s.n);
        case LawKind::absolute_discount: return s.q * law.delta() / s.n;
        case LawKind::linear_discount: return law.alpha();
        case LawKind::good_turing: break;
    }
    throw std::logic_error("unreachable");
}

double good_turing_mass_deviation(const FrequencyVector& fv) {
    if (fv.total() == 0) return 0.0;
    const auto law = SuccessionLaw::good_turing();
    double total = 0.0;
    for (const auto& [j, f] : fv.frequency_of_frequencies())
        total += static_cast<double>(f) * count_conditional(fv, j, law);
    if (fv.novel_count() > 0)
        total += static_cast<double>(fv.novel_count()) * count_conditional(fv, 0, law);
    return std::abs(1.0 - total);
}

}  // namespace succession
