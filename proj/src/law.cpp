#include "succession/law.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace succession {

SuccessionLaw SuccessionLaw::lidstone(double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("lidstone lambda must be positive");
    return {LawKind::lidstone, lambda};
}

SuccessionLaw SuccessionLaw::absolute_discount(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("absolute-discount delta must lie in (0,1)");
    return {LawKind::absolute_discount, delta};
}

SuccessionLaw SuccessionLaw::linear_discount(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("linear-discount alpha must lie in (0,1)");
    return {LawKind::linear_discount, alpha};
}

double SuccessionLaw::lambda() const {
    if (kind_ != LawKind::lidstone) throw std::logic_error("law has no lambda");
    return param_;
}

double SuccessionLaw::delta() const {
    if (kind_ != LawKind::absolute_discount) throw std::logic_error("law has no delta");
    return param_;
}

double SuccessionLaw::alpha() const {
    if (kind_ != LawKind::linear_discount) throw std::logic_error("law has no alpha");
    return param_;
}

namespace {

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_param(std::string_view text, const char* what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string("bad ") + what + " parameter: " +
                                    std::string(text));
    return value;
}

}  // namespace

std::string SuccessionLaw::name() const {
    switch (kind_) {
        case LawKind::laplace: return "laplace";
        case LawKind::lidstone:
            return param_ == 0.5 ? "jp" : "lidstone:" + format_param(param_);
        case LawKind::uniform_subsets: return "subsets";
        case LawKind::natural_cardinality: return "natural";
        case LawKind::sharpened_subsets: return "sharp-subsets";
        case LawKind::sharpened_cardinality: return "sharp-natural";
        case LawKind::method_a: return "a";
        case LawKind::method_b: return "b";
        case LawKind::method_c: return "c";
        case LawKind::method_d: return "d";
        case LawKind::good_turing: return "gt";
        case LawKind::absolute_discount: return "abs:" + format_param(param_);
        case LawKind::linear_discount: return "lin:" + format_param(param_);
    }
    throw std::logic_error("unreachable");
}

SuccessionLaw SuccessionLaw::parse(std::string_view spec) {
    std::string_view head = spec;
    std::string_view tail;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        head = spec.substr(0, colon);
        tail = spec.substr(colon + 1);
    }
    if (head == "laplace") return laplace();
    if (head == "jp") return jeffreys_perks();
    if (head == "lidstone") {
        if (tail.empty()) return jeffreys_perks();  // default lambda = 1/2
        return lidstone(parse_param(tail, "lidstone"));
    }
    if (head == "subsets") return uniform_subsets();
    if (head == "natural") return natural();
    if (head == "sharp-subsets") return sharpened_subsets();
    if (head == "sharp-natural") return sharpened_natural();
    if (head == "a") return method_a();
    if (head == "b") return method_b();
    if (head == "c") return method_c();
    if (head == "d") return method_d();
    if (head == "gt") return good_turing();
    if (head == "abs") {
        if (tail.empty()) throw std::invalid_argument("abs law needs a delta, e.g. abs:0.5");
        return absolute_discount(parse_param(tail, "abs"));
    }
    if (head == "lin") {
        if (tail.empty()) throw std::invalid_argument("lin law needs an alpha, e.g. lin:0.3");
        return linear_discount(parse_param(tail, "lin"));
    }
    throw std::invalid_argument("unknown law: " + std::string(spec));
}

}  // namespace succession
