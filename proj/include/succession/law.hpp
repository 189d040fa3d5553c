#pragma once

#include <string>
#include <string_view>

namespace succession {

enum class LawKind {
    laplace,
    lidstone,
    uniform_subsets,
    natural_cardinality,
    sharpened_subsets,
    sharpened_cardinality,
    method_a,
    method_b,
    method_c,
    method_d,
    good_turing,
    absolute_discount,
    linear_discount,
};

// One estimation rule together with its parameter, when the rule takes one:
// the flattening weight lambda for the Lidstone family, the decrement delta
// for absolute discounting, the scale alpha for linear discounting. All
// other rules are parameter-free.
class SuccessionLaw {
public:
    static SuccessionLaw laplace() { return {LawKind::laplace, 0.0}; }
    static SuccessionLaw lidstone(double lambda);
    static SuccessionLaw jeffreys_perks() { return lidstone(0.5); }
    static SuccessionLaw uniform_subsets() { return {LawKind::uniform_subsets, 0.0}; }
    static SuccessionLaw natural() { return {LawKind::natural_cardinality, 0.0}; }
    static SuccessionLaw sharpened_subsets() { return {LawKind::sharpened_subsets, 0.0}; }
    static SuccessionLaw sharpened_natural() { return {LawKind::sharpened_cardinality, 0.0}; }
    static SuccessionLaw method_a() { return {LawKind::method_a, 0.0}; }
    static SuccessionLaw method_b() { return {LawKind::method_b, 0.0}; }
    static SuccessionLaw method_c() { return {LawKind::method_c, 0.0}; }
    static SuccessionLaw method_d() { return {LawKind::method_d, 0.0}; }
    static SuccessionLaw good_turing() { return {LawKind::good_turing, 0.0}; }
    static SuccessionLaw absolute_discount(double delta);
    static SuccessionLaw linear_discount(double alpha);

    LawKind kind() const { return kind_; }

    double lambda() const;  // Lidstone only
    double delta() const;   // absolute discounting only
    double alpha() const;   // linear discounting only

    bool operator==(const SuccessionLaw&) const = default;

    // Canonical command-line spelling: laplace, lidstone:<l>, jp, subsets,
    // natural, sharp-subsets, sharp-natural, a, b, c, d, gt, abs:<d>,
    // lin:<a>. lidstone:0.5 renders as jp.
    std::string name() const;
    static SuccessionLaw parse(std::string_view spec);

private:
    SuccessionLaw(LawKind kind, double param) : kind_(kind), param_(param) {}

    LawKind kind_;
    double param_;
};

}  // namespace succession
