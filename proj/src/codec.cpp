#include "succession/codec.hpp"

#include <cmath>
#include <stdexcept>

#include "succession/laws.hpp"

namespace succession {

namespace {

/// Neumaier-compensated accumulator; keeps long sums to ~1 ulp.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

std::uint64_t ceil_bytes(double bits) {
    return static_cast<std::uint64_t>(std::ceil(bits / 8.0));
}

void check_usable(const SymbolStream& stream, const SuccessionLaw& law,
                  std::uint64_t alphabet_size) {
    if (law.kind() == LawKind::good_turing)
        throw std::invalid_argument("Good-Turing does not normalize; not usable for coding");
    for (std::uint8_t b : stream)
        if (b >= alphabet_size) throw std::out_of_range("stream symbol outside alphabet");
}

}  // namespace

CodelengthReport evaluate_stream(const SymbolStream& stream, const SuccessionLaw& law,
                                 std::uint64_t alphabet_size) {
    check_usable(stream, law, alphabet_size);
    FrequencyVector fv(alphabet_size);
    CompensatedSum bits;
    for (std::uint8_t b : stream) {
        const Symbol sym{b};
        bits.add(-std::log2(conditional(fv, sym, law)));
        fv.observe(sym);
    }
    const double total_bits = bits.value();
    if (!std::isfinite(total_bits))
        throw std::runtime_error("non-finite codelength: a symbol received zero probability");

    CodelengthReport report{law};
    report.bits = total_bits;
    report.bytes_ceil = ceil_bytes(total_bits);
    report.entropy_bits = fv.empirical_entropy_bits();
    report.entropy_bytes_ceil = ceil_bytes(report.entropy_bits);
    report.score_bytes = static_cast<std::int64_t>(report.bytes_ceil) -
                         static_cast<std::int64_t>(report.entropy_bytes_ceil);
    report.attested = fv.attested();
    report.length = fv.total();
    return report;
}

std::vector<CurvePoint> emit_curve(const SymbolStream& stream, const SuccessionLaw& law,
                                   std::uint64_t alphabet_size, std::uint64_t stride) {
    if (stride == 0) throw std::invalid_argument("stride must be positive");
    check_usable(stream, law, alphabet_size);
    FrequencyVector fv(alphabet_size);
    CompensatedSum bits;
    std::vector<CurvePoint> curve;
    std::uint64_t t = 0;
    for (std::uint8_t b : stream) {
        const Symbol sym{b};
        bits.add(-std::log2(conditional(fv, sym, law)));
        fv.observe(sym);
        ++t;
        if (t % stride == 0) curve.push_back({t, bits.value()});
    }
    if (t % stride != 0 || t == 0) curve.push_back({t, bits.value()});
    return curve;
}

SymbolStream synthesize_sunrise(std::uint64_t days) {
    if (days == 0) throw std::invalid_argument("at least one day of history");
    return SymbolStream(days, static_cast<std::uint8_t>('1'));
}

}  // namespace succession
