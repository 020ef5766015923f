#include "artin/classification.hpp"

#include <stdexcept>

namespace artin {

std::string kind_name(GorensteinKind k) {
    switch (k) {
        case GorensteinKind::stretched: return "stretched";
        case GorensteinKind::almost_stretched: return "almost_stretched";
        case GorensteinKind::other: return "other";
    }
    return "other";
}

GorensteinKind kind_from_hilbert(const HilbertFunction& hf) {
    const long h2 = hf[2];
    if (h2 <= 1) return GorensteinKind::stretched;
    if (h2 == 2) return GorensteinKind::almost_stretched;
    return GorensteinKind::other;
}

std::optional<std::pair<long, long>> almost_stretched_shape_params(const HilbertFunction& hf) {
    const auto& v = hf.values;
    if (v.size() < 4) return std::nullopt;  // needs at least one 2 and one 1
    if (v[0] != 1 || v[1] < 2) return std::nullopt;
    std::size_t i = 2;
    while (i < v.size() && v[i] == 2) ++i;
    const long twos = static_cast<long>(i) - 2;
    if (twos < 1) return std::nullopt;
    std::size_t ones_start = i;
    while (i < v.size() && v[i] == 1) ++i;
    const long ones = static_cast<long>(i - ones_start);
    if (ones < 1 || i != v.size()) return std::nullopt;
    const long t = twos + 1;
    const long s = t + ones;
    return std::make_pair(s, t);
}

bool is_stretched_shape(const HilbertFunction& hf) {
    const auto& v = hf.values;
    if (v.size() < 3) return false;
    if (v[0] != 1 || v[1] < 2) return false;
    for (std::size_t i = 2; i < v.size(); ++i)
        if (v[i] != 1) return false;
    return true;
}

std::vector<HilbertFunction> possible_gorenstein_hilbert_functions(long e, long h) {
    if (h < 2) throw std::invalid_argument("enumerate: h must be >= 2");
    if (e < h + 1) throw std::invalid_argument("enumerate: e must be >= h + 1");
    std::vector<HilbertFunction> out;
    if (e == h + 1) return out;  // minimal multiplicity, m^2 = 0

    // almost stretched shapes: sum = h + s + t - 1 = e with s >= t + 1 >= 3
    for (long t = 2; 2 * t <= e - h; ++t) {
        const long s = e + 1 - h - t;
        std::vector<long> v{1, h};
        v.insert(v.end(), static_cast<std::size_t>(t - 1), 2);
        v.insert(v.end(), static_cast<std::size_t>(s - t), 1);
        out.emplace_back(std::move(v));
    }
    // the stretched shape: 1, h, 1^(e-1-h)
    {
        std::vector<long> v{1, h};
        v.insert(v.end(), static_cast<std::size_t>(e - 1 - h), 1);
        out.emplace_back(std::move(v));
    }
    // codimension two forces a complete intersection; H(2) = 3 cannot occur
    if (h == 2) {
        std::vector<HilbertFunction> kept;
        for (auto& hf : out)
            if (hf[2] != 3) kept.push_back(std::move(hf));
        out = std::move(kept);
    }
    return out;
}

RationalityGuarantee poincare_rationality_guarantee(long e, long h) {
    if (h < 2) throw std::invalid_argument("rationality_guarantee: h must be >= 2");
    if (e < h + 1) throw std::invalid_argument("rationality_guarantee: e must be >= h + 1");
    if (e == h + 1)
        return {true, "minimal_multiplicity",
                "e = h + 1: minimal multiplicity, the series is known to be rational"};
    if (e <= h + 4)
        return {true, "codim_gap_le_4",
                "h + 2 <= e <= h + 4: every Artinian reduction is stretched or almost stretched"};
    if (e <= 7)
        return {true, "multiplicity_le_7",
                "e <= 7: every admissible Hilbert function is stretched or almost stretched"};
    return {false, "none", "no rationality guarantee for e > h + 4 with e > 7"};
}

}  // namespace artin
