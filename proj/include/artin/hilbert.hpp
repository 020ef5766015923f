#ifndef ARTIN_HILBERT_HPP
#define ARTIN_HILBERT_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

// H(n) = dim m^n / m^(n+1), listed from n = 0 up to the last nonzero value.
struct HilbertFunction {
    std::vector<long> values;

    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<long> v) : values(std::move(v)) { check(); }

    void check() const {
        if (values.empty() || values.front() != 1)
            throw std::invalid_argument("HilbertFunction: must start with H(0) = 1");
        for (long v : values)
            if (v < 0) throw std::invalid_argument("HilbertFunction: negative value");
        if (values.back() == 0)
            throw std::invalid_argument("HilbertFunction: trailing zero");
    }

    long sum() const { return std::accumulate(values.begin(), values.end(), 0L); }

    long operator[](std::size_t n) const { return n < values.size() ? values[n] : 0; }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(values[i]);
        }
        return s + "}";
    }

    friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) {
        return a.values == b.values;
    }
    friend bool operator!=(const HilbertFunction& a, const HilbertFunction& b) {
        return !(a == b);
    }
};

}  // namespace artin

#endif
