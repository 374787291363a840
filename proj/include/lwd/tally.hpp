#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lwd/errors.hpp"

namespace lwd {

/// Exact nonnegative count; Table II style data overflows 64 bits once the
/// relation arithmetic multiplies counts by weights.
using Count = boost::multiprecision::cpp_int;

/// Map weight -> exact count for a code of a fixed length. Absent keys mean
/// zero; zero counts are never stored, so equality is equality of the maps.
class WeightTally {
public:
    WeightTally() = default;
    explicit WeightTally(std::size_t length) : length_(length) {}

    std::size_t length() const { return length_; }

    const Count& at(unsigned w) const {
        static const Count zero = 0;
        auto it = counts_.find(w);
        return it == counts_.end() ? zero : it->second;
    }

    void set(unsigned w, Count c) {
        check_weight(w);
        if (c < 0) throw PreconditionError("tally count must be nonnegative");
        if (c == 0)
            counts_.erase(w);
        else
            counts_[w] = std::move(c);
    }

    void add(unsigned w, const Count& c) {
        check_weight(w);
        if (c == 0) return;
        Count& slot = counts_[w];
        slot += c;
        if (slot < 0) throw PreconditionError("tally count must be nonnegative");
        if (slot == 0) counts_.erase(w);
    }

    void increment(unsigned w) { add(w, 1); }

    /// Elementwise `this += other * scale`.
    void add_scaled(const WeightTally& other, const Count& scale) {
        if (other.length_ != length_)
            throw PreconditionError("tally length mismatch");
        for (const auto& [w, c] : other.counts_) add(w, c * scale);
    }

    void merge(const WeightTally& other) { add_scaled(other, 1); }

    Count total() const {
        Count t = 0;
        for (const auto& [w, c] : counts_) t += c;
        return t;
    }

    std::optional<unsigned> min_nonzero_weight() const {
        for (const auto& [w, c] : counts_)
            if (w > 0) return w;
        return std::nullopt;
    }

    bool empty() const { return counts_.empty(); }

    bool operator==(const WeightTally& other) const {
        return length_ == other.length_ && counts_ == other.counts_;
    }

    const std::map<unsigned, Count>& entries() const { return counts_; }

private:
    void check_weight(unsigned w) const {
        if (w > length_) throw PreconditionError("weight exceeds tally length");
    }

    std::size_t length_ = 0;
    std::map<unsigned, Count> counts_;
};

}  // namespace lwd
