#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbroadcast {

/// Subsystem label, e.g. "1", "5", "M2". Each label names one qubit.
using Label = std::string;

/// Ordered list of distinct qubit labels. Position 0 is the most significant
/// bit of every basis-state index; this ordering is authoritative for all
/// index arithmetic in the library.
class QubitRegister {
public:
    QubitRegister() = default;

    explicit QubitRegister(std::vector<Label> labels) : labels_(std::move(labels)) {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            for (std::size_t j = i + 1; j < labels_.size(); ++j) {
                if (labels_[i] == labels_[j]) {
                    throw std::invalid_argument("QubitRegister: duplicate label '" + labels_[i] + "'");
                }
            }
        }
    }

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t dim() const noexcept { return std::size_t{1} << labels_.size(); }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const Label& label(std::size_t pos) const { return labels_.at(pos); }

    bool contains(const Label& l) const {
        return std::find(labels_.begin(), labels_.end(), l) != labels_.end();
    }

    std::size_t position(const Label& l) const {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) {
            throw std::invalid_argument("QubitRegister: unknown label '" + l + "'");
        }
        return static_cast<std::size_t>(it - labels_.begin());
    }

    /// Bit of basis index `idx` belonging to the label at `pos` (MSB first).
    std::size_t bit(std::size_t idx, std::size_t pos) const {
        return (idx >> (labels_.size() - 1 - pos)) & 1u;
    }

    /// Returns `idx` with the bit at label position `pos` set to `value`.
    std::size_t with_bit(std::size_t idx, std::size_t pos, std::size_t value) const {
        const std::size_t shift = labels_.size() - 1 - pos;
        const std::size_t mask = std::size_t{1} << shift;
        return (idx & ~mask) | (value << shift);
    }

    bool operator==(const QubitRegister& o) const { return labels_ == o.labels_; }
    bool operator!=(const QubitRegister& o) const { return !(*this == o); }

private:
    std::vector<Label> labels_;
};

} // namespace wbroadcast
