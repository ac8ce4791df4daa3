#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace empress {

struct PPair {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool operator==(const PPair&) const = default;
};

// The paired sequences (a_n, b_n), n >= 1, with a_n <= b_n, a_n strictly
// increasing. The trivial P-position (0,0) is index 0 and is never stored.
class PPositionTable {
public:
    PPositionTable() = default;
    explicit PPositionTable(std::vector<PPair> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].a > rows_[i].b) throw std::logic_error("table requires a_n <= b_n");
            if (i > 0 && rows_[i - 1].a >= rows_[i].a)
                throw std::logic_error("table requires strictly increasing a_n");
        }
    }

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    // 1-based, matching the n in (a_n, b_n).
    const PPair& pair(std::size_t n) const {
        if (n < 1 || n > rows_.size()) throw std::out_of_range("table index out of range");
        return rows_[n - 1];
    }
    std::int64_t a(std::size_t n) const { return pair(n).a; }
    std::int64_t b(std::size_t n) const { return pair(n).b; }

    const std::vector<PPair>& rows() const { return rows_; }

    PPositionTable prefix(std::size_t count) const {
        if (count > rows_.size()) throw std::out_of_range("prefix longer than table");
        return PPositionTable(std::vector<PPair>(rows_.begin(), rows_.begin() + count));
    }

    bool operator==(const PPositionTable&) const = default;

private:
    std::vector<PPair> rows_;
};

} // namespace empress
