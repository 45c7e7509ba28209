#pragma once

#include <cstdint>
#include <vector>

namespace pathmin {

// lg[i] = floor(log2 i) for 1 <= i <= limit, filled by integer recurrence.
class FloorLog {
  public:
    FloorLog() = default;
    explicit FloorLog(std::size_t limit) : lg_(limit + 1, 0) {
        for (std::size_t i = 2; i <= limit; ++i) lg_[i] = static_cast<std::uint8_t>(lg_[i / 2] + 1);
    }

    unsigned operator()(std::size_t i) const { return lg_[i]; }
    std::size_t limit() const { return lg_.empty() ? 0 : lg_.size() - 1; }

  private:
    std::vector<std::uint8_t> lg_;
};

}  // namespace pathmin
