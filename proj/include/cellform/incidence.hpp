#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellform {

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary machine-part routing matrix. Rows are machines, columns are parts.
// Construction rejects degenerate inputs: fewer than two machines or parts,
// a machine that processes nothing, or a part that visits no machine.
class IncidenceMatrix {
  public:
    IncidenceMatrix(int machines, int parts, std::vector<std::uint8_t> entries);

    int machines() const { return m_; }
    int parts() const { return n_; }

    bool at(int machine, int part) const { return entries_[machine * n_ + part] != 0; }

    std::span<const std::uint8_t> row(int machine) const {
        return {entries_.data() + machine * n_, static_cast<std::size_t>(n_)};
    }

    // E of the efficacy measure: total number of 1s.
    int ones() const;

  private:
    int m_;
    int n_;
    std::vector<std::uint8_t> entries_;
};

}  // namespace cellform
