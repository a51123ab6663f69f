#include "cellform/incidence.hpp"

#include <numeric>

namespace cellform {

IncidenceMatrix::IncidenceMatrix(int machines, int parts, std::vector<std::uint8_t> entries)
    : m_(machines), n_(parts), entries_(std::move(entries)) {
    if (m_ < 2) throw validation_error("need at least 2 machines, got " + std::to_string(m_));
    if (n_ < 2) throw validation_error("need at least 2 parts, got " + std::to_string(n_));
    if (entries_.size() != static_cast<std::size_t>(m_) * n_)
        throw validation_error("entry count does not match matrix dimensions");
    for (auto v : entries_)
        if (v > 1) throw validation_error("incidence entries must be 0 or 1");
    for (int i = 0; i < m_; ++i) {
        bool any = false;
        for (int j = 0; j < n_; ++j) any = any || at(i, j);
        if (!any)
            throw validation_error("machine " + std::to_string(i + 1) + " processes no parts");
    }
    for (int j = 0; j < n_; ++j) {
        bool any = false;
        for (int i = 0; i < m_; ++i) any = any || at(i, j);
        if (!any)
            throw validation_error("part " + std::to_string(j + 1) + " visits no machine");
    }
}

int IncidenceMatrix::ones() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0,
                           [](int acc, std::uint8_t v) { return acc + (v ? 1 : 0); });
}

}  // namespace cellform
