#include "sbal/records.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sbal {

std::vector<SignedEdgeRecord> drop_neutral(std::span<const RawRecord> records) {
    std::vector<SignedEdgeRecord> out;
    out.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RawRecord& r = records[i];
        if (!r.is_score())
            throw std::invalid_argument("drop_neutral: record " + std::to_string(i) +
                                        " does not carry a numeric score");
        double w = r.score();
        if (!std::isfinite(w))
            throw std::invalid_argument("drop_neutral: record " + std::to_string(i) +
                                        " has a non-finite score");
        if (w == 0.0) continue;
        out.push_back({r.source, r.target, w,
                       r.t.has_value() ? *r.t : static_cast<std::int64_t>(i)});
    }
    return out;
}

} // namespace sbal
