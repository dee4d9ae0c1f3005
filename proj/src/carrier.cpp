#include "edgesteg/carrier.hpp"

namespace edgesteg {

CarrierSequence enumerate_carriers(const EdgeMap& edges) {
    CarrierSequence coords;
    for (std::size_t y = reserved_rows; y < edges.height(); ++y) {
        for (std::size_t x = 0; x < edges.width(); ++x) {
            if (edges.at(x, y)) {
                coords.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
            }
        }
    }
    return coords;
}

std::size_t capacity_bytes(const EdgeMap& edges) {
    return capacity_for_carriers(enumerate_carriers(edges).size());
}

} // namespace edgesteg
