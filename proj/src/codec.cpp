#include "edgesteg/codec.hpp"

#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "edgesteg/carrier.hpp"
#include "edgesteg/error.hpp"

namespace edgesteg {
namespace {

template <typename T>
void put_field(HeaderBits& bits, std::size_t& pos, T value, int width) {
    for (int i = width - 1; i >= 0; --i) {
        bits[pos++] = static_cast<std::uint8_t>((static_cast<std::uint64_t>(value) >> i) & 1u);
    }
}

std::uint64_t get_field(const HeaderBits& bits, std::size_t& pos, int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | bits[pos++];
    return v;
}

void require_width(const RgbImage& image) {
    if (image.width() < StegoHeader::pixel_count) {
        throw Error(ErrorKind::ImageTooNarrow,
                    "carrier must be at least " + std::to_string(StegoHeader::pixel_count) +
                        " pixels wide, got " + std::to_string(image.width()));
    }
}

void require_size(const RgbImage& image) {
    if (image.width() < 3 || image.height() < 3) {
        throw Error(ErrorKind::ImageTooSmall, "carrier must be at least 3x3 pixels, got " +
                                                  std::to_string(image.width()) + "x" +
                                                  std::to_string(image.height()));
    }
    require_width(image);
}

// Channel c of a pixel: 0 = R, 1 = G, 2 = B.
std::uint8_t& channel(Rgb& px, int c) { return c == 0 ? px.r : (c == 1 ? px.g : px.b); }
std::uint8_t channel(const Rgb& px, int c) { return c == 0 ? px.r : (c == 1 ? px.g : px.b); }

} // namespace

HeaderBits encode_header(const StegoHeader& header) {
    HeaderBits bits{};
    std::size_t pos = 0;
    put_field(bits, pos, header.magic, 16);
    put_field(bits, pos, header.version, 8);
    put_field(bits, pos, header.params.sigma_tenths, 8);
    put_field(bits, pos, header.params.low_threshold, 8);
    put_field(bits, pos, header.params.high_threshold, 8);
    put_field(bits, pos, header.payload_len, 32);
    return bits;
}

StegoHeader decode_header(const HeaderBits& bits) {
    StegoHeader h;
    std::size_t pos = 0;
    h.magic = static_cast<std::uint16_t>(get_field(bits, pos, 16));
    h.version = static_cast<std::uint8_t>(get_field(bits, pos, 8));
    h.params.sigma_tenths = static_cast<std::uint8_t>(get_field(bits, pos, 8));
    h.params.low_threshold = static_cast<std::uint8_t>(get_field(bits, pos, 8));
    h.params.high_threshold = static_cast<std::uint8_t>(get_field(bits, pos, 8));
    h.payload_len = static_cast<std::uint32_t>(get_field(bits, pos, 32));
    return h;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> bits;
    bits.reserve(data.size() * 8);
    for (std::uint8_t byte : data) {
        for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((byte >> i) & 1u));
    }
    return bits;
}

std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> data(bits.size() / 8);
    for (std::size_t i = 0; i < data.size(); ++i) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 8; ++j) byte = static_cast<std::uint8_t>((byte << 1) | (bits[i * 8 + j] & 1u));
        data[i] = byte;
    }
    return data;
}

void write_header(RgbImage& image, const StegoHeader& header) {
    require_width(image);
    const HeaderBits bits = encode_header(header);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        Rgb& px = image.at(i / 3, 0);
        std::uint8_t& ch = channel(px, static_cast<int>(i % 3));
        ch = lsb_replace(ch, 1, bits[i]);
    }
}

StegoHeader peek_header(const RgbImage& image) {
    require_width(image);
    HeaderBits bits{};
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bits[i] = channel(image.at(i / 3, 0), static_cast<int>(i % 3)) & 1u;
    }
    return decode_header(bits);
}

StegoHeader read_header(const RgbImage& image) {
    const StegoHeader h = peek_header(image);
    if (h.magic != StegoHeader::magic_value) {
        std::ostringstream msg;
        msg << "no carrier header found (magic 0x" << std::hex << std::uppercase << std::setw(4)
            << std::setfill('0') << h.magic << ")";
        throw Error(ErrorKind::BadMagic, msg.str());
    }
    if (h.version != StegoHeader::current_version) {
        throw Error(ErrorKind::UnsupportedVersion,
                    "carrier header version " + std::to_string(h.version) + " is not supported");
    }
    if (!h.params.valid()) {
        throw Error(ErrorKind::CorruptHeader,
                    "carrier header holds invalid parameters (sigma tenths " +
                        std::to_string(h.params.sigma_tenths) + ", low " +
                        std::to_string(h.params.low_threshold) + ", high " +
                        std::to_string(h.params.high_threshold) + ")");
    }
    return h;
}

RgbImage embed(const RgbImage& image, std::span<const std::uint8_t> payload,
               const CannyParams& params) {
    params.validate();
    require_size(image);

    const CarrierSequence carriers = enumerate_carriers(detect_edges(image, params));
    const std::size_t available = capacity_for_carriers(carriers.size());
    if (payload.size() > available || payload.size() > std::numeric_limits<std::uint32_t>::max()) {
        throw CapacityExceeded(available, payload.size());
    }

    RgbImage out = image;
    StegoHeader header;
    header.params = params;
    header.payload_len = static_cast<std::uint32_t>(payload.size());
    write_header(out, header);

    const std::vector<std::uint8_t> bits = pack_bits(payload);
    auto bit_at = [&](std::size_t q) -> std::uint8_t { return q < bits.size() ? bits[q] : 0; };
    for (std::size_t q = 0, k = 0; q < bits.size(); q += bits_per_carrier, ++k) {
        Rgb& px = out.at(carriers[k].x, carriers[k].y);
        for (int c = 0; c < 3; ++c) {
            const std::size_t base = q + static_cast<std::size_t>(c) * 3;
            const auto group = static_cast<std::uint8_t>((bit_at(base) << 2) | (bit_at(base + 1) << 1) |
                                                         bit_at(base + 2));
            std::uint8_t& ch = channel(px, c);
            ch = lsb_replace(ch, 3, group);
        }
    }
    return out;
}

Extracted extract(const RgbImage& carrier) {
    require_size(carrier);
    const StegoHeader header = read_header(carrier);

    const CarrierSequence carriers = enumerate_carriers(detect_edges(carrier, header.params));
    const std::size_t available = capacity_for_carriers(carriers.size());
    if (header.payload_len > available) {
        throw Error(ErrorKind::TruncatedPayload,
                    "header declares " + std::to_string(header.payload_len) +
                        " bytes but the carrier only holds " + std::to_string(available));
    }

    const std::size_t total_bits = std::size_t{header.payload_len} * 8;
    std::vector<std::uint8_t> bits;
    bits.reserve(total_bits + bits_per_carrier);
    for (std::size_t k = 0; bits.size() < total_bits; ++k) {
        const Rgb& px = carrier.at(carriers[k].x, carriers[k].y);
        for (int c = 0; c < 3; ++c) {
            const std::uint8_t ch = channel(px, c);
            for (int b = 2; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((ch >> b) & 1u));
        }
    }
    bits.resize(total_bits);
    return {unpack_bits(bits), header.params};
}

} // namespace edgesteg
