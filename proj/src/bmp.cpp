#include "edgesteg/bmp.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "edgesteg/error.hpp"

namespace edgesteg {
namespace {

constexpr std::size_t file_header_size = 14;
constexpr std::size_t info_header_size = 40;
constexpr std::uint32_t bi_rgb = 0;

std::uint16_t le16(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

std::uint32_t le32(std::span<const std::uint8_t> b, std::size_t off) {
    return static_cast<std::uint32_t>(b[off]) | (static_cast<std::uint32_t>(b[off + 1]) << 8) |
           (static_cast<std::uint32_t>(b[off + 2]) << 16) |
           (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

void put16(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(Bytes& out, std::uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::size_t row_stride(std::size_t width) { return (width * 3 + 3) / 4 * 4; }

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorKind::MalformedFile, "malformed BMP: " + what);
}

} // namespace

RgbImage read_bmp(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < file_header_size + 4) malformed("file too short");
    if (bytes[0] != 'B' || bytes[1] != 'M') malformed("missing 'BM' signature");

    const std::uint32_t data_offset = le32(bytes, 10);
    const std::uint32_t dib_size = le32(bytes, 14);
    if (dib_size != 40 && dib_size != 108 && dib_size != 124) {
        throw Error(ErrorKind::UnsupportedFormat,
                    "unsupported BMP info header size " + std::to_string(dib_size));
    }
    if (bytes.size() < file_header_size + dib_size) malformed("truncated info header");

    const auto raw_width = static_cast<std::int32_t>(le32(bytes, 18));
    const auto raw_height = static_cast<std::int32_t>(le32(bytes, 22));
    const std::uint16_t planes = le16(bytes, 26);
    const std::uint16_t bit_count = le16(bytes, 28);
    const std::uint32_t compression = le32(bytes, 30);
    const std::uint32_t colors_used = le32(bytes, 46);

    if (planes != 1) malformed("plane count must be 1");
    if (bit_count != 24) {
        throw Error(ErrorKind::UnsupportedFormat,
                    "only 24-bit BMPs are supported, got " + std::to_string(bit_count) + "-bit");
    }
    if (compression != bi_rgb) {
        throw Error(ErrorKind::UnsupportedFormat,
                    "compressed BMPs are not supported (compression " +
                        std::to_string(compression) + ")");
    }
    if (colors_used != 0) {
        throw Error(ErrorKind::UnsupportedFormat, "BMPs with a colour table are not supported");
    }
    if (dib_size >= 108 && le32(bytes, 54 + 12) != 0) {
        throw Error(ErrorKind::UnsupportedFormat, "BMPs with an alpha channel are not supported");
    }
    if (raw_width == 0 || raw_height == 0) {
        throw Error(ErrorKind::ZeroDimension, "BMP has zero width or height");
    }
    if (raw_width < 0 || raw_height == std::numeric_limits<std::int32_t>::min()) {
        malformed("invalid dimensions");
    }

    const bool top_down = raw_height < 0;
    const std::size_t width = static_cast<std::size_t>(raw_width);
    const std::size_t height = static_cast<std::size_t>(top_down ? -static_cast<std::int64_t>(raw_height)
                                                                 : raw_height);
    const std::size_t stride = row_stride(width);
    if (data_offset < file_header_size + dib_size) malformed("pixel data overlaps header");
    if (data_offset > bytes.size() || (bytes.size() - data_offset) / stride < height) {
        malformed("truncated pixel data");
    }

    RgbImage image(width, height);
    for (std::size_t row = 0; row < height; ++row) {
        const std::size_t y = top_down ? row : height - 1 - row;
        const std::uint8_t* p = bytes.data() + data_offset + row * stride;
        for (std::size_t x = 0; x < width; ++x, p += 3) {
            image.at(x, y) = Rgb{p[2], p[1], p[0]};
        }
    }
    return image;
}

Bytes write_bmp(const RgbImage& image) {
    const std::size_t stride = row_stride(image.width());
    const std::size_t pixel_bytes = stride * image.height();
    const std::size_t offset = file_header_size + info_header_size;

    Bytes out;
    out.reserve(offset + pixel_bytes);
    out.push_back('B');
    out.push_back('M');
    put32(out, static_cast<std::uint32_t>(offset + pixel_bytes));
    put32(out, 0); // reserved
    put32(out, static_cast<std::uint32_t>(offset));

    put32(out, info_header_size);
    put32(out, static_cast<std::uint32_t>(image.width()));
    put32(out, static_cast<std::uint32_t>(image.height()));
    put16(out, 1);  // planes
    put16(out, 24); // bits per pixel
    put32(out, bi_rgb);
    put32(out, static_cast<std::uint32_t>(pixel_bytes));
    put32(out, 2835); // 72 dpi
    put32(out, 2835);
    put32(out, 0);
    put32(out, 0);

    const std::size_t pad = stride - image.width() * 3;
    for (std::size_t row = 0; row < image.height(); ++row) {
        const std::size_t y = image.height() - 1 - row;
        for (std::size_t x = 0; x < image.width(); ++x) {
            const Rgb& px = image.at(x, y);
            out.push_back(px.b);
            out.push_back(px.g);
            out.push_back(px.r);
        }
        out.insert(out.end(), pad, 0);
    }
    return out;
}

Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for reading");
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorKind::Io, "failed reading '" + path.string() + "'");
    return data;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

} // namespace edgesteg
