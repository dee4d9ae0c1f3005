#include "doctest.h"

#include <random>

#include "edgesteg/bmp.hpp"
#include "edgesteg/error.hpp"
#include "support.hpp"

using namespace edgesteg;

namespace {

struct RawBmp {
    std::int32_t width = 1;
    std::int32_t height = 1;
    std::uint32_t dib_size = 40;
    std::uint16_t bit_count = 24;
    std::uint32_t compression = 0;
    std::uint32_t colors_used = 0;
    Bytes pixel_rows; // already padded, in file order
};

void le(Bytes& b, std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

Bytes build(const RawBmp& r) {
    Bytes b{'B', 'M'};
    const std::uint32_t offset = 14 + r.dib_size;
    le(b, offset + r.pixel_rows.size(), 4);
    le(b, 0, 4);
    le(b, offset, 4);
    le(b, r.dib_size, 4);
    le(b, static_cast<std::uint32_t>(r.width), 4);
    le(b, static_cast<std::uint32_t>(r.height), 4);
    le(b, 1, 2);
    le(b, r.bit_count, 2);
    le(b, r.compression, 4);
    le(b, r.pixel_rows.size(), 4);
    le(b, 0, 8);
    le(b, r.colors_used, 4);
    le(b, 0, 4);
    b.resize(14 + r.dib_size, 0); // V4/V5 tail left zeroed
    b.insert(b.end(), r.pixel_rows.begin(), r.pixel_rows.end());
    return b;
}

ErrorKind kind_of(const Bytes& bytes) {
    try {
        (void)read_bmp(bytes);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected read_bmp to throw");
    return ErrorKind::Io;
}

RgbImage gradient_image(std::size_t w, std::size_t h) {
    RgbImage img(w, h);
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x)
            img.at(x, y) = Rgb{static_cast<std::uint8_t>(x * 37 + y), static_cast<std::uint8_t>(y * 53),
                               static_cast<std::uint8_t>((x ^ y) * 11)};
    return img;
}

} // namespace

TEST_CASE("BGR file order maps to RGB in memory") {
    RawBmp r;
    r.pixel_rows = {0xFF, 0x00, 0x00, 0x00};
    const RgbImage img = read_bmp(build(r));
    REQUIRE(img.width() == 1);
    REQUIRE(img.height() == 1);
    CHECK(img.at(0, 0) == Rgb{0x00, 0x00, 0xFF});
}

TEST_CASE("bottom-up rows are flipped into top-down memory order") {
    RawBmp r;
    r.width = 3;
    r.height = 2;
    // file row 0 is blue-ish, file row 1 is red-ish; 9 bytes + 3 pad each
    r.pixel_rows = {1, 0, 0, 2, 0, 0, 3, 0, 0, 0, 0, 0,
                    0, 0, 4, 0, 0, 5, 0, 0, 6, 0, 0, 0};
    const RgbImage img = read_bmp(build(r));
    CHECK(img.at(0, 1) == Rgb{0, 0, 1});
    CHECK(img.at(2, 1) == Rgb{0, 0, 3});
    CHECK(img.at(0, 0) == Rgb{4, 0, 0});
    CHECK(img.at(2, 0) == Rgb{6, 0, 0});

    r.height = -2;
    const RgbImage top_down = read_bmp(build(r));
    CHECK(top_down.at(0, 0) == Rgb{0, 0, 1});
    CHECK(top_down.at(2, 1) == Rgb{6, 0, 0});
}

TEST_CASE("V4 and V5 info headers are accepted") {
    for (std::uint32_t dib : {108u, 124u}) {
        RawBmp r;
        r.dib_size = dib;
        r.width = 2;
        r.pixel_rows = {10, 20, 30, 40, 50, 60, 0, 0};
        const RgbImage img = read_bmp(build(r));
        CHECK(img.at(0, 0) == Rgb{30, 20, 10});
        CHECK(img.at(1, 0) == Rgb{60, 50, 40});
    }
}

TEST_CASE("write_bmp emits the canonical layout") {
    const Bytes one = write_bmp(RgbImage(1, 1));
    REQUIRE(one.size() == 14 + 40 + 4);
    CHECK(one[0] == 'B');
    CHECK(one[1] == 'M');
    CHECK(Bytes(one.end() - 4, one.end()) == Bytes{0, 0, 0, 0});

    const Bytes three = write_bmp(RgbImage(3, 2));
    CHECK(three.size() == 54 + 2 * 12);
    // biHeight positive => bottom-up
    CHECK(three[22] == 2);
    CHECK(three[25] == 0);
}

TEST_CASE("hand-built fixture corpus survives write/read") {
    for (std::int32_t w : {1, 2, 3, 5, 8, 13}) {
        for (std::int32_t h : {1, 4, -3}) {
            RawBmp r;
            r.width = w;
            r.height = h;
            const std::size_t stride = (static_cast<std::size_t>(w) * 3 + 3) / 4 * 4;
            for (std::size_t row = 0; row < static_cast<std::size_t>(std::abs(h)); ++row) {
                for (std::size_t i = 0; i < stride; ++i) {
                    r.pixel_rows.push_back(i < static_cast<std::size_t>(w) * 3
                                               ? static_cast<std::uint8_t>(row * 31 + i * 7)
                                               : 0);
                }
            }
            const RgbImage first = read_bmp(build(r));
            CHECK(read_bmp(write_bmp(first)) == first);
        }
    }
}

TEST_CASE("random images round-trip and the writer is deterministic") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    for (int i = 0; i < 100; ++i) {
        const RgbImage img = testsupport::random_image(rng, dim(rng), dim(rng));
        const Bytes bytes = write_bmp(img);
        CHECK(read_bmp(bytes) == img);
        CHECK(write_bmp(img) == bytes);
    }
}

TEST_CASE("reader rejects malformed and unsupported files") {
    CHECK(kind_of(Bytes{}) == ErrorKind::MalformedFile);

    Bytes bad_magic = write_bmp(gradient_image(4, 4));
    bad_magic[0] = 'X';
    CHECK(kind_of(bad_magic) == ErrorKind::MalformedFile);

    Bytes truncated = write_bmp(gradient_image(4, 4));
    truncated.resize(truncated.size() - 1);
    CHECK(kind_of(truncated) == ErrorKind::MalformedFile);

    RawBmp r;
    r.pixel_rows = {0, 0, 0, 0};
    r.bit_count = 32;
    CHECK(kind_of(build(r)) == ErrorKind::UnsupportedFormat);
    r.bit_count = 8;
    CHECK(kind_of(build(r)) == ErrorKind::UnsupportedFormat);
    r.bit_count = 24;
    r.compression = 1;
    CHECK(kind_of(build(r)) == ErrorKind::UnsupportedFormat);
    r.compression = 0;
    r.colors_used = 16;
    CHECK(kind_of(build(r)) == ErrorKind::UnsupportedFormat);
    r.colors_used = 0;
    r.width = 0;
    CHECK(kind_of(build(r)) == ErrorKind::ZeroDimension);
    r.width = 1;
    r.height = 0;
    CHECK(kind_of(build(r)) == ErrorKind::ZeroDimension);
}

TEST_CASE("file helpers report I/O failures") {
    CHECK_THROWS_AS(read_file("/nonexistent/dir/file.bmp"), Error);
    try {
        read_file("/nonexistent/dir/file.bmp");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}
