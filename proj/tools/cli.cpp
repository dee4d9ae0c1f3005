#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "edgesteg/bmp.hpp"
#include "edgesteg/canny.hpp"
#include "edgesteg/carrier.hpp"
#include "edgesteg/codec.hpp"
#include "edgesteg/metrics.hpp"

namespace edgesteg::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamFlags {
    std::string sigma;
    int low = -1;
    int high = -1;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--sigma", flags.sigma, "Gaussian sigma, 1.0..3.0 with one decimal")->required();
    cmd->add_option("--low", flags.low, "low threshold, 0..255")->required()->check(CLI::Range(0, 255));
    cmd->add_option("--high", flags.high, "high threshold, 0..255")->required()->check(CLI::Range(0, 255));
}

std::string sigma_text(int tenths) {
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

CannyParams to_params(const ParamFlags& flags) {
    const auto tenths = parse_sigma_tenths(flags.sigma);
    if (!tenths) throw UsageError("--sigma must look like 1.5 and lie within 1.0..3.0, got '" + flags.sigma + "'");
    if (flags.low > flags.high) throw UsageError("--low must not exceed --high");
    return CannyParams{static_cast<std::uint8_t>(*tenths), static_cast<std::uint8_t>(flags.low),
                       static_cast<std::uint8_t>(flags.high)};
}

void forbid_overwrite(const std::string& in, const std::string& out) {
    std::error_code ec;
    if (fs::weakly_canonical(in, ec) == fs::weakly_canonical(out, ec)) {
        throw UsageError("output path must differ from input path '" + in + "'");
    }
}

std::string params_text(const CannyParams& p) {
    return "sigma=" + sigma_text(p.sigma_tenths) + " low=" + std::to_string(p.low_threshold) +
           " high=" + std::to_string(p.high_threshold);
}

std::string coord_text(const Coord& c) {
    std::ostringstream os;
    os << '(' << std::setw(3) << std::setfill('0') << c.x << ',' << std::setw(3) << c.y << ')';
    return os.str();
}

} // namespace

ExitCode exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Io: return io;
    case ErrorKind::ParamOutOfRange: return usage;
    case ErrorKind::CapacityExceeded: return capacity;
    case ErrorKind::BadMagic:
    case ErrorKind::UnsupportedVersion:
    case ErrorKind::CorruptHeader:
    case ErrorKind::TruncatedPayload: return extraction;
    case ErrorKind::MalformedFile:
    case ErrorKind::UnsupportedFormat:
    case ErrorKind::ZeroDimension:
    case ErrorKind::ImageTooSmall:
    case ErrorKind::ImageTooNarrow:
    case ErrorKind::DimensionMismatch: return format;
    }
    return format;
}

std::optional<int> parse_sigma_tenths(std::string_view text) {
    if (text.size() != 3 || text[1] != '.') return std::nullopt;
    const auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!digit(text[0]) || !digit(text[2])) return std::nullopt;
    const int tenths = (text[0] - '0') * 10 + (text[2] - '0');
    if (tenths < CannyParams::min_sigma_tenths || tenths > CannyParams::max_sigma_tenths) return std::nullopt;
    return tenths;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hide data in the Canny edge pixels of 24-bit BMP images", "edgesteg"};
    app.require_subcommand(1);

    std::string in_path, out_path, data_path, a_path, b_path;
    ParamFlags flags;
    std::size_t coord_count = 0;
    bool machine = false;
    std::string expect_sigma;
    std::optional<int> expect_low, expect_high;

    auto* embed_cmd = app.add_subcommand("embed", "hide a file inside a cover image");
    embed_cmd->add_option("--in", in_path, "cover BMP")->required();
    embed_cmd->add_option("--data", data_path, "payload file")->required();
    embed_cmd->add_option("--out", out_path, "carrier BMP to write")->required();
    add_param_flags(embed_cmd, flags);

    auto* extract_cmd = app.add_subcommand("extract", "recover a hidden file from a carrier");
    extract_cmd->add_option("--in", in_path, "carrier BMP")->required();
    extract_cmd->add_option("--out", out_path, "file to write the payload to")->required();
    extract_cmd->add_option("--expect-sigma", expect_sigma, "fail unless the carrier used this sigma");
    extract_cmd->add_option("--expect-low", expect_low, "fail unless the carrier used this low threshold");
    extract_cmd->add_option("--expect-high", expect_high, "fail unless the carrier used this high threshold");

    auto* capacity_cmd = app.add_subcommand("capacity", "report how much data an image can hold");
    capacity_cmd->add_option("--in", in_path, "cover BMP")->required();
    capacity_cmd->add_option("--coords", coord_count, "also list the first N carrier coordinates");
    add_param_flags(capacity_cmd, flags);

    auto* edges_cmd = app.add_subcommand("edges", "render the detected edge map");
    edges_cmd->add_option("--in", in_path, "input BMP")->required();
    edges_cmd->add_option("--out", out_path, "edge map BMP to write")->required();
    add_param_flags(edges_cmd, flags);

    auto* inspect_cmd = app.add_subcommand("inspect", "print the carrier header");
    inspect_cmd->add_option("--in", in_path, "carrier BMP")->required();

    auto* metrics_cmd = app.add_subcommand("metrics", "compare two images");
    metrics_cmd->add_option("--a", a_path, "first BMP")->required();
    metrics_cmd->add_option("--b", b_path, "second BMP")->required();
    metrics_cmd->add_flag("--machine", machine, "also print a single key=value line");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'edgesteg --help' for the list of subcommands and flags\n";
        return usage;
    }

    try {
        if (*embed_cmd) {
            const CannyParams params = to_params(flags);
            forbid_overwrite(in_path, out_path);
            const RgbImage cover = load_bmp(in_path);
            const Bytes payload = read_file(data_path);
            const RgbImage carrier = embed(cover, payload, params);
            save_bmp(out_path, carrier);
            const std::size_t carriers = enumerate_carriers(detect_edges(cover, params)).size();
            const std::size_t used = (payload.size() * 8 + bits_per_carrier - 1) / bits_per_carrier;
            out << "carrier pixels: " << carriers << "\n";
            out << "carrier pixels used: " << used << "\n";
            out << "bytes hidden: " << payload.size() << " of " << capacity_for_carriers(carriers) << "\n";
        } else if (*extract_cmd) {
            forbid_overwrite(in_path, out_path);
            std::optional<int> want_sigma;
            if (!expect_sigma.empty()) {
                want_sigma = parse_sigma_tenths(expect_sigma);
                if (!want_sigma) throw UsageError("--expect-sigma must look like 1.5 and lie within 1.0..3.0");
            }
            const RgbImage carrier = load_bmp(in_path);
            const StegoHeader header = read_header(carrier);
            const CannyParams& p = header.params;
            if ((want_sigma && *want_sigma != p.sigma_tenths) ||
                (expect_low && *expect_low != p.low_threshold) ||
                (expect_high && *expect_high != p.high_threshold)) {
                err << "error: ParameterMismatch: carrier was written with " << params_text(p) << "\n";
                err << "hint: check the parameters agreed with the sender\n";
                return extraction;
            }
            const Extracted result = extract(carrier);
            write_file(out_path, result.payload);
            out << "recovered " << result.payload.size() << " bytes\n";
            out << params_text(result.params) << "\n";
        } else if (*capacity_cmd) {
            const CannyParams params = to_params(flags);
            const RgbImage cover = load_bmp(in_path);
            const CarrierSequence carriers = enumerate_carriers(detect_edges(cover, params));
            out << "carrier pixels: " << carriers.size() << "\n";
            out << "capacity bits: " << carriers.size() * bits_per_carrier << "\n";
            out << "capacity bytes: " << capacity_for_carriers(carriers.size()) << "\n";
            const std::size_t n = std::min(coord_count, carriers.size());
            for (std::size_t i = 0; i < n; ++i) out << (i ? " ; " : "") << coord_text(carriers[i]);
            if (n > 0) out << "\n";
        } else if (*edges_cmd) {
            const CannyParams params = to_params(flags);
            forbid_overwrite(in_path, out_path);
            const EdgeMap edges = detect_edges(load_bmp(in_path), params);
            RgbImage rendered(edges.width(), edges.height());
            for (std::size_t y = 0; y < edges.height(); ++y) {
                for (std::size_t x = 0; x < edges.width(); ++x) {
                    if (edges.at(x, y)) rendered.at(x, y) = Rgb{255, 255, 255};
                }
            }
            save_bmp(out_path, rendered);
            out << "edge pixels: " << edges.count() << "\n";
        } else if (*inspect_cmd) {
            const StegoHeader h = read_header(load_bmp(in_path));
            out << "magic: 0x" << std::hex << std::uppercase << h.magic << std::dec << "\n";
            out << "version: " << static_cast<int>(h.version) << "\n";
            out << "sigma: " << sigma_text(h.params.sigma_tenths) << "\n";
            out << "low threshold: " << static_cast<int>(h.params.low_threshold) << "\n";
            out << "high threshold: " << static_cast<int>(h.params.high_threshold) << "\n";
            out << "payload bytes: " << h.payload_len << "\n";
        } else if (*metrics_cmd) {
            const DiffReport report = diff(load_bmp(a_path), load_bmp(b_path));
            out << format_report(report);
            if (machine) out << format_report_kv(report) << "\n";
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const CapacityExceeded& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        err << "hint: " << error_remedy(e.kind()) << "\n";
        return capacity;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        err << "hint: " << error_remedy(e.kind()) << "\n";
        return exit_code_for(e.kind());
    }
    return ok;
}

} // namespace edgesteg::cli
