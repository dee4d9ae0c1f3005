#include "edgesteg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <sstream>

#include "edgesteg/error.hpp"

namespace edgesteg {
namespace {

std::string psnr_text(double psnr) {
    if (std::isinf(psnr)) return "inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << psnr;
    return os.str();
}

} // namespace

DiffReport diff(const RgbImage& a, const RgbImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "image sizes differ: " + std::to_string(a.width()) + "x" +
                        std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                        std::to_string(b.height()));
    }
    DiffReport report;
    std::uint64_t squared = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int deltas[3] = {a[i].r - b[i].r, a[i].g - b[i].g, a[i].b - b[i].b};
        bool changed = false;
        for (int d : deltas) {
            if (d == 0) continue;
            changed = true;
            ++report.changed_channels;
            const auto ad = static_cast<std::uint8_t>(std::abs(d));
            report.max_channel_delta = std::max(report.max_channel_delta, ad);
            squared += static_cast<std::uint64_t>(d * d);
        }
        report.changed_pixels += changed;
    }
    const double samples = 3.0 * static_cast<double>(a.size());
    report.mse = samples > 0 ? static_cast<double>(squared) / samples : 0.0;
    report.psnr_db = report.mse == 0.0 ? std::numeric_limits<double>::infinity()
                                       : 10.0 * std::log10(255.0 * 255.0 / report.mse);
    return report;
}

bool verify_stability(const RgbImage& original, const RgbImage& carrier,
                      const CannyParams& params) {
    if (original.width() != carrier.width() || original.height() != carrier.height()) {
        throw Error(ErrorKind::DimensionMismatch, "image sizes differ");
    }
    return detect_edges(original, params) == detect_edges(carrier, params);
}

std::string format_report(const DiffReport& r) {
    std::ostringstream os;
    os << std::left;
    os << std::setw(18) << "changed pixels" << r.changed_pixels << '\n';
    os << std::setw(18) << "changed channels" << r.changed_channels << '\n';
    os << std::setw(18) << "max channel delta" << static_cast<int>(r.max_channel_delta) << '\n';
    os << std::setw(18) << "mse" << std::fixed << std::setprecision(6) << r.mse << '\n';
    os << std::setw(18) << "psnr (dB)" << psnr_text(r.psnr_db) << '\n';
    return os.str();
}

std::string format_report_kv(const DiffReport& r) {
    std::ostringstream os;
    os << "changed_pixels=" << r.changed_pixels << " changed_channels=" << r.changed_channels
       << " max_channel_delta=" << static_cast<int>(r.max_channel_delta) << " mse=" << std::fixed
       << std::setprecision(6) << r.mse << " psnr_db=" << psnr_text(r.psnr_db);
    return os.str();
}

} // namespace edgesteg
