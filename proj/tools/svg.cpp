#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

namespace specflow::cli {

namespace {

std::string fixed2(double x) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

void write_path_svg(const TrackedPath& path, std::ostream& os) {
    const double width = 800, height = 500, margin = 50;
    const std::size_t ns = path.samples.size();

    const long jlo = path.label_lo(0), jhi = path.label_hi(0);
    double t0 = path.samples.front(), t1 = path.samples.back();
    double vmin = 0, vmax = 0;
    bool first = true;
    for (std::size_t i = 0; i < ns; ++i)
        for (long j = std::max(jlo, path.label_lo(i)); j <= std::min(jhi, path.label_hi(i)); ++j) {
            const double v = path.lifted(j, i);
            vmin = first ? v : std::min(vmin, v);
            vmax = first ? v : std::max(vmax, v);
            first = false;
        }
    if (vmax - vmin < 1e-12) {
        vmin -= 1.0;
        vmax += 1.0;
    }
    const double pad = 0.05 * (vmax - vmin);
    vmin -= pad;
    vmax += pad;

    auto px = [&](double t) { return margin + (t - t0) / (t1 - t0) * (width - 2 * margin); };
    auto py = [&](double v) { return height - margin - (v - vmin) / (vmax - vmin) * (height - 2 * margin); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes, with the zero line emphasized when visible
    os << "<line x1=\"" << fixed2(margin) << "\" y1=\"" << fixed2(height - margin) << "\" x2=\""
       << fixed2(width - margin) << "\" y2=\"" << fixed2(height - margin)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << fixed2(margin) << "\" y1=\"" << fixed2(margin) << "\" x2=\""
       << fixed2(margin) << "\" y2=\"" << fixed2(height - margin) << "\" stroke=\"black\"/>\n";
    if (vmin < 0 && vmax > 0)
        os << "<line x1=\"" << fixed2(margin) << "\" y1=\"" << fixed2(py(0)) << "\" x2=\""
           << fixed2(width - margin) << "\" y2=\"" << fixed2(py(0))
           << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";

    std::size_t color = 0;
    for (long j = jlo; j <= jhi; ++j, ++color) {
        os << "<polyline fill=\"none\" stroke=\"" << kPalette[color % 8]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < ns; ++i) {
            if (j < path.label_lo(i) || j > path.label_hi(i)) continue;
            os << fixed2(px(path.samples[i])) << ',' << fixed2(py(path.lifted(j, i))) << ' ';
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace specflow::cli
