#include "fcmlab/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fcmlab/errors.hpp"

namespace fcmlab {

namespace {

std::string fixed2(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed, 2);
    return std::string(buf, r.ptr);
}

std::string general6(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, 6);
    return std::string(buf, r.ptr);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write " + path.string());
    }
    file << text;
    if (!file) {
        throw IoError("failed writing " + path.string());
    }
}

void open_svg(std::ostringstream& out, int width, int height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\" font-family=\"sans-serif\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
}

void draw_text(std::ostringstream& out, double x, double y,
               const std::string& text, const std::string& extra = "") {
    out << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(y) << "\""
        << (extra.empty() ? "" : " " + extra) << ">" << xml_escape(text)
        << "</text>\n";
}

void draw_line(std::ostringstream& out, double x1, double y1, double x2,
               double y2, const std::string& style) {
    out << "<line x1=\"" << fixed2(x1) << "\" y1=\"" << fixed2(y1)
        << "\" x2=\"" << fixed2(x2) << "\" y2=\"" << fixed2(y2) << "\" "
        << style << "/>\n";
}

} // namespace

void emit_visual_tsfd_svg(const KSweepResult& sweep_result,
                          const std::filesystem::path& path,
                          const std::string& title) {
    if (sweep_result.records.empty()) {
        throw InvalidArgumentError("emit_visual_tsfd_svg: empty sweep");
    }
    constexpr int kMarginLeft = 70, kMarginTop = 34, kMarginRight = 40,
                  kMarginBottom = 58;
    constexpr int kPlot = 480; // square plot area keeps the diagonal at 45 deg
    constexpr int kWidth = kMarginLeft + kPlot + kMarginRight;
    constexpr int kHeight = kMarginTop + kPlot + kMarginBottom;

    double extent = 0.0;
    for (const auto& [k, rec] : sweep_result.records) {
        extent = std::max({extent, rec.inertia.fi, rec.inertia.fb});
    }
    if (!(extent > 0.0)) {
        extent = 1.0;
    }
    const double domain = 1.05 * extent;
    const auto px = [&](double v) { return kMarginLeft + v / domain * kPlot; };
    const auto py = [&](double v) {
        return kMarginTop + kPlot - v / domain * kPlot;
    };

    std::ostringstream out;
    open_svg(out, kWidth, kHeight);
    if (!title.empty()) {
        draw_text(out, kMarginLeft + kPlot / 2.0, 20, title,
                  "text-anchor=\"middle\" font-size=\"14\"");
    }

    // Axes.
    draw_line(out, px(0), py(0), px(domain), py(0),
              "stroke=\"#333333\" stroke-width=\"1\"");
    draw_line(out, px(0), py(0), px(0), py(domain),
              "stroke=\"#333333\" stroke-width=\"1\"");
    draw_text(out, kMarginLeft + kPlot / 2.0, kHeight - 16, "FI",
              "text-anchor=\"middle\" font-size=\"13\"");
    draw_text(out, 22, kMarginTop + kPlot / 2.0, "FB",
              "text-anchor=\"middle\" font-size=\"13\"");
    draw_text(out, px(0), py(0) + 16, "0", "text-anchor=\"middle\" font-size=\"11\"");
    draw_text(out, px(domain), py(0) + 16, general6(domain),
              "text-anchor=\"middle\" font-size=\"11\"");
    draw_text(out, px(0) - 8, py(domain) + 4, general6(domain),
              "text-anchor=\"end\" font-size=\"11\"");

    // The fb = fi diagonal.
    draw_line(out, px(0), py(0), px(domain), py(domain),
              "stroke=\"#cc0000\" stroke-width=\"2\"");

    // One dashed ray from the origin through each K's point, extended to the
    // edge of the plotted domain.
    for (const auto& [k, rec] : sweep_result.records) {
        const double fi = rec.inertia.fi;
        const double fb = rec.inertia.fb;
        const double longest = std::max(fi, fb);
        const double t = longest > 0.0 ? domain / longest : 0.0;
        draw_line(out, px(0), py(0), px(t * fi), py(t * fb),
                  "stroke=\"#cc0000\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    }

    // Polyline through the per-K points in increasing K.
    if (sweep_result.records.size() > 1) {
        out << "<polyline fill=\"none\" stroke=\"#0055cc\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [k, rec] : sweep_result.records) {
            if (!first) {
                out << ' ';
            }
            out << fixed2(px(rec.inertia.fi)) << ',' << fixed2(py(rec.inertia.fb));
            first = false;
        }
        out << "\"/>\n";
    }

    // Markers and K labels.
    for (const auto& [k, rec] : sweep_result.records) {
        const double x = px(rec.inertia.fi);
        const double y = py(rec.inertia.fb);
        out << "<circle cx=\"" << fixed2(x) << "\" cy=\"" << fixed2(y)
            << "\" r=\"3.5\" fill=\"#0055cc\"/>\n";
        draw_text(out, x + 6, y - 6, std::to_string(k), "font-size=\"12\"");
    }

    out << "</svg>\n";
    write_file(path, out.str());
}

void emit_elbow_svg(const std::map<int, double>& series,
                    const std::string& series_name,
                    const std::filesystem::path& path,
                    const std::string& title) {
    if (series.empty()) {
        throw InvalidArgumentError("emit_elbow_svg: empty series");
    }
    constexpr int kMarginLeft = 80, kMarginTop = 34, kMarginRight = 30,
                  kMarginBottom = 58;
    constexpr int kPlotW = 480, kPlotH = 300;
    constexpr int kWidth = kMarginLeft + kPlotW + kMarginRight;
    constexpr int kHeight = kMarginTop + kPlotH + kMarginBottom;

    const int k_lo = series.begin()->first;
    const int k_hi = series.rbegin()->first;
    double v_lo = series.begin()->second;
    double v_hi = v_lo;
    for (const auto& [k, v] : series) {
        v_lo = std::min(v_lo, v);
        v_hi = std::max(v_hi, v);
    }
    const double pad = v_hi > v_lo ? 0.05 * (v_hi - v_lo) : 0.5;
    v_lo -= pad;
    v_hi += pad;
    const double x_lo = k_lo - 0.5, x_hi = k_hi + 0.5;

    const auto px = [&](double k) {
        return kMarginLeft + (k - x_lo) / (x_hi - x_lo) * kPlotW;
    };
    const auto py = [&](double v) {
        return kMarginTop + kPlotH - (v - v_lo) / (v_hi - v_lo) * kPlotH;
    };

    std::ostringstream out;
    open_svg(out, kWidth, kHeight);
    if (!title.empty()) {
        draw_text(out, kMarginLeft + kPlotW / 2.0, 20, title,
                  "text-anchor=\"middle\" font-size=\"14\"");
    }

    // Axes and labels.
    draw_line(out, kMarginLeft, kMarginTop + kPlotH, kMarginLeft + kPlotW,
              kMarginTop + kPlotH, "stroke=\"#333333\" stroke-width=\"1\"");
    draw_line(out, kMarginLeft, kMarginTop, kMarginLeft, kMarginTop + kPlotH,
              "stroke=\"#333333\" stroke-width=\"1\"");
    draw_text(out, kMarginLeft + kPlotW / 2.0, kHeight - 16, "K",
              "text-anchor=\"middle\" font-size=\"13\"");
    draw_text(out, 26, kMarginTop + kPlotH / 2.0, series_name,
              "text-anchor=\"middle\" font-size=\"13\"");
    draw_text(out, kMarginLeft - 10, py(v_lo + pad) + 4, general6(v_lo + pad),
              "text-anchor=\"end\" font-size=\"11\"");
    draw_text(out, kMarginLeft - 10, py(v_hi - pad) + 4, general6(v_hi - pad),
              "text-anchor=\"end\" font-size=\"11\"");
    for (const auto& [k, v] : series) {
        draw_text(out, px(k), kMarginTop + kPlotH + 18, std::to_string(k),
                  "text-anchor=\"middle\" font-size=\"11\"");
    }

    if (series.size() > 1) {
        out << "<polyline fill=\"none\" stroke=\"#0055cc\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [k, v] : series) {
            if (!first) {
                out << ' ';
            }
            out << fixed2(px(k)) << ',' << fixed2(py(v));
            first = false;
        }
        out << "\"/>\n";
    }
    for (const auto& [k, v] : series) {
        out << "<circle cx=\"" << fixed2(px(k)) << "\" cy=\"" << fixed2(py(v))
            << "\" r=\"3.5\" fill=\"#0055cc\"/>\n";
    }

    // Highlight the detected elbow when the rule applies.
    try {
        const int at = elbow(series, Orientation::Maximized);
        const double v = series.at(at);
        out << "<circle cx=\"" << fixed2(px(at)) << "\" cy=\"" << fixed2(py(v))
            << "\" r=\"6\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"2\"/>\n";
        draw_text(out, px(at) + 10, py(v) - 10, "elbow K=" + std::to_string(at),
                  "font-size=\"12\" fill=\"#cc0000\"");
    } catch (const InsufficientRangeError&) {
        // Fewer than three consecutive points: chart stays unannotated.
    }

    out << "</svg>\n";
    write_file(path, out.str());
}

} // namespace fcmlab
