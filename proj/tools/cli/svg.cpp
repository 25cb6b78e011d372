#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bicascade_cli {

namespace {

constexpr double width = 640;
constexpr double height = 440;
constexpr double left = 80;
constexpr double right = 30;
constexpr double top = 50;
constexpr double bottom = 70;

std::string fmt(double v, const char* spec = "%.6g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

struct Frame {
    double x0, x1, y0, y1;

    double px(double x) const { return left + (x - x0) / (x1 - x0) * (width - left - right); }
    double py(double y) const { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); }
};

void open_svg(std::ostringstream& out, const std::string& title)
{
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << xml_escape(title) << "</text>\n";
}

void axes(std::ostringstream& out, const Frame& f, const std::string& x_label, const std::string& y_label)
{
    const double xa = f.px(f.x0), xb = f.px(f.x1), ya = f.py(f.y0), yb = f.py(f.y1);
    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xb << "\" y2=\"" << ya << "\"/>\n"
        << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xa << "\" y2=\"" << yb << "\"/>\n"
        << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double x = f.x0 + (f.x1 - f.x0) * i / 5.0;
        const double y = f.y0 + (f.y1 - f.y0) * i / 5.0;
        out << "<line x1=\"" << f.px(x) << "\" y1=\"" << ya << "\" x2=\"" << f.px(x) << "\" y2=\"" << ya + 5
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << f.px(x) << "\" y=\"" << ya + 18 << "\" text-anchor=\"middle\">" << fmt(x, "%.4g")
            << "</text>\n"
            << "<line x1=\"" << xa - 5 << "\" y1=\"" << f.py(y) << "\" x2=\"" << xa << "\" y2=\"" << f.py(y)
            << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << xa - 8 << "\" y=\"" << f.py(y) + 4 << "\" text-anchor=\"end\">" << fmt(y, "%.4g")
            << "</text>\n";
    }
    out << "</g>\n";
    out << "<text x=\"" << (xa + xb) / 2 << "\" y=\"" << height - 22
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xml_escape(x_label) << "</text>\n"
        << "<text x=\"20\" y=\"" << (ya + yb) / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 20 " << (ya + yb) / 2 << ")\">" << xml_escape(y_label) << "</text>\n";
}

} // namespace

std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string render_line_plot(const LinePlot& plot)
{
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!plot.xs.empty()) {
        x0 = *std::min_element(plot.xs.begin(), plot.xs.end());
        x1 = *std::max_element(plot.xs.begin(), plot.xs.end());
        y0 = *std::min_element(plot.ys.begin(), plot.ys.end());
        y1 = *std::max_element(plot.ys.begin(), plot.ys.end());
    }
    if (plot.reference) {
        y0 = std::min(y0, *plot.reference);
        y1 = std::max(y1, *plot.reference);
    }
    if (x1 - x0 < 1e-12) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    const double pad = std::max((y1 - y0) * 0.08, 1e-3);
    const Frame f{x0, x1, y0 - pad, y1 + pad};

    std::ostringstream out;
    open_svg(out, plot.title);
    axes(out, f, plot.x_label, plot.y_label);
    if (plot.reference) {
        const double y = f.py(*plot.reference);
        out << "<line x1=\"" << f.px(f.x0) << "\" y1=\"" << y << "\" x2=\"" << f.px(f.x1) << "\" y2=\"" << y
            << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n"
            << "<text x=\"" << f.px(f.x1) - 4 << "\" y=\"" << y - 6
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"gray\">"
            << xml_escape(plot.reference_label) << "</text>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < plot.xs.size(); ++i)
        out << (i ? " " : "") << fmt(f.px(plot.xs[i]), "%.2f") << ',' << fmt(f.py(plot.ys[i]), "%.2f");
    out << "\"/>\n";
    for (std::size_t i = 0; i < plot.xs.size(); ++i)
        out << "<circle cx=\"" << fmt(f.px(plot.xs[i]), "%.2f") << "\" cy=\"" << fmt(f.py(plot.ys[i]), "%.2f")
            << "\" r=\"2.5\" fill=\"#1f77b4\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string render_raster(const RasterPlot& plot)
{
    const std::size_t nx = plot.xs.size(), ny = plot.ys.size();
    // Cells are centred on the grid coordinates and split the gaps between neighbours.
    auto edges = [](const std::vector<double>& v) {
        std::vector<double> e(v.size() + 1);
        if (v.size() == 1) {
            e[0] = v[0] - 0.5;
            e[1] = v[0] + 0.5;
            return e;
        }
        for (std::size_t i = 1; i < v.size(); ++i)
            e[i] = (v[i - 1] + v[i]) / 2;
        e.front() = v.front() - (e[1] - v.front());
        e.back() = v.back() + (v.back() - e[v.size() - 1]);
        return e;
    };
    const auto ex = nx ? edges(plot.xs) : std::vector<double>{0, 1};
    const auto ey = ny ? edges(plot.ys) : std::vector<double>{0, 1};
    const Frame f{ex.front(), ex.back(), ey.front(), ey.back()};

    std::ostringstream out;
    open_svg(out, plot.title);
    out << "<g shape-rendering=\"crispEdges\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            const double xa = f.px(ex[i]), xb = f.px(ex[i + 1]);
            const double ya = f.py(ey[j + 1]), yb = f.py(ey[j]);
            out << "<rect x=\"" << fmt(xa, "%.2f") << "\" y=\"" << fmt(ya, "%.2f") << "\" width=\"" << fmt(xb - xa, "%.2f")
                << "\" height=\"" << fmt(yb - ya, "%.2f") << "\" fill=\"" << plot.legend.at(plot.cell[i][j]).color
                << "\"/>\n";
        }
    out << "</g>\n";
    axes(out, f, plot.x_label, plot.y_label);
    double lx = left;
    for (const auto& entry : plot.legend) {
        out << "<rect x=\"" << lx << "\" y=\"36\" width=\"10\" height=\"10\" fill=\"" << entry.color << "\"/>\n"
            << "<text x=\"" << lx + 14 << "\" y=\"45\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(entry.label)
            << "</text>\n";
        lx += 90;
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bicascade_cli
