#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bicascade_cli {

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> xs;
    std::vector<double> ys;
    std::optional<double> reference; // dashed horizontal line
    std::string reference_label;
};

std::string render_line_plot(const LinePlot& plot);

struct RasterLegend {
    std::string label;
    std::string color;
};

struct RasterPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> xs;                     // column coordinates, ascending
    std::vector<double> ys;                     // row coordinates, ascending (drawn bottom-up)
    std::vector<std::vector<std::size_t>> cell; // cell[i][j] indexes legend, i over xs, j over ys
    std::vector<RasterLegend> legend;
};

std::string render_raster(const RasterPlot& plot);

std::string xml_escape(const std::string& text);

} // namespace bicascade_cli
