#ifndef WSNSIM_REPORT_HPP
#define WSNSIM_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsnsim/sim.hpp"

namespace wsnsim {

class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string fmt_energy(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v); // exact double round-trip
    return buf;
}

} // namespace detail

inline std::string csv_string(const SimulationResult& result) {
    std::ostringstream out;
    out << "round,alive,residual_energy_j,packets_to_bs,heads\n";
    for (const RoundMetrics& m : result.per_round) {
        out << m.round << ',' << m.alive_count << ','
            << detail::fmt_energy(m.total_residual_energy) << ','
            << m.cumulative_packets_to_bs << ',' << m.head_count << '\n';
    }
    return out.str();
}

inline void export_csv(const SimulationResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ReportError("cannot write " + path);
    out << csv_string(result);
    if (!out) throw ReportError("write failed: " + path);
}

inline nlohmann::json summary_json(const SimulationResult& result) {
    auto opt = [](const std::optional<int>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    return nlohmann::json{
        {"first_node_death_round", opt(result.summary.first_node_death_round)},
        {"half_nodes_death_round", opt(result.summary.half_nodes_death_round)},
        {"last_node_death_round", opt(result.summary.last_node_death_round)},
        {"total_packets_to_bs", result.summary.total_packets_to_bs},
        {"rounds_executed", result.summary.rounds_executed},
        {"seed", result.seed}};
}

inline void export_summary_json(const SimulationResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ReportError("cannot write " + path);
    out << summary_json(result).dump(2) << '\n';
}

// Minimal SVG line chart. One polyline per series; axis extents cover the
// data's min/max exactly.
struct ChartSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

inline std::string render_svg_chart(const std::string& title, const std::string& x_label,
                                    const std::string& y_label,
                                    const std::vector<ChartSeries>& series) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b"};
    const double w = 840, h = 520;
    const double ml = 80, mr = 160, mt = 50, mb = 60;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const ChartSeries& s : series) {
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << w / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"18\">"
        << title << "</text>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
        << h - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 18
        << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n"
        << "<text x=\"20\" y=\"" << (mt + h - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
        << (mt + h - mb) / 2 << ")\">" << y_label << "</text>\n";
    // extent tick labels
    out << "<text x=\"" << ml << "\" y=\"" << h - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << detail::fmt_energy(xmin)
        << "</text>\n"
        << "<text x=\"" << w - mr << "\" y=\"" << h - mb + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << detail::fmt_energy(xmax)
        << "</text>\n"
        << "<text x=\"" << ml - 8 << "\" y=\"" << h - mb + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << detail::fmt_energy(ymin) << "</text>\n"
        << "<text x=\"" << ml - 8 << "\" y=\"" << mt + 4
        << "\" text-anchor=\"end\" font-size=\"11\">" << detail::fmt_energy(ymax) << "</text>\n";

    for (size_t si = 0; si < series.size(); ++si) {
        const ChartSeries& s = series[si];
        const char* color = palette[si % (sizeof(palette) / sizeof(palette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < s.x.size(); ++i)
            out << sx(s.x[i]) << ',' << sy(s.y[i]) << ' ';
        out << "\"/>\n";
        const double ly = mt + 20 * static_cast<double>(si);
        out << "<line x1=\"" << w - mr + 10 << "\" y1=\"" << ly << "\" x2=\"" << w - mr + 34
            << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << w - mr + 40 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
            << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

// Emits alive.svg, energy.svg, packets.svg into out_dir, one series per
// labeled result.
inline void render_plots(const std::vector<SimulationResult>& results,
                         const std::vector<std::string>& labels, const std::string& out_dir) {
    if (results.empty()) throw ReportError("no results to plot");
    if (results.size() != labels.size()) throw ReportError("labels/results size mismatch");

    auto extract = [&](auto getter) {
        std::vector<ChartSeries> series;
        for (size_t i = 0; i < results.size(); ++i) {
            ChartSeries s;
            s.label = labels[i];
            for (const RoundMetrics& m : results[i].per_round) {
                s.x.push_back(static_cast<double>(m.round));
                s.y.push_back(getter(m));
            }
            series.push_back(std::move(s));
        }
        return series;
    };
    auto write = [&](const std::string& name, const std::string& svg) {
        const std::string path = out_dir + "/" + name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ReportError("cannot write " + path);
        out << svg;
    };

    write("alive.svg",
          render_svg_chart("Nodes alive", "round", "alive nodes",
                           extract([](const RoundMetrics& m) {
                               return static_cast<double>(m.alive_count);
                           })));
    write("energy.svg",
          render_svg_chart("Residual energy", "round", "residual energy (J)",
                           extract([](const RoundMetrics& m) {
                               return m.total_residual_energy;
                           })));
    write("packets.svg",
          render_svg_chart("Packets sent to base station", "round", "cumulative packets",
                           extract([](const RoundMetrics& m) {
                               return static_cast<double>(m.cumulative_packets_to_bs);
                           })));
}

} // namespace wsnsim

#endif
