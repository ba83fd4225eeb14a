#include "ghzsim/emit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>

namespace ghzsim {

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void require_records(const std::vector<sweep_record>& records,
                     const std::vector<std::string>& measures) {
    if (records.empty()) {
        throw std::invalid_argument("emit: no records");
    }
    if (measures.empty()) {
        throw std::invalid_argument("emit: no measures");
    }
    for (const auto& rec : records) {
        if (rec.values.size() != measures.size()) {
            throw std::invalid_argument("emit: record does not match the measure list");
        }
    }
}

// records sharing one parameter set form one plotted group
using group_key = std::array<double, 5>;

group_key key_of(const sweep_record& rec) {
    return {static_cast<double>(static_cast<int>(rec.topo)), rec.p, rec.g,
            rec.alpha, rec.lambda};
}

}  // namespace

std::string format_csv(const std::vector<sweep_record>& records,
                       const std::vector<std::string>& measures) {
    require_records(records, measures);
    std::string out = "tau,topology,p,g,alpha";
    for (const auto& name : measures) {
        out += ",";
        out += name;
    }
    out += "\n";
    for (const auto& rec : records) {
        out += fmt12(rec.tau);
        out += ",";
        out += topology_name(rec.topo);
        out += ",";
        out += fmt12(rec.p);
        out += ",";
        out += fmt12(rec.g);
        out += ",";
        out += fmt12(rec.alpha);
        for (double v : rec.values) {
            out += ",";
            out += fmt12(v);
        }
        out += "\n";
    }
    return out;
}

std::string format_json(const std::vector<sweep_record>& records,
                        const std::vector<std::string>& measures) {
    require_records(records, measures);
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        out += "  {\"tau\": ";
        out += fmt12(rec.tau);
        out += ", \"topology\": \"";
        out += topology_name(rec.topo);
        out += "\", \"p\": ";
        out += fmt12(rec.p);
        out += ", \"g\": ";
        out += fmt12(rec.g);
        out += ", \"alpha\": ";
        out += fmt12(rec.alpha);
        for (std::size_t k = 0; k < measures.size(); ++k) {
            out += ", \"";
            out += measures[k];
            out += "\": ";
            out += fmt12(rec.values[k]);
        }
        out += i + 1 < records.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string format_svg(const std::vector<sweep_record>& records,
                       const std::vector<std::string>& measures) {
    require_records(records, measures);

    std::vector<group_key> group_order;
    std::map<group_key, std::size_t> group_index;
    for (const auto& rec : records) {
        const group_key key = key_of(rec);
        if (group_index.emplace(key, group_order.size()).second) {
            group_order.push_back(key);
        }
    }

    // name only the parameters that differ between groups
    std::array<bool, 5> varies{};
    for (std::size_t f = 0; f < 5; ++f) {
        for (const auto& key : group_order) {
            if (key[f] != group_order.front()[f]) {
                varies[f] = true;
            }
        }
    }
    static const char* field_names[5] = {"topology", "p", "g", "alpha", "lambda"};
    auto group_label = [&](const group_key& key) {
        std::string label;
        for (std::size_t f = 0; f < 5; ++f) {
            if (!varies[f]) {
                continue;
            }
            if (!label.empty()) {
                label += " ";
            }
            if (f == 0) {
                label += topology_name(static_cast<topology>(static_cast<int>(key[0])));
            } else {
                label += field_names[f];
                label += "=";
                label += fmt6(key[f]);
            }
        }
        return label;
    };

    double xmin = records.front().tau, xmax = xmin;
    double ymin = records.front().values.front(), ymax = ymin;
    for (const auto& rec : records) {
        xmin = std::min(xmin, rec.tau);
        xmax = std::max(xmax, rec.tau);
        for (double v : rec.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }
    const double ypad = (ymax > ymin) ? 0.05 * (ymax - ymin) : 0.5;
    ymin -= ypad;
    ymax += ypad;

    const double width = 960.0, height = 600.0;
    const double left = 70.0, right = width - 180.0;
    const double top = 20.0, bottom = height - 50.0;
    auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (right - left); };
    auto sy = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

    static const char* palette[10] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                      "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                      "#bcbd22", "#17becf"};

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(width) +
           "\" height=\"" + fmt6(height) + "\" viewBox=\"0 0 " + fmt6(width) + " " +
           fmt6(height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt6(width) + "\" height=\"" +
           fmt6(height) + "\" fill=\"white\"/>\n";

    out += "<line x1=\"" + fmt6(left) + "\" y1=\"" + fmt6(bottom) + "\" x2=\"" +
           fmt6(right) + "\" y2=\"" + fmt6(bottom) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt6(left) + "\" y1=\"" + fmt6(top) + "\" x2=\"" +
           fmt6(left) + "\" y2=\"" + fmt6(bottom) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        out += "<line x1=\"" + fmt6(sx(fx)) + "\" y1=\"" + fmt6(bottom) + "\" x2=\"" +
               fmt6(sx(fx)) + "\" y2=\"" + fmt6(bottom + 5.0) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt6(sx(fx)) + "\" y=\"" + fmt6(bottom + 20.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
               fmt6(fx) + "</text>\n";
        out += "<line x1=\"" + fmt6(left - 5.0) + "\" y1=\"" + fmt6(sy(fy)) +
               "\" x2=\"" + fmt6(left) + "\" y2=\"" + fmt6(sy(fy)) +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt6(left - 9.0) + "\" y=\"" + fmt6(sy(fy) + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" +
               fmt6(fy) + "</text>\n";
    }
    out += "<text x=\"" + fmt6((left + right) / 2.0) + "\" y=\"" + fmt6(height - 12.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">tau</text>\n";
    out += "<text x=\"18\" y=\"" + fmt6((top + bottom) / 2.0) +
           "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " +
           fmt6((top + bottom) / 2.0) + ")\">value</text>\n";

    std::size_t series = 0;
    for (std::size_t gi = 0; gi < group_order.size(); ++gi) {
        const group_key& key = group_order[gi];
        for (std::size_t k = 0; k < measures.size(); ++k) {
            const char* color = palette[series % 10];
            std::string points;
            for (const auto& rec : records) {
                if (key_of(rec) != key) {
                    continue;
                }
                points += fmt6(sx(rec.tau));
                points += ",";
                points += fmt6(sy(rec.values[k]));
                points += " ";
            }
            out += "<polyline fill=\"none\" stroke=\"";
            out += color;
            out += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";

            std::string label = measures[k];
            const std::string gl = group_label(key);
            if (!gl.empty()) {
                label += " ";
                label += gl;
            }
            const double ly = top + 16.0 * static_cast<double>(series) + 8.0;
            out += "<line x1=\"" + fmt6(right + 10.0) + "\" y1=\"" + fmt6(ly) +
                   "\" x2=\"" + fmt6(right + 30.0) + "\" y2=\"" + fmt6(ly) +
                   "\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
            out += "<text x=\"" + fmt6(right + 36.0) + "\" y=\"" + fmt6(ly + 4.0) +
                   "\" font-family=\"sans-serif\" font-size=\"12\">" + label +
                   "</text>\n";
            ++series;
        }
    }
    out += "</svg>\n";
    return out;
}

void emit(const std::vector<sweep_record>& records, const run_config& cfg) {
    std::string text;
    switch (cfg.format) {
        case out_format::csv: text = format_csv(records, cfg.measures); break;
        case out_format::json: text = format_json(records, cfg.measures); break;
        case out_format::svg: text = format_svg(records, cfg.measures); break;
    }
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw io_error("cannot open '" + cfg.out + "' for writing");
    }
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    file.flush();
    if (!file) {
        throw io_error("failed while writing '" + cfg.out + "'");
    }
}

}  // namespace ghzsim
