#pragma once

#include <cstdio>
#include <string>

#include "hfsc/model.hpp"

namespace hfsc {

namespace detail {

inline std::string figure_color(std::size_t figure, std::size_t figures) {
  const double hue = figures == 0 ? 0.0 : 360.0 * static_cast<double>(figure) / static_cast<double>(figures);
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.0f,65%%,60%%)", hue);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// Schematic lay diagram: one bed-sized frame per lay, top to bottom in plan
// order. Inside each frame the templates abut from the left edge, each block
// l_i * q_i wide and as tall as the lay's total height. One length unit and
// one layer are one user unit each.
inline std::string render_svg(const CuttingPlan& plan, const Instance& inst) {
  const Count margin = 20;
  const Count label = 14;
  const Count gap = 10;
  const Count row = label + inst.bed_height + gap;
  const Count width = inst.bed_length + 2 * margin;
  const Count height = 2 * margin + row * static_cast<Count>(plan.lays.size());
  const std::string w = std::to_string(width);
  const std::string h = std::to_string(height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w +
         " " + h + "\">\n";
  out += "<title>" + detail::xml_escape(plan.instance) + ": " + std::to_string(plan.lays.size()) + " lays</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < plan.lays.size(); ++k) {
    const Lay& lay = plan.lays[k];
    const Count top = margin + row * static_cast<Count>(k);
    const Count bed_y = top + label;
    const Count lay_height = lay.total_height();
    char caption[160];
    std::snprintf(caption, sizeof caption, "lay %zu: height %lld, length %lld, UR %.2f%%", k + 1,
                  static_cast<long long>(lay_height), static_cast<long long>(pattern_length(lay, inst.lengths)),
                  100.0 * utilization_rate(lay, inst));
    out += "<g id=\"lay" + std::to_string(k + 1) + "\">\n";
    out += "  <text x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(top + label - 3) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + caption + "</text>\n";
    out += "  <rect class=\"bed\" x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(bed_y) + "\" width=\"" +
           std::to_string(inst.bed_length) + "\" height=\"" + std::to_string(inst.bed_height) +
           "\" fill=\"#f4f4f4\" stroke=\"black\"/>\n";
    Count x = margin;
    for (std::size_t i = 0; i < lay.counts.size(); ++i) {
      if (lay.counts[i] <= 0) continue;
      const Count block = inst.lengths[i] * lay.counts[i];
      out += "  <rect class=\"column\" data-figure=\"" + std::to_string(i) + "\" x=\"" + std::to_string(x) +
             "\" y=\"" + std::to_string(bed_y + inst.bed_height - lay_height) + "\" width=\"" +
             std::to_string(block) + "\" height=\"" + std::to_string(lay_height) + "\" fill=\"" +
             detail::figure_color(i, lay.counts.size()) + "\" stroke=\"#333\"><title>figure " + std::to_string(i) +
             " x" + std::to_string(lay.counts[i]) + "</title></rect>\n";
      x += block;
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hfsc
