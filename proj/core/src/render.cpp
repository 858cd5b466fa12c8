#include "cheese/render.hpp"

#include <cstdio>

#include "cheese/error.hpp"

namespace cheese {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void require_opts(const RenderOptions& opts) {
  if (opts.width_px < 64) {
    throw InvalidInputError("render: width_px must be >= 64");
  }
}

// Square world window around one cheese's outer disc, margin included.
struct Panel {
  double cx, cy, side;
};

Panel panel_for(const SwissCheese& c, const RenderOptions& opts) {
  const double margin = opts.margin_frac * 2.0 * c.outer.radius;
  return Panel{c.outer.center.x, c.outer.center.y, 2.0 * (c.outer.radius + margin)};
}

// World y grows upward, SVG y downward; flip about the panel center.
void append_circle(std::string& out, const Panel& p, double x0, Point center, double radius,
                   const std::string& fill, const RenderOptions& opts) {
  const double cx = x0 + (center.x - p.cx) + p.side / 2.0;
  const double cy = (p.cy - center.y) + p.side / 2.0;
  out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" + fmt(radius) +
         "\" fill=\"" + fill + "\"";
  if (opts.show_boundary_chain) {
    out += " stroke=\"#000000\" stroke-width=\"" + fmt(p.side / 400.0) + "\"";
  }
  out += "/>\n";
}

void append_cheese(std::string& out, const SwissCheese& c, const Panel& p, double x0,
                   const RenderOptions& opts) {
  out += "<g>\n";
  append_circle(out, p, x0, c.outer.center, c.outer.radius, opts.fill_color, opts);
  for (const OpenDisc& d : c.discs) {
    append_circle(out, p, x0, d.center, d.radius, opts.hole_color, opts);
  }
  out += "</g>\n";
}

std::string document(int width_px, int height_px, double world_w, double world_h,
                     const std::string& title, const std::string& body) {
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(height_px) + "\" viewBox=\"0 0 " + fmt(world_w) + " " +
         fmt(world_h) + "\">\n";
  out += "<title>" + title + "</title>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const SwissCheese& c, const RenderOptions& opts) {
  require_opts(opts);
  const Panel p = panel_for(c, opts);
  std::string body;
  append_cheese(body, c, p, 0.0, opts);
  return document(opts.width_px, opts.width_px, p.side, p.side, "swiss cheese set", body);
}

std::string render_comparison(const SwissCheese& before, const SwissCheese& after,
                              const RenderOptions& opts) {
  require_opts(opts);
  Panel pb = panel_for(before, opts);
  Panel pa = panel_for(after, opts);
  const double side = pb.side > pa.side ? pb.side : pa.side;  // one shared scale
  pb.side = side;
  pa.side = side;

  std::string body;
  append_cheese(body, before, pb, 0.0, opts);
  append_cheese(body, after, pa, side, opts);
  return document(2 * opts.width_px, opts.width_px, 2.0 * side, side,
                  "swiss cheese comparison", body);
}

}  // namespace cheese
