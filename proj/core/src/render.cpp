#include "mcurve/render.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "mcurve/encoder.hpp"

namespace mcurve {

namespace {

constexpr int kMargin = 24;

std::string fmt_signed(std::int64_t value) {
    return value > 0 ? "+" + std::to_string(value) : std::to_string(value);
}

std::string twist_text(const TwistDistribution& twist) {
    const std::int64_t c_eff = twist.component_count();
    std::string out = "twists " + std::to_string(c_eff);
    if (c_eff == 0) return out;
    out += " (" + std::to_string(twist.base) + "×t=" + std::to_string(twist.t);
    if (twist.m > 0)
        out += ", " + std::to_string(twist.m) + "×t=" + std::to_string(twist.t + 1);
    out += ")";
    return out;
}

std::string side_text(std::int64_t count, Side side) {
    std::string out = std::to_string(count);
    if (side != Side::None) {
        out += " ";
        out += to_string(side);
    }
    return out;
}

/// Accumulates the polylines of one region group.
class StrandSink {
public:
    StrandSink(std::string& out, int spacing) : out_(out), spacing_(spacing) {}

    void open(const std::string& region) {
        out_ += "  <g id=\"region-" + region + "\" class=\"region\">\n";
    }
    void close() { out_ += "  </g>\n"; }

    void polyline(const std::vector<std::pair<int, int>>& points) {
        out_ += "    <polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) out_ += " ";
            out_ += std::to_string(points[i].first) + "," + std::to_string(points[i].second);
        }
        out_ += "\"/>\n";
        ++count_;
    }

    /// Straight strand across the lane.
    void through(int x0, int x1, int y) { polyline({{x0, y}, {x1, y}}); }

    /// Loop attached to one wall: enters and returns on the same side.
    void loop(int wall_x, int reach_x, int y) {
        polyline({{wall_x, y}, {reach_x, y}, {reach_x, y + spacing_}, {wall_x, y + spacing_}});
    }

    /// Closed ring around the handle centre (longitude curve), drawn as a
    /// diamond.
    void ring(int cx, int cy, int radius) {
        polyline({{cx, cy - radius},
                  {cx + radius, cy},
                  {cx, cy + radius},
                  {cx - radius, cy},
                  {cx, cy - radius}});
    }

    /// Strand from the invisible band to a visible wall, winding `bumps`
    /// times near the handle.
    void winding(int from_x, int from_y, int cx, int cy, int to_x, int to_y,
                 std::int64_t bumps) {
        std::vector<std::pair<int, int>> pts;
        pts.push_back({from_x, from_y});
        pts.push_back({cx, cy + spacing_});
        const int reach = std::max(2, spacing_ / 2);
        for (std::int64_t b = 0; b < bumps; ++b) {
            pts.push_back({cx - reach, cy});
            pts.push_back({cx + reach, cy});
        }
        pts.push_back({cx, cy - spacing_});
        pts.push_back({to_x, to_y});
        polyline(pts);
    }

    std::int64_t count() const { return count_; }

private:
    std::string& out_;
    int spacing_;
    std::int64_t count_ = 0;
};

}  // namespace

Result<std::string> render_svg(const RenderSpec& spec) {
    Diagnostics check = consistency_check(spec.census);
    if (!check.ok()) {
        Diagnostics diags;
        diags.error("render", DiagCode::InconsistentCensus,
                    "census fails consistency checks");
        diags.merge(check);
        return Result<std::string>::failure(std::move(diags));
    }

    const MultiCurveCensus& census = spec.census;
    const int n = census.sig.n;
    const int g = census.sig.g;
    const int spacing = std::max(2, spec.strand_spacing);
    const int lanes = n + g;
    const int lane_w = 14 * spacing;

    // Rows needed per band so the default height fits every strand.
    std::int64_t rows_vis = 1;
    std::int64_t rows_inv = 1;
    for (const PunctureCensus& u : census.puncture)
        rows_vis = std::max(rows_vis, u.above + u.below + u.loop_count + 1);
    for (const GenusCensus& gc : census.genus) {
        rows_vis = std::max(rows_vis, gc.vis_above + gc.vis_below + gc.visible_genus +
                                          gc.twist.component_count() + gc.upper_diag +
                                          gc.lower_diag + gc.c_curves + 2);
        rows_inv = std::max(rows_inv, gc.invis_above + gc.invis_below +
                                          gc.invisible_genus + gc.cutting_total() + 2);
    }
    rows_vis = std::max(rows_vis, census.handle.visible_genus +
                                      census.handle.cutting_total() +
                                      census.handle.c_curves + 2);
    rows_inv = std::max(rows_inv, census.handle.invisible_genus +
                                      census.handle.cutting_total() + 2);

    const int width = spec.width > 0 ? spec.width : 2 * kMargin + lanes * lane_w;
    const int height = spec.height > 0
                           ? spec.height
                           : 2 * kMargin + spacing * static_cast<int>(rows_vis + rows_inv + 6);
    const int y_top = kMargin;
    const int y_bot = height - kMargin;
    const int y_mid = height / 2;

    std::string chrome;
    std::string strands;
    StrandSink sink(strands, spacing);

    const auto lane_x0 = [&](int lane) { return kMargin + lane * lane_w; };
    const auto wall_line = [&](int x) {
        chrome += "    <line x1=\"" + std::to_string(x) + "\" y1=\"" + std::to_string(y_top) +
                  "\" x2=\"" + std::to_string(x) + "\" y2=\"" + std::to_string(y_bot) +
                  "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    };
    const auto wall_label = [&](int x, const std::string& name) {
        if (!spec.show_labels) return;
        chrome += "    <text x=\"" + std::to_string(x - 8) + "\" y=\"" +
                  std::to_string(y_bot + 14) + "\" font-size=\"10\" fill=\"#555555\">" +
                  name + "</text>\n";
    };
    const auto region_label = [&](int lane, const std::string& name) {
        if (!spec.show_labels) return;
        chrome += "    <text x=\"" + std::to_string(lane_x0(lane) + lane_w / 2 - 8) +
                  "\" y=\"" + std::to_string(y_top - 8) +
                  "\" font-size=\"11\" fill=\"#333333\">" + name + "</text>\n";
    };
    const auto handle_glyph = [&](int cx) {
        chrome += "    <circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
                  std::to_string(y_mid) + "\" r=\"" + std::to_string(spacing) +
                  "\" fill=\"none\" stroke=\"#bb5500\" stroke-width=\"1\"/>\n";
    };
    const auto puncture_glyph = [&](int cx, int cy) {
        chrome += "    <circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
                  std::to_string(cy) + "\" r=\"2\" fill=\"#bb5500\"/>\n";
    };

    int lane = 0;
    for (const PunctureCensus& u : census.puncture) {
        const int x0 = lane_x0(lane);
        const int x1 = x0 + lane_w;
        const int cx = x0 + lane_w / 2;
        sink.open(region_name({RegionKind::U, u.index}));
        int slot = 0;
        const auto slot_y = [&]() { return y_top + spacing * (1 + slot++); };
        for (std::int64_t k = 0; k < u.above; ++k) sink.through(x0, x1, slot_y());
        // Loops hug the wall that carries both endpoints: beta_i for the
        // right variant, beta_{i+1} for the left.
        for (std::int64_t k = 0; k < u.loop_count; ++k) {
            const int y = slot_y();
            if (u.loop_side == Side::Right)
                sink.loop(x0, cx + spacing, y);
            else
                sink.loop(x1, cx - spacing, y);
        }
        puncture_glyph(cx, y_top + spacing * (1 + static_cast<int>(
                                                      std::min<std::int64_t>(u.above, 64))));
        for (std::int64_t k = 0; k < u.below; ++k) sink.through(x0, x1, slot_y());
        sink.close();
        region_label(lane, region_name({RegionKind::U, u.index}));
        wall_line(x0);
        wall_label(x0, arc_name({ArcGroup::Beta, u.index}));
        ++lane;
    }

    for (const GenusCensus& gc : census.genus) {
        const int i = gc.index;
        const int x0 = lane_x0(lane);
        const int x1 = x0 + lane_w;
        const int cx = x0 + lane_w / 2;
        sink.open(region_name({RegionKind::G, i}));
        int vis_slot = 0;
        int inv_slot = 0;
        const auto vis_y = [&]() { return y_top + spacing * (1 + vis_slot++); };
        const auto inv_y = [&]() { return y_mid + spacing * (2 + inv_slot++); };

        for (std::int64_t k = 0; k < gc.vis_above; ++k) sink.through(x0, x1, vis_y());
        for (std::int64_t k = 0; k < gc.vis_below; ++k) sink.through(x0, x1, vis_y());
        for (std::int64_t k = 0; k < gc.visible_genus; ++k) {
            const int y = vis_y();
            if (gc.visible_side == Side::Left)
                sink.loop(x1, cx + spacing, y);
            else
                sink.loop(x0, cx - spacing, y);
        }
        for (std::int64_t k = 0; k < gc.invis_above; ++k) sink.through(x0, x1, inv_y());
        for (std::int64_t k = 0; k < gc.invis_below; ++k) sink.through(x0, x1, inv_y());
        for (std::int64_t k = 0; k < gc.invisible_genus; ++k) {
            const int y = inv_y();
            if (gc.invisible_side == Side::Left)
                sink.loop(x1, cx + spacing, y);
            else
                sink.loop(x0, cx - spacing, y);
        }
        for (std::int64_t k = 0; k < gc.c_curves; ++k)
            sink.ring(cx, y_mid, spacing + 2 * static_cast<int>(std::min<std::int64_t>(k, 16)));
        // Diagonals run from the invisible-left wall to the visible-right
        // wall, passing the handle above (upper) or below (lower).
        for (std::int64_t k = 0; k < gc.upper_diag; ++k)
            sink.polyline({{x0, inv_y()}, {cx, y_mid - 2 * spacing}, {x1, vis_y()}});
        for (std::int64_t k = 0; k < gc.lower_diag; ++k)
            sink.polyline({{x0, inv_y()}, {cx, y_mid + 2 * spacing}, {x1, vis_y()}});
        // Twist components; the largest twist numbers take the right wall
        // endpoints first.
        {
            std::int64_t remaining_right = gc.twists_ending_right();
            const auto emit_twists = [&](std::int64_t count, std::int64_t turns) {
                for (std::int64_t k = 0; k < count; ++k) {
                    const bool right = remaining_right > 0;
                    if (right) --remaining_right;
                    sink.winding(x0, inv_y(), cx, y_mid, right ? x1 : x0, vis_y(),
                                 std::min<std::int64_t>(turns, 64));
                }
            };
            emit_twists(gc.twist.m, gc.twist.t + 1);
            emit_twists(gc.twist.base, gc.twist.t);
        }
        sink.close();
        region_label(lane, region_name({RegionKind::G, i}));
        handle_glyph(cx);
        wall_line(x0);
        wall_label(x0, arc_name({ArcGroup::Beta, census.sig.n + i}));
        ++lane;
    }

    {
        const auto& h = census.handle;
        const int x0 = lane_x0(lane);
        const int cx = x0 + lane_w / 2;
        sink.open("G*");
        int vis_slot = 0;
        int inv_slot = 0;
        const auto vis_y = [&]() { return y_top + spacing * (1 + vis_slot++); };
        const auto inv_y = [&]() { return y_mid + spacing * (2 + inv_slot++); };
        for (std::int64_t k = 0; k < h.visible_genus; ++k)
            sink.loop(x0, cx - spacing, vis_y());
        for (std::int64_t k = 0; k < h.invisible_genus; ++k)
            sink.loop(x0, cx - spacing, inv_y());
        for (std::int64_t k = 0; k < h.c_curves; ++k)
            sink.ring(cx, y_mid, spacing + 2 * static_cast<int>(std::min<std::int64_t>(k, 16)));
        {
            const auto emit_twists = [&](std::int64_t count, std::int64_t turns) {
                for (std::int64_t k = 0; k < count; ++k)
                    sink.winding(x0, inv_y(), cx, y_mid, x0, vis_y(),
                                 std::min<std::int64_t>(turns, 64));
            };
            emit_twists(h.twist.m, h.twist.t + 1);
            emit_twists(h.twist.base, h.twist.t);
        }
        sink.close();
        region_label(lane, "G*");
        handle_glyph(cx);
        wall_line(x0);
        wall_label(x0, arc_name({ArcGroup::Beta, census.sig.n + census.sig.g}));
        ++lane;
    }

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) +
           "\">\n";
    out += "  <g class=\"chrome\">\n" + chrome + "  </g>\n";
    out += strands;
    out += "</svg>\n";
    return Result<std::string>::success(std::move(out));
}

std::string render_summary(const MultiCurveCensus& census) {
    std::string out = "region  components\n";
    for (const PunctureCensus& u : census.puncture) {
        out += region_name({RegionKind::U, u.index}) + ": above " +
               std::to_string(u.above) + ", below " + std::to_string(u.below) +
               ", loops " + side_text(u.loop_count, u.loop_side) + "\n";
    }
    for (const GenusCensus& gc : census.genus) {
        out += region_name({RegionKind::G, gc.index}) + ": c-curves " +
               std::to_string(gc.c_curves) + ", vis-genus " +
               side_text(gc.visible_genus, gc.visible_side) + ", invis-genus " +
               side_text(gc.invisible_genus, gc.invisible_side) + ", diagonals " +
               std::to_string(gc.upper_diag) + " upper / " + std::to_string(gc.lower_diag) +
               " lower, " + twist_text(gc.twist) + ", T=" + fmt_signed(gc.twist.total) +
               ", vis-above " + std::to_string(gc.vis_above) + ", vis-below " +
               std::to_string(gc.vis_below) + ", invis-above " +
               std::to_string(gc.invis_above) + ", invis-below " +
               std::to_string(gc.invis_below) + "\n";
    }
    const bool structureless = census.puncture.empty() && census.genus.empty() &&
                               region_component_total(census.handle) == 0;
    if (!structureless) {
        out += "G*: c-curves " + std::to_string(census.handle.c_curves) + ", vis-genus " +
               std::to_string(census.handle.visible_genus) + ", invis-genus " +
               std::to_string(census.handle.invisible_genus) + ", " +
               twist_text(census.handle.twist) + ", T=" +
               fmt_signed(census.handle.twist.total) + "\n";
    }
    return out;
}

}  // namespace mcurve
