#include "inscribe/svg.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "inscribe/error.hpp"
#include "inscribe/trace_io.hpp"

namespace inscribe {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct PassSnapshot {
    double internal_threshold = 0.0;
    std::vector<Box> boxes;
    std::vector<BoxLabel> labels;
};

class SvgBuilder {
  public:
    SvgBuilder(const Box& view, double margin) {
        xlo_ = view.lo[0] - margin;
        ylo_ = view.lo[1] - margin;
        w_ = view.hi[0] - view.lo[0] + 2 * margin;
        h_ = view.hi[1] - view.lo[1] + 2 * margin;
        scale_ = 800.0 / std::max(w_, h_);
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w_ * scale_)
             << "\" height=\"" << num(h_ * scale_) << "\" viewBox=\"0 0 " << num(w_ * scale_)
             << " " << num(h_ * scale_) << "\">\n";
    }

    void rect(const Box& b, const char* fill, const char* stroke) {
        out_ << "<rect x=\"" << num(tx(b.lo[0])) << "\" y=\"" << num(ty(b.hi[1])) << "\" width=\""
             << num((b.hi[0] - b.lo[0]) * scale_) << "\" height=\""
             << num((b.hi[1] - b.lo[1]) * scale_) << "\" fill=\"" << fill << "\" stroke=\""
             << stroke << "\" stroke-width=\"0.5\"/>\n";
    }

    void polygon(const std::vector<Point>& pts, const char* fill, const char* stroke,
                 double stroke_width) {
        out_ << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out_ << ' ';
            out_ << num(tx(pts[i].x)) << ',' << num(ty(pts[i].y));
        }
        out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << num(stroke_width) << "\"/>\n";
    }

    std::string finish() {
        out_ << "</svg>\n";
        return out_.str();
    }

  private:
    double tx(double x) const { return (x - xlo_) * scale_; }
    double ty(double y) const { return (ylo_ + h_ - y) * scale_; }

    double xlo_, ylo_, w_, h_, scale_;
    std::ostringstream out_;
};

}  // namespace

std::string render_snapshot_svg(const LoadedProblem& lp, const std::string& solver,
                                const RunOptions& opt, std::size_t step) {
    if (solver == "bnb") throw Error("snapshot rendering needs an inverse-solver trace");
    std::optional<PassSnapshot> snap;
    std::size_t passes = 0;
    RunOptions ro = opt;
    ro.pass_observer = [&](const PassView& v) {
        passes = v.index + 1;
        if (v.index == step) {
            PassSnapshot s;
            s.internal_threshold = v.internal_threshold;
            s.boxes.assign(v.boxes.begin(), v.boxes.end());
            s.labels.assign(v.labels.begin(), v.labels.end());
            snap = std::move(s);
        }
    };
    run_solver(lp, solver, ro);
    if (!snap)
        throw Error("snapshot step " + std::to_string(step) + " is out of range (run has " +
                    std::to_string(passes) + " classification passes)");

    const double margin = 0.05 * lp.problem.root.diameter();
    SvgBuilder svg(lp.problem.root, margin);

    if (lp.contour && lp.pattern) {
        const auto* est = dynamic_cast<const DesignCenteringEstimator*>(lp.problem.estimator);
        if (est) {
            const double t = DesignCenteringEstimator::radius_threshold(snap->internal_threshold);
            for (const ConvexPolygon& el : est->elements(t))
                if (!el.degenerate()) svg.polygon(el.v, "#d9d2e9", "none", 0.0);
        }
        svg.polygon(lp.contour->vertices(), "none", "#000000", 2.0);
    }
    for (std::size_t i = 0; i < snap->boxes.size(); ++i) {
        const char* fill = "#fff2cc";  // boundary
        if (snap->labels[i] == BoxLabel::Empty) fill = "#f4cccc";
        if (snap->labels[i] == BoxLabel::Filled) fill = "#b6d7a8";
        svg.rect(snap->boxes[i], fill, "#666666");
    }
    return svg.finish();
}

void emit_svg(const std::string& trace_path, std::size_t step, std::ostream& out) {
    const TraceFileHeader header = read_trace_header(trace_path);
    const LoadedProblem lp = parse_problem(header.problem_path);
    RunOptions opt;
    opt.epsilon = header.epsilon;
    opt.domain_scale = header.domain_scale;
    opt.threads = 1;
    out << render_snapshot_svg(lp, header.solver, opt, step);
}

}  // namespace inscribe
