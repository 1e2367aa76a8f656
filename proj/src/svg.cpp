#include "hhg1d/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hhg1d {

namespace {

struct Panel {
    double x0, y0, w, h;          // viewport (SVG user units)
    double xmin, xmax, ymin, ymax;  // data window

    double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
    double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void polyline(std::ostringstream& out, const Panel& p, const std::vector<double>& x,
              const std::vector<double>& y, const char* color, double width = 1.0) {
    out << "<polyline fill='none' stroke='" << color << "' stroke-width='" << width
        << "' points='";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < p.xmin || x[i] > p.xmax) continue;
        out << p.px(x[i]) << ',' << p.py(std::clamp(y[i], p.ymin, p.ymax)) << ' ';
    }
    out << "'/>\n";
}

void frame(std::ostringstream& out, const Panel& p, const std::string& title,
           const std::string& xlabel, const std::string& ylabel) {
    out << "<rect x='" << p.x0 << "' y='" << p.y0 << "' width='" << p.w << "' height='" << p.h
        << "' fill='none' stroke='black'/>\n";
    out << "<text x='" << p.x0 + 4 << "' y='" << p.y0 + 14 << "' font-size='12'>" << title
        << "</text>\n";
    out << "<text x='" << p.x0 + p.w / 2 << "' y='" << p.y0 + p.h + 26
        << "' font-size='11' text-anchor='middle'>" << xlabel << "</text>\n";
    out << "<text x='" << p.x0 - 34 << "' y='" << p.y0 + p.h / 2
        << "' font-size='11' text-anchor='middle' transform='rotate(-90 " << p.x0 - 34 << ' '
        << p.y0 + p.h / 2 << ")'>" << ylabel << "</text>\n";
}

std::pair<double, double> span(const std::vector<double>& v, double lo_t, double hi_t,
                               const std::vector<double>& t) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (t[i] < lo_t || t[i] > hi_t) continue;
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

void write_currents_svg(const std::string& path, const CurrentRecord& record,
                        const PulseSpec& pulse) {
    if (record.samples.empty()) throw std::invalid_argument("svg: empty record");
    const std::size_t n = record.samples.size();
    std::vector<double> t(n), jv(n), jl(n), f(n), iv(n), il(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = record.samples[i];
        t[i] = s.t;
        jv[i] = s.j_total_v;
        jl[i] = s.j_total_l;
        f[i] = s.e_field;
        iv[i] = s.j_intra_v;
        il[i] = s.j_intra_l;
    }
    // zoom window: +-1.5 carrier cycles around the strongest |J_v| peak
    std::size_t ipk = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(jv[i]) > std::abs(jv[ipk])) ipk = i;
    const double tc = pulse.carrier_period();
    const double zlo = std::max(t.front(), t[ipk] - 1.5 * tc);
    const double zhi = std::min(t.back(), t[ipk] + 1.5 * tc);

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='760' height='840' "
           "font-family='sans-serif'>\n<rect width='100%' height='100%' fill='white'/>\n";

    // field trace scaled into each current panel
    auto scaled_field = [&](double ymin, double ymax) {
        double fmax = 0.0;
        for (double v : f) fmax = std::max(fmax, std::abs(v));
        std::vector<double> g(n);
        const double amp = 0.45 * (ymax - ymin);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = 0.5 * (ymin + ymax) + (fmax > 0 ? f[i] / fmax * amp : 0.0);
        return g;
    };

    {
        auto [ylo, yhi] = span(jv, t.front(), t.back(), t);
        Panel p{70, 30, 640, 210, t.front(), t.back(), ylo, yhi};
        frame(out, p, "(a) total current, both gauges; field (grey)", "t (a.u.)", "J (a.u.)");
        polyline(out, p, t, scaled_field(ylo, yhi), "#bbbbbb");
        polyline(out, p, t, jv, "#1f77b4", 1.3);
        polyline(out, p, t, jl, "#d62728", 0.8);
    }
    {
        auto [ylo, yhi] = span(jv, zlo, zhi, t);
        Panel p{70, 300, 640, 210, zlo, zhi, ylo, yhi};
        frame(out, p, "(b) zoom near the strongest peak", "t (a.u.)", "J (a.u.)");
        polyline(out, p, t, jv, "#1f77b4", 1.3);
        polyline(out, p, t, jl, "#d62728", 0.8);
    }
    {
        auto [ylo1, yhi1] = span(iv, t.front(), t.back(), t);
        auto [ylo2, yhi2] = span(il, t.front(), t.back(), t);
        Panel p{70, 570, 640, 210, t.front(), t.back(), std::min(ylo1, ylo2),
                std::max(yhi1, yhi2)};
        frame(out, p, "(c) intraband current: velocity (blue) vs length (red)", "t (a.u.)",
              "j (a.u.)");
        polyline(out, p, t, iv, "#1f77b4", 1.2);
        polyline(out, p, t, il, "#d62728", 1.2);
    }
    out << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("svg: cannot open '" + path + "'");
    file << out.str();
}

void write_spectrum_svg(const std::string& path, const Spectrum& spectrum) {
    if (spectrum.power.empty()) throw std::invalid_argument("svg: empty spectrum");
    const std::size_t n = spectrum.power.size();
    std::vector<double> logp(n);
    double pmax = 0.0;
    for (double v : spectrum.power) pmax = std::max(pmax, v);
    const double floor_val = pmax > 0 ? pmax * 1e-16 : 1e-300;
    for (std::size_t i = 0; i < n; ++i)
        logp[i] = std::log10(std::max(spectrum.power[i], floor_val));

    const double xmax = std::min(40.0, spectrum.harmonic_order.back());
    auto [ylo, yhi] = std::pair<double, double>(std::log10(floor_val), std::log10(pmax) + 0.5);

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='760' height='420' "
           "font-family='sans-serif'>\n<rect width='100%' height='100%' fill='white'/>\n";
    Panel p{70, 30, 640, 330, 0.0, xmax, ylo, yhi};
    frame(out, p, "HHG power spectrum", "harmonic order", "log10 power (arb.)");
    for (int h = 1; h <= static_cast<int>(xmax); h += 2)
        out << "<line x1='" << p.px(h) << "' y1='" << p.y0 << "' x2='" << p.px(h) << "' y2='"
            << p.y0 + p.h << "' stroke='#eeeeee'/>\n";
    polyline(out, p, spectrum.harmonic_order, logp, "#1f77b4", 1.2);
    out << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("svg: cannot open '" + path + "'");
    file << out.str();
}

}  // namespace hhg1d
