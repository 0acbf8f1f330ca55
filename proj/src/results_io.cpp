#include "monoeq/bench.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace monoeq {

namespace {

constexpr std::string_view csv_header = "solver,problem,dim,init,status,iter,fval,time_ms,norm";

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("error while writing '" + path.string() + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, const std::string& context) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::runtime_error(context + ": bad number '" + text + "'");
    }
    return v;
}

long long parse_integer(const std::string& text, const std::string& context) {
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw std::runtime_error(context + ": bad integer '" + text + "'");
    }
    return v;
}

} // namespace

void write_csv(const std::vector<RunResult>& results, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    out << csv_header << '\n';
    for (const auto& r : results) {
        out << fmt::format("{},{},{},{},{},{},{},{:.3f},{:.5e}\n", r.solver_name, r.problem_id,
                           r.dim, to_string(r.init), status_code(r.status), r.iters, r.fevals,
                           r.time_ms, r.final_norm);
    }
    finish(out, path);
}

std::vector<RunResult> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");

    std::string line;
    if (!std::getline(in, line) || line != csv_header) {
        throw std::runtime_error("'" + path.string() + "': missing or unexpected header");
    }
    std::vector<RunResult> results;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string context = path.string() + ":" + std::to_string(line_no);
        const auto f = split(line, ',');
        if (f.size() != 9) throw std::runtime_error(context + ": expected 9 fields");
        RunResult r;
        try {
            r.solver_name = f[0];
            r.problem_id = static_cast<int>(parse_integer(f[1], context));
            r.dim = static_cast<std::size_t>(parse_integer(f[2], context));
            r.init = parse_initial_point(f[3]);
            r.status = parse_status_code(f[4]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(context + ": " + e.what());
        }
        r.iters = static_cast<int>(parse_integer(f[5], context));
        r.fevals = parse_integer(f[6], context);
        r.time_ms = parse_double(f[7], context);
        r.final_norm = parse_double(f[8], context);
        results.push_back(std::move(r));
    }
    return results;
}

void write_trace_csv(const std::vector<IterationRecord>& trace, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    out << "k,alpha,beta,backtracks,branch,residual_norm,descent_value,step_norm,"
           "direction_norm,lambda_min,lambda_max,outcome\n";
    for (const auto& r : trace) {
        out << fmt::format("{},{:.17g},{:.17g},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
                           "{:.17g},{}\n",
                           r.k, r.alpha, r.beta, r.backtracks, to_string(r.branch),
                           r.residual_norm, r.descent_value, r.step_norm, r.direction_norm,
                           r.lambda_min, r.lambda_max, to_string(r.outcome));
    }
    finish(out, path);
}

void write_profile_svg(const std::vector<ProfileCurve>& curves, const std::filesystem::path& path,
                       std::string_view title) {
    constexpr double width = 720, height = 480;
    constexpr double left = 70, right = 190, top = 50, bottom = 60;
    constexpr double plot_w = width - left - right, plot_h = height - top - bottom;
    static constexpr std::string_view palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                                   "#ff7f0e", "#9467bd", "#8c564b"};

    double tau_max = 1.0;
    for (const auto& c : curves) {
        for (const auto& p : c.points) tau_max = std::max(tau_max, p.tau);
    }
    const double log_span = tau_max > 1.0 ? std::log10(tau_max) : 1.0;
    auto px = [&](double tau) { return left + plot_w * std::log10(tau) / log_span; };
    auto py = [&](double frac) { return top + plot_h * (1.0 - frac); };

    auto out = open_for_writing(path);
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        width, height);
    out << fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    out << fmt::format("<text x=\"{}\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       left + plot_w / 2, title);

    for (int i = 0; i <= 10; ++i) {
        const double frac = i / 10.0;
        out << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                           "stroke=\"#e0e0e0\"/>\n",
                           left, py(frac), left + plot_w, py(frac));
        out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.1f}</text>\n",
                           left - 6, py(frac) + 4, frac);
    }
    for (double decade = 1.0; decade <= tau_max * (1 + 1e-9); decade *= 10.0) {
        for (double m : {1.0, 2.0, 5.0}) {
            const double tau = decade * m;
            if (tau > tau_max * (1 + 1e-9)) break;
            out << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                               "stroke=\"#e0e0e0\"/>\n",
                               px(tau), top, px(tau), top + plot_h);
            out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:g}</text>\n",
                               px(tau), top + plot_h + 18, tau);
        }
    }
    out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       left, top, plot_w, plot_h);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">tau (log scale)</text>\n",
                       left + plot_w / 2, height - 15);
    out << fmt::format("<text x=\"18\" y=\"{:.1f}\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 18 {:.1f})\">fraction of problems</text>\n",
                       top + plot_h / 2, top + plot_h / 2);

    for (std::size_t c = 0; c < curves.size(); ++c) {
        const auto colour = palette[c % std::size(palette)];
        std::string d;
        double prev_y = 0.0;
        for (std::size_t i = 0; i < curves[c].points.size(); ++i) {
            const auto& p = curves[c].points[i];
            if (i == 0) {
                d += fmt::format("M{:.2f},{:.2f}", px(p.tau), py(p.fraction));
            } else {
                d += fmt::format(" L{:.2f},{:.2f} L{:.2f},{:.2f}", px(p.tau), py(prev_y), px(p.tau),
                                 py(p.fraction));
            }
            prev_y = p.fraction;
        }
        out << fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n", d,
                           colour);
        const double ly = top + 20 + 22 * static_cast<double>(c);
        out << fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" "
                           "stroke=\"{}\" stroke-width=\"2\"/>\n",
                           left + plot_w + 15, ly, left + plot_w + 40, ly, colour);
        out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">{}</text>\n", left + plot_w + 46,
                           ly + 4, curves[c].solver_name);
    }
    out << "</svg>\n";
    finish(out, path);
}

} // namespace monoeq
