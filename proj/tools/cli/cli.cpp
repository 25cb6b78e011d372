#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicascade/bicascade.h"
#include "svg.hpp"

namespace bicascade_cli {

namespace {

using json = nlohmann::ordered_json;

struct Failure {
    int code;
    std::string message;
};

int exit_for(bic_status s)
{
    switch (s) {
    case BIC_OK:
        return exit_ok;
    case BIC_ERR_CAPACITY:
        return exit_capacity;
    case BIC_ERR_INFEASIBLE:
        return exit_infeasible;
    case BIC_ERR_INVALID_ARGUMENT:
    case BIC_ERR_PARSE:
    case BIC_ERR_IO:
        return exit_usage;
    default:
        return exit_internal;
    }
}

void check(bic_status s)
{
    if (s != BIC_OK)
        throw Failure{exit_for(s), bic_last_error()};
}

[[noreturn]] void usage(const std::string& message) { throw Failure{exit_usage, message}; }

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

using Graph = std::unique_ptr<bic_graph, Deleter<bic_graph, bic_graph_free>>;
using Result = std::unique_ptr<bic_result, Deleter<bic_result, bic_result_free>>;
using Instance = std::unique_ptr<bic_instance, Deleter<bic_instance, bic_instance_free>>;
using Dist = std::unique_ptr<bic_threshold_dist, Deleter<bic_threshold_dist, bic_threshold_free>>;

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// JSON numbers carry the same 12 significant digits as the text formats.
double jnum(double v) { return std::stod(num(v)); }

template <class Fn>
std::string text_of(Fn&& fn)
{
    std::size_t needed = 0;
    check(fn(nullptr, 0, &needed));
    std::string buf(needed, '\0');
    check(fn(buf.data(), buf.size(), &needed));
    buf.resize(needed ? needed - 1 : 0);
    return buf;
}

std::string graph_text(const bic_graph* g)
{
    return text_of([&](char* b, std::size_t c, std::size_t* n) { return bic_graph_format(g, b, c, n); });
}

std::string classes_of(const bic_graph* g)
{
    return text_of([&](char* b, std::size_t c, std::size_t* n) { return bic_graph_classify(g, b, c, n); });
}

json graph_json(const bic_graph* g)
{
    json edges = json::array();
    for (std::size_t i = 0; i < bic_graph_edge_count(g); ++i) {
        std::uint32_t l = 0, r = 0;
        check(bic_graph_edge(g, i, &l, &r));
        edges.push_back({l, r});
    }
    return json{{"n_left", bic_graph_n_left(g)}, {"n_right", bic_graph_n_right(g)}, {"edges", edges}};
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        parts.push_back(cur);
    return parts;
}

Graph load_graph(const std::string& source)
{
    bic_graph* g = nullptr;
    if (std::filesystem::is_regular_file(source)) {
        check(bic_graph_read_file(source.c_str(), &g));
        return Graph(g);
    }
    const bic_status s = bic_graph_from_spec(source.c_str(), &g);
    if (s == BIC_ERR_PARSE && source.find(':') == std::string::npos)
        usage("'" + source + "' is neither a readable graph file nor a generator spec (matching:n, star:k, kdd:n:d, kdn:n:d)");
    check(s);
    return Graph(g);
}

void check_probability(const std::optional<double>& v, const char* name)
{
    if (v && !(*v >= 0.0 && *v <= 1.0))
        usage(std::string("--") + name + " must lie in [0, 1]");
}

struct Common {
    std::string format;
    std::string out_path;
    unsigned threads = 0;
    std::size_t exact_limit = 24;

    bic_options options() const
    {
        bic_options o;
        bic_options_init(&o);
        o.threads = threads;
        o.exact_edge_limit = exact_limit;
        return o;
    }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, const std::vector<std::string>& formats)
{
    c.format = default_format;
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = machine parallelism)")->capture_default_str();
    cmd->add_option("--exact-limit", c.exact_limit, "Largest per-component edge count evaluated exactly")
        ->capture_default_str();
}

void emit(const Common& c, const std::string& text, std::ostream& out)
{
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file)
        throw Failure{exit_usage, "cannot write '" + c.out_path + "'"};
    file << text;
    if (!file)
        throw Failure{exit_usage, "write failed for '" + c.out_path + "'"};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- eval ----

struct EvalArgs {
    Common common;
    std::string graph;
    std::optional<double> mu, p;
    std::string dist;
    std::size_t samples = 100000;
    std::optional<std::uint64_t> seed;
    bool mc = false;
    bool mc_only = false;
};

std::string cmd_eval(const EvalArgs& a)
{
    const bool threshold = !a.dist.empty();
    if (threshold && (a.mu || a.p))
        usage("--dist replaces --mu/--p; give one or the other");
    if (!threshold && (!a.mu || !a.p))
        usage("eval needs --mu and --p (or --dist)");
    check_probability(a.mu, "mu");
    check_probability(a.p, "p");

    Graph g = load_graph(a.graph);
    const bic_options opts = a.common.options();
    auto need_sampling = [&](const char* why) {
        if (!a.seed)
            usage(std::string(why) + " requires --seed");
        if (a.samples < 2)
            usage("--samples must be at least 2");
    };

    bic_estimate est{};
    std::string method = "exact";
    std::string fallback_reason;
    if (threshold) {
        need_sampling("the threshold model");
        bic_threshold_dist* d = nullptr;
        check(bic_threshold_parse(a.dist.c_str(), &d));
        Dist dist(d);
        check(bic_threshold_fraction_mc(g.get(), dist.get(), a.samples, *a.seed, &opts, &est));
        method = "mc";
    } else if (a.mc_only) {
        need_sampling("--mc-only");
        check(bic_infected_fraction_mc(g.get(), *a.mu, *a.p, a.samples, *a.seed, &opts, &est));
        method = "mc";
    } else {
        double value = 0.0;
        const bic_status s = bic_infected_fraction_exact(g.get(), *a.mu, *a.p, &opts, &value);
        if (s == BIC_ERR_CAPACITY) {
            if (!a.mc)
                throw Failure{exit_capacity, std::string(bic_last_error()) +
                                                 "; pass --mc --samples N --seed S to estimate by simulation"};
            fallback_reason = bic_last_error();
            need_sampling("Monte Carlo fallback");
            check(bic_infected_fraction_mc(g.get(), *a.mu, *a.p, a.samples, *a.seed, &opts, &est));
            method = "mc";
        } else {
            check(s);
            est = {value, 0.0, 0, 1};
        }
    }

    const std::string& fmt = a.common.format;
    if (fmt == "json") {
        json j;
        j["command"] = "eval";
        j["graph"] = a.graph;
        if (threshold) {
            j["model"] = "threshold";
            j["dist"] = a.dist;
        } else {
            j["model"] = "cascade";
            j["mu"] = jnum(*a.mu);
            j["p"] = jnum(*a.p);
        }
        j["method"] = method;
        j["value"] = jnum(est.mean);
        if (method == "mc") {
            j["std_error"] = jnum(est.std_error);
            j["samples"] = est.samples;
            j["seed"] = *a.seed;
        }
        if (!fallback_reason.empty())
            j["fallback_reason"] = fallback_reason;
        return dump(j);
    }
    if (fmt == "csv")
        return "method,value,std_error,samples\n" + method + "," + num(est.mean) + "," + num(est.std_error) + "," +
               std::to_string(est.samples) + "\n";
    if (method == "exact")
        return num(est.mean) + "\n";
    return num(est.mean) + " (std_error " + num(est.std_error) + ", " + std::to_string(est.samples) + " samples)\n";
}

// ---- star-curve ----

struct StarArgs {
    Common common;
    std::optional<double> mu, p;
    std::string dist;
    std::size_t k_max = 30;
};

std::string cmd_star_curve(const StarArgs& a)
{
    const bool threshold = !a.dist.empty();
    if (threshold && (a.mu || a.p))
        usage("--dist replaces --mu/--p; give one or the other");
    if (!threshold && (!a.mu || !a.p))
        usage("star-curve needs --mu and --p (or --dist)");
    if (a.k_max < 1)
        usage("--k-max must be at least 1");
    check_probability(a.mu, "mu");
    check_probability(a.p, "p");

    std::vector<double> ks, values;
    std::optional<double> limit;
    Dist dist;
    if (threshold) {
        bic_threshold_dist* d = nullptr;
        check(bic_threshold_parse(a.dist.c_str(), &d));
        dist.reset(d);
    }
    for (std::size_t k = 1; k <= a.k_max; ++k) {
        double v = 0.0;
        if (threshold)
            check(bic_star_threshold_exact(k, dist.get(), &v));
        else
            check(bic_star_expected_fraction(k, *a.mu, *a.p, &v));
        ks.push_back(static_cast<double>(k));
        values.push_back(v);
    }
    if (!threshold) {
        double v = 0.0;
        check(bic_star_limit(*a.mu, *a.p, &v));
        limit = v;
    }

    const std::string& fmt = a.common.format;
    if (fmt == "csv") {
        std::string out = "k,expected_fraction\n";
        for (std::size_t i = 0; i < ks.size(); ++i)
            out += std::to_string(i + 1) + "," + num(values[i]) + "\n";
        return out;
    }
    if (fmt == "json") {
        json j;
        j["command"] = "star-curve";
        if (threshold)
            j["dist"] = a.dist;
        else {
            j["mu"] = jnum(*a.mu);
            j["p"] = jnum(*a.p);
        }
        json rows = json::array();
        for (std::size_t i = 0; i < ks.size(); ++i)
            rows.push_back({{"k", i + 1}, {"expected_fraction", jnum(values[i])}});
        j["rows"] = rows;
        if (limit)
            j["limit"] = jnum(*limit);
        return dump(j);
    }
    LinePlot plot;
    plot.title = threshold ? "k-star, threshold distribution " + a.dist
                           : "k-star, mu = " + num(*a.mu) + ", p = " + num(*a.p);
    plot.x_label = "k";
    plot.y_label = "expected infected fraction";
    plot.xs = ks;
    plot.ys = values;
    plot.reference = limit;
    if (limit)
        plot.reference_label = "limit " + num(*limit);
    return render_line_plot(plot);
}

// ---- phase ----

struct PhaseArgs {
    Common common;
    std::size_t d = 1;
    std::size_t grid_steps = 20;
    std::string mu_values, p_values;
    double tie_tol = 1e-9;
    std::size_t finite_n = 0;
};

std::vector<double> parse_values(const std::string& text, const char* name)
{
    std::vector<double> out;
    for (const auto& part : split(text, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            if (!(v >= 0.0 && v <= 1.0))
                usage(std::string("--") + name + " values must lie in [0, 1]");
            out.push_back(v);
        } catch (const std::logic_error&) {
            usage(std::string("--") + name + ": '" + part + "' is not a number");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty())
        usage(std::string("--") + name + " is empty");
    return out;
}

std::vector<double> unit_grid(std::size_t steps)
{
    std::vector<double> g(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        g[i] = static_cast<double>(i) / static_cast<double>(steps);
    return g;
}

const char* winner_name(bic_phase_winner w)
{
    return w == BIC_PHASE_KDD ? "KDD" : w == BIC_PHASE_KDN ? "KDN" : "TIE";
}

std::string cmd_phase(const PhaseArgs& a)
{
    if (a.d < 1)
        usage("--d must be at least 1");
    if (a.grid_steps < 1)
        usage("--grid-steps must be at least 1");
    const auto mus = a.mu_values.empty() ? unit_grid(a.grid_steps) : parse_values(a.mu_values, "mu-values");
    const auto ps = a.p_values.empty() ? unit_grid(a.grid_steps) : parse_values(a.p_values, "p-values");
    const bic_options opts = a.common.options();

    std::vector<std::vector<bic_phase_winner>> winners(mus.size(), std::vector<bic_phase_winner>(ps.size()));
    std::vector<std::vector<double>> deltas(mus.size(), std::vector<double>(ps.size()));
    for (std::size_t i = 0; i < mus.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            check(bic_phase_cell(a.d, mus[i], ps[j], a.tie_tol, a.finite_n, &opts, &winners[i][j], &deltas[i][j]));

    const std::string& fmt = a.common.format;
    if (fmt == "csv") {
        std::string out = "mu,p,winner,delta\n";
        for (std::size_t i = 0; i < mus.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                out += num(mus[i]) + "," + num(ps[j]) + "," + winner_name(winners[i][j]) + "," + num(deltas[i][j]) + "\n";
        return out;
    }
    if (fmt == "json") {
        json j;
        j["command"] = "phase";
        j["d"] = a.d;
        j["comparison"] = a.finite_n ? "K_{d,n} with n = " + std::to_string(a.finite_n) : std::string("K_{d,n} limit");
        json cells = json::array();
        for (std::size_t i = 0; i < mus.size(); ++i)
            for (std::size_t k = 0; k < ps.size(); ++k)
                cells.push_back({{"mu", jnum(mus[i])},
                                 {"p", jnum(ps[k])},
                                 {"winner", winner_name(winners[i][k])},
                                 {"delta", jnum(deltas[i][k])}});
        j["cells"] = cells;
        return dump(j);
    }
    RasterPlot plot;
    plot.title = "d = " + std::to_string(a.d) + ": lower infection, K_{d,d} vs K_{d,n}";
    plot.x_label = "mu";
    plot.y_label = "p";
    plot.xs = mus;
    plot.ys = ps;
    plot.legend = {{"K_{d,d}", "#2b6cb0"}, {"K_{d,n}", "#f6ad55"}, {"tie", "#a0aec0"}};
    plot.cell.assign(mus.size(), std::vector<std::size_t>(ps.size()));
    for (std::size_t i = 0; i < mus.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            plot.cell[i][j] = winners[i][j] == BIC_PHASE_KDD ? 0 : winners[i][j] == BIC_PHASE_KDN ? 1 : 2;
    return render_raster(plot);
}

// ---- boundary ----

struct BoundaryArgs {
    Common common;
    std::size_t d = 1;
    double p = 1.0;
};

std::string cmd_boundary(const BoundaryArgs& a)
{
    check_probability(a.p, "p");
    const bic_options opts = a.common.options();
    double mu = 0.0;
    int found = 0;
    check(bic_phase_boundary(a.d, a.p, &opts, &mu, &found));
    const std::string& fmt = a.common.format;
    if (fmt == "json") {
        json j{{"command", "boundary"}, {"d", a.d}, {"p", jnum(a.p)}};
        j["mu_star"] = found ? json(jnum(mu)) : json(nullptr);
        return dump(j);
    }
    if (fmt == "csv")
        return "d,p,mu_star\n" + std::to_string(a.d) + "," + num(a.p) + "," + (found ? num(mu) : "none") + "\n";
    return (found ? num(mu) : std::string("none")) + "\n";
}

// ---- search / conjecture ----

struct SearchArgs {
    Common common;
    std::size_t n = 0, d = 1;
    double mu = 0.0, p = 0.0;
};

json minimizers_json(const bic_result* r)
{
    json out = json::array();
    for (std::size_t i = 0; i < bic_result_minimizer_count(r); ++i) {
        bic_graph* g = nullptr;
        check(bic_result_minimizer(r, i, &g));
        Graph owned(g);
        json entry;
        const std::string classes = classes_of(g);
        entry["classes"] = classes.empty() ? json::array() : json(split(classes, ','));
        std::size_t iso = 0;
        check(bic_graph_isolated_left(g, &iso));
        entry["isolated_left"] = iso;
        entry["graph"] = graph_json(g);
        out.push_back(entry);
    }
    return out;
}

std::string search_report(const std::string& command, const SearchArgs& a, const bic_result* r, const json& extra)
{
    const std::string& fmt = a.common.format;
    if (fmt == "json") {
        json j{{"command", command}, {"n", a.n}, {"d", a.d}, {"mu", jnum(a.mu)}, {"p", jnum(a.p)}};
        for (const auto& [k, v] : extra.items())
            j[k] = v;
        j["value"] = jnum(bic_result_value(r));
        j["evaluated"] = bic_result_evaluated(r);
        j["minimizers"] = minimizers_json(r);
        return dump(j);
    }
    if (fmt == "csv") {
        std::string out = "index,classes,isolated_left,value\n";
        for (std::size_t i = 0; i < bic_result_minimizer_count(r); ++i) {
            bic_graph* g = nullptr;
            check(bic_result_minimizer(r, i, &g));
            Graph owned(g);
            std::string classes = classes_of(g);
            std::replace(classes.begin(), classes.end(), ',', ';');
            std::size_t iso = 0;
            check(bic_graph_isolated_left(g, &iso));
            out += std::to_string(i) + "," + classes + "," + std::to_string(iso) + "," + num(bic_result_value(r)) + "\n";
        }
        return out;
    }
    std::string out;
    for (const auto& [k, v] : extra.items())
        out += k + " " + (v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : v.dump()) + "\n";
    out += "value " + num(bic_result_value(r)) + "\n";
    out += "evaluated " + std::to_string(bic_result_evaluated(r)) + "\n";
    out += "minimizers " + std::to_string(bic_result_minimizer_count(r)) + "\n";
    for (std::size_t i = 0; i < bic_result_minimizer_count(r); ++i) {
        bic_graph* g = nullptr;
        check(bic_result_minimizer(r, i, &g));
        Graph owned(g);
        const std::string classes = classes_of(g);
        out += "minimizer " + std::to_string(i) + ": " + (classes.empty() ? "other" : classes) + "\n";
        out += graph_text(g);
    }
    return out;
}

std::string cmd_search(const SearchArgs& a)
{
    check_probability(a.mu, "mu");
    check_probability(a.p, "p");
    const bic_options opts = a.common.options();
    bic_result* r = nullptr;
    check(bic_search_half_regular(a.n, a.d, a.mu, a.p, &opts, &r));
    Result owned(r);
    return search_report("search", a, r, json::object());
}

std::string cmd_conjecture(const SearchArgs& a)
{
    check_probability(a.mu, "mu");
    check_probability(a.p, "p");
    const bic_options opts = a.common.options();
    bic_conjecture_report rep{};
    bic_result* r = nullptr;
    check(bic_conjecture(a.n, a.d, a.mu, a.p, &opts, &rep, &r));
    Result owned(r);
    json extra;
    extra["holds"] = rep.kdd_optimal || rep.kdn_optimal;
    extra["kdd_feasible"] = rep.kdd_feasible != 0;
    extra["kdd_optimal"] = rep.kdd_optimal != 0;
    extra["kdn_optimal"] = rep.kdn_optimal != 0;
    if (rep.kdn_two_feasible) {
        extra["kdn_two_feasible"] = true;
        extra["kdn_two_optimal"] = rep.kdn_two_optimal != 0;
    }
    return search_report("conjecture", a, r, extra);
}

// ---- subnet ----

struct SubnetArgs {
    Common common;
    std::string instance;
    std::string graph;
    std::size_t d = 0;
    double mu = 0.0, p = 0.0;
    std::string mode = "exact";
    std::size_t iterations = 1000;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 0;
    std::string solution_out;
};

std::string cmd_subnet(const SubnetArgs& a)
{
    check_probability(a.mu, "mu");
    check_probability(a.p, "p");
    if (a.instance.empty() == a.graph.empty())
        usage("subnet needs exactly one of an instance file or --graph");
    Instance inst;
    bic_instance* raw = nullptr;
    if (!a.instance.empty()) {
        check(bic_instance_read_file(a.instance.c_str(), a.d ? a.d : 1, &raw));
        inst.reset(raw);
        if (a.d)
            bic_instance_set_d(inst.get(), a.d);
    } else {
        Graph g = load_graph(a.graph);
        check(bic_instance_create(g.get(), a.d ? a.d : 1, &raw));
        inst.reset(raw);
    }

    const bic_options opts = a.common.options();
    bic_result* r = nullptr;
    if (a.mode == "exact") {
        check(bic_subnet_exact(inst.get(), a.mu, a.p, &opts, &r));
    } else {
        if (a.iterations > 0 && !a.seed)
            usage("local search requires --seed");
        check(bic_subnet_local(inst.get(), a.mu, a.p, a.iterations, a.seed.value_or(0), a.samples, &opts, &r));
    }
    Result owned(r);

    bic_graph* best_raw = nullptr;
    check(bic_result_minimizer(r, 0, &best_raw));
    Graph best(best_raw);
    std::size_t iso = 0;
    check(bic_graph_isolated_left(best.get(), &iso));
    std::size_t certificate = 0;
    const bool has_certificate = bic_instance_certificate(inst.get(), &certificate) != 0;

    if (!a.solution_out.empty())
        check(bic_graph_write_file(best.get(), a.solution_out.c_str()));

    const std::string& fmt = a.common.format;
    if (fmt == "json") {
        json j{{"command", "subnet"}, {"mode", a.mode}, {"d", bic_instance_d(inst.get())}, {"mu", jnum(a.mu)},
               {"p", jnum(a.p)}};
        j["value"] = jnum(bic_result_value(r));
        j["evaluated"] = bic_result_evaluated(r);
        j["isolated_left"] = iso;
        if (has_certificate) {
            j["certificate"] = certificate;
            j["certificate_met"] = iso == certificate;
        }
        j["solution"] = graph_json(best.get());
        return dump(j);
    }
    if (fmt == "csv")
        return "mode,value,isolated_left,certificate,evaluated\n" + a.mode + "," + num(bic_result_value(r)) + "," +
               std::to_string(iso) + "," + (has_certificate ? std::to_string(certificate) : std::string()) + "," +
               std::to_string(bic_result_evaluated(r)) + "\n";
    std::string out = "value " + num(bic_result_value(r)) + "\n";
    out += "isolated_left " + std::to_string(iso) + "\n";
    if (has_certificate)
        out += "certificate " + std::to_string(certificate) + (iso == certificate ? " (met)" : " (not met)") + "\n";
    out += "evaluated " + std::to_string(bic_result_evaluated(r)) + "\n";
    out += graph_text(best.get());
    return out;
}

// ---- reduce / decompose ----

struct ReduceArgs {
    Common common;
    std::string kind;
    std::string input;
    std::size_t d = 3;
};

std::string cmd_reduce(const ReduceArgs& a)
{
    bic_instance* raw = nullptr;
    if (a.kind == "exact-cover")
        check(bic_reduce_exact_cover_file(a.input.c_str(), &raw));
    else
        check(bic_reduce_clique_file(a.input.c_str(), a.d, &raw));
    Instance inst(raw);
    return text_of([&](char* b, std::size_t c, std::size_t* n) { return bic_instance_format(inst.get(), b, c, n); });
}

struct DecomposeArgs {
    Common common;
    std::string graph;
    std::size_t d = 2;
};

std::string cmd_decompose(const DecomposeArgs& a)
{
    Graph g = load_graph(a.graph);
    int exists = 0;
    check(bic_kdd_decomposition_exists(g.get(), a.d, &exists));
    if (a.common.format == "json")
        return dump(json{{"command", "decompose"}, {"graph", a.graph}, {"d", a.d}, {"exists", exists != 0}});
    return exists ? "yes\n" : "no\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Expected infection in balanced bipartite networks under independent cascades", "bicascade"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bic_version());

    EvalArgs eval;
    auto* c_eval = app.add_subcommand("eval", "Expected infected fraction of one graph (exact, or Monte Carlo)");
    add_common(c_eval, eval.common, "text", {"text", "csv", "json"});
    c_eval->add_option("--graph", eval.graph, "Graph file or generator spec (matching:n, star:k, kdd:n:d, kdn:n:d)")
        ->required();
    c_eval->add_option("--mu", eval.mu, "Infection probability by nature");
    c_eval->add_option("--p", eval.p, "Transmission probability per edge");
    c_eval->add_option("--dist", eval.dist, "Threshold distribution literal, e.g. 0:.6,1:.001,3:.399");
    c_eval->add_option("--samples", eval.samples, "Monte Carlo sample count")->capture_default_str();
    c_eval->add_option("--seed", eval.seed, "Seed for Monte Carlo");
    c_eval->add_flag("--mc", eval.mc, "Allow a Monte Carlo estimate when exact evaluation exceeds capacity");
    c_eval->add_flag("--mc-only", eval.mc_only, "Always estimate by Monte Carlo");

    StarArgs star;
    auto* c_star = app.add_subcommand("star-curve", "E[I_k] of the k-star for k = 1..k_max");
    add_common(c_star, star.common, "csv", {"csv", "json", "svg"});
    c_star->add_option("--mu", star.mu, "Infection probability by nature");
    c_star->add_option("--p", star.p, "Transmission probability per edge");
    c_star->add_option("--dist", star.dist, "Threshold distribution literal");
    c_star->add_option("--k-max", star.k_max, "Largest star degree")->capture_default_str();

    PhaseArgs phase;
    auto* c_phase = app.add_subcommand("phase", "Which of K_{d,d} and K_{d,n} infects less, over a (mu, p) grid");
    add_common(c_phase, phase.common, "csv", {"csv", "json", "svg"});
    c_phase->add_option("--d", phase.d, "Degree of the right side")->required();
    c_phase->add_option("--grid-steps", phase.grid_steps, "Grid 0, 1/steps, ..., 1 on both axes")->capture_default_str();
    c_phase->add_option("--mu-values", phase.mu_values, "Comma-separated mu values (overrides the grid)");
    c_phase->add_option("--p-values", phase.p_values, "Comma-separated p values (overrides the grid)");
    c_phase->add_option("--tie-tol", phase.tie_tol, "Differences within this are reported as TIE")->capture_default_str();
    c_phase->add_option("--finite-n", phase.finite_n, "Compare against K_{d,n} at this n instead of the large-n limit");

    BoundaryArgs boundary;
    auto* c_boundary = app.add_subcommand("boundary", "Smallest mu where K_{d,n} (large n) stops losing to K_{d,d}");
    add_common(c_boundary, boundary.common, "text", {"text", "csv", "json"});
    c_boundary->add_option("--d", boundary.d, "Degree of the right side")->required();
    c_boundary->add_option("--p", boundary.p, "Transmission probability")->capture_default_str();

    SearchArgs search;
    auto* c_search = app.add_subcommand("search", "Exhaustive search over half-d-regular graphs on n + n vertices");
    add_common(c_search, search.common, "text", {"text", "csv", "json"});
    c_search->add_option("--n", search.n, "Vertices per side")->required();
    c_search->add_option("--d", search.d, "Degree of every right vertex")->capture_default_str();
    c_search->add_option("--mu", search.mu, "Infection probability by nature")->required();
    c_search->add_option("--p", search.p, "Transmission probability per edge")->required();

    SearchArgs conj;
    auto* c_conj = app.add_subcommand("conjecture", "Check whether K_{d,d} copies or K_{d,n} are among the minimizers");
    add_common(c_conj, conj.common, "text", {"text", "csv", "json"});
    c_conj->add_option("--n", conj.n, "Vertices per side")->required();
    c_conj->add_option("--d", conj.d, "Degree of every right vertex")->required();
    c_conj->add_option("--mu", conj.mu, "Infection probability by nature")->required();
    c_conj->add_option("--p", conj.p, "Transmission probability per edge")->required();

    SubnetArgs subnet;
    auto* c_subnet = app.add_subcommand("subnet", "Optimal subnetwork keeping every right degree at least d");
    add_common(c_subnet, subnet.common, "text", {"text", "csv", "json"});
    c_subnet->add_option("instance", subnet.instance, "Instance file (graph file with optional '# d=' comment)");
    c_subnet->add_option("--graph", subnet.graph, "Graph file or generator spec instead of an instance file");
    c_subnet->add_option("--d", subnet.d, "Degree bound (overrides the instance file)");
    c_subnet->add_option("--mu", subnet.mu, "Infection probability by nature")->required();
    c_subnet->add_option("--p", subnet.p, "Transmission probability per edge")->required();
    c_subnet->add_option("--mode", subnet.mode, "exact or local")
        ->check(CLI::IsMember({"exact", "local"}))
        ->capture_default_str();
    c_subnet->add_option("--iterations", subnet.iterations, "Local search moves")->capture_default_str();
    c_subnet->add_option("--seed", subnet.seed, "Seed for local search");
    c_subnet->add_option("--samples", subnet.samples, "Monte Carlo samples for candidates beyond exact capacity");
    c_subnet->add_option("--solution-out", subnet.solution_out, "Write the best subgraph to this graph file");

    ReduceArgs reduce;
    auto* c_reduce = app.add_subcommand("reduce", "Build a subnetwork instance from exact cover or clique decomposition");
    add_common(c_reduce, reduce.common, "text", {"text"});
    c_reduce->add_option("kind", reduce.kind, "exact-cover or clique")
        ->required()
        ->check(CLI::IsMember({"exact-cover", "clique"}));
    c_reduce->add_option("input", reduce.input, "Source instance file")->required();
    c_reduce->add_option("--d", reduce.d, "Clique size for the clique reduction")->capture_default_str();

    DecomposeArgs decompose;
    auto* c_decompose = app.add_subcommand("decompose", "Does the graph split into disjoint complete K_{d,d} blocks?");
    add_common(c_decompose, decompose.common, "text", {"text", "json"});
    c_decompose->add_option("--graph", decompose.graph, "Graph file or generator spec")->required();
    c_decompose->add_option("--d", decompose.d, "Block size per side")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << bic_version() << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (const auto subs = app.get_subcommands(); !subs.empty())
            err << "run '" << subs.front()->get_name() << " --help' for usage\n";
        else
            err << "run --help for usage\n";
        return exit_usage;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const std::string& name = sub->get_name();
        if (name == "eval")
            emit(eval.common, cmd_eval(eval), out);
        else if (name == "star-curve")
            emit(star.common, cmd_star_curve(star), out);
        else if (name == "phase")
            emit(phase.common, cmd_phase(phase), out);
        else if (name == "boundary")
            emit(boundary.common, cmd_boundary(boundary), out);
        else if (name == "search")
            emit(search.common, cmd_search(search), out);
        else if (name == "conjecture")
            emit(conj.common, cmd_conjecture(conj), out);
        else if (name == "subnet")
            emit(subnet.common, cmd_subnet(subnet), out);
        else if (name == "reduce")
            emit(reduce.common, cmd_reduce(reduce), out);
        else if (name == "decompose")
            emit(decompose.common, cmd_decompose(decompose), out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_ok;
}

} // namespace bicascade_cli
