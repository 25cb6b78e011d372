#include "bicascade/bicascade.h"

#include <cstring>
#include <fstream>
#include <new>
#include <stdexcept>
#include <sstream>
#include <string>

#include "bicascade/enumerate.hpp"
#include "bicascade/error.hpp"
#include "bicascade/extremal.hpp"
#include "bicascade/infection.hpp"
#include "bicascade/io.hpp"
#include "bicascade/percolation.hpp"
#include "bicascade/subnetwork.hpp"
#include "bicascade/threshold.hpp"

using namespace bicascade;

struct bic_graph {
    BipartiteGraph g;
};

struct bic_result {
    SearchResult r;
};

struct bic_instance {
    SubnetworkInstance inst;
};

struct bic_threshold_dist {
    ThresholdDistribution dist;
};

namespace {

thread_local std::string last_error;

struct buffer_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bic_status fail(bic_status status, const char* what)
{
    last_error = what;
    return status;
}

template <class Fn>
bic_status guard(Fn&& fn)
{
    try {
        fn();
        last_error.clear();
        return BIC_OK;
    } catch (const capacity_error& e) {
        return fail(BIC_ERR_CAPACITY, e.what());
    } catch (const infeasible_error& e) {
        return fail(BIC_ERR_INFEASIBLE, e.what());
    } catch (const parse_error& e) {
        return fail(BIC_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BIC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(BIC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BIC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BIC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(BIC_ERR_INTERNAL, "unknown error");
    }
}

void need(const void* ptr, const char* name)
{
    if (!ptr)
        throw std::invalid_argument(std::string(name) + " is NULL");
}

ExactOptions exact_opts(const bic_options* opts)
{
    ExactOptions o;
    if (opts) {
        o.edge_limit = opts->exact_edge_limit;
        o.threads = opts->threads;
    }
    return o;
}

MonteCarloOptions mc_opts(const bic_options* opts)
{
    MonteCarloOptions o;
    if (opts)
        o.threads = opts->threads;
    return o;
}

Functional functional(bic_functional f, double mu)
{
    switch (f) {
    case BIC_FUNC_ESCAPE_WEIGHT:
        return Functional::escape_weight(mu);
    case BIC_FUNC_ISOLATED_COUNT:
        return Functional::isolated_count();
    case BIC_FUNC_SUSCEPTIBILITY:
        return Functional::susceptibility();
    case BIC_FUNC_SUM_SQ_SIZES:
        return Functional::sum_sq_sizes();
    case BIC_FUNC_SUM_SQ_EDGES:
        return Functional::sum_sq_edges();
    }
    throw std::invalid_argument("unknown functional");
}

void put_estimate(const Estimate& e, bic_estimate* out)
{
    out->mean = e.mean;
    out->std_error = e.std_error;
    out->samples = e.samples;
    out->exact = e.exact ? 1 : 0;
}

void copy_text(const std::string& text, char* buf, std::size_t cap, std::size_t* needed)
{
    if (needed)
        *needed = text.size() + 1;
    if (!buf)
        return;
    if (cap < text.size() + 1)
        throw buffer_too_small("buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
}

template <class Fn>
bic_status guard_text(Fn&& fn)
{
    try {
        fn();
        last_error.clear();
        return BIC_OK;
    } catch (const buffer_too_small& e) {
        return fail(BIC_ERR_BUFFER_TOO_SMALL, e.what());
    } catch (...) {
        return guard([] { throw; });
    }
}

} // namespace

extern "C" {

const char* bic_version(void) { return "1.0.0"; }

const char* bic_last_error(void) { return last_error.c_str(); }

const char* bic_status_name(bic_status status)
{
    switch (status) {
    case BIC_OK:
        return "ok";
    case BIC_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case BIC_ERR_CAPACITY:
        return "capacity exceeded";
    case BIC_ERR_INFEASIBLE:
        return "infeasible";
    case BIC_ERR_PARSE:
        return "parse error";
    case BIC_ERR_IO:
        return "i/o error";
    case BIC_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case BIC_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

void bic_options_init(bic_options* opts)
{
    if (!opts)
        return;
    const ExactOptions defaults;
    opts->exact_edge_limit = defaults.edge_limit;
    opts->threads = defaults.threads;
}

// ---- graphs ----

bic_status bic_graph_create(size_t n_left, size_t n_right, const uint32_t* pairs, size_t n_edges, bic_graph** out)
{
    return guard([&] {
        need(out, "out");
        if (n_edges)
            need(pairs, "pairs");
        std::vector<Edge> edges(n_edges);
        for (size_t i = 0; i < n_edges; ++i)
            edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
        *out = new bic_graph{BipartiteGraph(n_left, n_right, std::move(edges))};
    });
}

bic_status bic_graph_from_spec(const char* spec, bic_graph** out)
{
    return guard([&] {
        need(spec, "spec");
        need(out, "out");
        *out = new bic_graph{graph_from_spec(spec)};
    });
}

bic_status bic_graph_parse(const char* text, bic_graph** out)
{
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = new bic_graph{parse_graph(text)};
    });
}

bic_status bic_graph_read_file(const char* path, bic_graph** out)
{
    if (!path || !out)
        return fail(BIC_ERR_INVALID_ARGUMENT, "path or out is NULL");
    std::ifstream in(path);
    if (!in)
        return fail(BIC_ERR_IO, (std::string("cannot open '") + path + "'").c_str());
    return guard([&] { *out = new bic_graph{read_graph(in)}; });
}

bic_status bic_graph_write_file(const bic_graph* g, const char* path)
{
    if (!g || !path)
        return fail(BIC_ERR_INVALID_ARGUMENT, "graph or path is NULL");
    std::ofstream out(path);
    if (!out)
        return fail(BIC_ERR_IO, (std::string("cannot write '") + path + "'").c_str());
    write_graph(out, g->g);
    out.flush();
    if (!out)
        return fail(BIC_ERR_IO, (std::string("write failed for '") + path + "'").c_str());
    last_error.clear();
    return BIC_OK;
}

bic_status bic_graph_format(const bic_graph* g, char* buf, size_t cap, size_t* needed)
{
    return guard_text([&] {
        need(g, "graph");
        copy_text(format_graph(g->g), buf, cap, needed);
    });
}

void bic_graph_free(bic_graph* g) { delete g; }

size_t bic_graph_n_left(const bic_graph* g) { return g ? g->g.n_left() : 0; }
size_t bic_graph_n_right(const bic_graph* g) { return g ? g->g.n_right() : 0; }
size_t bic_graph_edge_count(const bic_graph* g) { return g ? g->g.edge_count() : 0; }

bic_status bic_graph_edge(const bic_graph* g, size_t index, uint32_t* l, uint32_t* r)
{
    return guard([&] {
        need(g, "graph");
        if (index >= g->g.edge_count())
            throw std::out_of_range("edge index out of range");
        const Edge e = g->g.edges()[index];
        if (l)
            *l = e.l;
        if (r)
            *r = e.r;
    });
}

bic_status bic_graph_validate(const bic_graph* g, size_t d, int* ok)
{
    return guard([&] {
        need(g, "graph");
        need(ok, "ok");
        *ok = validate(g->g, {d}) ? 1 : 0;
    });
}

bic_status bic_graph_isomorphic(const bic_graph* a, const bic_graph* b, int* same)
{
    return guard([&] {
        need(a, "a");
        need(b, "b");
        need(same, "same");
        *same = isomorphic(a->g, b->g) ? 1 : 0;
    });
}

bic_status bic_graph_canonical(const bic_graph* g, bic_graph** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = new bic_graph{canonical_form(g->g)};
    });
}

bic_status bic_graph_classify(const bic_graph* g, char* buf, size_t cap, size_t* needed)
{
    return guard_text([&] {
        need(g, "graph");
        std::string text;
        for (const auto& name : classify(g->g)) {
            if (!text.empty())
                text += ',';
            text += name;
        }
        copy_text(text, buf, cap, needed);
    });
}

bic_status bic_graph_isolated_left(const bic_graph* g, size_t* count)
{
    return guard([&] {
        need(g, "graph");
        need(count, "count");
        *count = isolated_left_count(g->g);
    });
}

bic_status bic_graph_components(const bic_graph* g, size_t* sizes, size_t* edge_counts, size_t cap, size_t* count,
                                size_t* isolated)
{
    return guard([&] {
        need(g, "graph");
        const ComponentStats stats = components(g->g);
        const size_t n = stats.component_sizes.size();
        if (count)
            *count = n;
        if (isolated)
            *isolated = stats.isolated_count;
        for (size_t i = 0; i < n && i < cap; ++i) {
            if (sizes)
                sizes[i] = stats.component_sizes[i];
            if (edge_counts)
                edge_counts[i] = stats.component_edge_counts[i];
        }
    });
}

// ---- percolation and infection ----

bic_status bic_exact_expectation(const bic_graph* g, double p, bic_functional f, double mu, const bic_options* opts,
                                 double* out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = exact_expectation(g->g, {p}, functional(f, mu), exact_opts(opts));
    });
}

bic_status bic_mc_expectation(const bic_graph* g, double p, bic_functional f, double mu, uint64_t samples, uint64_t seed,
                              const bic_options* opts, bic_estimate* out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        put_estimate(mc_expectation(g->g, {p}, functional(f, mu), samples, seed, mc_opts(opts)), out);
    });
}

bic_status bic_infected_fraction_exact(const bic_graph* g, double mu, double p, const bic_options* opts, double* out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = infected_fraction_exact(g->g, {mu, p}, exact_opts(opts));
    });
}

bic_status bic_infected_fraction_mc(const bic_graph* g, double mu, double p, uint64_t samples, uint64_t seed,
                                    const bic_options* opts, bic_estimate* out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        put_estimate(infected_fraction_mc(g->g, {mu, p}, samples, seed, mc_opts(opts)), out);
    });
}

bic_status bic_cascade_sample(const bic_graph* g, double mu, double p, uint64_t seed, uint8_t* infected, size_t cap)
{
    return guard([&] {
        need(g, "graph");
        need(infected, "infected");
        if (cap < g->g.vertex_count())
            throw std::invalid_argument("infected buffer smaller than the vertex count");
        const auto flags = cascade_sample(g->g, {mu, p}, seed);
        for (size_t v = 0; v < flags.size(); ++v)
            infected[v] = flags[v] ? 1 : 0;
    });
}

bic_status bic_l_prob(size_t j, double mu, double p, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = l_prob(j, {mu, p});
    });
}

bic_status bic_r_prob(size_t j, double mu, double p, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = r_prob(j, {mu, p});
    });
}

bic_status bic_star_expected_fraction(size_t k, double mu, double p, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = star_expected_fraction(k, {mu, p});
    });
}

bic_status bic_star_limit(double mu, double p, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = star_limit({mu, p});
    });
}

bic_status bic_delta_diagnostics(size_t k, double mu, double p, double* d, double* delta1, double* delta2)
{
    return guard([&] {
        const StarDiagnostics s = delta_diagnostics(k, {mu, p});
        if (d)
            *d = s.d;
        if (delta1)
            *delta1 = s.delta1;
        if (delta2)
            *delta2 = s.delta2;
    });
}

bic_status bic_kdd_exact(size_t d, double mu, double p, const bic_options* opts, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = kdd_exact(d, {mu, p}, exact_opts(opts));
    });
}

bic_status bic_kdn_limit(size_t d, double mu, double p, double* out)
{
    return guard([&] {
        need(out, "out");
        *out = kdn_limit(d, {mu, p});
    });
}

// ---- threshold model ----

bic_status bic_threshold_parse(const char* literal, bic_threshold_dist** out)
{
    return guard([&] {
        need(literal, "literal");
        need(out, "out");
        *out = new bic_threshold_dist{ThresholdDistribution::parse(literal)};
    });
}

bic_status bic_threshold_create(const double* probs, size_t count, double residual, bic_threshold_dist** out)
{
    return guard([&] {
        need(out, "out");
        if (count)
            need(probs, "probs");
        *out = new bic_threshold_dist{ThresholdDistribution(std::vector<double>(probs, probs + count), residual)};
    });
}

bic_status bic_threshold_from_cascade(double mu, double p, size_t cutoff, bic_threshold_dist** out)
{
    return guard([&] {
        need(out, "out");
        *out = new bic_threshold_dist{cascade_as_threshold({mu, p}, cutoff)};
    });
}

void bic_threshold_free(bic_threshold_dist* dist) { delete dist; }

bic_status bic_threshold_fraction_mc(const bic_graph* g, const bic_threshold_dist* dist, uint64_t samples, uint64_t seed,
                                     const bic_options* opts, bic_estimate* out)
{
    return guard([&] {
        need(g, "graph");
        need(dist, "dist");
        need(out, "out");
        put_estimate(threshold_fraction_mc(g->g, dist->dist, samples, seed, mc_opts(opts)), out);
    });
}

bic_status bic_star_threshold_exact(size_t j, const bic_threshold_dist* dist, double* out)
{
    return guard([&] {
        need(dist, "dist");
        need(out, "out");
        *out = star_threshold_exact(j, dist->dist);
    });
}

// ---- extremal search and phase diagrams ----

bic_status bic_search_half_regular(size_t n, size_t d, double mu, double p, const bic_options* opts, bic_result** out)
{
    return guard([&] {
        need(out, "out");
        *out = new bic_result{best_half_regular(n, d, {mu, p}, exact_opts(opts))};
    });
}

bic_status bic_conjecture(size_t n, size_t d, double mu, double p, const bic_options* opts, bic_conjecture_report* report,
                          bic_result** search)
{
    return guard([&] {
        need(report, "report");
        ConjectureReport rep = test_conjecture(n, d, {mu, p}, exact_opts(opts));
        report->kdd_feasible = rep.kdd_feasible;
        report->kdd_optimal = rep.kdd_optimal;
        report->kdn_optimal = rep.kdn_optimal;
        report->kdn_two_feasible = rep.kdn_two_feasible;
        report->kdn_two_optimal = rep.kdn_two_optimal;
        if (search)
            *search = new bic_result{std::move(rep.search)};
    });
}

double bic_result_value(const bic_result* r) { return r ? r->r.value : 0.0; }
size_t bic_result_evaluated(const bic_result* r) { return r ? r->r.evaluated_count : 0; }
size_t bic_result_minimizer_count(const bic_result* r) { return r ? r->r.minimizers.size() : 0; }

bic_status bic_result_minimizer(const bic_result* r, size_t index, bic_graph** out)
{
    return guard([&] {
        need(r, "result");
        need(out, "out");
        if (index >= r->r.minimizers.size())
            throw std::out_of_range("minimizer index out of range");
        *out = new bic_graph{r->r.minimizers[index]};
    });
}

void bic_result_free(bic_result* r) { delete r; }

bic_status bic_phase_cell(size_t d, double mu, double p, double tie_tol, size_t finite_n, const bic_options* opts,
                          bic_phase_winner* winner, double* delta)
{
    return guard([&] {
        PhaseOptions po;
        po.tie_tol = tie_tol;
        if (finite_n)
            po.finite_n = finite_n;
        po.exact = exact_opts(opts);
        const PhaseCell cell = phase_cell(d, {mu, p}, po);
        if (winner)
            *winner = cell.winner == PhaseWinner::kdd ? BIC_PHASE_KDD
                      : cell.winner == PhaseWinner::kdn ? BIC_PHASE_KDN
                                                        : BIC_PHASE_TIE;
        if (delta)
            *delta = cell.delta;
    });
}

bic_status bic_phase_boundary(size_t d, double p, const bic_options* opts, double* mu_star, int* found)
{
    return guard([&] {
        need(found, "found");
        const auto mu = phase_boundary(d, p, 1e-13, exact_opts(opts));
        *found = mu ? 1 : 0;
        if (mu && mu_star)
            *mu_star = *mu;
    });
}

// ---- subnetworks and reductions ----

bic_status bic_instance_create(const bic_graph* g, size_t d, bic_instance** out)
{
    return guard([&] {
        need(g, "graph");
        need(out, "out");
        *out = new bic_instance{SubnetworkInstance{g->g, {d}, std::nullopt}};
    });
}

bic_status bic_instance_read_file(const char* path, size_t default_d, bic_instance** out)
{
    if (!path || !out)
        return fail(BIC_ERR_INVALID_ARGUMENT, "path or out is NULL");
    std::ifstream in(path);
    if (!in)
        return fail(BIC_ERR_IO, (std::string("cannot open '") + path + "'").c_str());
    return guard([&] { *out = new bic_instance{read_instance(in, default_d)}; });
}

bic_status bic_instance_format(const bic_instance* inst, char* buf, size_t cap, size_t* needed)
{
    return guard_text([&] {
        need(inst, "instance");
        std::ostringstream out;
        write_instance(out, inst->inst);
        copy_text(out.str(), buf, cap, needed);
    });
}

bic_status bic_instance_graph(const bic_instance* inst, bic_graph** out)
{
    return guard([&] {
        need(inst, "instance");
        need(out, "out");
        *out = new bic_graph{inst->inst.graph};
    });
}

size_t bic_instance_d(const bic_instance* inst) { return inst ? inst->inst.d.d : 0; }

void bic_instance_set_d(bic_instance* inst, size_t d)
{
    if (inst)
        inst->inst.d.d = d;
}

int bic_instance_certificate(const bic_instance* inst, size_t* out)
{
    if (!inst || !inst->inst.certificate)
        return 0;
    if (out)
        *out = *inst->inst.certificate;
    return 1;
}

int bic_instance_feasible(const bic_instance* inst) { return inst && inst->inst.feasible() ? 1 : 0; }

void bic_instance_free(bic_instance* inst) { delete inst; }

bic_status bic_subnet_exact(const bic_instance* inst, double mu, double p, const bic_options* opts, bic_result** out)
{
    return guard([&] {
        need(inst, "instance");
        need(out, "out");
        *out = new bic_result{best_subnetwork_exact(inst->inst, {mu, p}, exact_opts(opts))};
    });
}

bic_status bic_subnet_local(const bic_instance* inst, double mu, double p, size_t iterations, uint64_t seed,
                            size_t mc_samples, const bic_options* opts, bic_result** out)
{
    return guard([&] {
        need(inst, "instance");
        need(out, "out");
        LocalSearchOptions lo;
        lo.iterations = iterations;
        lo.seed = seed;
        lo.exact = exact_opts(opts);
        if (mc_samples)
            lo.mc_samples = mc_samples;
        *out = new bic_result{best_subnetwork_local(inst->inst, {mu, p}, lo)};
    });
}

bic_status bic_subnet_greedy(const bic_instance* inst, bic_graph** out)
{
    return guard([&] {
        need(inst, "instance");
        need(out, "out");
        *out = new bic_graph{greedy_truncation(inst->inst)};
    });
}

bic_status bic_reduce_exact_cover_file(const char* path, bic_instance** out)
{
    if (!path || !out)
        return fail(BIC_ERR_INVALID_ARGUMENT, "path or out is NULL");
    std::ifstream in(path);
    if (!in)
        return fail(BIC_ERR_IO, (std::string("cannot open '") + path + "'").c_str());
    return guard([&] { *out = new bic_instance{reduce_exact_cover(read_exact_cover(in))}; });
}

bic_status bic_reduce_clique_file(const char* path, size_t d, bic_instance** out)
{
    if (!path || !out)
        return fail(BIC_ERR_INVALID_ARGUMENT, "path or out is NULL");
    std::ifstream in(path);
    if (!in)
        return fail(BIC_ERR_IO, (std::string("cannot open '") + path + "'").c_str());
    return guard([&] {
        const SimpleGraph sg = read_simple_graph(in);
        *out = new bic_instance{reduce_clique_decomposition(sg.edges, sg.n_vertices, d)};
    });
}

bic_status bic_kdd_decomposition_exists(const bic_graph* g, size_t d, int* exists)
{
    return guard([&] {
        need(g, "graph");
        need(exists, "exists");
        *exists = kdd_decomposition_exists(g->g, d) ? 1 : 0;
    });
}

} // extern "C"
