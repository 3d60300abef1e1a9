#include "cff/cff.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/errors.hpp"
#include "core/instance_io.hpp"
#include "core/oracle.hpp"
#include "core/reduction.hpp"
#include "core/solver.hpp"

using namespace cff;

struct cff_instance {
    Instance inst;
};

struct cff_result {
    SolveResult solve;            // factor lives on owner.inst.graph
    cff_instance owner;           // private copy keeping the parent graph alive
    long long factor_count = -1;  // >= 0 only for oracle results
};

struct cff_family {
    std::vector<ReductionInstance> members;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;
thread_local int g_error_col = 0;

void clear_error() {
    g_error.clear();
    g_error_line = 0;
    g_error_col = 0;
}

cff_status fail(cff_status code, const char* msg) {
    g_error = msg;
    g_error_line = 0;
    g_error_col = 0;
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
cff_status guarded(Fn&& fn) {
    clear_error();
    try {
        fn();
        return CFF_OK;
    } catch (const ParseError& e) {
        g_error = e.what();
        g_error_line = e.line();
        g_error_col = e.column();
        return CFF_ERR_PARSE;
    } catch (const SizeLimitError& e) {
        g_error = e.what();
        return CFF_ERR_LIMIT;
    } catch (const ValidationError& e) {
        g_error = e.what();
        return CFF_ERR_VALIDATION;
    } catch (const std::exception& e) {
        g_error = e.what();
        return CFF_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown error";
        return CFF_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* cff_version(void) { return "0.1.0"; }

const char* cff_last_error(void) { return g_error.c_str(); }
int32_t cff_last_error_line(void) { return g_error_line; }
int32_t cff_last_error_column(void) { return g_error_col; }

cff_status cff_instance_new(int32_t n, int weighted, cff_instance** out) {
    if (!out || n < 0) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] {
        *out = new cff_instance{
            Instance{Graph(n, weighted != 0), DegreeSpec(std::vector<int>(n, 0))}};
    });
}

void cff_instance_free(cff_instance* ins) { delete ins; }

cff_status cff_instance_add_edge(cff_instance* ins, int32_t u, int32_t v) {
    if (!ins) return fail(CFF_ERR_INVALID_ARGUMENT, "null instance");
    return guarded([&] { ins->inst.graph.add_edge(u, v); });
}

cff_status cff_instance_add_weighted_edge(cff_instance* ins, int32_t u, int32_t v, int64_t w) {
    if (!ins) return fail(CFF_ERR_INVALID_ARGUMENT, "null instance");
    return guarded([&] { ins->inst.graph.add_edge(u, v, w); });
}

cff_status cff_instance_set_degree(cff_instance* ins, int32_t v, int32_t f) {
    if (!ins) return fail(CFF_ERR_INVALID_ARGUMENT, "null instance");
    if (v < 0 || v >= ins->inst.graph.vertex_count())
        return fail(CFF_ERR_INVALID_ARGUMENT, "vertex out of range");
    if (f < 0) return fail(CFF_ERR_VALIDATION, "degree requirement must be non-negative");
    return guarded([&] {
        std::vector<int> vals = ins->inst.f.values();
        vals[v] = f;
        ins->inst.f = DegreeSpec(std::move(vals));
    });
}

int32_t cff_instance_vertex_count(const cff_instance* ins) {
    return ins ? ins->inst.graph.vertex_count() : 0;
}

int32_t cff_instance_edge_count(const cff_instance* ins) {
    return ins ? ins->inst.graph.edge_count() : 0;
}

int cff_instance_weighted(const cff_instance* ins) {
    return ins && ins->inst.graph.weighted() ? 1 : 0;
}

cff_status cff_instance_edge(const cff_instance* ins, int32_t index, int32_t* u, int32_t* v,
                             int64_t* w) {
    if (!ins || !u || !v) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (index < 0 || index >= ins->inst.graph.edge_count())
        return fail(CFF_ERR_INVALID_ARGUMENT, "edge index out of range");
    *u = ins->inst.graph.edge(index).u;
    *v = ins->inst.graph.edge(index).v;
    if (w) *w = ins->inst.graph.weighted() ? ins->inst.graph.weight(index) : 0;
    return CFF_OK;
}

cff_status cff_instance_degree(const cff_instance* ins, int32_t v, int32_t* f) {
    if (!ins || !f) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (v < 0 || v >= ins->inst.graph.vertex_count())
        return fail(CFF_ERR_INVALID_ARGUMENT, "vertex out of range");
    *f = ins->inst.f(v);
    return CFF_OK;
}

int cff_instance_parity_warning(const cff_instance* ins) {
    return ins && parity_warning(ins->inst) ? 1 : 0;
}

cff_status cff_instance_parse(const char* text, cff_instance** out) {
    if (!text || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] { *out = new cff_instance{parse_instance(text)}; });
}

cff_status cff_instance_serialize(const cff_instance* ins, char** out) {
    if (!ins || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] {
        std::string s = serialize_instance(ins->inst);
        char* buf = new char[s.size() + 1];
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *out = buf;
    });
}

cff_status cff_instance_load(const char* path, cff_instance** out) {
    if (!path || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    cff_status st = guarded([&] { *out = new cff_instance{read_instance_file(path)}; });
    if (st == CFF_ERR_VALIDATION && g_error.find("cannot open") != std::string::npos)
        return CFF_ERR_IO;
    return st;
}

cff_status cff_instance_save(const cff_instance* ins, const char* path) {
    if (!ins || !path) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    cff_status st = guarded([&] { write_instance_file(ins->inst, path); });
    if (st == CFF_ERR_VALIDATION && g_error.find("cannot write") != std::string::npos)
        return CFF_ERR_IO;
    return st;
}

void cff_string_free(char* s) { delete[] s; }

cff_status cff_solve(const cff_instance* ins, int min_weight, int threads, cff_result** out) {
    if (!ins || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (threads < 1) return fail(CFF_ERR_INVALID_ARGUMENT, "threads must be >= 1");
    return guarded([&] {
        auto res = std::make_unique<cff_result>(
            cff_result{SolveResult{}, cff_instance{ins->inst}, -1});
        SolverOptions opts;
        opts.threads = threads;
        res->solve = min_weight
                         ? min_connected_f_factor(res->owner.inst.graph, res->owner.inst.f, opts)
                         : connected_f_factor(res->owner.inst.graph, res->owner.inst.f, opts);
        *out = res.release();
    });
}

cff_status cff_solve_brute_force(const cff_instance* ins, cff_result** out) {
    if (!ins || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] {
        auto res = std::make_unique<cff_result>(
            cff_result{SolveResult{}, cff_instance{ins->inst}, -1});
        OracleResult oracle =
            brute_force_connected_f_factor(res->owner.inst.graph, res->owner.inst.f);
        res->factor_count = oracle.count;
        res->solve.trace.n = res->owner.inst.graph.vertex_count();
        res->solve.trace.min_f = res->owner.inst.f.min_value();
        if (oracle.exists) {
            res->solve.trace.outcome = Outcome::Found;
            // re-anchor the factor on the private graph copy
            res->solve.factor =
                FactorSubgraph(res->owner.inst.graph, oracle.best->first.edge_ids());
        } else {
            res->solve.trace.outcome = Outcome::NoFFactor;
        }
        *out = res.release();
    });
}

void cff_result_free(cff_result* res) { delete res; }

cff_outcome cff_result_outcome(const cff_result* res) {
    switch (res->solve.trace.outcome) {
        case Outcome::Found:
            return CFF_OUTCOME_FOUND;
        case Outcome::PartitionUnconnectable:
            return CFF_OUTCOME_NONE;
        case Outcome::NoFFactor:
        default:
            return CFF_OUTCOME_NO_F_FACTOR;
    }
}

int32_t cff_result_edge_count(const cff_result* res) {
    return res->solve.factor ? res->solve.factor->edge_count() : 0;
}

cff_status cff_result_edge(const cff_result* res, int32_t index, int32_t* u, int32_t* v) {
    if (!res || !u || !v) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (!res->solve.factor) return fail(CFF_ERR_INVALID_ARGUMENT, "no factor in this result");
    auto ids = res->solve.factor->edge_ids();
    if (index < 0 || index >= static_cast<int32_t>(ids.size()))
        return fail(CFF_ERR_INVALID_ARGUMENT, "edge index out of range");
    const Edge& e = res->owner.inst.graph.edge(ids[index]);
    *u = e.u;
    *v = e.v;
    return CFF_OK;
}

int cff_result_has_weight(const cff_result* res) {
    return res->solve.factor && res->owner.inst.graph.weighted() ? 1 : 0;
}

int64_t cff_result_weight(const cff_result* res) {
    if (!cff_result_has_weight(res)) return 0;
    return res->solve.factor->total_weight();
}

int32_t cff_result_witness_part_count(const cff_result* res) {
    return res->solve.trace.witness ? res->solve.trace.witness->size() : 0;
}

int32_t cff_result_witness_part_of(const cff_result* res, int32_t v) {
    if (!res->solve.trace.witness) return -1;
    if (v < 0 || v >= res->solve.trace.witness->vertex_count()) return -1;
    return res->solve.trace.witness->part_of(v);
}

int32_t cff_result_trace_depth(const cff_result* res) {
    return static_cast<int32_t>(res->solve.trace.levels.size());
}

cff_status cff_result_trace_level(const cff_result* res, int32_t index, int32_t* parts,
                                  int64_t* trees_examined, int* fallback_used) {
    if (!res) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (index < 0 || index >= cff_result_trace_depth(res))
        return fail(CFF_ERR_INVALID_ARGUMENT, "trace index out of range");
    const LevelRecord& rec = res->solve.trace.levels[index];
    if (parts) *parts = rec.parts;
    if (trees_examined) *trees_examined = rec.trees_examined;
    if (fallback_used) *fallback_used = rec.fallback_used ? 1 : 0;
    return CFF_OK;
}

int cff_result_fallback_used(const cff_result* res) {
    return res->solve.trace.fallback_used() ? 1 : 0;
}

int64_t cff_result_factor_count(const cff_result* res) { return res->factor_count; }

cff_status cff_has_hamiltonian_cycle(const cff_instance* ins, int* out) {
    if (!ins || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] { *out = has_hamiltonian_cycle(ins->inst.graph) ? 1 : 0; });
}

cff_status cff_family_generate(const cff_instance* source, double epsilon, int32_t part_size,
                               int64_t max_output, cff_family** out) {
    if (!source || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (part_size < 0) return fail(CFF_ERR_INVALID_ARGUMENT, "part size must be >= 0");
    return guarded([&] {
        ReductionParams params;
        params.epsilon = epsilon;
        if (part_size > 0) params.part_size_override = part_size;
        if (max_output > 0) params.max_output = max_output;
        *out = new cff_family{generate_family(source->inst.graph, params)};
    });
}

void cff_family_free(cff_family* fam) { delete fam; }

int64_t cff_family_size(const cff_family* fam) {
    return fam ? static_cast<int64_t>(fam->members.size()) : 0;
}

cff_status cff_family_instance(const cff_family* fam, int64_t index, cff_instance** out) {
    if (!fam || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (index < 0 || index >= cff_family_size(fam))
        return fail(CFF_ERR_INVALID_ARGUMENT, "family index out of range");
    return guarded([&] {
        const ReductionInstance& m = fam->members[static_cast<size_t>(index)];
        *out = new cff_instance{Instance{m.graph, m.f}};
    });
}

cff_status cff_family_witness(const cff_family* fam, int64_t index, int32_t path[4]) {
    if (!fam || !path) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    if (index < 0 || index >= cff_family_size(fam))
        return fail(CFF_ERR_INVALID_ARGUMENT, "family index out of range");
    const auto& w = fam->members[static_cast<size_t>(index)].path_witness;
    for (int i = 0; i < 4; ++i) path[i] = w[i];
    return CFF_OK;
}

cff_status cff_verify_reduction(const cff_instance* source, double epsilon, int32_t part_size,
                                int* out) {
    if (!source || !out) return fail(CFF_ERR_INVALID_ARGUMENT, "bad arguments");
    return guarded([&] {
        ReductionParams params;
        params.epsilon = epsilon;
        if (part_size > 0) params.part_size_override = part_size;
        *out = verify_reduction(source->inst.graph, params) ? 1 : 0;
    });
}

}  // extern "C"
