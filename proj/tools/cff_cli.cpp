// cff command line front end. Talks to the solver library exclusively through
// the public C interface.
//
//   cff solve <instance> [--min-weight] [--json] [--oracle] [--threads N]
//   cff gen <instance> -o <dir> [--part-size S] [--epsilon E] [--max-output K]
//   cff check <instance>
//
// Exit codes for solve: 0 found, 1 none / no f-factor, 2 input error,
// 3 oracle mismatch.

#include <sys/stat.h>
#include <sys/types.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cff/cff.h"

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitInputError = 2;
constexpr int kExitOracleMismatch = 3;

void report_error(const char* context) {
    std::cerr << "error: " << context;
    const char* detail = cff_last_error();
    if (detail && *detail) {
        std::cerr << ": " << detail;
        if (cff_last_error_line() > 0)
            std::cerr << " (line " << cff_last_error_line() << ", column "
                      << cff_last_error_column() << ")";
    }
    std::cerr << "\n";
}

struct InstanceHandle {
    cff_instance* ptr = nullptr;
    ~InstanceHandle() { cff_instance_free(ptr); }
};

struct ResultHandle {
    cff_result* ptr = nullptr;
    ~ResultHandle() { cff_result_free(ptr); }
};

struct FamilyHandle {
    cff_family* ptr = nullptr;
    ~FamilyHandle() { cff_family_free(ptr); }
};

std::vector<std::vector<int>> witness_parts(const cff_result* res, int n) {
    int parts = cff_result_witness_part_count(res);
    std::vector<std::vector<int>> out(parts);
    for (int v = 0; v < n; ++v) {
        int p = cff_result_witness_part_of(res, v);
        if (p >= 0) out[p].push_back(v);
    }
    return out;
}

std::string witness_text(const std::vector<std::vector<int>>& parts) {
    std::ostringstream os;
    for (size_t p = 0; p < parts.size(); ++p) {
        if (p) os << " | ";
        os << "{";
        for (size_t i = 0; i < parts[p].size(); ++i) {
            if (i) os << ",";
            os << parts[p][i];
        }
        os << "}";
    }
    return os.str();
}

json trace_json(const cff_result* res) {
    json levels = json::array();
    for (int i = 0; i < cff_result_trace_depth(res); ++i) {
        int32_t parts = 0;
        int64_t trees = 0;
        int fb = 0;
        cff_result_trace_level(res, i, &parts, &trees, &fb);
        levels.push_back({{"level", i},
                          {"parts", parts},
                          {"trees_examined", trees},
                          {"fallback_used", fb != 0}});
    }
    return {{"levels", levels}, {"fallback_used", cff_result_fallback_used(res) != 0}};
}

int run_solve(const std::string& path, bool min_weight, bool as_json, bool cross_check,
              int threads) {
    InstanceHandle ins;
    if (cff_instance_load(path.c_str(), &ins.ptr) != CFF_OK) {
        report_error(path.c_str());
        return kExitInputError;
    }
    if (min_weight && !cff_instance_weighted(ins.ptr)) {
        std::cerr << "error: --min-weight needs a weighted instance\n";
        return kExitInputError;
    }
    if (cff_instance_parity_warning(ins.ptr))
        std::cerr << "warning: degree requirements sum to an odd number; no f-factor exists\n";

    ResultHandle res;
    if (cff_solve(ins.ptr, min_weight ? 1 : 0, threads, &res.ptr) != CFF_OK) {
        report_error("solve failed");
        return kExitInputError;
    }

    cff_outcome outcome = cff_result_outcome(res.ptr);

    if (cross_check) {
        ResultHandle oracle;
        if (cff_solve_brute_force(ins.ptr, &oracle.ptr) != CFF_OK) {
            report_error("oracle cross-check failed");
            return kExitInputError;
        }
        bool f1 = outcome == CFF_OUTCOME_FOUND;
        bool f2 = cff_result_outcome(oracle.ptr) == CFF_OUTCOME_FOUND;
        bool mismatch = f1 != f2;
        if (!mismatch && f1 && min_weight &&
            cff_result_weight(res.ptr) != cff_result_weight(oracle.ptr))
            mismatch = true;
        if (mismatch) {
            std::cerr << "ORACLE MISMATCH: solver="
                      << (f1 ? "FOUND" : "NONE")
                      << " weight=" << cff_result_weight(res.ptr)
                      << " oracle=" << (f2 ? "FOUND" : "NONE")
                      << " weight=" << cff_result_weight(oracle.ptr) << "\n";
            return kExitOracleMismatch;
        }
    }

    const int n = cff_instance_vertex_count(ins.ptr);
    if (as_json) {
        json doc;
        doc["outcome"] = outcome == CFF_OUTCOME_FOUND
                             ? "found"
                             : (outcome == CFF_OUTCOME_NONE ? "none" : "no-f-factor");
        json edges = json::array();
        for (int i = 0; i < cff_result_edge_count(res.ptr); ++i) {
            int32_t u = 0, v = 0;
            cff_result_edge(res.ptr, i, &u, &v);
            edges.push_back({u, v});
        }
        doc["edges"] = outcome == CFF_OUTCOME_FOUND ? edges : json(nullptr);
        doc["weight"] = (outcome == CFF_OUTCOME_FOUND && cff_result_has_weight(res.ptr))
                            ? json(cff_result_weight(res.ptr))
                            : json(nullptr);
        doc["witness_partition"] = cff_result_witness_part_count(res.ptr) > 0
                                       ? json(witness_parts(res.ptr, n))
                                       : json(nullptr);
        doc["trace"] = trace_json(res.ptr);
        std::cout << doc.dump(2) << "\n";
    } else if (outcome == CFF_OUTCOME_FOUND) {
        std::cout << "FOUND\n";
        if (min_weight) std::cout << "weight " << cff_result_weight(res.ptr) << "\n";
        for (int i = 0; i < cff_result_edge_count(res.ptr); ++i) {
            int32_t u = 0, v = 0;
            cff_result_edge(res.ptr, i, &u, &v);
            std::cout << "e " << u << " " << v << "\n";
        }
    } else if (outcome == CFF_OUTCOME_NONE) {
        std::cout << "NONE\n";
        std::cout << "witness " << witness_text(witness_parts(res.ptr, n)) << "\n";
    } else {
        std::cout << "NO-F-FACTOR\n";
    }
    return outcome == CFF_OUTCOME_FOUND ? kExitFound : kExitNone;
}

int run_gen(const std::string& path, const std::string& outdir, double epsilon, int part_size,
            long long max_output) {
    InstanceHandle src;
    if (cff_instance_load(path.c_str(), &src.ptr) != CFF_OK) {
        report_error(path.c_str());
        return kExitInputError;
    }
    if (mkdir(outdir.c_str(), 0777) != 0 && errno != EEXIST) {
        std::cerr << "error: cannot create output directory " << outdir << "\n";
        return kExitInputError;
    }

    FamilyHandle fam;
    if (cff_family_generate(src.ptr, epsilon, part_size, max_output, &fam.ptr) != CFF_OK) {
        report_error("generation failed");
        return kExitInputError;
    }

    json manifest = json::array();
    for (int64_t i = 0; i < cff_family_size(fam.ptr); ++i) {
        InstanceHandle member;
        int32_t witness[4] = {0, 0, 0, 0};
        if (cff_family_instance(fam.ptr, i, &member.ptr) != CFF_OK ||
            cff_family_witness(fam.ptr, i, witness) != CFF_OK) {
            report_error("family member unavailable");
            return kExitInputError;
        }
        std::ostringstream name;
        name << "inst_" << witness[0] << "_" << witness[1] << "_" << witness[2] << "_"
             << witness[3] << ".cff";
        std::string file = outdir + "/" + name.str();
        if (cff_instance_save(member.ptr, file.c_str()) != CFF_OK) {
            report_error(file.c_str());
            return kExitInputError;
        }
        manifest.push_back({{"file", name.str()},
                            {"path_witness", {witness[0], witness[1], witness[2], witness[3]}},
                            {"n", cff_instance_vertex_count(member.ptr)},
                            {"m", cff_instance_edge_count(member.ptr)}});
    }

    std::ofstream mf(outdir + "/manifest.json");
    if (!mf) {
        std::cerr << "error: cannot write manifest\n";
        return kExitInputError;
    }
    mf << manifest.dump(2) << "\n";
    std::cout << "wrote " << cff_family_size(fam.ptr) << " instance(s) to " << outdir << "\n";
    return 0;
}

int run_check(const std::string& path) {
    InstanceHandle ins;
    if (cff_instance_load(path.c_str(), &ins.ptr) != CFF_OK) {
        report_error(path.c_str());
        return kExitInputError;
    }
    std::cout << "ok: " << cff_instance_vertex_count(ins.ptr) << " vertices, "
              << cff_instance_edge_count(ins.ptr) << " edges, "
              << (cff_instance_weighted(ins.ptr) ? "weighted" : "unweighted") << "\n";
    if (cff_instance_parity_warning(ins.ptr))
        std::cout << "warning: degree requirements sum to an odd number\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected f-factor solver"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(cff_version()));

    std::string solve_path;
    bool min_weight = false, as_json = false, cross_check = false;
    int threads = 1;
    auto* solve = app.add_subcommand("solve", "decide / construct a connected f-factor");
    solve->add_option("instance", solve_path, "instance file")->required();
    solve->add_flag("--min-weight", min_weight, "minimize total weight (weighted instances)");
    solve->add_flag("--json", as_json, "machine-readable report");
    solve->add_flag("--oracle", cross_check, "cross-check against brute force (desk scale)");
    solve->add_option("--threads", threads, "worker threads for candidate trees")
        ->check(CLI::PositiveNumber);

    std::string gen_path, outdir;
    double epsilon = 1.0;
    int part_size = 0;
    long long max_output = 0;
    auto* gen = app.add_subcommand("gen", "emit the hamiltonicity reduction family");
    gen->add_option("instance", gen_path, "source graph instance file")->required();
    gen->add_option("-o,--output", outdir, "output directory")->required();
    gen->add_option("--epsilon", epsilon, "reduction epsilon (> 0)");
    gen->add_option("--part-size", part_size, "desk-mode clique size (>= 3); omit for formula mode");
    gen->add_option("--max-output", max_output, "cap on emitted instances");

    std::string check_path;
    auto* check = app.add_subcommand("check", "validate an instance file");
    check->add_option("instance", check_path, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (solve->parsed()) return run_solve(solve_path, min_weight, as_json, cross_check, threads);
    if (gen->parsed()) return run_gen(gen_path, outdir, epsilon, part_size, max_output);
    if (check->parsed()) return run_check(check_path);
    return kExitInputError;
}
