// binmat: exact computations on simple binary matroids in PG(n-1,2).
//
// Exit codes: 0 success, 2 input error, 3 search budget exhausted,
// 4 internal consistency failure (a verified guarantee did not hold).

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "binmat/constructions.hpp"
#include "binmat/errors.hpp"
#include "binmat/fourier.hpp"
#include "binmat/io.hpp"
#include "binmat/matroid.hpp"
#include "binmat/pipeline.hpp"
#include "binmat/ramsey.hpp"
#include "binmat/regularity.hpp"

using namespace binmat;
using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool timing = false;
    int threads = 1;            // caps internal parallelism; current code paths are sequential
    std::uint64_t seed = 1729;  // drives every randomized verification suite
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json subspace_json(const Subspace& s) {
    json j;
    j["dim"] = s.dim();
    j["basis"] = s.basis();
    return j;
}

json flat_json(const AffineFlat& f) {
    json j = subspace_json(f.space);
    j["shift"] = f.shift;
    j["linear"] = f.is_linear();
    return j;
}

struct ReportSink {
    GlobalOpts opts;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int emit(const std::string& command, const std::string& digest, json results,
             int exit_code = 0) const {
        RunReport rep;
        rep.command = command;
        rep.input_digest = digest;
        rep.results = std::move(results);
        if (opts.timing) {
            auto elapsed = std::chrono::steady_clock::now() - start;
            rep.timing_ms = std::chrono::duration<double, std::milli>(elapsed).count();
        }
        std::cout << emit_report(rep, opts.json ? ReportFormat::json : ReportFormat::text);
        return exit_code;
    }
};

int run_gen(const GlobalOpts& opts, const std::string& kind, const Matroid& m,
            const std::string& out_path) {
    std::string text = emit_matroid(m);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw input_error("cannot write file: " + out_path);
        out << text;
    }
    if (!opts.json) {
        if (out_path.empty()) std::cout << text;
        return 0;
    }
    ReportSink sink{opts};
    json results;
    results["dim"] = m.dim();
    results["points"] = m.ground().to_vector();
    if (!out_path.empty()) results["written_to"] = out_path;
    return sink.emit("gen " + kind, digest_bytes(text), results);
}

json trace_json(const ChiWitness& w) {
    json steps = json::array();
    for (const DescentStep& s : w.trace) {
        json step;
        step["t"] = s.t;
        step["ambient_dim"] = s.ambient_dim;
        step["tripod_order"] = s.k;
        step["g2_dim"] = s.g2_dim;
        step["x_size"] = s.x_size;
        step["action"] = s.action;
        step["flat_dim"] = s.flat_dim;
        steps.push_back(step);
    }
    return steps;
}

PointSet random_pointset(int n, std::mt19937_64& rng, double density) {
    PointSet s(n);
    auto threshold = std::uint64_t(density * double(~0ull));
    for (std::uint64_t v = 0; v < s.universe(); ++v)
        if (rng() < threshold) s.set(Vec(v));
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on simple binary matroids over PG(n-1,2)"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_flag("--json", opts.json, "emit reports as JSON");
    app.add_flag("--timing", opts.timing, "include wall-clock timing in reports");
    app.add_option("--threads", opts.threads, "cap internal parallelism")->check(CLI::Range(1, 256));
    app.add_option("--seed", opts.seed, "seed for randomized verification suites");

    // --- gen -----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "write a generator matroid file");
    gen->require_subcommand(1);
    int gen_k = 1, gen_t = 4, gen_n = 3;
    std::string gen_out;
    auto* gen_tripod = gen->add_subcommand("tripod", "order-k tripod");
    gen_tripod->add_option("-k", gen_k, "tripod order")->required();
    gen_tripod->add_option("--out", gen_out, "output file (default stdout)");
    auto* gen_c5t = gen->add_subcommand("c5t", "five-point circuit in ambient dim t");
    gen_c5t->add_option("-t", gen_t, "ambient dimension")->required();
    gen_c5t->add_option("--out", gen_out, "output file (default stdout)");
    auto* gen_ag = gen->add_subcommand("ag", "affine geometry of dimension n");
    gen_ag->add_option("-n", gen_n, "ambient dimension")->required();
    gen_ag->add_option("--out", gen_out, "output file (default stdout)");

    // --- matroid queries -------------------------------------------------------
    std::string file;
    auto* chi_cmd = app.add_subcommand("chi", "critical number with witness flat");
    chi_cmd->add_option("file", file, "matroid file ('-' for stdin)")->required();

    auto* omega_cmd = app.add_subcommand("omega", "largest subgeometry inside the ground set");
    omega_cmd->add_option("file", file)->required();

    bool check_triangle = false;
    int check_i1t = 0;
    auto* check_cmd = app.add_subcommand("check", "freeness predicates");
    check_cmd->add_flag("--triangle-free", check_triangle, "check triangle-freeness");
    check_cmd->add_option("--i1t", check_i1t, "check I_{1,t}-freeness for this t");
    check_cmd->add_option("file", file)->required();

    auto* sumset_cmd = app.add_subcommand("sumset3", "support of the triple sum X+X+X");
    sumset_cmd->add_option("file", file)->required();

    std::string eps_text = "1/4";
    auto* uniform_cmd = app.add_subcommand("uniform", "hyperplane-balance uniformity");
    uniform_cmd->add_option("--eps", eps_text, "rational threshold P/Q")->required();
    uniform_cmd->add_option("file", file)->required();

    int max_codim = 12;
    auto* reg_cmd = app.add_subcommand("regularize", "refine to a regular subspace");
    reg_cmd->add_option("--eps", eps_text, "rational threshold P/Q")->required();
    reg_cmd->add_option("--max-codim", max_codim, "codimension budget");
    reg_cmd->add_option("file", file)->required();

    std::string alpha_text = "1/4";
    auto* key_cmd = app.add_subcommand("keylemma", "triple-sum flat witness");
    key_cmd->add_option("--alpha", alpha_text, "density parameter P/Q")->required();
    key_cmd->add_option("--max-codim", max_codim, "codimension budget");
    key_cmd->add_option("file", file)->required();

    // --- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "property suites");
    verify->require_subcommand(1);
    int ver_k = 1, ver_n = 8, ver_t = 1, ver_trials = 20;
    bool ver_exhaustive = false;
    auto* ver_tripod = verify->add_subcommand("tripod-lemma", "three tripod properties");
    ver_tripod->add_option("-k", ver_k, "tripod order")->required();
    auto* ver_count = verify->add_subcommand("counting", "triple-sum counting bound");
    ver_count->add_option("--trials", ver_trials, "number of random sets");
    ver_count->add_option("-n", ver_n, "ambient dimension")->required();
    ver_count->add_option("--eps", eps_text, "uniformity threshold P/Q");
    auto* ver_bb = verify->add_subcommand("bose-burton", "flat-free size bound");
    ver_bb->add_option("-n", ver_n, "ambient dimension")->required();
    ver_bb->add_option("-t", ver_t, "flat dimension parameter")->required();
    ver_bb->add_flag("--exhaustive", ver_exhaustive, "sweep all subsets (n <= 4)");
    ver_bb->add_option("--trials", ver_trials, "random subsets when not exhaustive");

    // --- pipeline ----------------------------------------------------------------
    int pipe_t = 3, pipe_kcap = -1;
    long long gr_value = -1;
    std::string strategy = "search";
    auto* pipe_cmd = app.add_subcommand("pipeline", "chi-bound descent with trace");
    pipe_cmd->add_option("-t", pipe_t, "freeness parameter")->required();
    pipe_cmd->add_option("--strategy", strategy, "search | regularity")
        ->check(CLI::IsMember({"search", "regularity"}));
    pipe_cmd->add_option("--kcap", pipe_kcap, "tripod order cap");
    pipe_cmd->add_option("--gr-value", gr_value, "externally supplied Ramsey number for display");
    pipe_cmd->add_option("file", file)->required();

    // --- ramsey -----------------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "geometric Ramsey search");
    ramsey->require_subcommand(1);
    int gr_c = 2, gr_r = 2, gr_nmax = 4;
    std::uint64_t gr_budget = 50'000'000;
    std::string cert_dir;
    auto* gr_cmd = ramsey->add_subcommand("gr", "least forcing dimension");
    gr_cmd->add_option("-c", gr_c, "number of colors")->required();
    gr_cmd->add_option("-r", gr_r, "monochromatic flat dimension")->required();
    gr_cmd->add_option("--nmax", gr_nmax, "largest dimension to try")->required();
    gr_cmd->add_option("--budget", gr_budget, "node budget");
    gr_cmd->add_option("--cert-dir", cert_dir, "write certificate colorings here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        ReportSink sink{opts};

        if (gen_tripod->parsed()) return run_gen(opts, "tripod", tripod(gen_k).matroid, gen_out);
        if (gen_c5t->parsed()) return run_gen(opts, "c5t", c5t(gen_t), gen_out);
        if (gen_ag->parsed()) return run_gen(opts, "ag", affine_geometry(gen_n), gen_out);

        if (chi_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            PointSet s = m.complement().ground();
            s.set(0);
            Subspace witness = *largest_subspace_in(s);
            json results;
            results["n"] = m.dim();
            results["ground_size"] = m.ground_size();
            results["omega_complement"] = witness.dim();
            results["chi"] = m.dim() - witness.dim();
            results["witness"] = subspace_json(witness);
            return sink.emit("chi", digest_bytes(text), results);
        }

        if (omega_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            PointSet s = m.ground();
            s.set(0);
            Subspace witness = *largest_subspace_in(s);
            json results;
            results["omega"] = witness.dim();
            results["witness"] = subspace_json(witness);
            return sink.emit("omega", digest_bytes(text), results);
        }

        if (check_cmd->parsed()) {
            if (!check_triangle && check_i1t == 0)
                throw input_error("check: request --triangle-free and/or --i1t T");
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            json results;
            if (check_triangle) results["triangle_free"] = is_triangle_free(m);
            if (check_i1t != 0) {
                I1tResult r = i1t_witness(m, check_i1t);
                json sub;
                sub["t"] = check_i1t;
                sub["free"] = r.free;
                if (r.witness) sub["witness"] = subspace_json(*r.witness);
                results["i1t"] = sub;
            }
            return sink.emit("check", digest_bytes(text), results);
        }

        if (sumset_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            PointSet support = sumset3_support(m.ground());
            json results;
            results["size"] = support.count();
            results["support"] = support.to_vector();
            return sink.emit("sumset3", digest_bytes(text), results);
        }

        if (uniform_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            Rat eps = parse_rat(eps_text);
            UniformityVerdict v = is_epsilon_uniform(m.ground(), eps);
            json results;
            results["eps"] = eps.str();
            results["uniform"] = v.uniform;
            results["worst_character"] = v.worst_character;
            results["worst_abs"] = v.worst_abs;
            return sink.emit("uniform", digest_bytes(text), results);
        }

        if (reg_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            Rat eps = parse_rat(eps_text);
            RefineResult r = refine_to_regular(m.ground(), eps, std::min(max_codim, m.dim()));
            json results;
            results["success"] = r.success;
            results["codim"] = r.report.codim;
            results["regular"] = r.report.regular;
            results["iterations"] = r.iterations;
            results["bad_cosets"] = r.report.bad_set.size();
            results["sparse_cosets"] = r.report.sparse_set.size();
            results["subspace"] = subspace_json(r.report.subspace);
            json energy = json::array();
            for (const Rat& e : r.energy_trace) energy.push_back(e.str());
            results["energy_trace"] = energy;
            return sink.emit("regularize", digest_bytes(text), results, r.success ? 0 : 3);
        }

        if (key_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            Rat alpha = parse_rat(alpha_text);
            KeyLemmaResult r =
                key_lemma_witness(m.ground(), alpha, std::min(max_codim, m.dim()));
            json results;
            results["verified"] = r.witness.verified;
            results["linear"] = r.witness.linear;
            results["good_coset"] = r.witness.good_coset;
            results["epsilon_used"] = r.witness.epsilon_used.str();
            results["flat"] = flat_json(r.witness.flat);
            results["codim"] = r.refine.report.codim;
            int code = r.witness.verified ? 0 : 4;
            return sink.emit("keylemma", digest_bytes(text), results, code);
        }

        if (ver_tripod->parsed()) {
            TripodLemmaRecord rec = verify_tripod_lemma(ver_k);
            json results;
            results["k"] = rec.k;
            results["ground_size"] = rec.ground_size;
            results["f_dim"] = rec.f_dim;
            results["dimension_ok"] = rec.dim_ok;
            results["c5_restriction_ok"] = rec.c5_ok;
            results["sumset_cover_ok"] = rec.cover_ok;
            results["all_ok"] = rec.all_ok();
            if (!rec.failed_bullet.empty()) {
                results["failed_bullet"] = rec.failed_bullet;
                if (rec.counterexample) results["counterexample"] = *rec.counterexample;
            }
            return sink.emit("verify tripod-lemma",
                             digest_bytes("tripod-lemma k=" + std::to_string(ver_k)), results,
                             rec.all_ok() ? 0 : 4);
        }

        if (ver_count->parsed()) {
            Rat eps = parse_rat(eps_text);
            std::mt19937_64 rng(opts.seed);
            int produced = 0;
            long long checked = 0;
            bool all_hold = true;
            int attempts = 0;
            while (produced < ver_trials) {
                if (++attempts > 100 * ver_trials + 1000)
                    throw budget_error("counting: could not draw enough uniform sets");
                PointSet x = random_pointset(ver_n, rng, 0.5);
                if (!is_epsilon_uniform(x, eps).uniform) continue;
                ++produced;
                TripleCountTable t = triple_counts(x);
                for (std::uint64_t u = 0; u < x.universe(); ++u) {
                    ++checked;
                    if (!counting_bound_check(t, x.count(), eps, Vec(u))) all_hold = false;
                }
            }
            json results;
            results["n"] = ver_n;
            results["eps"] = eps.str();
            results["trials"] = produced;
            results["targets_checked"] = checked;
            results["all_hold"] = all_hold;
            if (!all_hold) throw internal_error("counting bound failed on a uniform set");
            return sink.emit("verify counting",
                             digest_bytes("counting n=" + std::to_string(ver_n) +
                                          " seed=" + std::to_string(opts.seed)),
                             results);
        }

        if (ver_bb->parsed()) {
            json results;
            results["n"] = ver_n;
            results["t"] = ver_t;
            if (ver_t < 0 || ver_t > ver_n) throw input_error("bose-burton: t out of range");
            long long bound = (1ll << ver_n) - (1ll << (ver_n - ver_t));
            results["bound"] = bound;
            long long best = 0;
            long long swept = 0;
            if (ver_exhaustive) {
                if (ver_n > 4) throw input_error("bose-burton: exhaustive sweep is capped at n = 4");
                std::uint32_t points = (1u << ver_n) - 1;
                for (std::uint64_t mask = 0; mask < (1ull << points); ++mask) {
                    PointSet e(ver_n);
                    for (std::uint32_t b = 0; b < points; ++b)
                        if ((mask >> b) & 1) e.set(Vec(b + 1));
                    BoseBurtonRecord rec = bose_burton_check(Matroid(ver_n, e), ver_t);
                    ++swept;
                    if (!rec.contains_flat) best = std::max(best, rec.ground_size);
                }
                results["mode"] = "exhaustive";
            } else {
                std::mt19937_64 rng(opts.seed);
                for (int trial = 0; trial < ver_trials; ++trial) {
                    PointSet e = random_pointset(ver_n, rng, 0.3);
                    e.reset(0);
                    BoseBurtonRecord rec = bose_burton_check(Matroid(ver_n, e), ver_t);
                    ++swept;
                    if (!rec.contains_flat) best = std::max(best, rec.ground_size);
                }
                results["mode"] = "random";
            }
            results["sets_swept"] = swept;
            results["max_flat_free_size"] = best;
            results["bound_respected"] = best <= bound;
            return sink.emit("verify bose-burton",
                             digest_bytes("bose-burton n=" + std::to_string(ver_n) +
                                          " t=" + std::to_string(ver_t)),
                             results);
        }

        if (pipe_cmd->parsed()) {
            std::string text = read_input(file);
            Matroid m = parse_matroid(text);
            PipelineConfig cfg;
            cfg.strategy = strategy == "regularity" ? PipelineConfig::Strategy::regularity
                                                    : PipelineConfig::Strategy::search;
            cfg.k_cap = pipe_kcap;
            ChiWitness w = chi_bound_pipeline(m, pipe_t, cfg);
            json results;
            results["t"] = pipe_t;
            results["chi_bound"] = w.chi_bound;
            results["flat"] = subspace_json(w.flat);
            results["trace"] = trace_json(w);
            if (gr_value >= 0 && !w.trace.empty()) {
                // density floor 2^(dim N - GR) from an externally supplied Ramsey
                // number; displayed only, never computed here
                results["claim_density_log2"] = w.trace.front().g2_dim - gr_value;
            }
            return sink.emit("pipeline", digest_bytes(text), results);
        }

        if (gr_cmd->parsed()) {
            GrResult r = gr_search(gr_c, gr_r, gr_nmax, GrOptions{gr_budget});
            json results;
            results["c"] = gr_c;
            results["r"] = gr_r;
            results["n_max"] = gr_nmax;
            results["nodes"] = r.nodes;
            if (r.forced_n)
                results["forced_n"] = *r.forced_n;
            else
                results["forced_n"] = nullptr;
            json certs = json::array();
            for (const Coloring& cert : r.certificates) {
                json c;
                c["n"] = cert.n;
                if (!cert_dir.empty()) {
                    std::string path = cert_dir + "/gr_c" + std::to_string(gr_c) + "_r" +
                                       std::to_string(gr_r) + "_n" + std::to_string(cert.n) +
                                       ".txt";
                    std::ofstream outf(path, std::ios::binary);
                    if (!outf) throw input_error("cannot write certificate: " + path);
                    outf << emit_coloring(cert);
                    c["written_to"] = path;
                }
                certs.push_back(c);
            }
            results["certificates"] = certs;
            return sink.emit(
                "ramsey gr",
                digest_bytes("gr c=" + std::to_string(gr_c) + " r=" + std::to_string(gr_r)),
                results);
        }

        throw input_error("no subcommand selected");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    }
}
